#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "forestmask/groundtruth.hpp"
#include "forestmask/raster.hpp"

namespace forestmask {

struct ConfusionMatrix {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    std::uint64_t tn = 0;
    std::uint64_t ignored = 0;

    std::uint64_t decided() const { return tp + fp + fn + tn; }
    std::uint64_t total() const { return decided() + ignored; }

    friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

// A metric is empty when its definition degenerates to 0/0; that is distinct
// from a value of 0 and renders as null in JSON.
struct MetricsReport {
    std::optional<double> accuracy;
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> f1;
};

// Pixel-by-pixel comparison. Ignore-group pixels land in `ignored` only.
ConfusionMatrix confusion(const BinaryMask& pred, const TruthRaster& truth);

// accuracy, precision, recall, f1 over the decided pixels. Throws EvalError
// when every pixel was ignored.
MetricsReport metrics(const ConfusionMatrix& cm);

// {"confusion": {...}, "accuracy": ..., "precision": ..., "recall": ..., "f1": ...}
std::string metrics_json(const ConfusionMatrix& cm, const MetricsReport& report);
std::string metrics_table(const ConfusionMatrix& cm, const MetricsReport& report);

// Side-by-side report for two classifiers over the same scene, with signed
// count and metric deltas (a minus b). Throws ShapeError when the matrices
// cover different pixel totals.
std::string compare_json(const ConfusionMatrix& a, const ConfusionMatrix& b);
std::string compare_table(const ConfusionMatrix& a, const ConfusionMatrix& b);

}  // namespace forestmask

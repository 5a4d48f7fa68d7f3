#include "forestmask/eval.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace forestmask {
namespace {

nlohmann::json optional_number(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

nlohmann::json confusion_json(const ConfusionMatrix& cm) {
    return {{"tp", cm.tp}, {"fp", cm.fp}, {"fn", cm.fn}, {"tn", cm.tn}, {"ignored", cm.ignored}};
}

nlohmann::json report_json(const ConfusionMatrix& cm, const MetricsReport& report) {
    return {{"confusion", confusion_json(cm)},
            {"accuracy", optional_number(report.accuracy)},
            {"precision", optional_number(report.precision)},
            {"recall", optional_number(report.recall)},
            {"f1", optional_number(report.f1)}};
}

std::string percent(const std::optional<double>& v) {
    if (!v) return "n/a";
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << (*v * 100.0) << '%';
    return out.str();
}

std::optional<double> delta(const std::optional<double>& a, const std::optional<double>& b) {
    if (a && b) return *a - *b;
    return std::nullopt;
}

void require_same_scene(const ConfusionMatrix& a, const ConfusionMatrix& b) {
    if (a.total() != b.total())
        throw ShapeError("compare: confusion matrices cover different pixel totals");
}

}  // namespace

ConfusionMatrix confusion(const BinaryMask& pred, const TruthRaster& truth) {
    if (!pred.same_shape(truth)) throw ShapeError("confusion: mask and truth dimensions differ");
    ConfusionMatrix cm;
    for (int y = 0; y < pred.height(); ++y) {
        for (int x = 0; x < pred.width(); ++x) {
            switch (truth.at(x, y)) {
                case Group::Ignore: ++cm.ignored; break;
                case Group::Forest: pred.at(x, y) ? ++cm.tp : ++cm.fn; break;
                case Group::NonForest: pred.at(x, y) ? ++cm.fp : ++cm.tn; break;
            }
        }
    }
    return cm;
}

MetricsReport metrics(const ConfusionMatrix& cm) {
    const double decided = static_cast<double>(cm.decided());
    if (cm.decided() == 0)
        throw EvalError("metrics: every pixel was ignored, nothing to compare");
    MetricsReport report;
    report.accuracy = static_cast<double>(cm.tp + cm.tn) / decided;
    if (cm.tp + cm.fp > 0)
        report.precision = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
    if (cm.tp + cm.fn > 0)
        report.recall = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
    if (report.precision && report.recall && *report.precision + *report.recall > 0.0)
        report.f1 = 2.0 * *report.precision * *report.recall /
                    (*report.precision + *report.recall);
    return report;
}

std::string metrics_json(const ConfusionMatrix& cm, const MetricsReport& report) {
    return report_json(cm, report).dump(2) + "\n";
}

std::string metrics_table(const ConfusionMatrix& cm, const MetricsReport& report) {
    std::ostringstream out;
    out << "                  truth forest  truth non-forest\n";
    out << "pred forest     " << std::setw(14) << cm.tp << std::setw(18) << cm.fp << '\n';
    out << "pred non-forest " << std::setw(14) << cm.fn << std::setw(18) << cm.tn << '\n';
    out << "ignored pixels: " << cm.ignored << '\n';
    out << "accuracy:  " << percent(report.accuracy) << '\n';
    out << "precision: " << percent(report.precision) << '\n';
    out << "recall:    " << percent(report.recall) << '\n';
    out << "f1:        " << percent(report.f1) << '\n';
    return out.str();
}

std::string compare_json(const ConfusionMatrix& a, const ConfusionMatrix& b) {
    require_same_scene(a, b);
    MetricsReport ra = metrics(a);
    MetricsReport rb = metrics(b);
    nlohmann::json deltas = {
        {"tp", static_cast<std::int64_t>(a.tp) - static_cast<std::int64_t>(b.tp)},
        {"fp", static_cast<std::int64_t>(a.fp) - static_cast<std::int64_t>(b.fp)},
        {"fn", static_cast<std::int64_t>(a.fn) - static_cast<std::int64_t>(b.fn)},
        {"tn", static_cast<std::int64_t>(a.tn) - static_cast<std::int64_t>(b.tn)},
        {"ignored", static_cast<std::int64_t>(a.ignored) - static_cast<std::int64_t>(b.ignored)},
        {"accuracy", optional_number(delta(ra.accuracy, rb.accuracy))},
        {"precision", optional_number(delta(ra.precision, rb.precision))},
        {"recall", optional_number(delta(ra.recall, rb.recall))},
        {"f1", optional_number(delta(ra.f1, rb.f1))}};
    nlohmann::json doc = {{"a", report_json(a, ra)}, {"b", report_json(b, rb)},
                          {"delta", deltas}};
    return doc.dump(2) + "\n";
}

std::string compare_table(const ConfusionMatrix& a, const ConfusionMatrix& b) {
    require_same_scene(a, b);
    MetricsReport ra = metrics(a);
    MetricsReport rb = metrics(b);
    auto signed_delta = [](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::int64_t>(x) - static_cast<std::int64_t>(y);
    };
    std::ostringstream out;
    out << "              prediction a    prediction b       delta (a-b)\n";
    auto row = [&](const char* name, std::uint64_t va, std::uint64_t vb) {
        out << std::left << std::setw(14) << name << std::right << std::setw(13) << va
            << std::setw(16) << vb << std::setw(18) << std::showpos << signed_delta(va, vb)
            << std::noshowpos << '\n';
    };
    row("tp", a.tp, b.tp);
    row("fp", a.fp, b.fp);
    row("fn", a.fn, b.fn);
    row("tn", a.tn, b.tn);
    row("ignored", a.ignored, b.ignored);
    auto metric_row = [&](const char* name, const std::optional<double>& va,
                          const std::optional<double>& vb) {
        out << std::left << std::setw(14) << name << std::right << std::setw(13) << percent(va)
            << std::setw(16) << percent(vb);
        auto d = delta(va, vb);
        if (d) {
            std::ostringstream cell;
            cell << std::showpos << std::fixed << std::setprecision(2) << (*d * 100.0) << '%';
            out << std::setw(18) << cell.str();
        } else {
            out << std::setw(18) << "n/a";
        }
        out << '\n';
    };
    metric_row("accuracy", ra.accuracy, rb.accuracy);
    metric_row("precision", ra.precision, rb.precision);
    metric_row("recall", ra.recall, rb.recall);
    metric_row("f1", ra.f1, rb.f1);
    return out.str();
}

}  // namespace forestmask

#pragma once

#include <stdexcept>

namespace forestmask {

// Base for every failure a caller can trigger with bad inputs or bad files.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FormatError : Error { using Error::Error; };      // malformed magic/header
struct ValidationError : Error { using Error::Error; };  // NaN/Inf payload, bad field values
struct TruncationError : Error { using Error::Error; };  // payload size does not match header
struct ShapeError : Error { using Error::Error; };       // raster dimension mismatch
struct BoundsError : Error { using Error::Error; };      // region falls outside the raster
struct LegendError : Error { using Error::Error; };      // class index not covered by legend
struct IoError : Error { using Error::Error; };          // filesystem read/write failure
struct EvalError : Error { using Error::Error; };        // comparison with no decided pixels

}  // namespace forestmask

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "forestmask/errors.hpp"

namespace forestmask {

struct Rgb8 {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb8&, const Rgb8&) = default;
};

// Row-major pixel grid with a top-left origin. Dimensions are validated on
// construction and never change afterwards; every operation in this library
// treats rasters as immutable values, so sharing them across threads is safe.
template <typename T>
class Raster {
public:
    using Pixels = std::vector<T>;
    using Reference = typename Pixels::reference;
    using ConstReference = typename Pixels::const_reference;

    Raster() = default;

    Raster(int width, int height, T fill = T{})
        : width_(width), height_(height) {
        check_dims(width, height);
        pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
    }

    Raster(int width, int height, Pixels pixels)
        : width_(width), height_(height), pixels_(std::move(pixels)) {
        check_dims(width, height);
        if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
            throw ShapeError("raster pixel count does not match dimensions");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t pixel_count() const { return pixels_.size(); }

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    // x is the column, y is the row.
    Reference at(int x, int y) { return pixels_[index(x, y)]; }
    ConstReference at(int x, int y) const { return pixels_[index(x, y)]; }

    const Pixels& pixels() const { return pixels_; }

    template <typename U>
    bool same_shape(const Raster<U>& other) const {
        return width_ == other.width() && height_ == other.height();
    }

    friend bool operator==(const Raster&, const Raster&) = default;

private:
    static void check_dims(int width, int height) {
        if (width <= 0 || height <= 0)
            throw ShapeError("raster dimensions must be positive");
    }

    int width_ = 0;
    int height_ = 0;
    Pixels pixels_;
};

using BandRaster = Raster<float>;          // Sentinel-2 reflectance grid (B2/B3/B4/B8)
using FloatRaster = Raster<float>;         // derived float grid (NDVI)
using GrayImage = Raster<std::uint8_t>;
using RgbImage = Raster<Rgb8>;
using BinaryMask = Raster<bool>;
using LabelRaster = Raster<std::uint16_t>;  // land-cover class indices

}  // namespace forestmask

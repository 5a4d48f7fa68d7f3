#include "forestmask/ingest.hpp"

#include <algorithm>
#include <cmath>

namespace forestmask {
namespace {

// floor(clamp(v, 0, 1) * 255); out-of-range reflectance clamps instead of wrapping.
std::uint8_t quantize_unit(float v) {
    double clamped = std::clamp(static_cast<double>(v), 0.0, 1.0);
    return static_cast<std::uint8_t>(std::floor(clamped * 255.0));
}

}  // namespace

RgbImage compose_rgb(const BandRaster& b2, const BandRaster& b3, const BandRaster& b4) {
    if (!b2.same_shape(b3) || !b2.same_shape(b4))
        throw ShapeError("compose_rgb: band dimensions differ");
    RgbImage out(b2.width(), b2.height());
    for (int y = 0; y < out.height(); ++y) {
        for (int x = 0; x < out.width(); ++x) {
            // (r, g, b) = (B4, B3, B2)
            out.at(x, y) = {quantize_unit(b4.at(x, y)), quantize_unit(b3.at(x, y)),
                            quantize_unit(b2.at(x, y))};
        }
    }
    return out;
}

GrayImage to_gray(const RgbImage& rgb) {
    GrayImage out(rgb.width(), rgb.height());
    for (int y = 0; y < out.height(); ++y) {
        for (int x = 0; x < out.width(); ++x) {
            const Rgb8& p = rgb.at(x, y);
            double luma = 0.299 * p.r + 0.587 * p.g + 0.114 * p.b;
            double rounded = std::floor(luma + 0.5);  // round half up
            out.at(x, y) = static_cast<std::uint8_t>(std::clamp(rounded, 0.0, 255.0));
        }
    }
    return out;
}

}  // namespace forestmask

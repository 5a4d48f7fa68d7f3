#include "forestmask/spectral.hpp"

namespace forestmask {

FloatRaster ndvi(const BandRaster& b8, const BandRaster& b4) {
    if (!b8.same_shape(b4)) throw ShapeError("ndvi: band dimensions differ");
    FloatRaster out(b8.width(), b8.height());
    for (int y = 0; y < out.height(); ++y) {
        for (int x = 0; x < out.width(); ++x) {
            float nir = b8.at(x, y);
            float red = b4.at(x, y);
            float denom = nir + red;
            out.at(x, y) = denom == 0.0f ? 0.0f : (nir - red) / denom;
        }
    }
    return out;
}

BinaryMask vegetation_mask(const FloatRaster& ndvi, float t) {
    BinaryMask mask(ndvi.width(), ndvi.height());
    for (int y = 0; y < ndvi.height(); ++y)
        for (int x = 0; x < ndvi.width(); ++x)
            mask.at(x, y) = ndvi.at(x, y) > t;
    return mask;
}

}  // namespace forestmask

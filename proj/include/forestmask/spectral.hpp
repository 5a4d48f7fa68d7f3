#pragma once

#include "forestmask/raster.hpp"

namespace forestmask {

// (B8 - B4) / (B8 + B4) per pixel; 0 where the denominator is zero.
FloatRaster ndvi(const BandRaster& b8, const BandRaster& b4);

// bit = (value > t), strict.
BinaryMask vegetation_mask(const FloatRaster& ndvi, float t = 0.5f);

}  // namespace forestmask

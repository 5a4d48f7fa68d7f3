#pragma once

#include "forestmask/raster.hpp"

namespace forestmask {

// Builds the 8-bit composite from the blue (B2), green (B3) and red (B4)
// bands. Each reflectance is clamped to [0, 1], scaled by 255 and floored.
RgbImage compose_rgb(const BandRaster& b2, const BandRaster& b3, const BandRaster& b4);

// BT.601 luma (0.299 r + 0.587 g + 0.114 b), rounded half-up.
GrayImage to_gray(const RgbImage& rgb);

}  // namespace forestmask

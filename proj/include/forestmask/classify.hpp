#pragma once

#include <cstdint>

#include "forestmask/raster.hpp"

namespace forestmask {

// Pixelwise AND of the texture and vegetation masks.
BinaryMask combine(const BinaryMask& texture, const BinaryMask& vegetation);

// Forest pixels become (255, 0, 0); everything else is byte-identical to rgb.
RgbImage overlay(const RgbImage& rgb, const BinaryMask& forest);

struct ClassifyOptions {
    std::uint8_t texture_threshold = 64;
    float ndvi_threshold = 0.5f;
};

struct SceneClassification {
    BinaryMask forest;
    RgbImage overlay;
};

// Full pipeline over four equally sized bands: compose the RGB image, gate on
// texture and NDVI, AND the gates, render the red overlay on the composite.
SceneClassification classify_scene(const BandRaster& b2, const BandRaster& b3,
                                   const BandRaster& b4, const BandRaster& b8,
                                   const ClassifyOptions& options = {});

}  // namespace forestmask

#pragma once

#include <cstdint>

#include "forestmask/groundtruth.hpp"
#include "forestmask/raster.hpp"

namespace forestmask {

// Synthetic-scene class indices written by synth_scene.
inline constexpr std::uint16_t kSynthIgnore = 0;  // "Other", boundary band
inline constexpr std::uint16_t kSynthForest = 1;  // "Mixed Treed"
inline constexpr std::uint16_t kSynthGrass = 2;   // "Tallgrass Prairie"
inline constexpr std::uint16_t kSynthWater = 3;   // "Clear Open Water"

struct SynthOptions {
    std::uint32_t seed = 0;
    int side = 500;
    double forest_fraction = 0.4;
    // Pixels within this Chebyshev distance of a region boundary are labeled
    // kSynthIgnore; morphological closing grows mask edges, so the band keeps
    // evaluation to pixels whose class is unambiguous.
    int boundary_band = 4;
};

struct SynthScene {
    BandRaster b2;
    BandRaster b3;
    BandRaster b4;
    BandRaster b8;
    LabelRaster labels;
    Legend legend;
};

// Deterministic test scene: a forest strip with strong per-pixel luminance
// noise and NDVI 0.7, a smooth grass strip also at NDVI 0.7, and water (a
// strip plus a lake disc) with negative NDVI. Texture separates forest from
// grass; NDVI separates both from water.
SynthScene synth_scene(const SynthOptions& options);

}  // namespace forestmask

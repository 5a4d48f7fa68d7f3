#include "forestmask/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace forestmask {
namespace {

// NDVI of 0.7 means b8/b4 = (1 + 0.7) / (1 - 0.7).
constexpr float kNdvi07Ratio = 1.7f / 0.3f;

// Uniform in [0, 1) from the raw engine stream; keeps the byte output
// independent of the standard library's distribution implementations.
float unit(std::mt19937& rng) {
    return static_cast<float>(rng() >> 8) * (1.0f / 16777216.0f);
}

}  // namespace

SynthScene synth_scene(const SynthOptions& options) {
    if (options.side <= 0) throw ValidationError("synth: side must be positive");
    if (options.forest_fraction < 0.0 || options.forest_fraction > 1.0)
        throw ValidationError("synth: forest fraction must lie in [0, 1]");
    if (options.boundary_band < 0)
        throw ValidationError("synth: boundary band must be non-negative");

    const int side = options.side;
    const int forest_cols = static_cast<int>(std::lround(options.forest_fraction * side));
    const int rest = side - forest_cols;
    const int grass_cols = rest * 3 / 5;

    // Region layout: forest strip, grass strip, water strip, plus a lake disc
    // inside the grass when there is room for one.
    LabelRaster regions(side, side, kSynthWater);
    const int lake_radius = grass_cols >= 40 ? grass_cols / 6 : 0;
    const int lake_cx = forest_cols + grass_cols / 2;
    const int lake_cy = side / 2;
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            if (x < forest_cols) {
                regions.at(x, y) = kSynthForest;
            } else if (x < forest_cols + grass_cols) {
                regions.at(x, y) = kSynthGrass;
                if (lake_radius > 0) {
                    const int dx = x - lake_cx;
                    const int dy = y - lake_cy;
                    if (dx * dx + dy * dy <= lake_radius * lake_radius)
                        regions.at(x, y) = kSynthWater;
                }
            }
        }
    }

    SynthScene scene;
    scene.b2 = BandRaster(side, side);
    scene.b3 = BandRaster(side, side);
    scene.b4 = BandRaster(side, side);
    scene.b8 = BandRaster(side, side);

    std::mt19937 rng(options.seed);
    const float gradient_step = side > 1 ? 1.0f / static_cast<float>(side - 1) : 0.0f;
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            float red, green, blue, nir;
            switch (regions.at(x, y)) {
                case kSynthForest: {
                    // Strong per-pixel luminance noise on the green band drives
                    // the texture gate; NDVI is pinned at 0.7 via the ratio.
                    float n = (unit(rng) * 2.0f - 1.0f) * 0.25f;
                    red = 0.08f;
                    green = std::clamp(0.45f + n, 0.05f, 1.0f);
                    blue = 0.10f;
                    nir = red * kNdvi07Ratio;
                    break;
                }
                case kSynthGrass: {
                    // Same NDVI as forest but spatially smooth: a gentle
                    // horizontal gradient never exceeds one quantization step
                    // between neighbors.
                    float t = static_cast<float>(x) * gradient_step;
                    red = 0.10f + 0.04f * t;
                    green = 0.50f + 0.05f * t;
                    blue = 0.08f;
                    nir = red * kNdvi07Ratio;
                    break;
                }
                default: {  // water
                    red = 0.08f;
                    green = 0.10f;
                    blue = 0.12f;
                    nir = 0.04f;  // NDVI = -1/3
                    break;
                }
            }
            scene.b2.at(x, y) = blue;
            scene.b3.at(x, y) = green;
            scene.b4.at(x, y) = red;
            scene.b8.at(x, y) = nir;
        }
    }

    // Truth labels: the region map with a band of ignored pixels wherever a
    // differently labeled pixel sits within the Chebyshev radius.
    scene.labels = regions;
    const int band = options.boundary_band;
    if (band > 0) {
        for (int y = 0; y < side; ++y) {
            for (int x = 0; x < side; ++x) {
                const std::uint16_t own = regions.at(x, y);
                bool near_boundary = false;
                for (int dy = -band; dy <= band && !near_boundary; ++dy) {
                    const int ny = y + dy;
                    if (ny < 0 || ny >= side) continue;
                    for (int dx = -band; dx <= band; ++dx) {
                        const int nx = x + dx;
                        if (nx < 0 || nx >= side) continue;
                        if (regions.at(nx, ny) != own) {
                            near_boundary = true;
                            break;
                        }
                    }
                }
                if (near_boundary) scene.labels.at(x, y) = kSynthIgnore;
            }
        }
    }

    scene.legend.add(kSynthIgnore, {"Other", Group::Ignore});
    scene.legend.add(kSynthForest, {"Mixed Treed", Group::Forest});
    scene.legend.add(kSynthGrass, {"Tallgrass Prairie", Group::NonForest});
    scene.legend.add(kSynthWater, {"Clear Open Water", Group::NonForest});
    return scene;
}

}  // namespace forestmask

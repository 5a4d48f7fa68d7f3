#include "forestmask/classify.hpp"

#include "forestmask/ingest.hpp"
#include "forestmask/spectral.hpp"
#include "forestmask/texture.hpp"

namespace forestmask {

BinaryMask combine(const BinaryMask& texture, const BinaryMask& vegetation) {
    if (!texture.same_shape(vegetation)) throw ShapeError("combine: mask dimensions differ");
    BinaryMask out(texture.width(), texture.height());
    for (int y = 0; y < out.height(); ++y)
        for (int x = 0; x < out.width(); ++x)
            out.at(x, y) = texture.at(x, y) && vegetation.at(x, y);
    return out;
}

RgbImage overlay(const RgbImage& rgb, const BinaryMask& forest) {
    if (!rgb.same_shape(forest)) throw ShapeError("overlay: mask dimensions differ");
    RgbImage out = rgb;
    for (int y = 0; y < out.height(); ++y)
        for (int x = 0; x < out.width(); ++x)
            if (forest.at(x, y)) out.at(x, y) = {255, 0, 0};
    return out;
}

SceneClassification classify_scene(const BandRaster& b2, const BandRaster& b3,
                                   const BandRaster& b4, const BandRaster& b8,
                                   const ClassifyOptions& options) {
    if (!b2.same_shape(b8)) throw ShapeError("classify_scene: band dimensions differ");
    RgbImage rgb = compose_rgb(b2, b3, b4);
    BinaryMask forest = combine(texture_mask(rgb, options.texture_threshold),
                                vegetation_mask(ndvi(b8, b4), options.ndvi_threshold));
    RgbImage rendered = overlay(rgb, forest);
    return {std::move(forest), std::move(rendered)};
}

}  // namespace forestmask

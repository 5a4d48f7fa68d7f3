#include <doctest.h>

#include "forestmask/classify.hpp"
#include "forestmask/ingest.hpp"
#include "forestmask/spectral.hpp"
#include "forestmask/synth.hpp"
#include "forestmask/texture.hpp"
#include "helpers.hpp"

using namespace forestmask;

namespace {

bool subset_of(const BinaryMask& inner, const BinaryMask& outer) {
    for (int y = 0; y < inner.height(); ++y)
        for (int x = 0; x < inner.width(); ++x)
            if (inner.at(x, y) && !outer.at(x, y)) return false;
    return true;
}

std::size_t count_true(const BinaryMask& mask) {
    std::size_t n = 0;
    for (bool bit : mask.pixels())
        if (bit) ++n;
    return n;
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("combine is a pixelwise AND") {
    BinaryMask a(2, 2, std::vector<bool>{true, true, false, false});
    BinaryMask b(2, 2, std::vector<bool>{true, false, true, false});
    BinaryMask both = combine(a, b);
    CHECK(both.pixels() == std::vector<bool>{true, false, false, false});
}

TEST_CASE("all-true is the identity element of combine") {
    std::mt19937 rng(61);
    BinaryMask m = testutil::random_mask(19, 11, rng);
    BinaryMask ones(19, 11, true);
    CHECK(combine(ones, m) == m);
    CHECK(combine(m, ones) == m);
}

TEST_CASE("combine matches a pixel-loop oracle on random masks") {
    std::mt19937 rng(62);
    for (int round = 0; round < 10; ++round) {
        BinaryMask a = testutil::random_mask(33, 17, rng);
        BinaryMask b = testutil::random_mask(33, 17, rng);
        BinaryMask both = combine(a, b);
        for (int y = 0; y < 17; ++y)
            for (int x = 0; x < 33; ++x)
                CHECK(both.at(x, y) == (a.at(x, y) && b.at(x, y)));
    }
}

TEST_CASE("combine and overlay reject mismatched shapes") {
    BinaryMask a(2, 2);
    BinaryMask b(3, 2);
    CHECK_THROWS_AS(combine(a, b), ShapeError);
    CHECK_THROWS_AS(overlay(RgbImage(4, 4), BinaryMask(4, 5)), ShapeError);
}

TEST_CASE("overlay repaints exactly the masked pixels") {
    std::mt19937 rng(63);
    RgbImage base = testutil::random_rgb(12, 9, rng);

    BinaryMask empty(12, 9, false);
    CHECK(overlay(base, empty) == base);

    BinaryMask full(12, 9, true);
    RgbImage red = overlay(base, full);
    for (const Rgb8& p : red.pixels())
        CHECK(p == Rgb8{255, 0, 0});

    BinaryMask one(12, 9, false);
    one.at(5, 4) = true;
    RgbImage single = overlay(base, one);
    int differing = 0;
    for (int y = 0; y < 9; ++y)
        for (int x = 0; x < 12; ++x)
            if (single.at(x, y) != base.at(x, y)) ++differing;
    CHECK(differing == (base.at(5, 4) == Rgb8{255, 0, 0} ? 0 : 1));
    CHECK(single.at(5, 4) == Rgb8{255, 0, 0});
}

TEST_CASE("overlay is idempotent") {
    std::mt19937 rng(64);
    RgbImage base = testutil::random_rgb(16, 16, rng);
    BinaryMask mask = testutil::random_mask(16, 16, rng);
    RgbImage once = overlay(base, mask);
    CHECK(overlay(once, mask) == once);
}

TEST_CASE("uniform scene with B8 == B4 yields an empty forest mask") {
    BandRaster gray(32, 32, 0.5f);
    SceneClassification result = classify_scene(gray, gray, gray, gray);
    CHECK(count_true(result.forest) == 0);
}

TEST_CASE("constructed scene: noisy high-NDVI region is forest, smooth and water are not") {
    SynthOptions options;
    options.seed = 5;
    options.side = 96;
    options.forest_fraction = 0.4;
    SynthScene scene = synth_scene(options);
    SceneClassification result = classify_scene(scene.b2, scene.b3, scene.b4, scene.b8);
    TruthRaster truth = to_truth(scene.labels, scene.legend);
    for (int y = 0; y < options.side; ++y) {
        for (int x = 0; x < options.side; ++x) {
            if (truth.at(x, y) == Group::Forest) CHECK(result.forest.at(x, y));
            if (truth.at(x, y) == Group::NonForest) CHECK_FALSE(result.forest.at(x, y));
        }
    }
}

TEST_CASE("forest mask is contained in both gate masks") {
    SynthOptions options;
    options.seed = 6;
    options.side = 128;
    SynthScene scene = synth_scene(options);
    SceneClassification result = classify_scene(scene.b2, scene.b3, scene.b4, scene.b8);
    RgbImage rgb = compose_rgb(scene.b2, scene.b3, scene.b4);
    CHECK(subset_of(result.forest, texture_mask(rgb)));
    CHECK(subset_of(result.forest, vegetation_mask(ndvi(scene.b8, scene.b4))));
}

TEST_CASE("raising either threshold never grows the forest mask") {
    SynthOptions options;
    options.seed = 7;
    options.side = 128;
    SynthScene scene = synth_scene(options);
    auto forest_at = [&](std::uint8_t tex_t, float ndvi_t) {
        ClassifyOptions co;
        co.texture_threshold = tex_t;
        co.ndvi_threshold = ndvi_t;
        return classify_scene(scene.b2, scene.b3, scene.b4, scene.b8, co).forest;
    };
    BinaryMask base = forest_at(64, 0.5f);
    CHECK(subset_of(forest_at(128, 0.5f), base));
    CHECK(subset_of(forest_at(255, 0.5f), forest_at(128, 0.5f)));
    CHECK(subset_of(forest_at(64, 0.8f), base));
    CHECK(count_true(forest_at(255, 0.5f)) == 0);  // nothing exceeds 255
}

}  // TEST_SUITE

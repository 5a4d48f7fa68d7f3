#include <doctest.h>

#include <cmath>

#include "forestmask/spectral.hpp"
#include "helpers.hpp"

using namespace forestmask;

namespace {

float ndvi_of(float nir, float red) {
    return ndvi(BandRaster(1, 1, std::vector<float>{nir}),
                BandRaster(1, 1, std::vector<float>{red}))
        .at(0, 0);
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("ndvi computes (B8 - B4) / (B8 + B4)") {
    CHECK(ndvi_of(0.8f, 0.2f) == 0.6f);
    CHECK(ndvi_of(0.3f, 0.3f) == 0.0f);
    CHECK(ndvi_of(1.0f, 0.0f) == 1.0f);
    CHECK(ndvi_of(0.0f, 1.0f) == -1.0f);
}

TEST_CASE("zero denominator maps to zero by convention") {
    CHECK(ndvi_of(0.0f, 0.0f) == 0.0f);
    CHECK(ndvi_of(0.5f, -0.5f) == 0.0f);
}

TEST_CASE("ndvi rejects mismatched shapes") {
    CHECK_THROWS_AS(ndvi(BandRaster(2, 2, 0.5f), BandRaster(3, 2, 0.5f)), ShapeError);
}

TEST_CASE("ndvi of non-negative bands stays inside [-1, 1]") {
    std::mt19937 rng(51);
    BandRaster nir = testutil::random_band(64, 64, rng, 0.0f, 1.5f);
    BandRaster red = testutil::random_band(64, 64, rng, 0.0f, 1.5f);
    // sprinkle exact zeros so the convention path is hit
    nir.at(0, 0) = 0.0f;
    red.at(0, 0) = 0.0f;
    FloatRaster out = ndvi(nir, red);
    for (float v : out.pixels()) {
        CHECK(v >= -1.0f);
        CHECK(v <= 1.0f);
    }
}

TEST_CASE("ndvi is antisymmetric in its arguments") {
    std::mt19937 rng(52);
    BandRaster a = testutil::random_band(32, 32, rng, 0.0f, 1.0f);
    BandRaster b = testutil::random_band(32, 32, rng, 0.0f, 1.0f);
    a.at(3, 3) = 0.0f;
    b.at(3, 3) = 0.0f;
    FloatRaster ab = ndvi(a, b);
    FloatRaster ba = ndvi(b, a);
    for (int y = 0; y < 32; ++y)
        for (int x = 0; x < 32; ++x)
            CHECK(ab.at(x, y) == -ba.at(x, y));
}

TEST_CASE("ndvi is scale invariant within 1e-6") {
    std::mt19937 rng(53);
    BandRaster a = testutil::random_band(32, 32, rng, 0.01f, 1.0f);
    BandRaster b = testutil::random_band(32, 32, rng, 0.01f, 1.0f);
    for (float k : {0.25f, 3.0f, 9.5f}) {
        BandRaster ka(32, 32);
        BandRaster kb(32, 32);
        for (int y = 0; y < 32; ++y)
            for (int x = 0; x < 32; ++x) {
                ka.at(x, y) = k * a.at(x, y);
                kb.at(x, y) = k * b.at(x, y);
            }
        FloatRaster base = ndvi(a, b);
        FloatRaster scaled = ndvi(ka, kb);
        for (int y = 0; y < 32; ++y)
            for (int x = 0; x < 32; ++x)
                CHECK(std::fabs(scaled.at(x, y) - base.at(x, y)) <= 1e-6f);
    }
}

TEST_CASE("vegetation mask is strictly greater-than") {
    FloatRaster values(3, 1, std::vector<float>{0.5f, 0.51f, 0.4999f});
    BinaryMask mask = vegetation_mask(values, 0.5f);
    CHECK_FALSE(mask.at(0, 0));  // 0.5 is not > 0.5
    CHECK(mask.at(1, 0));
    CHECK_FALSE(mask.at(2, 0));
}

TEST_CASE("an all-water scene activates nothing") {
    std::mt19937 rng(54);
    // water reflects more red than near-infrared, so NDVI is negative
    BandRaster red = testutil::random_band(16, 16, rng, 0.2f, 0.6f);
    BandRaster nir(16, 16);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x)
            nir.at(x, y) = red.at(x, y) * 0.5f;
    BinaryMask mask = vegetation_mask(ndvi(nir, red), 0.5f);
    for (bool bit : mask.pixels())
        CHECK_FALSE(bit);
}

}  // TEST_SUITE

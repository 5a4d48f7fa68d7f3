#include <doctest.h>

#include <cmath>

#include "forestmask/ingest.hpp"
#include "helpers.hpp"

using namespace forestmask;

namespace {

BandRaster single(float v) { return BandRaster(1, 1, std::vector<float>{v}); }

std::uint8_t quantize_via_compose(float v) {
    return compose_rgb(single(v), single(v), single(v)).at(0, 0).r;
}

// Saturating reference: floor(v * 255) in wide integers, clamped to [0, 255].
std::uint8_t saturating_quantize(float v) {
    long long q = static_cast<long long>(std::floor(static_cast<double>(v) * 255.0));
    if (q < 0) q = 0;
    if (q > 255) q = 255;
    return static_cast<std::uint8_t>(q);
}

}  // namespace

TEST_SUITE("ingest") {

TEST_CASE("quantization floors after scaling by 255") {
    CHECK(quantize_via_compose(0.5f) == 127);  // floor(127.5)
    CHECK(quantize_via_compose(1.0f) == 255);
    CHECK(quantize_via_compose(0.0f) == 0);
}

TEST_CASE("out-of-range reflectance clamps instead of wrapping") {
    CHECK(quantize_via_compose(1.2f) == 255);
    CHECK(quantize_via_compose(-0.3f) == 0);
    std::mt19937 rng(31);
    for (int i = 0; i < 2000; ++i) {
        float v = -2.0f + 5.0f * testutil::unit_float(rng);
        CHECK(quantize_via_compose(v) == saturating_quantize(v));
    }
}

TEST_CASE("channel order is (r, g, b) = (B4, B3, B2)") {
    RgbImage rgb = compose_rgb(single(0.1f), single(0.5f), single(0.9f));
    CHECK(rgb.at(0, 0) == Rgb8{229, 127, 25});
}

TEST_CASE("quantization is monotone per channel") {
    std::mt19937 rng(32);
    for (int i = 0; i < 2000; ++i) {
        float a = 1.5f * testutil::unit_float(rng) - 0.25f;
        float b = 1.5f * testutil::unit_float(rng) - 0.25f;
        if (a > b) std::swap(a, b);
        CHECK(quantize_via_compose(a) <= quantize_via_compose(b));
    }
}

TEST_CASE("compose rejects mismatched band shapes") {
    BandRaster small(2, 2, 0.5f);
    BandRaster big(3, 2, 0.5f);
    CHECK_THROWS_AS(compose_rgb(small, small, big), ShapeError);
    CHECK_THROWS_AS(compose_rgb(big, small, small), ShapeError);
}

TEST_CASE("grayscale uses BT.601 weights with round-half-up") {
    auto gray_of = [](Rgb8 p) { return to_gray(RgbImage(1, 1, p)).at(0, 0); };
    CHECK(gray_of({255, 255, 255}) == 255);
    CHECK(gray_of({0, 0, 0}) == 0);
    CHECK(gray_of({255, 0, 0}) == 76);   // 0.299 * 255 = 76.245
    CHECK(gray_of({0, 255, 0}) == 150);  // 0.587 * 255 = 149.685
    CHECK(gray_of({0, 0, 255}) == 29);   // 0.114 * 255 = 29.07
}

TEST_CASE("grayscale of a gray pixel is the identity for every level") {
    for (int k = 0; k <= 255; ++k) {
        auto v = static_cast<std::uint8_t>(k);
        CHECK(to_gray(RgbImage(1, 1, Rgb8{v, v, v})).at(0, 0) == v);
    }
}

TEST_CASE("output dimensions equal input dimensions") {
    std::mt19937 rng(33);
    BandRaster band = testutil::random_band(13, 7, rng, 0.0f, 1.0f);
    RgbImage rgb = compose_rgb(band, band, band);
    CHECK(rgb.width() == 13);
    CHECK(rgb.height() == 7);
    GrayImage gray = to_gray(rgb);
    CHECK(gray.width() == 13);
    CHECK(gray.height() == 7);
}

}  // TEST_SUITE

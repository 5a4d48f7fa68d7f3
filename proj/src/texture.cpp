#include "forestmask/texture.hpp"

#include <algorithm>
#include <cstdint>

#include "forestmask/ingest.hpp"
#include "parallel.hpp"

namespace forestmask {
namespace {

constexpr int kSmooth[5] = {1, 4, 6, 4, 1};   // binomial smoothing
constexpr int kSecond[5] = {1, 0, -2, 0, 1};  // second derivative

// Mirror about the edge pixel without duplicating it: for width 8,
// indices -2 -1 0 ... 7 8 9 map to 2 1 0 ... 7 6 5.
int reflect101(int i, int n) {
    if (n == 1) return 0;
    while (i < 0 || i >= n) {
        if (i < 0) i = -i;
        if (i >= n) i = 2 * (n - 1) - i;
    }
    return i;
}

std::uint8_t saturate_u8(int v) {
    return static_cast<std::uint8_t>(std::clamp(v, 0, 255));
}

}  // namespace

Kernel2D::Kernel2D(int side_, std::vector<int> weights_)
    : side(side_), weights(std::move(weights_)) {
    if (side <= 0 || side % 2 == 0)
        throw ValidationError("kernel side must be odd and positive");
    if (weights.size() != static_cast<std::size_t>(side) * static_cast<std::size_t>(side))
        throw ValidationError("kernel weight count does not match side^2");
}

const Kernel2D& laplacian_kernel5() {
    static const Kernel2D kernel = [] {
        std::vector<int> w(25);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                w[i * 5 + j] = kSmooth[i] * kSecond[j] + kSecond[i] * kSmooth[j];
        return Kernel2D(5, std::move(w));
    }();
    return kernel;
}

GrayImage laplacian5(const GrayImage& gray) {
    const int w = gray.width();
    const int h = gray.height();
    const auto& src = gray.pixels();

    // Separable evaluation of smooth(x) d2(y) + d2(x) smooth(y): one
    // horizontal pass producing both 1-D responses, then the vertical
    // combination. Integer arithmetic throughout, so the result matches a
    // direct convolution with laplacian_kernel5() bit for bit.
    std::vector<std::int32_t> row_second(src.size());
    std::vector<std::int32_t> row_smooth(src.size());

    detail::parallel_rows(h, [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y) {
            const std::size_t row = static_cast<std::size_t>(y) * w;
            for (int x = 0; x < w; ++x) {
                std::int32_t second = 0;
                std::int32_t smooth = 0;
                for (int j = 0; j < 5; ++j) {
                    int v = src[row + reflect101(x + j - 2, w)];
                    second += kSecond[j] * v;
                    smooth += kSmooth[j] * v;
                }
                row_second[row + x] = second;
                row_smooth[row + x] = smooth;
            }
        }
    });

    GrayImage out(w, h);
    detail::parallel_rows(h, [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y) {
            std::size_t rows[5];
            for (int i = 0; i < 5; ++i)
                rows[i] = static_cast<std::size_t>(reflect101(y + i - 2, h)) * w;
            for (int x = 0; x < w; ++x) {
                std::int32_t sum = 0;
                for (int i = 0; i < 5; ++i)
                    sum += kSmooth[i] * row_second[rows[i] + x] +
                           kSecond[i] * row_smooth[rows[i] + x];
                out.at(x, y) = saturate_u8(sum);
            }
        }
    });
    return out;
}

namespace {

enum class Extreme { Min, Max };

// One axis of the flat 5x5 window; out-of-bounds positions are skipped.
GrayImage window_pass(const GrayImage& img, Extreme mode, bool horizontal) {
    const int w = img.width();
    const int h = img.height();
    GrayImage out(w, h);
    detail::parallel_rows(h, [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y) {
            for (int x = 0; x < w; ++x) {
                int lo = horizontal ? std::max(0, x - 2) : std::max(0, y - 2);
                int hi = horizontal ? std::min(w - 1, x + 2) : std::min(h - 1, y + 2);
                std::uint8_t acc = horizontal ? img.at(lo, y) : img.at(x, lo);
                for (int k = lo + 1; k <= hi; ++k) {
                    std::uint8_t v = horizontal ? img.at(k, y) : img.at(x, k);
                    acc = mode == Extreme::Max ? std::max(acc, v) : std::min(acc, v);
                }
                out.at(x, y) = acc;
            }
        }
    });
    return out;
}

}  // namespace

GrayImage dilate5(const GrayImage& img) {
    return window_pass(window_pass(img, Extreme::Max, true), Extreme::Max, false);
}

GrayImage erode5(const GrayImage& img) {
    return window_pass(window_pass(img, Extreme::Min, true), Extreme::Min, false);
}

GrayImage close5(const GrayImage& img) {
    return erode5(dilate5(img));
}

BinaryMask threshold_gt(const GrayImage& img, std::uint8_t t) {
    BinaryMask mask(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            mask.at(x, y) = img.at(x, y) > t;
    return mask;
}

BinaryMask texture_mask(const RgbImage& rgb, std::uint8_t t) {
    return threshold_gt(close5(laplacian5(to_gray(rgb))), t);
}

}  // namespace forestmask

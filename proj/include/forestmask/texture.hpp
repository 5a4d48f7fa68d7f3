#pragma once

#include <cstdint>
#include <vector>

#include "forestmask/raster.hpp"

namespace forestmask {

struct Kernel2D {
    Kernel2D(int side, std::vector<int> weights);

    int side;
    std::vector<int> weights;  // row-major, side x side

    int at(int i, int j) const { return weights[static_cast<std::size_t>(i) * side + j]; }
};

// Aperture-5 Laplacian: smooth (x) second-derivative (y) plus its transpose,
// built from [1,4,6,4,1] and [1,0,-2,0,1]. Weights sum to zero.
const Kernel2D& laplacian_kernel5();

// Convolves with laplacian_kernel5(). Borders mirror about the edge pixel
// without duplicating it; the signed response saturates into [0, 255].
GrayImage laplacian5(const GrayImage& gray);

// Flat 5x5 morphology; windows are clipped to the image at the borders.
GrayImage dilate5(const GrayImage& img);
GrayImage erode5(const GrayImage& img);
GrayImage close5(const GrayImage& img);

// bit = (pixel > t), strict.
BinaryMask threshold_gt(const GrayImage& img, std::uint8_t t);

// threshold_gt(close5(laplacian5(to_gray(rgb))), t)
BinaryMask texture_mask(const RgbImage& rgb, std::uint8_t t = 64);

}  // namespace forestmask

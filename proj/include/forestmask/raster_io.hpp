#pragma once

#include <cstdint>
#include <filesystem>

#include "forestmask/raster.hpp"

namespace forestmask {

// BRF band file layout, all little-endian:
//   bytes 0-3   magic "BRF1"
//   bytes 4-7   width  (u32)
//   bytes 8-11  height (u32)
//   byte  12    dtype: 0x01 = float32, 0x02 = u16
//   byte  13..  payload, row-major
inline constexpr std::uint8_t kBrfDtypeFloat32 = 0x01;
inline constexpr std::uint8_t kBrfDtypeUint16 = 0x02;

BandRaster read_band(const std::filesystem::path& path);
void write_band(const BandRaster& raster, const std::filesystem::path& path);

LabelRaster read_labels(const std::filesystem::path& path);
void write_labels(const LabelRaster& labels, const std::filesystem::path& path);

// Binary PPM/PGM: "P6\n<w> <h>\n255\n" / "P5\n<w> <h>\n255\n" then payload.
RgbImage read_ppm(const std::filesystem::path& path);
void write_ppm(const RgbImage& image, const std::filesystem::path& path);

GrayImage read_pgm(const std::filesystem::path& path);
void write_pgm(const GrayImage& image, const std::filesystem::path& path);

// Masks map true -> 255, false -> 0 on write; any nonzero byte reads as true.
void write_pgm(const BinaryMask& mask, const std::filesystem::path& path);
BinaryMask read_mask_pgm(const std::filesystem::path& path);

}  // namespace forestmask

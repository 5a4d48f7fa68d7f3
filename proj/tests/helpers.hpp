#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "forestmask/raster.hpp"

namespace testutil {

// Fresh directory under the system temp root, removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("forestmask_test_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline void write_bytes(const std::filesystem::path& path, const std::vector<unsigned char>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

inline std::vector<unsigned char> read_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline float unit_float(std::mt19937& rng) {
    return static_cast<float>(rng() >> 8) * (1.0f / 16777216.0f);
}

inline forestmask::GrayImage random_gray(int w, int h, std::mt19937& rng) {
    forestmask::GrayImage img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            img.at(x, y) = static_cast<std::uint8_t>(rng() & 0xff);
    return img;
}

inline forestmask::RgbImage random_rgb(int w, int h, std::mt19937& rng) {
    forestmask::RgbImage img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            img.at(x, y) = {static_cast<std::uint8_t>(rng() & 0xff),
                            static_cast<std::uint8_t>(rng() & 0xff),
                            static_cast<std::uint8_t>(rng() & 0xff)};
    return img;
}

inline forestmask::BandRaster random_band(int w, int h, std::mt19937& rng, float lo, float hi) {
    forestmask::BandRaster band(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            band.at(x, y) = lo + (hi - lo) * unit_float(rng);
    return band;
}

inline forestmask::BinaryMask random_mask(int w, int h, std::mt19937& rng) {
    forestmask::BinaryMask mask(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            mask.at(x, y) = (rng() & 1) != 0;
    return mask;
}

inline forestmask::LabelRaster random_labels(int w, int h, std::uint16_t classes,
                                             std::mt19937& rng) {
    forestmask::LabelRaster labels(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            labels.at(x, y) = static_cast<std::uint16_t>(rng() % classes);
    return labels;
}

}  // namespace testutil

#include "forestmask/raster_io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

namespace forestmask {
namespace {

constexpr char kBrfMagic[4] = {'B', 'R', 'F', '1'};
constexpr std::size_t kBrfHeaderSize = 13;

std::string quoted(const std::filesystem::path& path) {
    return "'" + path.string() + "'";
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + quoted(path) + " for reading");
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + quoted(path) + " for writing");
    return out;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("write to " + quoted(path) + " failed");
}

void require_at_end(std::istream& in, const std::filesystem::path& path) {
    if (in.peek() != std::ifstream::traits_type::eof())
        throw TruncationError(quoted(path) + " has trailing bytes beyond the declared payload");
}

std::uint32_t decode_u32le(const unsigned char* bytes) {
    return static_cast<std::uint32_t>(bytes[0]) | static_cast<std::uint32_t>(bytes[1]) << 8 |
           static_cast<std::uint32_t>(bytes[2]) << 16 | static_cast<std::uint32_t>(bytes[3]) << 24;
}

void encode_u32le(std::uint32_t value, unsigned char* bytes) {
    bytes[0] = static_cast<unsigned char>(value);
    bytes[1] = static_cast<unsigned char>(value >> 8);
    bytes[2] = static_cast<unsigned char>(value >> 16);
    bytes[3] = static_cast<unsigned char>(value >> 24);
}

struct BrfHeader {
    int width = 0;
    int height = 0;
};

BrfHeader read_brf_header(std::istream& in, std::uint8_t expected_dtype,
                          const std::filesystem::path& path) {
    unsigned char header[kBrfHeaderSize];
    in.read(reinterpret_cast<char*>(header), kBrfHeaderSize);
    if (in.gcount() != static_cast<std::streamsize>(kBrfHeaderSize))
        throw FormatError(quoted(path) + " is too short for a BRF header");
    if (std::memcmp(header, kBrfMagic, 4) != 0)
        throw FormatError(quoted(path) + " does not start with the BRF1 magic");
    std::uint32_t width = decode_u32le(header + 4);
    std::uint32_t height = decode_u32le(header + 8);
    std::uint8_t dtype = header[12];
    if (width == 0 || height == 0)
        throw FormatError(quoted(path) + " declares an empty raster");
    if (width > 0x7fffffffu || height > 0x7fffffffu)
        throw FormatError(quoted(path) + " declares dimensions beyond the supported range");
    if (dtype != expected_dtype)
        throw FormatError(quoted(path) + " holds BRF dtype " + std::to_string(dtype) +
                          ", expected " + std::to_string(expected_dtype));
    return {static_cast<int>(width), static_cast<int>(height)};
}

std::vector<unsigned char> read_payload(std::istream& in, std::size_t bytes,
                                        const std::filesystem::path& path) {
    std::vector<unsigned char> payload(bytes);
    in.read(reinterpret_cast<char*>(payload.data()), static_cast<std::streamsize>(bytes));
    if (in.gcount() != static_cast<std::streamsize>(bytes))
        throw TruncationError(quoted(path) + " payload is shorter than the header declares");
    require_at_end(in, path);
    return payload;
}

void write_brf_header(std::ostream& out, int width, int height, std::uint8_t dtype) {
    unsigned char header[kBrfHeaderSize];
    std::memcpy(header, kBrfMagic, 4);
    encode_u32le(static_cast<std::uint32_t>(width), header + 4);
    encode_u32le(static_cast<std::uint32_t>(height), header + 8);
    header[12] = dtype;
    out.write(reinterpret_cast<const char*>(header), kBrfHeaderSize);
}

// PNM header parsing: whitespace separates tokens, '#' starts a comment that
// runs to end of line.
int read_pnm_int(std::istream& in, const std::filesystem::path& path, const char* field) {
    int c = in.get();
    while (c != std::istream::traits_type::eof()) {
        if (c == '#') {
            while (c != '\n' && c != std::istream::traits_type::eof()) c = in.get();
        } else if (!std::isspace(c)) {
            break;
        }
        c = in.get();
    }
    if (c == std::istream::traits_type::eof() || !std::isdigit(c))
        throw FormatError(quoted(path) + ": expected " + std::string(field) + " in PNM header");
    long value = 0;
    while (c != std::istream::traits_type::eof() && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > 0x7fffffffL)
            throw FormatError(quoted(path) + ": " + std::string(field) + " out of range");
        c = in.get();
    }
    if (c != std::istream::traits_type::eof()) in.unget();
    return static_cast<int>(value);
}

struct PnmHeader {
    int width = 0;
    int height = 0;
};

PnmHeader read_pnm_header(std::istream& in, char expected_kind,
                          const std::filesystem::path& path) {
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2 || magic[0] != 'P' || magic[1] != expected_kind)
        throw FormatError(quoted(path) + " is not a binary P" + std::string(1, expected_kind) +
                          " file");
    PnmHeader h;
    h.width = read_pnm_int(in, path, "width");
    h.height = read_pnm_int(in, path, "height");
    int maxval = read_pnm_int(in, path, "maxval");
    if (h.width <= 0 || h.height <= 0)
        throw FormatError(quoted(path) + " declares an empty image");
    if (maxval <= 0 || maxval > 255)
        throw FormatError(quoted(path) + " maxval " + std::to_string(maxval) +
                          " is not supported (one byte per sample)");
    // Exactly one whitespace byte sits between the header and the payload.
    int sep = in.get();
    if (sep == std::istream::traits_type::eof() || !std::isspace(sep))
        throw FormatError(quoted(path) + " header is not followed by whitespace");
    return h;
}

void write_pnm_header(std::ostream& out, char kind, int width, int height) {
    out << 'P' << kind << '\n' << width << ' ' << height << "\n255\n";
}

}  // namespace

BandRaster read_band(const std::filesystem::path& path) {
    auto in = open_input(path);
    BrfHeader h = read_brf_header(in, kBrfDtypeFloat32, path);
    std::size_t count = static_cast<std::size_t>(h.width) * static_cast<std::size_t>(h.height);
    auto payload = read_payload(in, count * 4, path);
    std::vector<float> values(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::uint32_t bits = decode_u32le(payload.data() + i * 4);
        float v = std::bit_cast<float>(bits);
        if (!std::isfinite(v))
            throw ValidationError(quoted(path) + " contains a non-finite reflectance at pixel " +
                                  std::to_string(i));
        values[i] = v;
    }
    return BandRaster(h.width, h.height, std::move(values));
}

void write_band(const BandRaster& raster, const std::filesystem::path& path) {
    if (raster.pixel_count() == 0) throw ValidationError("cannot write an empty band raster");
    auto out = open_output(path);
    write_brf_header(out, raster.width(), raster.height(), kBrfDtypeFloat32);
    std::vector<unsigned char> payload(raster.pixel_count() * 4);
    for (std::size_t i = 0; i < raster.pixel_count(); ++i)
        encode_u32le(std::bit_cast<std::uint32_t>(raster.pixels()[i]), payload.data() + i * 4);
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size()));
    finish_write(out, path);
}

LabelRaster read_labels(const std::filesystem::path& path) {
    auto in = open_input(path);
    BrfHeader h = read_brf_header(in, kBrfDtypeUint16, path);
    std::size_t count = static_cast<std::size_t>(h.width) * static_cast<std::size_t>(h.height);
    auto payload = read_payload(in, count * 2, path);
    std::vector<std::uint16_t> values(count);
    for (std::size_t i = 0; i < count; ++i)
        values[i] = static_cast<std::uint16_t>(payload[i * 2] |
                                               static_cast<std::uint16_t>(payload[i * 2 + 1]) << 8);
    return LabelRaster(h.width, h.height, std::move(values));
}

void write_labels(const LabelRaster& labels, const std::filesystem::path& path) {
    if (labels.pixel_count() == 0) throw ValidationError("cannot write an empty label raster");
    auto out = open_output(path);
    write_brf_header(out, labels.width(), labels.height(), kBrfDtypeUint16);
    std::vector<unsigned char> payload(labels.pixel_count() * 2);
    for (std::size_t i = 0; i < labels.pixel_count(); ++i) {
        payload[i * 2] = static_cast<unsigned char>(labels.pixels()[i]);
        payload[i * 2 + 1] = static_cast<unsigned char>(labels.pixels()[i] >> 8);
    }
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size()));
    finish_write(out, path);
}

RgbImage read_ppm(const std::filesystem::path& path) {
    auto in = open_input(path);
    PnmHeader h = read_pnm_header(in, '6', path);
    std::size_t count = static_cast<std::size_t>(h.width) * static_cast<std::size_t>(h.height);
    auto payload = read_payload(in, count * 3, path);
    std::vector<Rgb8> pixels(count);
    for (std::size_t i = 0; i < count; ++i)
        pixels[i] = {payload[i * 3], payload[i * 3 + 1], payload[i * 3 + 2]};
    return RgbImage(h.width, h.height, std::move(pixels));
}

void write_ppm(const RgbImage& image, const std::filesystem::path& path) {
    if (image.pixel_count() == 0) throw ValidationError("cannot write an empty image");
    auto out = open_output(path);
    write_pnm_header(out, '6', image.width(), image.height());
    std::vector<unsigned char> payload(image.pixel_count() * 3);
    for (std::size_t i = 0; i < image.pixel_count(); ++i) {
        payload[i * 3] = image.pixels()[i].r;
        payload[i * 3 + 1] = image.pixels()[i].g;
        payload[i * 3 + 2] = image.pixels()[i].b;
    }
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size()));
    finish_write(out, path);
}

GrayImage read_pgm(const std::filesystem::path& path) {
    auto in = open_input(path);
    PnmHeader h = read_pnm_header(in, '5', path);
    std::size_t count = static_cast<std::size_t>(h.width) * static_cast<std::size_t>(h.height);
    auto payload = read_payload(in, count, path);
    return GrayImage(h.width, h.height,
                     std::vector<std::uint8_t>(payload.begin(), payload.end()));
}

void write_pgm(const GrayImage& image, const std::filesystem::path& path) {
    if (image.pixel_count() == 0) throw ValidationError("cannot write an empty image");
    auto out = open_output(path);
    write_pnm_header(out, '5', image.width(), image.height());
    out.write(reinterpret_cast<const char*>(image.pixels().data()),
              static_cast<std::streamsize>(image.pixel_count()));
    finish_write(out, path);
}

void write_pgm(const BinaryMask& mask, const std::filesystem::path& path) {
    if (mask.pixel_count() == 0) throw ValidationError("cannot write an empty mask");
    GrayImage gray(mask.width(), mask.height());
    for (int y = 0; y < mask.height(); ++y)
        for (int x = 0; x < mask.width(); ++x)
            gray.at(x, y) = mask.at(x, y) ? 255 : 0;
    write_pgm(gray, path);
}

BinaryMask read_mask_pgm(const std::filesystem::path& path) {
    GrayImage gray = read_pgm(path);
    BinaryMask mask(gray.width(), gray.height());
    for (int y = 0; y < gray.height(); ++y)
        for (int x = 0; x < gray.width(); ++x)
            mask.at(x, y) = gray.at(x, y) != 0;
    return mask;
}

}  // namespace forestmask

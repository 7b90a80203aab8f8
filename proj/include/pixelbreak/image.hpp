#pragma once

#include <cassert>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "pixelbreak/errors.hpp"

namespace pixelbreak {

struct Pixel {
    std::uint16_t r = 0;
    std::uint16_t g = 0;
    std::uint16_t b = 0;

    friend bool operator==(const Pixel&, const Pixel&) = default;
};

// RGB image with L-bit channels, L in [1, 16]. Pixels are stored row-major
// with origin top-left: pixel (u, v) lives at index v * width + u. Every
// module in this library uses this addressing.
//
// Functions in this library treat images as values: inputs are never
// modified, results are new images, and concurrent reads need no locking.
class Image {
public:
    // Zero-filled image. Throws ParameterError on non-positive dimensions
    // or a bit depth outside [1, 16].
    Image(int width, int height, int bit_depth);

    // Takes ownership of pixel data. Throws ParameterError if the pixel
    // count is not width * height or any channel exceeds 2^L - 1.
    static Image from_pixels(int width, int height, int bit_depth,
                             std::vector<Pixel> pixels);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    int bit_depth() const noexcept { return bit_depth_; }
    std::size_t pixel_count() const noexcept { return pixels_.size(); }

    std::uint16_t max_value() const noexcept {
        return static_cast<std::uint16_t>((1u << bit_depth_) - 1u);
    }

    Pixel& at(int u, int v) {
        assert(u >= 0 && u < width_ && v >= 0 && v < height_);
        return pixels_[static_cast<std::size_t>(v) * width_ + u];
    }
    const Pixel& at(int u, int v) const {
        assert(u >= 0 && u < width_ && v >= 0 && v < height_);
        return pixels_[static_cast<std::size_t>(v) * width_ + u];
    }

    std::span<Pixel> pixels() noexcept { return pixels_; }
    std::span<const Pixel> pixels() const noexcept { return pixels_; }

    friend bool operator==(const Image&, const Image&) = default;

private:
    int width_;
    int height_;
    int bit_depth_;
    std::vector<Pixel> pixels_;
};

// Parses a binary P6 NetPBM stream. Accepted maxvals are 255 (L = 8) and
// 65535 (L = 16, big-endian samples). Header comments and whitespace are
// handled per the NetPBM convention; anything else raises FormatError with
// the offending byte offset.
Image load_ppm(std::span<const unsigned char> bytes);

// Canonical P6 output: header "P6\n<U> <V>\n<maxval>\n" followed by the
// raster. load_ppm(save_ppm(x)) == x. Throws CapabilityError unless the
// bit depth is 8 or 16.
std::vector<unsigned char> save_ppm(const Image& image);

Image load_ppm_file(const std::filesystem::path& path);

// Writes atomically: the bytes land in a temporary file in the target
// directory which is then renamed over the destination.
void save_ppm_file(const std::filesystem::path& path, const Image& image);

// Per-pixel unweighted channel mean, r = g = b = round((r + g + b) / 3).
// Idempotent, and invariant under any per-pixel channel permutation of the
// input.
Image to_grayscale(const Image& image);

}  // namespace pixelbreak

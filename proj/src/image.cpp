#include "pixelbreak/image.hpp"

#include <string>

namespace pixelbreak {

Image::Image(int width, int height, int bit_depth)
    : width_(width), height_(height), bit_depth_(bit_depth) {
    if (width < 1 || height < 1) {
        throw ParameterError("image dimensions must be positive, got " +
                             std::to_string(width) + "x" +
                             std::to_string(height));
    }
    if (bit_depth < 1 || bit_depth > 16) {
        throw ParameterError("bit depth must be in [1, 16], got " +
                             std::to_string(bit_depth));
    }
    pixels_.resize(static_cast<std::size_t>(width) * height);
}

Image Image::from_pixels(int width, int height, int bit_depth,
                         std::vector<Pixel> pixels) {
    Image image(width, height, bit_depth);
    if (pixels.size() != image.pixel_count()) {
        throw ParameterError("pixel count " + std::to_string(pixels.size()) +
                             " does not match " + std::to_string(width) + "x" +
                             std::to_string(height));
    }
    const std::uint16_t max = image.max_value();
    for (const Pixel& p : pixels) {
        if (p.r > max || p.g > max || p.b > max) {
            throw ParameterError("channel value exceeds 2^" +
                                 std::to_string(bit_depth) + " - 1");
        }
    }
    image.pixels_ = std::move(pixels);
    return image;
}

Image to_grayscale(const Image& image) {
    Image out(image.width(), image.height(), image.bit_depth());
    auto dst = out.pixels();
    auto src = image.pixels();
    for (std::size_t i = 0; i < src.size(); ++i) {
        const unsigned sum = unsigned(src[i].r) + src[i].g + src[i].b;
        // Nearest integer to sum / 3; the fraction is never exactly 1/2.
        const auto gray = static_cast<std::uint16_t>((sum + 1) / 3);
        dst[i] = Pixel{gray, gray, gray};
    }
    return out;
}

}  // namespace pixelbreak

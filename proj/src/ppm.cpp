#include <atomic>
#include <cstdio>
#include <fstream>
#include <string>
#include <system_error>

#include "pixelbreak/image.hpp"

namespace pixelbreak {

namespace {

// Cursor over the raw stream; every failure reports the current offset.
struct Reader {
    std::span<const unsigned char> bytes;
    std::size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }
    unsigned char peek() const { return bytes[pos]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw FormatError("ppm: " + what, pos);
    }
};

bool is_pnm_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
}

// At least one whitespace byte; '#' starts a comment running to end of line.
void skip_separator(Reader& r) {
    bool seen = false;
    while (!r.eof()) {
        if (is_pnm_space(r.peek())) {
            seen = true;
            ++r.pos;
        } else if (r.peek() == '#') {
            while (!r.eof() && r.peek() != '\n') ++r.pos;
        } else {
            break;
        }
    }
    if (!seen) r.fail("expected whitespace in header");
}

std::uint64_t read_header_uint(Reader& r, const char* what) {
    if (r.eof() || r.peek() < '0' || r.peek() > '9') {
        r.fail(std::string("expected ") + what);
    }
    std::uint64_t value = 0;
    while (!r.eof() && r.peek() >= '0' && r.peek() <= '9') {
        value = value * 10 + (r.peek() - '0');
        if (value > 0xFFFFFFFFull) r.fail(std::string(what) + " out of range");
        ++r.pos;
    }
    return value;
}

constexpr std::uint64_t kMaxPixels = 1ull << 26;  // 64 Mpixel guard

}  // namespace

Image load_ppm(std::span<const unsigned char> bytes) {
    Reader r{bytes};
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
        r.fail("not a binary P6 stream");
    }
    r.pos = 2;

    skip_separator(r);
    const std::uint64_t width = read_header_uint(r, "width");
    skip_separator(r);
    const std::uint64_t height = read_header_uint(r, "height");
    skip_separator(r);
    const std::uint64_t maxval = read_header_uint(r, "maxval");

    if (width == 0 || height == 0) r.fail("zero image dimension");
    if (width * height > kMaxPixels) r.fail("image dimensions too large");
    if (maxval != 255 && maxval != 65535) {
        r.fail("unsupported maxval " + std::to_string(maxval) +
               " (expected 255 or 65535)");
    }
    // Exactly one whitespace byte between maxval and the raster.
    if (r.eof() || !is_pnm_space(r.peek())) {
        r.fail("expected single whitespace before raster");
    }
    ++r.pos;

    const int bit_depth = maxval == 255 ? 8 : 16;
    const std::size_t bytes_per_sample = maxval == 255 ? 1 : 2;
    const std::size_t raster_size =
        static_cast<std::size_t>(width) * height * 3 * bytes_per_sample;
    if (bytes.size() - r.pos < raster_size) {
        r.pos = bytes.size();
        r.fail("truncated pixel data, need " + std::to_string(raster_size) +
               " raster bytes");
    }

    std::vector<Pixel> pixels;
    pixels.reserve(static_cast<std::size_t>(width) * height);
    const unsigned char* p = bytes.data() + r.pos;
    for (std::uint64_t i = 0; i < width * height; ++i) {
        Pixel px;
        if (bytes_per_sample == 1) {
            px = Pixel{p[0], p[1], p[2]};
            p += 3;
        } else {
            px.r = static_cast<std::uint16_t>(p[0] << 8 | p[1]);
            px.g = static_cast<std::uint16_t>(p[2] << 8 | p[3]);
            px.b = static_cast<std::uint16_t>(p[4] << 8 | p[5]);
            p += 6;
        }
        pixels.push_back(px);
    }
    r.pos += raster_size;
    if (r.pos != bytes.size()) r.fail("trailing data after raster");

    return Image::from_pixels(static_cast<int>(width), static_cast<int>(height),
                              bit_depth, std::move(pixels));
}

std::vector<unsigned char> save_ppm(const Image& image) {
    if (image.bit_depth() != 8 && image.bit_depth() != 16) {
        throw CapabilityError("ppm: cannot serialize bit depth " +
                              std::to_string(image.bit_depth()) +
                              " (only 8 and 16 are supported)");
    }
    const std::string header = "P6\n" + std::to_string(image.width()) + " " +
                               std::to_string(image.height()) + "\n" +
                               std::to_string(image.max_value()) + "\n";
    const std::size_t bytes_per_sample = image.bit_depth() == 8 ? 1 : 2;
    std::vector<unsigned char> out;
    out.reserve(header.size() + image.pixel_count() * 3 * bytes_per_sample);
    out.insert(out.end(), header.begin(), header.end());
    for (const Pixel& px : image.pixels()) {
        for (std::uint16_t v : {px.r, px.g, px.b}) {
            if (bytes_per_sample == 2) {
                out.push_back(static_cast<unsigned char>(v >> 8));
            }
            out.push_back(static_cast<unsigned char>(v & 0xFF));
        }
    }
    return out;
}

Image load_ppm_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::vector<unsigned char> bytes{std::istreambuf_iterator<char>(in),
                                     std::istreambuf_iterator<char>()};
    if (in.bad()) throw Error("read failed for " + path.string());
    try {
        return load_ppm(bytes);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what(), e.offset());
    }
}

void save_ppm_file(const std::filesystem::path& path, const Image& image) {
    const std::vector<unsigned char> bytes = save_ppm(image);

    static std::atomic<unsigned> counter{0};
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(counter.fetch_add(1));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot create " + tmp.string());
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw Error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace pixelbreak

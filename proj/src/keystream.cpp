#include "pixelbreak/keystream.hpp"

#include <fstream>

#include "pixelbreak/errors.hpp"

namespace pixelbreak {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;  // splitmix64 step

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

// Sequential stream of keyed words under one label.
class KeyedStream {
public:
    KeyedStream(const SecretKey& key, StreamLabel label)
        : key_(key), label_(label) {}

    std::uint64_t next() { return keyed_word(key_, label_, counter_++); }

    // Uniform draw from [0, bound) by rejecting words past the largest
    // multiple of bound.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t rem = (0 - bound) % bound;  // 2^64 mod bound
        const std::uint64_t limit = 0 - rem;            // multiple of bound
        for (;;) {
            const std::uint64_t w = next();
            if (rem == 0 || w < limit) return w % bound;
        }
    }

private:
    SecretKey key_;
    StreamLabel label_;
    std::uint64_t counter_ = 0;
};

}  // namespace

std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}

std::uint64_t keyed_word(const SecretKey& key, StreamLabel label,
                         std::uint64_t index) noexcept {
    std::uint64_t z = mix64(index + kGamma * (static_cast<std::uint64_t>(label) + 1));
    z = mix64(z ^ key.hi);
    return mix64(z ^ key.lo);
}

SecretKey SecretKey::from_hex(std::string_view hex) {
    if (hex.size() != 32) {
        throw ParameterError("key must be exactly 32 lowercase hex characters");
    }
    SecretKey key;
    for (std::size_t i = 0; i < 32; ++i) {
        const int d = hex_digit(hex[i]);
        if (d < 0) {
            throw ParameterError(
                "key contains a non-hex character at position " +
                std::to_string(i) + " (lowercase hex required)");
        }
        std::uint64_t& half = i < 16 ? key.hi : key.lo;
        half = half << 4 | static_cast<std::uint64_t>(d);
    }
    return key;
}

std::string SecretKey::to_hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string out(32, '0');
    for (int i = 0; i < 16; ++i) {
        out[15 - i] = digits[(hi >> (4 * i)) & 0xF];
        out[31 - i] = digits[(lo >> (4 * i)) & 0xF];
    }
    return out;
}

SecretKey read_key_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open key file " + path.string());
    std::string contents{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
    if (contents.size() != 33 || contents.back() != '\n') {
        throw ParameterError("key file " + path.string() +
                             " must hold 32 hex characters plus newline");
    }
    contents.pop_back();
    try {
        return SecretKey::from_hex(contents);
    } catch (const ParameterError& e) {
        throw ParameterError("key file " + path.string() + ": " + e.what());
    }
}

PixelDecisions derive_pixel_decisions(const SecretKey& key, int u,
                                      int v) noexcept {
    const std::uint64_t index =
        static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) << 32 |
        static_cast<std::uint32_t>(u);
    std::uint64_t w = keyed_word(key, StreamLabel::pixel_decisions, index);

    PixelDecisions d;
    d.x_r = static_cast<int>(w & 1);
    d.x_g = static_cast<int>(w >> 1 & 1);
    d.x_b = static_cast<int>(w >> 2 & 1);

    // x_s by rejection over 3-bit chunks: exactly uniform on [0, 5]. The
    // first word's low bits are already spent on the negpos decisions.
    std::uint64_t pool = w >> 3;
    int avail = 61;
    for (;;) {
        while (avail >= 3) {
            const int chunk = static_cast<int>(pool & 7);
            pool >>= 3;
            avail -= 3;
            if (chunk < 6) {
                d.x_s = chunk;
                return d;
            }
        }
        w = mix64(w + kGamma);
        pool = w;
        avail = 64;
    }
}

std::vector<std::uint32_t> derive_permutation(const SecretKey& key,
                                              std::size_t n) {
    if (n == 0) throw ParameterError("permutation domain must be non-empty");
    std::vector<std::uint32_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
    KeyedStream stream(key, StreamLabel::permutation);
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j =
            static_cast<std::size_t>(stream.uniform_below(i + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

std::vector<std::uint8_t> derive_bitmask(const SecretKey& key, std::size_t n) {
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) {
        bits[i] = static_cast<std::uint8_t>(
            keyed_word(key, StreamLabel::bitmask, i) & 1);
    }
    return bits;
}

SecretKey per_image_key(const SecretKey& base, std::uint64_t ordinal) noexcept {
    return SecretKey{keyed_word(base, StreamLabel::image_key, 2 * ordinal),
                     keyed_word(base, StreamLabel::image_key, 2 * ordinal + 1)};
}

SecretKey subkey(const SecretKey& base, std::uint64_t index) noexcept {
    return SecretKey{keyed_word(base, StreamLabel::subkey, 2 * index),
                     keyed_word(base, StreamLabel::subkey, 2 * index + 1)};
}

SecretKey key_from_seed(std::uint64_t seed) noexcept {
    return SecretKey{mix64(seed + kGamma), mix64(seed)};
}

}  // namespace pixelbreak

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace pixelbreak {

// The published scheme descriptions never pin down how the secret key K
// drives their pseudorandom choices, so this module fixes one concrete
// expansion: every decision is the SplitMix64 finalizer applied to
// (key, stream label, index). Decisions are position-keyed, not
// stream-sequential, so the same key reproduces the same per-position
// transform across images of any size — which the same-key attack setting
// requires. The attacks never exploit this generator; any deterministic
// expansion would do, but keys are only portable between implementations
// that agree on it.

// 128-bit secret key. Canonical text form is 32 lowercase hex characters,
// high 64 bits first; key files carry that string newline-terminated.
struct SecretKey {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    static SecretKey from_hex(std::string_view hex);
    std::string to_hex() const;

    friend bool operator==(const SecretKey&, const SecretKey&) = default;
};

// Reads a key file: exactly 32 lowercase hex characters plus '\n'.
SecretKey read_key_file(const std::filesystem::path& path);

// Per-pixel decisions consumed by the SKK scheme.
struct PixelDecisions {
    int x_r = 0;  // negpos bit for the red channel
    int x_g = 0;
    int x_b = 0;
    int x_s = 0;  // channel permutation index, uniform over [0, 5]

    friend bool operator==(const PixelDecisions&,
                           const PixelDecisions&) = default;
};

// SplitMix64 finalizer; the only mixing primitive used anywhere.
std::uint64_t mix64(std::uint64_t z) noexcept;

// Stream labels keep the derive_* functions domain-separated: shuffle,
// reversal and key-derivation decisions never consume the same words.
enum class StreamLabel : std::uint64_t {
    pixel_decisions = 1,
    permutation = 2,
    bitmask = 3,
    image_key = 4,
    subkey = 5,
};

// One 64-bit word of the keyed stream; pure in (key, label, index).
std::uint64_t keyed_word(const SecretKey& key, StreamLabel label,
                         std::uint64_t index) noexcept;

// Decisions for pixel position (u, v); pure in (key, u, v) and independent
// of image content and size. x_s is drawn by rejection sampling from the
// mixed words, so it is exactly uniform over [0, 5].
PixelDecisions derive_pixel_decisions(const SecretKey& key, int u,
                                      int v) noexcept;

// Uniform permutation of [0, n) via Fisher-Yates over the keyed stream.
// Throws ParameterError when n == 0.
std::vector<std::uint32_t> derive_permutation(const SecretKey& key,
                                              std::size_t n);

// n keyed bits, each 0 or 1.
std::vector<std::uint8_t> derive_bitmask(const SecretKey& key, std::size_t n);

// Key for the ordinal-th image under a per-image key policy.
SecretKey per_image_key(const SecretKey& base, std::uint64_t ordinal) noexcept;

// Independent key split off a base key; used to turn one seed into several
// scheme keys for demos and tests.
SecretKey subkey(const SecretKey& base, std::uint64_t index) noexcept;

// Expands a 64-bit seed into a full key for seed-driven pipelines.
SecretKey key_from_seed(std::uint64_t seed) noexcept;

}  // namespace pixelbreak

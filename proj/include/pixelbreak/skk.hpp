#pragma once

#include <cstdint>
#include <memory>

#include "pixelbreak/image.hpp"
#include "pixelbreak/keystream.hpp"
#include "pixelbreak/oracle.hpp"

namespace pixelbreak {

// Per-pixel scheme: every pixel (u, v) independently gets a keyed
// negative-positive transformation per channel (bits x_r, x_g, x_b) and,
// optionally, a keyed channel shuffle (x_s). Pixels never move position.
struct SkkKey {
    SecretKey seed;
    bool shuffle_enabled = true;

    friend bool operator==(const SkkKey&, const SkkKey&) = default;
};

enum class KeyMode { same_key, per_image };

// Key deployment policy: one shared key for every image, or a fresh key
// mixed from (base, image ordinal) per image.
struct KeyPolicy {
    KeyMode mode = KeyMode::same_key;
    SecretKey base;

    SecretKey seed_for(std::uint64_t ordinal) const {
        return mode == KeyMode::same_key ? base : per_image_key(base, ordinal);
    }
};

// negpos each channel with its decision bit, then shuffle the channels when
// enabled. Decrypt inverts in reverse order.
Image skk_encrypt(const Image& image, const SkkKey& key);
Image skk_decrypt(const Image& image, const SkkKey& key);

// Same-key encryption oracle over skk_encrypt.
std::unique_ptr<EncryptionOracle> skk_oracle(SkkKey key);

}  // namespace pixelbreak

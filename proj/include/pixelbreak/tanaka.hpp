#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pixelbreak/image.hpp"
#include "pixelbreak/keystream.hpp"
#include "pixelbreak/oracle.hpp"

namespace pixelbreak {

// Block-scrambling scheme: the image is divided into M x M blocks and the
// same keyed transform is applied to every block. A block's 3M^2 channel
// values are flattened in canonical slot order
//   slot = 3 * (row_in_block * M + col_in_block) + channel
// then permuted, then values in masked slots are reversed
// (x -> 2^L - 1 - x).
struct TanakaKey {
    int block_size = 1;  // M
    bool reversal_enabled = false;
    // slot_permutation[s] is the source slot feeding ciphertext slot s.
    std::vector<std::uint32_t> slot_permutation;
    // reversal_mask[s] reverses ciphertext slot s after the permutation.
    std::vector<std::uint8_t> reversal_mask;

    friend bool operator==(const TanakaKey&, const TanakaKey&) = default;
};

// slot_permutation = derive_permutation(seed, 3M^2); reversal_mask =
// derive_bitmask(seed, 3M^2) when reversal is enabled, all-zero otherwise.
TanakaKey tanaka_keygen(const SecretKey& seed, int block_size, bool reversal);

// Throws DimensionError unless both image dimensions are multiples of the
// block size (edge blocks are never padded).
Image tanaka_encrypt(const Image& image, const TanakaKey& key);
Image tanaka_decrypt(const Image& image, const TanakaKey& key);

// Same-key encryption oracle over tanaka_encrypt.
std::unique_ptr<EncryptionOracle> tanaka_oracle(TanakaKey key);

}  // namespace pixelbreak

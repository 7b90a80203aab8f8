#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pixelbreak/image.hpp"
#include "pixelbreak/oracle.hpp"
#include "pixelbreak/pixel_transforms.hpp"

// The attacks operate strictly inside the threat model: chosen-plaintext
// attacks talk to an EncryptionOracle (or receive pre-encrypted helper
// images) and ciphertext-only attacks receive nothing but the ciphertext.
// This header deliberately does not include the scheme key types.

namespace pixelbreak {

// ---------------------------------------------------------------------------
// Chosen-plaintext attack on the block-scrambling scheme.
//
// Helper images expose the per-block transform: each helper plants
// pairwise-distinct sentinel values at a batch of target pixels and a fill
// value everywhere else. All planted values are drawn from
// [0, 2^(L-1) - 1], so a reversed component is recognized by landing in the
// upper half of the range. One helper can cover at most
// floor(2^(L-1) / 3) pixels (3 sentinels per pixel, each distinct from all
// reversals), so ceil(M^2 / batch) helpers cover a block.

// Recovered per-slot transform: for every ciphertext slot, the plaintext
// slot it came from and whether its value was reversed. Source indices form
// a permutation of [0, 3M^2).
struct ComponentMap {
    std::vector<std::uint32_t> source;
    std::vector<std::uint8_t> reversed;
};

// Largest valid batch for an L-bit image: floor(2^(L-1) / 3).
int tanaka_max_batch(int bit_depth);

// ceil(M^2 / batch) helper images of size M x M. Helper t targets block
// pixel indices [t * batch, ...); target k within a helper carries channels
// (3k, 3k+1, 3k+2) and every other pixel is filled with 3 * batch.
// Throws ParameterError unless 1 <= batch <= tanaka_max_batch(bit_depth).
std::vector<Image> tanaka_helper_images(int block_size, int bit_depth,
                                        int batch);

// Locates every sentinel (directly or reversed) in the encrypted helpers
// and assembles the complete slot map. Throws InconsistentOracleError when
// a sentinel is missing or found twice — the oracle key drifted or the
// oracle is not a block scrambler of the declared shape.
ComponentMap tanaka_recover_map(const std::vector<Image>& encrypted_helpers,
                                int block_size, int bit_depth, int batch);

// Inverts a recovered map on every block: unreverse, then unshuffle.
Image tanaka_map_decrypt(const Image& ciphertext, const ComponentMap& map,
                         int block_size);

// Full chosen-plaintext attack: queries the oracle exactly
// ceil(M^2 / batch) times with helper images, recovers the map, and inverts
// it on the ciphertext. Output is bit-exact plaintext when the oracle is
// the same-key scrambler that produced the ciphertext.
Image tanaka_cpa_attack(const Image& ciphertext, EncryptionOracle& oracle,
                        int block_size, int batch);

// ---------------------------------------------------------------------------
// Chosen-plaintext attack on the per-pixel scheme.

// Three distinct channel sentinels, each distinct from every XOR-image
// a ^ (2^L - 1), b ^ ..., c ^ .... The defaults 0, 1, 2 satisfy this for
// any L >= 3.
struct SkkSentinels {
    std::uint16_t a = 0;
    std::uint16_t b = 1;
    std::uint16_t c = 2;
};

// Helper image of the given size with every pixel set to (a, b, c).
// Throws ParameterError when the sentinel set is invalid for the bit depth.
Image skk_helper_image(int width, int height, int bit_depth,
                       const SkkSentinels& sentinels = {});

// Per pixel: detect the negpos bits by testing the helper's channels
// against the flipped sentinels and undo them on both images, then sort the
// helper channels back to (a, b, c) and rearrange the ciphertext pixel the
// same way. Exact plaintext with a single oracle query. Throws
// InconsistentOracleError when a helper pixel is not a permutation of
// possibly-flipped sentinels.
Image skk_cpa_attack(const Image& ciphertext, const Image& encrypted_helper,
                     const SkkSentinels& sentinels = {});

// ---------------------------------------------------------------------------
// Ciphertext-only attacks on the per-pixel scheme (per-image keys).

// Forces every channel's leading bit to `leading_bit` by XOR with 2^L - 1
// where it differs. Idempotent.
Image skk_basic_coa(const Image& ciphertext, int leading_bit);

// One candidate decryption of a single ciphertext pixel: a channel
// permutation followed by a per-channel flip mask (bit 0 flips r, bit 1
// flips g, bit 2 flips b after the shuffle).
struct PixelOption {
    int perm_index = 0;
    int negpos_mask = 0;
    Pixel candidate;
};

// All 6 * 8 = 48 candidates, ordered by
// option index = perm_index * 8 + negpos_mask; option 0 is the pixel
// itself. When the pixel came from the per-pixel scheme, the true plaintext
// pixel is always among the 48.
std::array<PixelOption, 48> enumerate_pixel_options(const Pixel& p,
                                                    int bit_depth);

// Sum over channels of |q_C - p_C|; the quantity the advanced attack
// minimizes.
std::uint64_t channel_l1_distance(const Pixel& q, const Pixel& p) noexcept;

enum class SeedStrategy {
    fix_first,      // keep the first ciphertext pixel as-is; one output
    enumerate_48,   // one output per candidate state of the first pixel
};

// Scanline traversal, row-major. Each pixel is replaced by the candidate
// among its 48 options closest (channel L1) to the decrypted reference
// pixel: the left neighbor, or the pixel above in column 0. Ties break
// toward the lowest option index.
std::vector<Image> skk_advanced_coa(const Image& ciphertext,
                                    SeedStrategy strategy);

}  // namespace pixelbreak

#pragma once

#include <array>
#include <cassert>
#include <cstdint>

#include "pixelbreak/image.hpp"

namespace pixelbreak {

// Negative-positive transformation: XOR the value with 2^L - 1 when x = 1,
// flipping every bit of an L-bit channel. Involution for fixed x.
inline std::uint16_t negpos(std::uint16_t value, int x, int bit_depth) {
    assert(x == 0 || x == 1);
    if (x == 0) return value;
    return static_cast<std::uint16_t>(value ^ ((1u << bit_depth) - 1u));
}

// Canonical channel permutation table, lexicographic order. Entry k lists
// which input channel feeds each output channel (0 = r, 1 = g, 2 = b):
//   0 -> (r,g,b)  1 -> (r,b,g)  2 -> (g,r,b)
//   3 -> (g,b,r)  4 -> (b,r,g)  5 -> (b,g,r)
inline constexpr std::array<std::array<int, 3>, 6> kChannelPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

// kInverseChannelPermutation[k] is the table index that undoes entry k.
inline constexpr std::array<int, 6> kInverseChannelPermutation = {0, 1, 2,
                                                                  4, 3, 5};

inline std::uint16_t channel(const Pixel& p, int c) {
    assert(c >= 0 && c < 3);
    return c == 0 ? p.r : (c == 1 ? p.g : p.b);
}

inline void set_channel(Pixel& p, int c, std::uint16_t value) {
    assert(c >= 0 && c < 3);
    (c == 0 ? p.r : (c == 1 ? p.g : p.b)) = value;
}

// Applies permutation table entry x_s to a pixel's channels.
inline Pixel shuffle_components(const Pixel& p, int x_s) {
    assert(x_s >= 0 && x_s <= 5);
    const auto& m = kChannelPermutations[static_cast<std::size_t>(x_s)];
    return Pixel{channel(p, m[0]), channel(p, m[1]), channel(p, m[2])};
}

}  // namespace pixelbreak

#include "pixelbreak/attacks.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace pixelbreak {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

std::size_t slot_count(int block_size) {
    return 3 * static_cast<std::size_t>(block_size) * block_size;
}

int helper_count(int block_size, int batch) {
    const int pixels = block_size * block_size;
    return (pixels + batch - 1) / batch;
}

void validate_batch(int block_size, int bit_depth, int batch) {
    if (block_size < 1) {
        throw ParameterError("block size must be at least 1");
    }
    if (bit_depth < 1 || bit_depth > 16) {
        throw ParameterError("bit depth must be in [1, 16]");
    }
    const int max_batch = tanaka_max_batch(bit_depth);
    if (batch < 1 || batch > max_batch) {
        throw ParameterError(
            "batch " + std::to_string(batch) + " out of range: 3N <= 2^(L-1) "
            "allows at most " + std::to_string(max_batch) + " pixels per "
            "helper at bit depth " + std::to_string(bit_depth));
    }
}

std::uint16_t block_slot_value(const Image& image, int bu, int bv,
                               int block_size, std::size_t slot) {
    const int pix = static_cast<int>(slot / 3);
    const int ch = static_cast<int>(slot % 3);
    const Pixel& p = image.at(bu * block_size + pix % block_size,
                              bv * block_size + pix / block_size);
    return channel(p, ch);
}

void set_block_slot_value(Image& image, int bu, int bv, int block_size,
                          std::size_t slot, std::uint16_t value) {
    const int pix = static_cast<int>(slot / 3);
    const int ch = static_cast<int>(slot % 3);
    Pixel& p = image.at(bu * block_size + pix % block_size,
                        bv * block_size + pix / block_size);
    set_channel(p, ch, value);
}

void validate_skk_sentinels(const SkkSentinels& s, int bit_depth) {
    const std::uint16_t max = static_cast<std::uint16_t>((1u << bit_depth) - 1u);
    const std::uint16_t values[6] = {
        s.a, s.b, s.c,
        static_cast<std::uint16_t>(s.a ^ max),
        static_cast<std::uint16_t>(s.b ^ max),
        static_cast<std::uint16_t>(s.c ^ max)};
    if (s.a > max || s.b > max || s.c > max) {
        throw ParameterError("sentinel exceeds 2^L - 1");
    }
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            if (values[i] == values[j]) {
                throw ParameterError(
                    "sentinels and their complements must be pairwise "
                    "distinct at bit depth " + std::to_string(bit_depth));
            }
        }
    }
}

}  // namespace

int tanaka_max_batch(int bit_depth) { return (1 << (bit_depth - 1)) / 3; }

std::vector<Image> tanaka_helper_images(int block_size, int bit_depth,
                                        int batch) {
    validate_batch(block_size, bit_depth, batch);

    const int pixels = block_size * block_size;
    const int helpers = helper_count(block_size, batch);
    const std::uint16_t fill = static_cast<std::uint16_t>(3 * batch);

    std::vector<Image> out;
    out.reserve(static_cast<std::size_t>(helpers));
    for (int t = 0; t < helpers; ++t) {
        Image h(block_size, block_size, bit_depth);
        for (Pixel& p : h.pixels()) p = Pixel{fill, fill, fill};
        for (int k = 0; k < batch && t * batch + k < pixels; ++k) {
            const int pix = t * batch + k;
            h.at(pix % block_size, pix / block_size) =
                Pixel{static_cast<std::uint16_t>(3 * k),
                      static_cast<std::uint16_t>(3 * k + 1),
                      static_cast<std::uint16_t>(3 * k + 2)};
        }
        out.push_back(std::move(h));
    }
    return out;
}

ComponentMap tanaka_recover_map(const std::vector<Image>& encrypted_helpers,
                                int block_size, int bit_depth, int batch) {
    validate_batch(block_size, bit_depth, batch);

    const int pixels = block_size * block_size;
    const int helpers = helper_count(block_size, batch);
    if (static_cast<int>(encrypted_helpers.size()) != helpers) {
        throw ParameterError("expected " + std::to_string(helpers) +
                             " encrypted helpers, got " +
                             std::to_string(encrypted_helpers.size()));
    }

    const std::size_t slots = slot_count(block_size);
    const std::uint16_t max = static_cast<std::uint16_t>((1u << bit_depth) - 1u);
    const std::uint16_t half = static_cast<std::uint16_t>(1u << (bit_depth - 1));

    ComponentMap map;
    map.source.assign(slots, kUnassigned);
    map.reversed.assign(slots, 0);
    std::vector<std::uint8_t> source_seen(slots, 0);

    for (int t = 0; t < helpers; ++t) {
        const Image& enc = encrypted_helpers[static_cast<std::size_t>(t)];
        if (enc.width() != block_size || enc.height() != block_size ||
            enc.bit_depth() != bit_depth) {
            throw ParameterError("encrypted helper " + std::to_string(t) +
                                 " has unexpected shape");
        }
        const int targets = std::min(batch, pixels - t * batch);
        const std::uint16_t sentinel_limit =
            static_cast<std::uint16_t>(3 * targets);

        for (std::size_t cs = 0; cs < slots; ++cs) {
            const std::uint16_t w = block_slot_value(enc, 0, 0, block_size, cs);
            const bool reversed = w >= half;
            const std::uint16_t value =
                reversed ? static_cast<std::uint16_t>(max - w) : w;
            if (value >= sentinel_limit) continue;  // fill, not a sentinel

            const int k = value / 3;
            const std::size_t src =
                3 * static_cast<std::size_t>(t * batch + k) + value % 3;
            if (map.source[cs] != kUnassigned || source_seen[src]) {
                throw InconsistentOracleError(
                    "sentinel " + std::to_string(value) + " of helper " +
                    std::to_string(t) + " found twice; the oracle key "
                    "changed between queries or the oracle is not the "
                    "declared scheme");
            }
            map.source[cs] = static_cast<std::uint32_t>(src);
            map.reversed[cs] = reversed ? 1 : 0;
            source_seen[src] = 1;
        }
    }

    for (std::size_t cs = 0; cs < slots; ++cs) {
        if (map.source[cs] == kUnassigned) {
            throw InconsistentOracleError(
                "ciphertext slot " + std::to_string(cs) +
                " was never matched by a sentinel; the oracle is not a "
                "block scrambler of the declared shape");
        }
    }
    return map;
}

Image tanaka_map_decrypt(const Image& ciphertext, const ComponentMap& map,
                         int block_size) {
    if (block_size < 1) {
        throw ParameterError("block size must be at least 1");
    }
    const std::size_t slots = slot_count(block_size);
    if (map.source.size() != slots || map.reversed.size() != slots) {
        throw ParameterError("component map does not cover 3M^2 slots");
    }
    if (ciphertext.width() % block_size != 0 ||
        ciphertext.height() % block_size != 0) {
        throw DimensionError("ciphertext is not divisible into blocks");
    }

    const std::uint16_t max = ciphertext.max_value();
    Image out(ciphertext.width(), ciphertext.height(), ciphertext.bit_depth());
    for (int bv = 0; bv < ciphertext.height() / block_size; ++bv) {
        for (int bu = 0; bu < ciphertext.width() / block_size; ++bu) {
            for (std::size_t cs = 0; cs < slots; ++cs) {
                std::uint16_t v =
                    block_slot_value(ciphertext, bu, bv, block_size, cs);
                if (map.reversed[cs]) v = static_cast<std::uint16_t>(max - v);
                set_block_slot_value(out, bu, bv, block_size, map.source[cs], v);
            }
        }
    }
    return out;
}

Image tanaka_cpa_attack(const Image& ciphertext, EncryptionOracle& oracle,
                        int block_size, int batch) {
    if (ciphertext.width() % block_size != 0 ||
        ciphertext.height() % block_size != 0) {
        throw DimensionError("ciphertext is not divisible into blocks");
    }
    const std::vector<Image> helpers =
        tanaka_helper_images(block_size, ciphertext.bit_depth(), batch);
    std::vector<Image> encrypted;
    encrypted.reserve(helpers.size());
    for (const Image& h : helpers) encrypted.push_back(oracle.query(h));
    const ComponentMap map = tanaka_recover_map(
        encrypted, block_size, ciphertext.bit_depth(), batch);
    return tanaka_map_decrypt(ciphertext, map, block_size);
}

Image skk_helper_image(int width, int height, int bit_depth,
                       const SkkSentinels& sentinels) {
    validate_skk_sentinels(sentinels, bit_depth);
    Image h(width, height, bit_depth);
    for (Pixel& p : h.pixels()) {
        p = Pixel{sentinels.a, sentinels.b, sentinels.c};
    }
    return h;
}

Image skk_cpa_attack(const Image& ciphertext, const Image& encrypted_helper,
                     const SkkSentinels& sentinels) {
    if (ciphertext.width() != encrypted_helper.width() ||
        ciphertext.height() != encrypted_helper.height() ||
        ciphertext.bit_depth() != encrypted_helper.bit_depth()) {
        throw DimensionError("helper and ciphertext shapes differ");
    }
    const int depth = ciphertext.bit_depth();
    validate_skk_sentinels(sentinels, depth);
    const std::uint16_t max = ciphertext.max_value();
    const std::uint16_t flipped[3] = {
        static_cast<std::uint16_t>(sentinels.a ^ max),
        static_cast<std::uint16_t>(sentinels.b ^ max),
        static_cast<std::uint16_t>(sentinels.c ^ max)};
    const std::uint16_t wanted[3] = {sentinels.a, sentinels.b, sentinels.c};

    Image out(ciphertext.width(), ciphertext.height(), depth);
    auto helper = encrypted_helper.pixels();
    auto cipher = ciphertext.pixels();
    auto plain = out.pixels();

    for (std::size_t i = 0; i < cipher.size(); ++i) {
        Pixel h = helper[i];
        Pixel e = cipher[i];
        // Undo the negative-positive transformation on both images.
        for (int ch = 0; ch < 3; ++ch) {
            const std::uint16_t hv = channel(h, ch);
            if (hv == flipped[0] || hv == flipped[1] || hv == flipped[2]) {
                set_channel(h, ch, static_cast<std::uint16_t>(hv ^ max));
                set_channel(e, ch,
                            static_cast<std::uint16_t>(channel(e, ch) ^ max));
            }
        }
        // Sort the helper channels back to (a, b, c); rearrange the
        // ciphertext pixel identically.
        Pixel recovered;
        for (int ch = 0; ch < 3; ++ch) {
            int found = -1;
            for (int j = 0; j < 3; ++j) {
                if (channel(h, j) == wanted[ch]) {
                    found = j;
                    break;
                }
            }
            if (found < 0) {
                throw InconsistentOracleError(
                    "encrypted helper pixel " + std::to_string(i) +
                    " is not a permutation of possibly-flipped sentinels");
            }
            set_channel(recovered, ch, channel(e, found));
        }
        plain[i] = recovered;
    }
    return out;
}

Image skk_basic_coa(const Image& ciphertext, int leading_bit) {
    if (leading_bit != 0 && leading_bit != 1) {
        throw ParameterError("leading bit must be 0 or 1");
    }
    const int depth = ciphertext.bit_depth();
    const std::uint16_t max = ciphertext.max_value();
    Image out(ciphertext.width(), ciphertext.height(), depth);
    auto src = ciphertext.pixels();
    auto dst = out.pixels();
    for (std::size_t i = 0; i < src.size(); ++i) {
        Pixel p = src[i];
        for (int ch = 0; ch < 3; ++ch) {
            const std::uint16_t v = channel(p, ch);
            if ((v >> (depth - 1)) != leading_bit) {
                set_channel(p, ch, static_cast<std::uint16_t>(v ^ max));
            }
        }
        dst[i] = p;
    }
    return out;
}

std::array<PixelOption, 48> enumerate_pixel_options(const Pixel& p,
                                                    int bit_depth) {
    const std::uint16_t max =
        static_cast<std::uint16_t>((1u << bit_depth) - 1u);
    std::array<PixelOption, 48> options;
    for (int perm = 0; perm < 6; ++perm) {
        const Pixel shuffled = shuffle_components(p, perm);
        for (int mask = 0; mask < 8; ++mask) {
            Pixel candidate = shuffled;
            if (mask & 1) candidate.r = static_cast<std::uint16_t>(candidate.r ^ max);
            if (mask & 2) candidate.g = static_cast<std::uint16_t>(candidate.g ^ max);
            if (mask & 4) candidate.b = static_cast<std::uint16_t>(candidate.b ^ max);
            options[static_cast<std::size_t>(perm * 8 + mask)] =
                PixelOption{perm, mask, candidate};
        }
    }
    return options;
}

std::uint64_t channel_l1_distance(const Pixel& q, const Pixel& p) noexcept {
    const auto d = [](std::uint16_t a, std::uint16_t b) {
        return static_cast<std::uint64_t>(a > b ? a - b : b - a);
    };
    return d(q.r, p.r) + d(q.g, p.g) + d(q.b, p.b);
}

namespace {

// One full scanline pass with a fixed state for the first pixel.
Image advanced_coa_pass(const Image& ciphertext, const Pixel& seed) {
    const int depth = ciphertext.bit_depth();
    Image out(ciphertext.width(), ciphertext.height(), depth);
    out.at(0, 0) = seed;
    for (int v = 0; v < ciphertext.height(); ++v) {
        for (int u = 0; u < ciphertext.width(); ++u) {
            if (u == 0 && v == 0) continue;
            const Pixel& ref = u > 0 ? out.at(u - 1, v) : out.at(0, v - 1);
            const auto options =
                enumerate_pixel_options(ciphertext.at(u, v), depth);
            std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
            Pixel chosen;
            for (const PixelOption& opt : options) {
                const std::uint64_t dist =
                    channel_l1_distance(ref, opt.candidate);
                if (dist < best) {
                    best = dist;
                    chosen = opt.candidate;
                }
            }
            out.at(u, v) = chosen;
        }
    }
    return out;
}

}  // namespace

std::vector<Image> skk_advanced_coa(const Image& ciphertext,
                                    SeedStrategy strategy) {
    std::vector<Image> out;
    if (strategy == SeedStrategy::fix_first) {
        out.push_back(advanced_coa_pass(ciphertext, ciphertext.at(0, 0)));
        return out;
    }
    const auto seeds =
        enumerate_pixel_options(ciphertext.at(0, 0), ciphertext.bit_depth());
    out.reserve(seeds.size());
    for (const PixelOption& seed : seeds) {
        out.push_back(advanced_coa_pass(ciphertext, seed.candidate));
    }
    return out;
}

}  // namespace pixelbreak

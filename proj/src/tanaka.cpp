#include "pixelbreak/tanaka.hpp"

#include <memory>
#include <string>

#include "pixelbreak/pixel_transforms.hpp"

namespace pixelbreak {

namespace {

std::size_t slot_count(int block_size) {
    return 3 * static_cast<std::size_t>(block_size) * block_size;
}

void validate_key(const TanakaKey& key) {
    if (key.block_size < 1) {
        throw ParameterError("block size must be at least 1");
    }
    const std::size_t slots = slot_count(key.block_size);
    if (key.slot_permutation.size() != slots ||
        key.reversal_mask.size() != slots) {
        throw ParameterError("key tables do not match 3M^2 = " +
                             std::to_string(slots) + " slots");
    }
    std::vector<bool> seen(slots, false);
    for (std::uint32_t s : key.slot_permutation) {
        if (s >= slots || seen[s]) {
            throw ParameterError("slot permutation is not a bijection");
        }
        seen[s] = true;
    }
}

void check_block_alignment(const Image& image, int block_size) {
    if (image.width() % block_size != 0 || image.height() % block_size != 0) {
        throw DimensionError("image " + std::to_string(image.width()) + "x" +
                             std::to_string(image.height()) +
                             " is not divisible into " +
                             std::to_string(block_size) + "x" +
                             std::to_string(block_size) + " blocks");
    }
}

// Canonical slot order within a block: pixels row-major, channels r,g,b.
void gather_block(const Image& image, int bu, int bv, int m,
                  std::vector<std::uint16_t>& slots) {
    std::size_t s = 0;
    for (int pr = 0; pr < m; ++pr) {
        for (int pc = 0; pc < m; ++pc) {
            const Pixel& p = image.at(bu * m + pc, bv * m + pr);
            slots[s++] = p.r;
            slots[s++] = p.g;
            slots[s++] = p.b;
        }
    }
}

void scatter_block(Image& image, int bu, int bv, int m,
                   const std::vector<std::uint16_t>& slots) {
    std::size_t s = 0;
    for (int pr = 0; pr < m; ++pr) {
        for (int pc = 0; pc < m; ++pc) {
            Pixel& p = image.at(bu * m + pc, bv * m + pr);
            p.r = slots[s++];
            p.g = slots[s++];
            p.b = slots[s++];
        }
    }
}

class TanakaOracle final : public EncryptionOracle {
public:
    explicit TanakaOracle(TanakaKey key) : key_(std::move(key)) {}

protected:
    Image encrypt(const Image& plaintext) override {
        return tanaka_encrypt(plaintext, key_);
    }

private:
    TanakaKey key_;
};

}  // namespace

TanakaKey tanaka_keygen(const SecretKey& seed, int block_size, bool reversal) {
    if (block_size < 1) {
        throw ParameterError("block size must be at least 1");
    }
    const std::size_t slots = slot_count(block_size);
    TanakaKey key;
    key.block_size = block_size;
    key.reversal_enabled = reversal;
    key.slot_permutation = derive_permutation(seed, slots);
    key.reversal_mask = reversal ? derive_bitmask(seed, slots)
                                 : std::vector<std::uint8_t>(slots, 0);
    return key;
}

Image tanaka_encrypt(const Image& image, const TanakaKey& key) {
    validate_key(key);
    check_block_alignment(image, key.block_size);

    const int m = key.block_size;
    const std::uint16_t max = image.max_value();
    const std::size_t slots = slot_count(m);
    Image out(image.width(), image.height(), image.bit_depth());
    std::vector<std::uint16_t> clear(slots);
    std::vector<std::uint16_t> enc(slots);

    for (int bv = 0; bv < image.height() / m; ++bv) {
        for (int bu = 0; bu < image.width() / m; ++bu) {
            gather_block(image, bu, bv, m, clear);
            for (std::size_t s = 0; s < slots; ++s) {
                std::uint16_t v = clear[key.slot_permutation[s]];
                if (key.reversal_mask[s]) v = static_cast<std::uint16_t>(max - v);
                enc[s] = v;
            }
            scatter_block(out, bu, bv, m, enc);
        }
    }
    return out;
}

Image tanaka_decrypt(const Image& image, const TanakaKey& key) {
    validate_key(key);
    check_block_alignment(image, key.block_size);

    const int m = key.block_size;
    const std::uint16_t max = image.max_value();
    const std::size_t slots = slot_count(m);
    Image out(image.width(), image.height(), image.bit_depth());
    std::vector<std::uint16_t> enc(slots);
    std::vector<std::uint16_t> clear(slots);

    for (int bv = 0; bv < image.height() / m; ++bv) {
        for (int bu = 0; bu < image.width() / m; ++bu) {
            gather_block(image, bu, bv, m, enc);
            for (std::size_t s = 0; s < slots; ++s) {
                std::uint16_t v = enc[s];
                if (key.reversal_mask[s]) v = static_cast<std::uint16_t>(max - v);
                clear[key.slot_permutation[s]] = v;
            }
            scatter_block(out, bu, bv, m, clear);
        }
    }
    return out;
}

std::unique_ptr<EncryptionOracle> tanaka_oracle(TanakaKey key) {
    validate_key(key);
    return std::make_unique<TanakaOracle>(std::move(key));
}

}  // namespace pixelbreak

#include "pixelbreak/skk.hpp"

#include <memory>

#include "pixelbreak/pixel_transforms.hpp"

namespace pixelbreak {

namespace {

class SkkOracle final : public EncryptionOracle {
public:
    explicit SkkOracle(SkkKey key) : key_(key) {}

protected:
    Image encrypt(const Image& plaintext) override {
        return skk_encrypt(plaintext, key_);
    }

private:
    SkkKey key_;
};

}  // namespace

Image skk_encrypt(const Image& image, const SkkKey& key) {
    const int depth = image.bit_depth();
    Image out(image.width(), image.height(), depth);
    for (int v = 0; v < image.height(); ++v) {
        for (int u = 0; u < image.width(); ++u) {
            const PixelDecisions d = derive_pixel_decisions(key.seed, u, v);
            const Pixel& p = image.at(u, v);
            Pixel q{negpos(p.r, d.x_r, depth), negpos(p.g, d.x_g, depth),
                    negpos(p.b, d.x_b, depth)};
            if (key.shuffle_enabled) q = shuffle_components(q, d.x_s);
            out.at(u, v) = q;
        }
    }
    return out;
}

Image skk_decrypt(const Image& image, const SkkKey& key) {
    const int depth = image.bit_depth();
    Image out(image.width(), image.height(), depth);
    for (int v = 0; v < image.height(); ++v) {
        for (int u = 0; u < image.width(); ++u) {
            const PixelDecisions d = derive_pixel_decisions(key.seed, u, v);
            Pixel q = image.at(u, v);
            if (key.shuffle_enabled) {
                q = shuffle_components(q, kInverseChannelPermutation[d.x_s]);
            }
            out.at(u, v) = Pixel{negpos(q.r, d.x_r, depth),
                                 negpos(q.g, d.x_g, depth),
                                 negpos(q.b, d.x_b, depth)};
        }
    }
    return out;
}

std::unique_ptr<EncryptionOracle> skk_oracle(SkkKey key) {
    return std::make_unique<SkkOracle>(key);
}

}  // namespace pixelbreak

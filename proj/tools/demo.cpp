#include "demo.hpp"

#include <fstream>
#include <utility>
#include <vector>

#include "pixelbreak/attacks.hpp"
#include "pixelbreak/corpus.hpp"
#include "pixelbreak/image.hpp"
#include "pixelbreak/metrics.hpp"
#include "pixelbreak/pixel_transforms.hpp"
#include "pixelbreak/skk.hpp"
#include "pixelbreak/tanaka.hpp"

namespace {

using namespace pixelbreak;

using Panels = std::vector<std::pair<std::string, Image>>;

// Per-pixel keyed channel shuffle with no negpos step; the "scrambled
// colors still show the objects" illustration.
Image shuffle_channels_only(const Image& image, const SecretKey& seed) {
    Image out(image.width(), image.height(), image.bit_depth());
    for (int v = 0; v < image.height(); ++v) {
        for (int u = 0; u < image.width(); ++u) {
            const int x_s = derive_pixel_decisions(seed, u, v).x_s;
            out.at(u, v) = shuffle_components(image.at(u, v), x_s);
        }
    }
    return out;
}

void require_exact(const Image& original, const Image& attacked,
                   const std::string& what) {
    if (!exact_match(original, attacked)) {
        throw Error(what + ": attack did not recover the plaintext exactly");
    }
}

void write_panels(const std::string& figure,
                  const std::filesystem::path& outdir, const Panels& panels) {
    std::filesystem::create_directories(outdir);
    std::string index;
    for (const auto& [name, image] : panels) {
        save_ppm_file(outdir / name, image);
        index += name + "\n";
    }
    const std::filesystem::path index_path = outdir / (figure + "_index.txt");
    std::ofstream out(index_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot create " + index_path.string());
    out << index;
}

}  // namespace

int run_demo(const std::string& figure, const std::filesystem::path& outdir,
             std::uint64_t seed) {
    const auto corpus = sample_corpus(seed);
    const Image& hills = corpus[0].image;
    const Image& bird = corpus[1].image;
    const Image& horse = corpus[2].image;
    const SecretKey root = corpus_root_key(seed);

    Panels panels;

    if (figure == "fig1") {
        const TanakaKey key =
            tanaka_keygen(subkey(root, kSubkeyTanakaDemo), 4, true);
        panels.emplace_back("fig1_original.ppm", hills);
        panels.emplace_back("fig1_tanaka_encrypted.ppm",
                            tanaka_encrypt(hills, key));
    } else if (figure == "fig2") {
        const SkkKey key{subkey(root, kSubkeySkkSameKey), true};
        panels.emplace_back("fig2_original.ppm", bird);
        panels.emplace_back("fig2_skk_encrypted.ppm", skk_encrypt(bird, key));
    } else if (figure == "fig3") {
        const TanakaKey key =
            tanaka_keygen(subkey(root, kSubkeyTanakaDemo), 4, true);
        const Image cipher = tanaka_encrypt(hills, key);
        auto oracle = tanaka_oracle(key);
        const Image attacked = tanaka_cpa_attack(cipher, *oracle, 4, 16);
        require_exact(hills, attacked, "fig3");
        panels.emplace_back("fig3_tanaka_encrypted.ppm", cipher);
        panels.emplace_back("fig3_tanaka_cpa_decrypted.ppm", attacked);
    } else if (figure == "fig4") {
        const SkkKey key{subkey(root, kSubkeySkkSameKey), true};
        const Image cipher = skk_encrypt(bird, key);
        auto oracle = skk_oracle(key);
        const Image helper =
            skk_helper_image(bird.width(), bird.height(), bird.bit_depth());
        const Image attacked =
            skk_cpa_attack(cipher, oracle->query(helper), SkkSentinels{});
        require_exact(bird, attacked, "fig4");
        panels.emplace_back("fig4_skk_encrypted.ppm", cipher);
        panels.emplace_back("fig4_skk_cpa_decrypted.ppm", attacked);
    } else if (figure == "fig5") {
        panels.emplace_back("fig5_original.ppm", bird);
        panels.emplace_back(
            "fig5_channels_shuffled.ppm",
            shuffle_channels_only(bird, subkey(root, kSubkeyShuffleOnly)));
    } else if (figure == "fig6" || figure == "fig7") {
        const bool is_bird = figure == "fig6";
        const Image& original = is_bird ? bird : horse;
        const SkkKey key{per_image_key(subkey(root, kSubkeySkkPerImage),
                                       is_bird ? 1 : 2),
                         true};
        const Image cipher = skk_encrypt(original, key);
        const Image basic = skk_basic_coa(cipher, 1);
        panels.emplace_back(figure + "_skk_encrypted.ppm", cipher);
        panels.emplace_back(figure + "_coa_basic.ppm", basic);
        panels.emplace_back(figure + "_coa_basic_gray.ppm",
                            to_grayscale(basic));
    } else if (figure == "fig8") {
        const SkkKey key{per_image_key(subkey(root, kSubkeySkkPerImage), 1),
                         true};
        const Image cipher = skk_encrypt(bird, key);
        const Image advanced =
            skk_advanced_coa(cipher, SeedStrategy::fix_first).front();
        panels.emplace_back("fig8_skk_encrypted.ppm", cipher);
        panels.emplace_back("fig8_coa_adv.ppm", advanced);
        panels.emplace_back("fig8_coa_adv_gray.ppm", to_grayscale(advanced));
    } else {
        throw UsageError("unknown figure id '" + figure +
                         "' (expected fig1..fig8)");
    }

    write_panels(figure, outdir, panels);
    return 0;
}

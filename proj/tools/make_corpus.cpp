// Maintenance tool: writes the bundled corpus PPMs. The checked-in files
// under assets/corpus must stay byte-identical to the generator output for
// the default seed; the unit tests verify that.

#include <filesystem>
#include <iostream>

#include "pixelbreak/corpus.hpp"
#include "pixelbreak/image.hpp"

int main(int argc, char** argv) {
    const std::filesystem::path outdir =
        argc > 1 ? argv[1] : "assets/corpus";
    try {
        std::filesystem::create_directories(outdir);
        const auto seed = pixelbreak::corpus_seed_from_env();
        for (const auto& sample : pixelbreak::sample_corpus(seed)) {
            const auto path = outdir / (sample.name + ".ppm");
            pixelbreak::save_ppm_file(path, sample.image);
            std::cout << path.string() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "make_corpus: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

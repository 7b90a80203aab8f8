#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pixelbreak/image.hpp"
#include "pixelbreak/keystream.hpp"

namespace pixelbreak {

struct CorpusImage {
    std::string name;
    Image image;
};

// Bundled sample corpus: photographic-style stand-ins (smooth gradients,
// soft shapes, mild texture) synthesized deterministically from a seed.
// The synthesis uses only +, -, *, / and sqrt in double precision, so the
// pixel bytes are reproducible. Index 0 is a 32x32 landscape, 1 and 2 are
// 96x96 scenes; all are 8-bit. The checked-in PPMs under assets/corpus are
// exactly sample_corpus(kDefaultCorpusSeed).
std::vector<CorpusImage> sample_corpus(std::uint64_t seed);

// Default corpus seed; PIXELBREAK_SEED overrides it (decimal or 0x hex).
inline constexpr std::uint64_t kDefaultCorpusSeed = 13;

std::uint64_t corpus_seed_from_env();

// Deterministic key derivations for the demo pipelines and the acceptance
// suite, all split off the corpus seed.
SecretKey corpus_root_key(std::uint64_t seed);

inline constexpr std::uint64_t kSubkeyTanakaDemo = 1;   // fig 1 / fig 3
inline constexpr std::uint64_t kSubkeySkkSameKey = 2;   // fig 2 / fig 4
inline constexpr std::uint64_t kSubkeySkkPerImage = 3;  // figs 6-8 base
inline constexpr std::uint64_t kSubkeyShuffleOnly = 4;  // fig 5

}  // namespace pixelbreak

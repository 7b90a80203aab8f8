#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

// Regenerates one figure's panels (original / encrypted / attacked, with
// grayscale variants where applicable) under outdir, plus a
// <figure>_index.txt naming the panels in order. Valid ids: fig1..fig8.
int run_demo(const std::string& figure, const std::filesystem::path& outdir,
             std::uint64_t seed);

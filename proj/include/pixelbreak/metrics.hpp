#pragma once

#include <cstdint>
#include <string>

#include "pixelbreak/image.hpp"

namespace pixelbreak {

// 10 * log10((2^L - 1)^2 / MSE) with the MSE averaged over all channels of
// all pixels; +infinity when the images are identical. Throws
// DimensionError on mismatched dimensions or bit depth.
double psnr(const Image& a, const Image& b);

// PSNR between the grayscale conversions of the two images.
double psnr_grayscale(const Image& a, const Image& b);

// Sum over all horizontally and vertically adjacent pixel pairs of the
// channel L1 difference. Zero for constant images; a proxy for edge
// content.
std::uint64_t gradient_energy(const Image& image);

// True iff dimensions, bit depth and every channel value are identical.
bool exact_match(const Image& a, const Image& b) noexcept;

struct AttackReport {
    bool exact_match = false;
    double psnr_db = 0.0;       // +infinity when exact_match
    double psnr_gray_db = 0.0;
    std::uint64_t gradient_energy = 0;
    std::uint64_t query_count = 0;
    double wall_time_ms = 0.0;
};

// Compares an attack output against the original it tried to recover.
// gradient_energy is measured on the attack output.
AttackReport make_attack_report(const Image& original, const Image& attacked,
                                std::uint64_t query_count,
                                double wall_time_ms);

// Flat JSON object with snake_case keys. Infinite PSNR serializes as the
// string "inf" so every consumer can parse it.
std::string report_to_json(const AttackReport& report);

// CSV emission for batch runs: one row per (image, attack) pair.
std::string report_csv_header();
std::string report_csv_row(const std::string& image_name,
                           const std::string& attack_name,
                           const AttackReport& report);

}  // namespace pixelbreak

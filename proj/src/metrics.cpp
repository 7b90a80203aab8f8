#include "pixelbreak/metrics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace pixelbreak {

namespace {

void check_comparable(const Image& a, const Image& b) {
    if (a.width() != b.width() || a.height() != b.height() ||
        a.bit_depth() != b.bit_depth()) {
        throw DimensionError("images are not comparable: " +
                             std::to_string(a.width()) + "x" +
                             std::to_string(a.height()) + "/L" +
                             std::to_string(a.bit_depth()) + " vs " +
                             std::to_string(b.width()) + "x" +
                             std::to_string(b.height()) + "/L" +
                             std::to_string(b.bit_depth()));
    }
}

// Fixed-precision decimal keeps report bytes stable across runs.
std::string format_db(double value) {
    if (std::isinf(value)) return "inf";
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(4);
    os << value;
    return os.str();
}

}  // namespace

double psnr(const Image& a, const Image& b) {
    check_comparable(a, b);
    double sum = 0.0;
    auto pa = a.pixels();
    auto pb = b.pixels();
    for (std::size_t i = 0; i < pa.size(); ++i) {
        const double dr = double(pa[i].r) - double(pb[i].r);
        const double dg = double(pa[i].g) - double(pb[i].g);
        const double db = double(pa[i].b) - double(pb[i].b);
        sum += dr * dr + dg * dg + db * db;
    }
    const double mse = sum / (3.0 * static_cast<double>(pa.size()));
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    const double peak = static_cast<double>(a.max_value());
    return 10.0 * std::log10(peak * peak / mse);
}

double psnr_grayscale(const Image& a, const Image& b) {
    return psnr(to_grayscale(a), to_grayscale(b));
}

std::uint64_t gradient_energy(const Image& image) {
    std::uint64_t total = 0;
    const auto diff = [](std::uint16_t x, std::uint16_t y) {
        return static_cast<std::uint64_t>(x > y ? x - y : y - x);
    };
    for (int v = 0; v < image.height(); ++v) {
        for (int u = 0; u < image.width(); ++u) {
            const Pixel& p = image.at(u, v);
            if (u + 1 < image.width()) {
                const Pixel& q = image.at(u + 1, v);
                total += diff(p.r, q.r) + diff(p.g, q.g) + diff(p.b, q.b);
            }
            if (v + 1 < image.height()) {
                const Pixel& q = image.at(u, v + 1);
                total += diff(p.r, q.r) + diff(p.g, q.g) + diff(p.b, q.b);
            }
        }
    }
    return total;
}

bool exact_match(const Image& a, const Image& b) noexcept {
    return a == b;
}

AttackReport make_attack_report(const Image& original, const Image& attacked,
                                std::uint64_t query_count,
                                double wall_time_ms) {
    AttackReport report;
    report.exact_match = exact_match(original, attacked);
    report.psnr_db = psnr(original, attacked);
    report.psnr_gray_db = psnr_grayscale(original, attacked);
    report.gradient_energy = gradient_energy(attacked);
    report.query_count = query_count;
    report.wall_time_ms = wall_time_ms;
    return report;
}

std::string report_to_json(const AttackReport& report) {
    nlohmann::ordered_json j;
    j["exact_match"] = report.exact_match;
    if (std::isinf(report.psnr_db)) {
        j["psnr_db"] = "inf";
    } else {
        j["psnr_db"] = report.psnr_db;
    }
    if (std::isinf(report.psnr_gray_db)) {
        j["psnr_gray_db"] = "inf";
    } else {
        j["psnr_gray_db"] = report.psnr_gray_db;
    }
    j["gradient_energy"] = report.gradient_energy;
    j["query_count"] = report.query_count;
    j["wall_time_ms"] = report.wall_time_ms;
    return j.dump(2) + "\n";
}

std::string report_csv_header() {
    return "image,attack,exact_match,psnr_db,psnr_gray_db,gradient_energy,"
           "query_count,wall_time_ms\n";
}

std::string report_csv_row(const std::string& image_name,
                           const std::string& attack_name,
                           const AttackReport& report) {
    std::ostringstream os;
    os << image_name << ',' << attack_name << ','
       << (report.exact_match ? "true" : "false") << ','
       << format_db(report.psnr_db) << ',' << format_db(report.psnr_gray_db)
       << ',' << report.gradient_energy << ',' << report.query_count << ',';
    os.setf(std::ios::fixed);
    os.precision(3);
    os << report.wall_time_ms << '\n';
    return os.str();
}

}  // namespace pixelbreak

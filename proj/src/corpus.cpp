#include "pixelbreak/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "pixelbreak/errors.hpp"

namespace pixelbreak {

namespace {

struct Rgb {
    double r, g, b;
};

Rgb lerp(const Rgb& a, const Rgb& b, double t) {
    return Rgb{a.r + (b.r - a.r) * t, a.g + (b.g - a.g) * t,
               a.b + (b.b - a.b) * t};
}

double clamp01(double t) { return t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t); }

double smoothstep(double e0, double e1, double x) {
    const double t = clamp01((x - e0) / (e1 - e0));
    return t * t * (3.0 - 2.0 * t);
}

// Quartic bump: 1 at the center, smoothly 0 outside |x| >= 1.
double bump(double x) {
    const double q = 1.0 - x * x;
    return q > 0.0 ? q * q : 0.0;
}

// 0 inside the ellipse, rising to 1 past its soft rim.
double ellipse_weight(double u, double v, double cu, double cv, double ru,
                      double rv, double soft) {
    const double du = (u - cu) / ru;
    const double dv = (v - cv) / rv;
    const double d = std::sqrt(du * du + dv * dv);
    return 1.0 - smoothstep(1.0 - soft, 1.0 + soft, d);
}

// Painter state: scenes are built by blending layers into a buffer.
class Canvas {
public:
    Canvas(int width, int height) : width_(width), buffer_(width * height) {}

    Rgb& at(int u, int v) { return buffer_[static_cast<std::size_t>(v) * width_ + u]; }

    Image finish(std::uint64_t jitter_seed, int height) {
        Image out(width_, height, 8);
        for (int v = 0; v < height; ++v) {
            for (int u = 0; u < width_; ++u) {
                const std::uint64_t h = mix64(
                    jitter_seed ^
                    (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v))
                         << 32 |
                     static_cast<std::uint32_t>(u)));
                const double jitter = static_cast<double>(h % 5) - 2.0;
                const Rgb& c = at(u, v);
                out.at(u, v) = Pixel{quantize(c.r + jitter),
                                     quantize(c.g + jitter),
                                     quantize(c.b + jitter)};
            }
        }
        return out;
    }

private:
    static std::uint16_t quantize(double x) {
        const double c = x < 0.0 ? 0.0 : (x > 255.0 ? 255.0 : x);
        return static_cast<std::uint16_t>(c + 0.5);
    }

    int width_;
    std::vector<Rgb> buffer_;
};

void blend(Rgb& dst, const Rgb& src, double w) { dst = lerp(dst, src, clamp01(w)); }

// 32x32 landscape: sky gradient, low sun, two rounded hills.
Image make_hills32(std::uint64_t seed) {
    const int n = 32;
    Canvas canvas(n, n);
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
            const double fu = u;
            const double fv = v;

            const double sky_t = clamp01(fv / 21.0);
            Rgb c = lerp(Rgb{142, 184, 232}, Rgb{198, 221, 242}, sky_t);

            const double sun = ellipse_weight(fu, fv, 23.5, 7.0, 3.6, 3.6, 0.35);
            blend(c, Rgb{251, 239, 204}, sun);

            const double ridge = 21.0 - 2.4 * bump((fu - 9.0) / 7.5) -
                                 3.2 * bump((fu - 24.0) / 8.5);
            const double hill_t = clamp01((fv - ridge) / (31.0 - ridge));
            const Rgb hill = lerp(Rgb{132, 152, 116}, Rgb{116, 140, 108}, hill_t);
            blend(c, hill, smoothstep(ridge - 0.8, ridge + 0.8, fv));

            canvas.at(u, v) = c;
        }
    }
    return canvas.finish(mix64(seed + 1), n);
}

// 96x96 scene: sky, clouds, a branch and a perched bird.
Image make_bird96(std::uint64_t seed) {
    const int n = 96;
    Canvas canvas(n, n);
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
            const double fu = u;
            const double fv = v;

            Rgb c = lerp(Rgb{154, 193, 235}, Rgb{206, 229, 246},
                         clamp01(fv / 95.0));

            blend(c, Rgb{248, 250, 252},
                  0.55 * ellipse_weight(fu, fv, 30, 20, 17, 5.5, 0.45));
            blend(c, Rgb{246, 249, 252},
                  0.5 * ellipse_weight(fu, fv, 70, 34, 21, 6.5, 0.45));
            blend(c, Rgb{244, 248, 251},
                  0.45 * ellipse_weight(fu, fv, 18, 48, 14, 5.0, 0.5));

            const double branch_line = 80.0 - 0.08 * fu;
            const double branch =
                1.0 - smoothstep(1.1, 2.4, std::abs(fv - branch_line));
            blend(c, Rgb{136 + 6.0 * fu / 95.0, 112, 94}, branch);

            const Rgb body{124, 106, 98};
            blend(c, body, ellipse_weight(fu, fv, 47, 63, 10.5, 7.2, 0.18));
            blend(c, Rgb{152, 134, 118},
                  0.8 * ellipse_weight(fu, fv, 47, 67, 8.0, 4.2, 0.3));
            blend(c, Rgb{108, 94, 90},
                  ellipse_weight(fu, fv, 43.5, 61.5, 5.8, 3.4, 0.3));
            blend(c, body, ellipse_weight(fu, fv, 57.5, 53, 4.6, 4.6, 0.2));
            blend(c, Rgb{214, 152, 96},
                  ellipse_weight(fu, fv, 63.5, 53.5, 3.0, 1.5, 0.35));
            blend(c, Rgb{66, 58, 56},
                  ellipse_weight(fu, fv, 58.8, 51.8, 1.0, 1.0, 0.5));

            canvas.at(u, v) = c;
        }
    }
    return canvas.finish(mix64(seed + 2), n);
}

// 96x96 scene: hazy ridge, meadow and a grazing horse.
Image make_horse96(std::uint64_t seed) {
    const int n = 96;
    Canvas canvas(n, n);
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
            const double fu = u;
            const double fv = v;

            Rgb c = lerp(Rgb{166, 202, 238}, Rgb{196, 222, 246},
                         clamp01(fv / 41.0));

            const double ridge = 34.0 - 2.5 * bump((fu - 20.0) / 16.0) -
                                 3.0 * bump((fu - 66.0) / 20.0);
            const Rgb haze = lerp(Rgb{156, 176, 152}, Rgb{166, 184, 160},
                                  clamp01((fv - ridge) / 10.0));
            blend(c, haze, smoothstep(ridge - 1.0, ridge + 1.0, fv));

            const Rgb meadow = lerp(Rgb{146, 176, 118}, Rgb{174, 198, 136},
                                    clamp01((fv - 42.0) / 53.0));
            blend(c, meadow, smoothstep(41.0, 43.0, fv));

            const Rgb coat{126, 106, 94};
            blend(c, coat, ellipse_weight(fu, fv, 45, 57, 13.0, 6.8, 0.15));
            blend(c, coat, ellipse_weight(fu, fv, 55.5, 50, 4.2, 6.0, 0.25));
            blend(c, coat, ellipse_weight(fu, fv, 59.5, 43.5, 4.6, 3.0, 0.3));
            for (const double leg_u : {36.0, 42.0, 50.0, 56.0}) {
                const double in_v = smoothstep(60.0, 62.0, fv) *
                                    (1.0 - smoothstep(72.0, 74.5, fv));
                const double across =
                    1.0 - smoothstep(0.9, 1.9, std::abs(fu - leg_u));
                blend(c, Rgb{118, 99, 89}, in_v * across);
            }
            blend(c, Rgb{108, 90, 82},
                  ellipse_weight(fu, fv, 31.5, 56, 2.2, 5.0, 0.35));
            blend(c, Rgb{146, 124, 108},
                  0.5 * ellipse_weight(fu, fv, 43, 52.5, 10.0, 3.0, 0.5));

            canvas.at(u, v) = c;
        }
    }
    return canvas.finish(mix64(seed + 3), n);
}

}  // namespace

std::vector<CorpusImage> sample_corpus(std::uint64_t seed) {
    std::vector<CorpusImage> corpus;
    corpus.push_back({"hills32", make_hills32(seed)});
    corpus.push_back({"bird96", make_bird96(seed)});
    corpus.push_back({"horse96", make_horse96(seed)});
    return corpus;
}

std::uint64_t corpus_seed_from_env() {
    const char* env = std::getenv("PIXELBREAK_SEED");
    if (env == nullptr || *env == '\0') return kDefaultCorpusSeed;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 0);
    if (end == nullptr || *end != '\0') {
        throw ParameterError(
            "PIXELBREAK_SEED must be a decimal or 0x-prefixed integer");
    }
    return static_cast<std::uint64_t>(value);
}

SecretKey corpus_root_key(std::uint64_t seed) { return key_from_seed(seed); }

}  // namespace pixelbreak

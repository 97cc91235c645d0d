#include "retina/color.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace retina {

namespace {

std::uint8_t round255(double v) {
    long r = std::lround(v);
    return static_cast<std::uint8_t>(std::clamp(r, 0L, 255L));
}

}  // namespace

HlsPixel rgb_to_hls_px(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8) {
    const double r = r8 / 255.0;
    const double g = g8 / 255.0;
    const double b = b8 / 255.0;
    const double mx = std::max({r, g, b});
    const double mn = std::min({r, g, b});

    HlsPixel out{0.0, 100.0 * (mx + mn) / 2.0, 0.0};
    if (mx == mn) return out;  // achromatic, H canonicalized to 0

    const double d = mx - mn;
    out.s = d / (1.0 - std::fabs(mx + mn - 1.0));

    double hp;
    if (mx == r) {
        hp = std::fmod((g - b) / d, 6.0);
        if (hp < 0.0) hp += 6.0;
    } else if (mx == g) {
        hp = (b - r) / d + 2.0;
    } else {
        hp = (r - g) / d + 4.0;
    }
    out.h = 60.0 * hp;
    if (out.h >= 360.0) out.h -= 360.0;
    return out;
}

void hls_to_rgb_px(double h, double l, double s, std::uint8_t& r, std::uint8_t& g,
                   std::uint8_t& b) {
    const double l01 = l / 100.0;
    const double c = (1.0 - std::fabs(2.0 * l01 - 1.0)) * s;
    const double m = l01 - c / 2.0;

    double hp = h / 60.0;
    if (hp < 0.0 || hp >= 6.0) hp = std::fmod(std::fmod(hp, 6.0) + 6.0, 6.0);
    const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));

    double r1 = 0.0, g1 = 0.0, b1 = 0.0;
    switch (static_cast<int>(hp)) {
        case 0: r1 = c; g1 = x; break;
        case 1: r1 = x; g1 = c; break;
        case 2: g1 = c; b1 = x; break;
        case 3: g1 = x; b1 = c; break;
        case 4: r1 = x; b1 = c; break;
        default: r1 = c; b1 = x; break;
    }
    r = round255(255.0 * (r1 + m));
    g = round255(255.0 * (g1 + m));
    b = round255(255.0 * (b1 + m));
}

Plane extract_green(const Rgb8Image& img) {
    Plane out(img.width, img.height, 0.0, 255.0);
    const std::int64_t n = static_cast<std::int64_t>(img.pixels());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        out.data[static_cast<std::size_t>(i)] = img.data[static_cast<std::size_t>(i) * 3 + 1];
    }
    return out;
}

Plane to_grayscale(const Rgb8Image& img) {
    Plane out(img.width, img.height, 0.0, 255.0);
    const std::int64_t n = static_cast<std::int64_t>(img.pixels());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const std::uint8_t* p = img.data.data() + static_cast<std::size_t>(i) * 3;
        double y = 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
        out.data[static_cast<std::size_t>(i)] = round255(y);
    }
    return out;
}

HlsImage rgb_to_hls(const Rgb8Image& img) {
    HlsImage out(img.width, img.height);
    const std::int64_t n = static_cast<std::int64_t>(img.pixels());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const std::uint8_t* p = img.data.data() + static_cast<std::size_t>(i) * 3;
        HlsPixel hls = rgb_to_hls_px(p[0], p[1], p[2]);
        out.h[static_cast<std::size_t>(i)] = hls.h;
        out.l[static_cast<std::size_t>(i)] = hls.l;
        out.s[static_cast<std::size_t>(i)] = hls.s;
    }
    return out;
}

Rgb8Image hls_to_rgb(const HlsImage& img) {
    Rgb8Image out(img.width, img.height);
    const std::int64_t n = static_cast<std::int64_t>(img.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        std::uint8_t* p = out.data.data() + static_cast<std::size_t>(i) * 3;
        hls_to_rgb_px(img.h[static_cast<std::size_t>(i)], img.l[static_cast<std::size_t>(i)],
                      img.s[static_cast<std::size_t>(i)], p[0], p[1], p[2]);
    }
    return out;
}

Plane luminosity_plane(const HlsImage& img) {
    Plane out(img.width, img.height, 0.0, 100.0);
    out.data = img.l;
    return out;
}

}  // namespace retina

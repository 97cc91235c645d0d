#include "retina/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "retina/errors.hpp"

namespace retina {

double entropy(const Plane& plane) {
    std::array<std::uint64_t, 256> hist{};
    for (double v : plane.data) {
        long q = std::lround(v);
        hist[static_cast<std::size_t>(std::clamp(q, 0L, 255L))]++;
    }
    const double n = static_cast<double>(plane.size());
    double bits = 0.0;
    for (std::uint64_t c : hist) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / n;
        bits -= p * std::log2(p);
    }
    return bits;
}

double rms_contrast(const Plane& plane) {
    double mean = 0.0;
    for (double v : plane.data) mean += v;
    mean /= static_cast<double>(plane.size());
    double acc = 0.0;
    for (double v : plane.data) acc += (v - mean) * (v - mean);
    return std::sqrt(acc / static_cast<double>(plane.size()));
}

double michelson_contrast(const Plane& plane, const FovMask& fg, const FovMask& bg) {
    if (fg.width != plane.width || fg.height != plane.height || bg.width != plane.width ||
        bg.height != plane.height)
        fail(Errc::MaskMismatch, "mask dimensions differ from plane");

    double fg_sum = 0.0, bg_sum = 0.0;
    std::size_t fg_n = 0, bg_n = 0;
    for (std::size_t i = 0; i < plane.size(); ++i) {
        const bool in_fg = fg.inside[i] != 0;
        const bool in_bg = bg.inside[i] != 0;
        if (in_fg && in_bg) fail(Errc::MaskOverlap, "foreground and background masks intersect");
        if (in_fg) {
            fg_sum += plane.data[i];
            ++fg_n;
        } else if (in_bg) {
            bg_sum += plane.data[i];
            ++bg_n;
        }
    }
    if (fg_n == 0 || bg_n == 0) fail(Errc::EmptyMask, "region mask selects no pixels");

    const double m_fg = fg_sum / static_cast<double>(fg_n);
    const double m_bg = bg_sum / static_cast<double>(bg_n);
    if (m_fg == 0.0 && m_bg == 0.0) return 0.0;
    return std::fabs(m_bg - m_fg) / (m_bg + m_fg);
}

double psnr(const Plane& reference, const Plane& test) {
    if (reference.width != test.width || reference.height != test.height)
        fail(Errc::DimensionMismatch, "psnr operands differ in size");
    double mse = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        const double d = reference.data[i] - test.data[i];
        mse += d * d;
    }
    mse /= static_cast<double>(reference.size());
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace retina

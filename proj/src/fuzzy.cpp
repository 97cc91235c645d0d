#include "retina/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "retina/color.hpp"
#include "retina/errors.hpp"
#include "retina/stats.hpp"

namespace retina {

namespace {

double gauss(double x, const Membership& mf) {
    const double z = (x - mf.center) / mf.width;
    return std::exp(-0.5 * z * z);
}

}  // namespace

MembershipSet membership_set(double m) {
    if (!(m >= 5.0 && m <= 95.0)) fail(Errc::OutOfRange, "mean luminosity must lie in [5,95]");
    MembershipSet set;
    set.source_m = m;
    set.very_dark = {std::max(-20.0, m - 40.0), m / 2.0};
    set.dark = {0.45 * m, m / 4.0};
    set.medium = {1.1 * m, m / 6.0};
    set.bright = {2.5 * m - 25.0, (100.0 - m) / 4.0};
    set.very_bright = {125.0, (100.0 - m) / 4.0};
    return set;
}

MembershipDegrees evaluate_memberships(double x, const MembershipSet& set) {
    return MembershipDegrees{
        gauss(x, set.very_dark), gauss(x, set.dark),   gauss(x, set.medium),
        gauss(x, set.bright),    gauss(x, set.very_bright),
    };
}

Plane fuzzy_transform(const Plane& plane, const MembershipSet& set) {
    Plane out(plane.width, plane.height, 0.0, 1.0);
    const std::int64_t n = static_cast<std::int64_t>(plane.size());
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

#pragma omp parallel for schedule(static) reduction(min : lo) reduction(max : hi)
    for (std::int64_t i = 0; i < n; ++i) {
        const double x = plane.data[static_cast<std::size_t>(i)];
        const double d = gauss(x, set.dark);
        const double m = gauss(x, set.medium);
        const double b = gauss(x, set.bright);
        const double activation = d + m + b;
        double y;
        if (activation < 1e-12) {
            y = x;  // all rules underflowed
        } else {
            y = (d * set.very_dark.center + m * set.medium.center + b * set.very_bright.center) /
                activation;
        }
        out.data[static_cast<std::size_t>(i)] = y;
        lo = std::min(lo, y);
        hi = std::max(hi, y);
    }
    out.lo = lo;
    out.hi = hi;
    return out;
}

Plane min_max_scale(const Plane& plane) {
    const std::int64_t n = static_cast<std::int64_t>(plane.size());
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double v : plane.data) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (!(hi - lo >= 1e-9)) fail(Errc::DegenerateRange, "sample span below 1e-9");

    Plane out(plane.width, plane.height, 0.0, 100.0);
    const double span = hi - lo;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        out.data[static_cast<std::size_t>(i)] =
            (plane.data[static_cast<std::size_t>(i)] - lo) / span * 100.0;
    }
    return out;
}

Plane fce(const Rgb8Image& img, const FovMask* mask) {
    const HlsImage hls = rgb_to_hls(img);
    const Plane lum = luminosity_plane(hls);
    const LuminosityStats st = compute_stats(lum, mask);
    const MembershipSet set = membership_set(st.m);
    return min_max_scale(fuzzy_transform(lum, set));
}

}  // namespace retina

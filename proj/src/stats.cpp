#include "retina/stats.hpp"

#include <algorithm>
#include <cmath>

#include "retina/errors.hpp"

namespace retina {

// Serial accumulation on purpose: results must not depend on thread count.
LuminosityStats compute_stats(const Plane& luminosity, const FovMask* mask) {
    if (mask) {
        if (mask->width != luminosity.width || mask->height != luminosity.height)
            fail(Errc::MaskMismatch, "mask dimensions differ from plane");
    }

    double sum = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < luminosity.size(); ++i) {
        if (mask && !mask->inside[i]) continue;
        sum += luminosity.data[i];
        ++n;
    }
    if (n == 0) fail(Errc::EmptyMask, "mask selects no pixels");

    LuminosityStats st;
    st.mean = sum / static_cast<double>(n);

    double sq = 0.0;
    for (std::size_t i = 0; i < luminosity.size(); ++i) {
        if (mask && !mask->inside[i]) continue;
        const double d = luminosity.data[i] - st.mean;
        sq += d * d;
    }
    st.sigma = std::sqrt(sq / static_cast<double>(n));

    const double lo = st.mean - 2.0 * st.sigma;
    const double hi = st.mean + 2.0 * st.sigma;
    double trimmed = 0.0;
    std::size_t kept = 0;
    for (std::size_t i = 0; i < luminosity.size(); ++i) {
        if (mask && !mask->inside[i]) continue;
        const double v = luminosity.data[i];
        if (v >= lo && v <= hi) {
            trimmed += v;
            ++kept;
        }
    }
    st.m = kept > 0 ? trimmed / static_cast<double>(kept) : st.mean;
    st.m = std::clamp(st.m, 5.0, 95.0);
    return st;
}

}  // namespace retina

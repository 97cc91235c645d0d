#include "retina/blend.hpp"

#include <algorithm>
#include <cmath>

#include "retina/color.hpp"
#include "retina/errors.hpp"

namespace retina {

Plane linear_blend(const Plane& fuzzy, const Plane& clahe, const BlendConfig& cfg) {
    if (fuzzy.width != clahe.width || fuzzy.height != clahe.height)
        fail(Errc::DimensionMismatch, "blend operands differ in size");

    Plane out(fuzzy.width, fuzzy.height, 0.0, 255.0);
    const std::int64_t n = static_cast<std::int64_t>(fuzzy.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        const double y = cfg.w1 * fuzzy.data[k] + cfg.w2 * clahe.data[k] - cfg.c;
        out.data[k] = static_cast<double>(std::clamp(std::lround(y), 0L, 255L));
    }
    return out;
}

Plane rescale_to_255(const Plane& plane) {
    Plane out(plane.width, plane.height, 0.0, 255.0);
    const std::int64_t n = static_cast<std::int64_t>(plane.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        out.data[k] = static_cast<double>(std::clamp(std::lround(plane.data[k] * 255.0 / 100.0), 0L, 255L));
    }
    return out;
}

Rgb8Image yellow_colorize(const Plane& plane, const HueConfig& cfg) {
    Rgb8Image out(plane.width, plane.height);
    const std::int64_t n = static_cast<std::int64_t>(plane.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        std::uint8_t* p = out.data.data() + k * 3;
        hls_to_rgb_px(cfg.hue_degrees, plane.data[k] * 100.0 / 255.0, cfg.saturation, p[0], p[1],
                      p[2]);
    }
    return out;
}

}  // namespace retina

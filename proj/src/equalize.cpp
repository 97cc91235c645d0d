#include "retina/equalize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "retina/errors.hpp"

namespace retina {

namespace {

int quantize255(double v) {
    long r = std::lround(v);
    return static_cast<int>(std::clamp(r, 0L, 255L));
}

std::vector<int> quantize_levels(const Plane& plane) {
    std::vector<int> levels(plane.size());
    const std::int64_t n = static_cast<std::int64_t>(plane.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        levels[static_cast<std::size_t>(i)] = quantize255(plane.data[static_cast<std::size_t>(i)]);
    return levels;
}

// Neighboring tile centers and integer weights along one axis, on the
// doubled grid (see clahe() contract in the header).
struct AxisBlend {
    int lo = 0;
    int hi = 0;
    std::int64_t w_lo = 1;
    std::int64_t w_hi = 0;
    std::int64_t den = 1;
};

AxisBlend axis_blend(int pos, int tile_span, const std::vector<std::int64_t>& centers2) {
    AxisBlend b;
    const std::int64_t p2 = 2LL * pos;
    const int t = static_cast<int>(centers2.size());
    const int idx = pos / tile_span;
    if (p2 <= centers2.front()) {
        b.lo = b.hi = 0;
    } else if (p2 >= centers2.back()) {
        b.lo = b.hi = t - 1;
    } else if (p2 < centers2[static_cast<std::size_t>(idx)]) {
        b.lo = idx - 1;
        b.hi = idx;
    } else {
        b.lo = idx;
        b.hi = idx + 1;
    }
    if (b.lo != b.hi) {
        b.w_lo = centers2[static_cast<std::size_t>(b.hi)] - p2;
        b.w_hi = p2 - centers2[static_cast<std::size_t>(b.lo)];
        b.den = centers2[static_cast<std::size_t>(b.hi)] - centers2[static_cast<std::size_t>(b.lo)];
    }
    return b;
}

std::vector<std::int64_t> tile_centers2(int extent, int tiles, int span) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(tiles));
    for (int i = 0; i < tiles; ++i) {
        const int x0 = i * span;
        const int width = std::min(x0 + span, extent) - x0;
        c[static_cast<std::size_t>(i)] = 2LL * x0 + width - 1;
    }
    return c;
}

}  // namespace

Histogram256 histogram256(const Plane& plane) {
    Histogram256 hist{};
    for (double v : plane.data) hist[static_cast<std::size_t>(quantize255(v))]++;
    return hist;
}

std::array<std::uint8_t, 256> equalization_mapping(const Histogram256& hist) {
    std::array<std::uint8_t, 256> map{};
    int occupied = 0;
    std::uint64_t total = 0;
    for (std::uint32_t c : hist) {
        occupied += (c > 0);
        total += c;
    }
    if (occupied <= 1) {
        for (int v = 0; v < 256; ++v) map[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v);
        return map;
    }

    std::uint64_t cdf = 0;
    std::uint64_t cdf_min = 0;
    std::array<std::uint64_t, 256> cum{};
    for (std::size_t v = 0; v < 256; ++v) {
        cdf += hist[v];
        cum[v] = cdf;
        if (cdf_min == 0 && hist[v] > 0) cdf_min = cdf;
    }
    const double denom = static_cast<double>(total - cdf_min);
    for (std::size_t v = 0; v < 256; ++v) {
        const double num = static_cast<double>(cum[v]) - static_cast<double>(cdf_min);
        map[v] = static_cast<std::uint8_t>(quantize255(255.0 * num / denom));
    }
    return map;
}

Plane histogram_equalize(const Plane& plane) {
    const Histogram256 hist = histogram256(plane);
    const std::array<std::uint8_t, 256> map = equalization_mapping(hist);

    Plane out(plane.width, plane.height, 0.0, 255.0);
    const std::int64_t n = static_cast<std::int64_t>(plane.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const int v = quantize255(plane.data[static_cast<std::size_t>(i)]);
        out.data[static_cast<std::size_t>(i)] = map[static_cast<std::size_t>(v)];
    }
    return out;
}

Histogram256 clip_and_redistribute(const Histogram256& hist, double clip_limit,
                                   std::int64_t tile_pixels) {
    std::int64_t clip = static_cast<std::int64_t>(
        std::floor(clip_limit * static_cast<double>(tile_pixels) / 256.0));
    if (clip < 1) clip = 1;

    std::int64_t excess = 0;
    for (std::uint32_t c : hist) {
        const std::int64_t over = static_cast<std::int64_t>(c) - clip;
        if (over > 0) excess += over;
    }
    const std::int64_t share = excess / 256;
    const std::int64_t rem = excess - share * 256;

    Histogram256 out{};
    for (std::size_t i = 0; i < 256; ++i) {
        const std::int64_t kept = std::min<std::int64_t>(hist[i], clip);
        out[i] = static_cast<std::uint32_t>(kept + share + (static_cast<std::int64_t>(i) < rem ? 1 : 0));
    }
    return out;
}

Plane clahe(const Plane& plane, const ClaheConfig& cfg) {
    if (cfg.clip_limit <= 0.0) fail(Errc::ConfigError, "clip limit must be positive");
    if (cfg.tiles_x < 1 || cfg.tiles_x > 64 || cfg.tiles_y < 1 || cfg.tiles_y > 64)
        fail(Errc::ConfigError, "tiles must lie in [1,64]");

    const int w = plane.width;
    const int h = plane.height;
    const int tx = cfg.tiles_x;
    const int ty = cfg.tiles_y;
    const int tile_w = (w + tx - 1) / tx;
    const int tile_h = (h + ty - 1) / ty;
    if (tile_w < 2 || tile_h < 2)
        fail(Errc::ConfigError, "tile sides must be at least 2 pixels");

    const std::vector<int> levels = quantize_levels(plane);

    // Per-tile equalization mappings; tiles are independent.
    std::vector<std::array<std::uint8_t, 256>> maps(static_cast<std::size_t>(tx) * ty);
#pragma omp parallel for schedule(static) collapse(2)
    for (int tj = 0; tj < ty; ++tj) {
        for (int ti = 0; ti < tx; ++ti) {
            const int x0 = ti * tile_w;
            const int x1 = std::min(x0 + tile_w, w);
            const int y0 = tj * tile_h;
            const int y1 = std::min(y0 + tile_h, h);
            const std::int64_t npx = static_cast<std::int64_t>(x1 - x0) * (y1 - y0);

            Histogram256 hist{};
            for (int y = y0; y < y1; ++y)
                for (int x = x0; x < x1; ++x)
                    hist[static_cast<std::size_t>(levels[static_cast<std::size_t>(y) * w + x])]++;

            int occupied = 0;
            for (std::uint32_t c : hist) occupied += (c > 0);
            auto& map = maps[static_cast<std::size_t>(tj) * tx + ti];
            if (occupied <= 1) {
                for (int v = 0; v < 256; ++v) map[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v);
            } else {
                map = equalization_mapping(clip_and_redistribute(hist, cfg.clip_limit, npx));
            }
        }
    }

    const std::vector<std::int64_t> cx2 = tile_centers2(w, tx, tile_w);
    const std::vector<std::int64_t> cy2 = tile_centers2(h, ty, tile_h);

    std::vector<AxisBlend> col(static_cast<std::size_t>(w));
    for (int x = 0; x < w; ++x) col[static_cast<std::size_t>(x)] = axis_blend(x, tile_w, cx2);

    Plane out(plane.width, plane.height, 0.0, 255.0);
#pragma omp parallel for schedule(static)
    for (int y = 0; y < h; ++y) {
        const AxisBlend row = axis_blend(y, tile_h, cy2);
        const std::size_t top = static_cast<std::size_t>(row.lo) * tx;
        const std::size_t bottom = static_cast<std::size_t>(row.hi) * tx;
        for (int x = 0; x < w; ++x) {
            const AxisBlend& cb = col[static_cast<std::size_t>(x)];
            const std::size_t v = static_cast<std::size_t>(levels[static_cast<std::size_t>(y) * w + x]);
            const std::int64_t tl = maps[top + static_cast<std::size_t>(cb.lo)][v];
            const std::int64_t tr = maps[top + static_cast<std::size_t>(cb.hi)][v];
            const std::int64_t bl = maps[bottom + static_cast<std::size_t>(cb.lo)][v];
            const std::int64_t br = maps[bottom + static_cast<std::size_t>(cb.hi)][v];
            const std::int64_t num =
                row.w_lo * (cb.w_lo * tl + cb.w_hi * tr) + row.w_hi * (cb.w_lo * bl + cb.w_hi * br);
            const std::int64_t den = cb.den * row.den;
            out.data[static_cast<std::size_t>(y) * w + x] = static_cast<double>((num + den / 2) / den);
        }
    }
    return out;
}

}  // namespace retina

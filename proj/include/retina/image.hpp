#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace retina {

/// Interleaved 8-bit RGB raster, row-major.
struct Rgb8Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // r,g,b triplets

    Rgb8Image() = default;
    Rgb8Image(int w, int h)
        : width(w), height(h), data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * 3, 0) {}

    std::size_t pixels() const { return static_cast<std::size_t>(width) * static_cast<std::size_t>(height); }

    std::uint8_t* px(int x, int y) {
        return data.data() + (static_cast<std::size_t>(y) * width + x) * 3;
    }
    const std::uint8_t* px(int x, int y) const {
        return data.data() + (static_cast<std::size_t>(y) * width + x) * 3;
    }
    void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
        std::uint8_t* p = px(x, y);
        p[0] = r;
        p[1] = g;
        p[2] = b;
    }
};

/// Single-channel raster of real samples with a declared range [lo, hi].
/// lo == hi occurs only for the degenerate constant plane a transform can
/// produce mid-pipeline; operations needing a usable span reject it.
struct Plane {
    int width = 0;
    int height = 0;
    double lo = 0.0;
    double hi = 1.0;
    std::vector<double> data;

    Plane() = default;
    Plane(int w, int h, double lo_, double hi_, double fill = 0.0)
        : width(w), height(h), lo(lo_), hi(hi_),
          data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

    std::size_t size() const { return data.size(); }

    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
};

/// Per-pixel hue [0,360), luminosity [0,100], saturation [0,1]; planar storage.
struct HlsImage {
    int width = 0;
    int height = 0;
    std::vector<double> h;
    std::vector<double> l;
    std::vector<double> s;

    HlsImage() = default;
    HlsImage(int w, int h_)
        : width(w), height(h_),
          h(static_cast<std::size_t>(w) * h_, 0.0),
          l(static_cast<std::size_t>(w) * h_, 0.0),
          s(static_cast<std::size_t>(w) * h_, 0.0) {}

    std::size_t size() const { return l.size(); }
};

/// Boolean field-of-view mask; true = pixel participates.
struct FovMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> inside;

    FovMask() = default;
    FovMask(int w, int h, bool fill = false)
        : width(w), height(h), inside(static_cast<std::size_t>(w) * h, fill ? 1 : 0) {}

    bool at(int x, int y) const { return inside[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool v) { inside[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }

    std::size_t count() const {
        std::size_t n = 0;
        for (std::uint8_t v : inside) n += (v != 0);
        return n;
    }
};

}  // namespace retina

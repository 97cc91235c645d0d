#pragma once

#include <cstdint>

#include "retina/image.hpp"

namespace retina {

struct HlsPixel {
    double h;  // degrees [0,360)
    double l;  // luminosity [0,100]
    double s;  // saturation [0,1]
};

/// Hexcone HLS, L = 100*(max+min)/2. Achromatic pixels canonicalize to H=0, S=0.
HlsPixel rgb_to_hls_px(std::uint8_t r, std::uint8_t g, std::uint8_t b);

/// Inverse hexcone conversion with round-half-up to 8 bits.
void hls_to_rgb_px(double h, double l, double s, std::uint8_t& r, std::uint8_t& g, std::uint8_t& b);

Plane extract_green(const Rgb8Image& img);

/// BT.601 luma: round(0.299 r + 0.587 g + 0.114 b), clamped to [0,255].
Plane to_grayscale(const Rgb8Image& img);

HlsImage rgb_to_hls(const Rgb8Image& img);
Rgb8Image hls_to_rgb(const HlsImage& img);

/// Copies the luminosity channel into a [0,100] plane.
Plane luminosity_plane(const HlsImage& img);

}  // namespace retina

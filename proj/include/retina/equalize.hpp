#pragma once

#include <array>
#include <cstdint>

#include "retina/image.hpp"

namespace retina {

using Histogram256 = std::array<std::uint32_t, 256>;

struct ClaheConfig {
    double clip_limit = 2.0;  // multiples of the uniform bin height
    int tiles_x = 8;
    int tiles_y = 8;
};

Histogram256 histogram256(const Plane& plane);

/// CDF mapping m(v) = round(255*(cdf(v)-cdf_min)/(N-cdf_min)) over an already
/// clipped histogram, clamped to [0,255]; identity when a single level holds
/// every count. Shared by global HE and the per-tile CLAHE mappings.
std::array<std::uint8_t, 256> equalization_mapping(const Histogram256& hist);

/// Global histogram equalization of an integer-quantized [0,255] plane.
/// Single-gray-level planes come back unchanged.
Plane histogram_equalize(const Plane& plane);

/// Clip at max(1, floor(clip_limit*tile_pixels/256)) and hand the excess back
/// uniformly: every bin gains excess/256, bins 0..rem-1 one more. Total count
/// is preserved exactly.
Histogram256 clip_and_redistribute(const Histogram256& hist, double clip_limit,
                                   std::int64_t tile_pixels);

/// Contrast-limited adaptive histogram equalization.
///
/// The image is split into tiles_x * tiles_y tiles by ceiling division (the
/// last row/column of tiles may be smaller). Each tile's histogram is clipped,
/// redistributed, and turned into an equalization mapping. Output pixels
/// bilinearly interpolate the mappings of the up-to-4 nearest tile centers;
/// pixels beyond the outermost centers clamp to the edge mappings.
///
/// Interpolation is exact integer arithmetic: tile centers live on a
/// half-pixel-doubled grid (center2 = 2*x0 + tileWidth - 1), the weights are
/// the doubled-grid distances, and the blend rounds half up via
/// (num + den/2) / den. This makes the kernel reproducible bit-for-bit.
///
/// Throws ConfigError when clip_limit <= 0, tiles outside [1,64], or any tile
/// side would fall below 2 pixels.
Plane clahe(const Plane& plane, const ClaheConfig& cfg);

}  // namespace retina

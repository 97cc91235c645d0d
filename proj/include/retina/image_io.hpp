#pragma once

#include <filesystem>

#include "retina/image.hpp"

namespace retina {

enum class ImageFormat { png, ppm };

/// Decodes PNG (8-bit gray/RGB; palette and alpha normalized, 16-bit reduced),
/// binary PPM (P6) or PGM (P5) by extension sniffing on the magic bytes.
/// Grayscale inputs come back with r = g = b. Throws InputNotFound /
/// UnreadableImage.
Rgb8Image read_rgb8(const std::filesystem::path& path);

/// Reads an image as a boolean mask: BT.601 luma > 127 means inside.
FovMask read_mask(const std::filesystem::path& path);

/// Reads a single-channel image into a [0,255] plane (RGB inputs use luma).
Plane read_gray_plane(const std::filesystem::path& path);

void write_rgb8(const std::filesystem::path& path, const Rgb8Image& img, ImageFormat format);

/// Serializes a plane as 8-bit grayscale, mapping the declared range linearly
/// onto [0,255] with round half up (PNG or PGM depending on format). Throws
/// DegenerateRange when the declared range has no span.
void write_plane(const std::filesystem::path& path, const Plane& plane, ImageFormat format);

}  // namespace retina

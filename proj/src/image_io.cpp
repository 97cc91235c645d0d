#include "retina/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "retina/color.hpp"
#include "retina/errors.hpp"

namespace retina {

namespace fs = std::filesystem;

namespace {

struct FileHandle {
    FILE* fp = nullptr;
    ~FileHandle() {
        if (fp) std::fclose(fp);
    }
};

struct PngRead {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngRead() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
};

struct PngWrite {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWrite() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    }
};

Rgb8Image read_png_file(const fs::path& path, FILE* fp) {
    PngRead ctx;
    ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png) fail(Errc::UnreadableImage, "png reader allocation failed");
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.info) fail(Errc::UnreadableImage, "png info allocation failed");

    if (setjmp(png_jmpbuf(ctx.png)))
        fail(Errc::UnreadableImage, path.string() + ": corrupt or unsupported PNG");

    png_init_io(ctx.png, fp);
    png_read_info(ctx.png, ctx.info);

    const png_uint_32 w = png_get_image_width(ctx.png, ctx.info);
    const png_uint_32 h = png_get_image_height(ctx.png, ctx.info);
    if (w == 0 || h == 0 || w > 1u << 20 || h > 1u << 20)
        fail(Errc::UnreadableImage, path.string() + ": implausible dimensions");

    // Normalize every variant to 8-bit RGB.
    png_set_strip_16(ctx.png);
    png_set_palette_to_rgb(ctx.png);
    png_set_expand_gray_1_2_4_to_8(ctx.png);
    if (png_get_valid(ctx.png, ctx.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(ctx.png);
    png_set_strip_alpha(ctx.png);
    png_set_gray_to_rgb(ctx.png);
    png_read_update_info(ctx.png, ctx.info);

    if (png_get_rowbytes(ctx.png, ctx.info) != static_cast<std::size_t>(w) * 3)
        fail(Errc::UnreadableImage, path.string() + ": unsupported PNG layout");

    Rgb8Image img(static_cast<int>(w), static_cast<int>(h));
    std::vector<png_bytep> rows(h);
    for (png_uint_32 y = 0; y < h; ++y) rows[y] = img.data.data() + static_cast<std::size_t>(y) * w * 3;
    png_read_image(ctx.png, rows.data());
    png_read_end(ctx.png, nullptr);
    return img;
}

void write_png_file(const fs::path& path, const std::uint8_t* data, int width, int height,
                    int channels) {
    FileHandle file;
    file.fp = std::fopen(path.string().c_str(), "wb");
    if (!file.fp) fail(Errc::UnreadableImage, path.string() + ": cannot open for writing");

    PngWrite ctx;
    ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png) fail(Errc::UnreadableImage, "png writer allocation failed");
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.info) fail(Errc::UnreadableImage, "png info allocation failed");

    if (setjmp(png_jmpbuf(ctx.png))) fail(Errc::UnreadableImage, path.string() + ": PNG write failed");

    png_init_io(ctx.png, file.fp);
    png_set_compression_level(ctx.png, 6);
    png_set_IHDR(ctx.png, ctx.info, static_cast<png_uint_32>(width),
                 static_cast<png_uint_32>(height), 8,
                 channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(ctx.png, ctx.info);

    std::vector<png_bytep> rows(static_cast<std::size_t>(height));
    for (int y = 0; y < height; ++y)
        rows[static_cast<std::size_t>(y)] =
            const_cast<png_bytep>(data + static_cast<std::size_t>(y) * width * channels);
    png_write_image(ctx.png, rows.data());
    png_write_end(ctx.png, nullptr);
}

// Binary PPM/PGM header: magic, width, height, maxval, separated by
// whitespace or # comments, then a single whitespace byte before the payload.
struct PnmHeader {
    int channels = 0;
    int width = 0;
    int height = 0;
    std::size_t payload_offset = 0;
};

PnmHeader parse_pnm_header(const std::vector<std::uint8_t>& bytes, const fs::path& path) {
    PnmHeader hdr;
    if (bytes.size() < 2) fail(Errc::UnreadableImage, path.string() + ": truncated header");
    if (bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6'))
        fail(Errc::UnreadableImage, path.string() + ": not a binary PGM/PPM");
    hdr.channels = bytes[1] == '6' ? 3 : 1;

    std::size_t pos = 2;
    auto next_int = [&]() -> long {
        while (pos < bytes.size()) {
            if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (std::isspace(bytes[pos])) {
                ++pos;
            } else {
                break;
            }
        }
        if (pos >= bytes.size() || !std::isdigit(bytes[pos]))
            fail(Errc::UnreadableImage, path.string() + ": malformed header");
        long v = 0;
        while (pos < bytes.size() && std::isdigit(bytes[pos])) {
            v = v * 10 + (bytes[pos] - '0');
            if (v > 1L << 24) fail(Errc::UnreadableImage, path.string() + ": header value too large");
            ++pos;
        }
        return v;
    };

    hdr.width = static_cast<int>(next_int());
    hdr.height = static_cast<int>(next_int());
    const long maxval = next_int();
    if (hdr.width < 1 || hdr.height < 1)
        fail(Errc::UnreadableImage, path.string() + ": bad dimensions");
    if (maxval != 255)
        fail(Errc::UnreadableImage, path.string() + ": only maxval 255 is supported");
    if (pos >= bytes.size() || !std::isspace(bytes[pos]))
        fail(Errc::UnreadableImage, path.string() + ": missing payload separator");
    hdr.payload_offset = pos + 1;
    return hdr;
}

Rgb8Image read_pnm_file(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
    const PnmHeader hdr = parse_pnm_header(bytes, path);
    const std::size_t npx = static_cast<std::size_t>(hdr.width) * hdr.height;
    const std::size_t need = npx * static_cast<std::size_t>(hdr.channels);
    if (bytes.size() - hdr.payload_offset < need)
        fail(Errc::UnreadableImage, path.string() + ": truncated payload");

    Rgb8Image img(hdr.width, hdr.height);
    const std::uint8_t* src = bytes.data() + hdr.payload_offset;
    if (hdr.channels == 3) {
        std::memcpy(img.data.data(), src, need);
    } else {
        for (std::size_t i = 0; i < npx; ++i) {
            img.data[i * 3] = src[i];
            img.data[i * 3 + 1] = src[i];
            img.data[i * 3 + 2] = src[i];
        }
    }
    return img;
}

std::vector<std::uint8_t> slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::UnreadableImage, path.string() + ": cannot open");
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                     std::istreambuf_iterator<char>());
}

void write_pnm_file(const fs::path& path, const std::uint8_t* data, int width, int height,
                    int channels) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::UnreadableImage, path.string() + ": cannot open for writing");
    out << (channels == 3 ? "P6" : "P5") << "\n" << width << " " << height << "\n255\n";
    out.write(reinterpret_cast<const char*>(data),
              static_cast<std::streamsize>(static_cast<std::size_t>(width) * height * channels));
    if (!out) fail(Errc::UnreadableImage, path.string() + ": write failed");
}

std::vector<std::uint8_t> plane_to_bytes(const Plane& plane) {
    if (!(plane.hi - plane.lo > 0.0))
        fail(Errc::DegenerateRange, "plane range has no span to serialize");
    std::vector<std::uint8_t> bytes(plane.size());
    const double span = plane.hi - plane.lo;
    for (std::size_t i = 0; i < plane.size(); ++i) {
        const long q = std::lround((plane.data[i] - plane.lo) * 255.0 / span);
        bytes[i] = static_cast<std::uint8_t>(std::clamp(q, 0L, 255L));
    }
    return bytes;
}

bool has_png_magic(const std::vector<std::uint8_t>& bytes) {
    static const std::uint8_t magic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    return bytes.size() >= 8 && std::memcmp(bytes.data(), magic, 8) == 0;
}

}  // namespace

Rgb8Image read_rgb8(const fs::path& path) {
    std::error_code ec;
    if (!fs::exists(path, ec)) fail(Errc::InputNotFound, path.string());

    const std::vector<std::uint8_t> bytes = slurp(path);
    if (has_png_magic(bytes)) {
        FileHandle file;
        file.fp = std::fopen(path.string().c_str(), "rb");
        if (!file.fp) fail(Errc::UnreadableImage, path.string() + ": cannot open");
        return read_png_file(path, file.fp);
    }
    return read_pnm_file(path, bytes);
}

FovMask read_mask(const fs::path& path) {
    const Rgb8Image img = read_rgb8(path);
    FovMask mask(img.width, img.height);
    for (std::size_t i = 0; i < img.pixels(); ++i) {
        const std::uint8_t* p = img.data.data() + i * 3;
        const long luma = std::lround(0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2]);
        mask.inside[i] = luma > 127 ? 1 : 0;
    }
    return mask;
}

Plane read_gray_plane(const fs::path& path) {
    const Rgb8Image img = read_rgb8(path);
    Plane out(img.width, img.height, 0.0, 255.0);
    for (std::size_t i = 0; i < img.pixels(); ++i) {
        const std::uint8_t* p = img.data.data() + i * 3;
        if (p[0] == p[1] && p[1] == p[2]) {
            out.data[i] = p[0];
        } else {
            out.data[i] = static_cast<double>(
                std::clamp(std::lround(0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2]), 0L, 255L));
        }
    }
    return out;
}

void write_rgb8(const fs::path& path, const Rgb8Image& img, ImageFormat format) {
    if (format == ImageFormat::png)
        write_png_file(path, img.data.data(), img.width, img.height, 3);
    else
        write_pnm_file(path, img.data.data(), img.width, img.height, 3);
}

void write_plane(const fs::path& path, const Plane& plane, ImageFormat format) {
    const std::vector<std::uint8_t> bytes = plane_to_bytes(plane);
    if (format == ImageFormat::png)
        write_png_file(path, bytes.data(), plane.width, plane.height, 1);
    else
        write_pnm_file(path, bytes.data(), plane.width, plane.height, 1);
}

}  // namespace retina

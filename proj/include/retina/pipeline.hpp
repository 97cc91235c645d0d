#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "retina/blend.hpp"
#include "retina/equalize.hpp"
#include "retina/image.hpp"
#include "retina/image_io.hpp"
#include "retina/metrics.hpp"

namespace retina {

enum class Method { grayscale, he, fce, clahe, fce_clahe, full };

constexpr std::array<Method, 6> kMethodOrder = {Method::grayscale, Method::he,   Method::fce,
                                                Method::clahe,     Method::fce_clahe,
                                                Method::full};

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

struct EnhanceConfig {
    Method method = Method::full;
    BlendConfig blend;
    ClaheConfig clahe;
    HueConfig hue;
    std::optional<std::filesystem::path> mask_dir;
    std::filesystem::path out_dir;
    ImageFormat format = ImageFormat::png;
};

struct JobResult {
    std::string image_id;
    std::string method;
    std::filesystem::path output_path;  // empty on error
    MetricsRecord metrics;
    bool ok = false;
    std::string error;  // error detail when !ok
    std::string note;   // e.g. missing mask warning
};

/// One method's result: the single-channel plane it produced, plus the
/// colorized RGB for the full method (the plane then holds the pre-color
/// blend the metrics are computed on).
struct MethodOutput {
    Plane plane;
    std::optional<Rgb8Image> rgb;
};

/// Pure dispatch used by both batch drivers.
MethodOutput enhance_image(const Rgb8Image& img, const FovMask* mask, Method method,
                           const EnhanceConfig& cfg);

/// Runs cfg.method over a file or a directory (extensions .png/.ppm/.pgm,
/// lexicographic order) and writes one image per input under cfg.out_dir.
/// Per-image failures become error results without aborting the batch.
std::vector<JobResult> run_enhance(const std::filesystem::path& input, const EnhanceConfig& cfg);

/// Runs all six methods per image into out_dir/<method>/<image_id>.<ext> and
/// writes one CSV row per (image, method), images sorted by id, methods in
/// the fixed order grayscale, he, fce, clahe, fce_clahe, full.
std::vector<JobResult> run_compare(const std::filesystem::path& input, const EnhanceConfig& cfg,
                                   const std::filesystem::path& metrics_csv);

/// Membership curves sampled at x = 0.0, 0.5, ..., 100.0 (201 rows) with
/// header x,very_dark,dark,medium,bright,very_bright.
void run_membership_plot(double m, const std::filesystem::path& out_csv);

/// CSV header shared by run_compare and the docs.
extern const char* const kMetricsCsvHeader;

}  // namespace retina

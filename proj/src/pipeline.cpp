#include "retina/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "retina/color.hpp"
#include "retina/errors.hpp"
#include "retina/fuzzy.hpp"
#include "retina/stats.hpp"

namespace retina {

namespace fs = std::filesystem;

const char* const kMetricsCsvHeader =
    "image_id,method,mean_l,std_l,entropy_bits,rms_contrast,michelson,psnr_db,status";

const char* method_name(Method m) {
    switch (m) {
        case Method::grayscale: return "grayscale";
        case Method::he: return "he";
        case Method::fce: return "fce";
        case Method::clahe: return "clahe";
        case Method::fce_clahe: return "fce_clahe";
        case Method::full: return "full";
    }
    return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
    for (Method m : kMethodOrder)
        if (name == method_name(m)) return m;
    return std::nullopt;
}

namespace {

Plane luminosity255(const Rgb8Image& img) {
    return rescale_to_255(luminosity_plane(rgb_to_hls(img)));
}

Plane blended_plane(const Rgb8Image& img, const FovMask* mask, const EnhanceConfig& cfg) {
    Plane fuzzy = rescale_to_255(fce(img, mask));
    Plane equalized = clahe(luminosity255(img), cfg.clahe);
    return linear_blend(fuzzy, equalized, cfg.blend);
}

double plane_mean(const Plane& p) {
    double sum = 0.0;
    for (double v : p.data) sum += v;
    return sum / static_cast<double>(p.size());
}

MetricsRecord make_metrics(const std::string& id, Method method, const Plane& out,
                           const Plane& grayscale_ref) {
    MetricsRecord rec;
    rec.image_id = id;
    rec.method = method_name(method);
    const double mean = plane_mean(out);
    const double stddev = rms_contrast(out);
    rec.mean_l = mean * 100.0 / 255.0;
    rec.std_l = stddev * 100.0 / 255.0;
    rec.entropy_bits = entropy(out);
    rec.rms = stddev;
    if (method != Method::grayscale) rec.psnr_db = psnr(grayscale_ref, out);
    return rec;
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string format_optional(const std::optional<double>& v) {
    if (!v) return "";
    if (std::isinf(*v)) return "inf";
    return format_number(*v);
}

void append_csv_row(std::string& csv, const JobResult& r) {
    csv += r.image_id;
    csv += ',';
    csv += r.method;
    csv += ',';
    if (r.ok) {
        csv += format_number(r.metrics.mean_l) + ',' + format_number(r.metrics.std_l) + ',' +
               format_number(r.metrics.entropy_bits) + ',' + format_number(r.metrics.rms) + ',' +
               format_optional(r.metrics.michelson) + ',' + format_optional(r.metrics.psnr_db) +
               ',';
        csv += r.note.empty() ? "ok" : "ok; " + r.note;
    } else {
        csv += ",,,,,,";
        csv += "error; " + r.error;
    }
    csv += '\n';
}

bool accepted_extension(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".png" || ext == ".ppm" || ext == ".pgm";
}

std::vector<fs::path> collect_inputs(const fs::path& input) {
    std::error_code ec;
    if (!fs::exists(input, ec)) fail(Errc::InputNotFound, input.string());
    if (fs::is_regular_file(input)) return {input};
    if (!fs::is_directory(input)) fail(Errc::InputNotFound, input.string() + ": not a file or directory");

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(input)) {
        if (entry.is_regular_file() && accepted_extension(entry.path())) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
    return files;
}

struct LoadedInput {
    std::string id;
    Rgb8Image image;
    std::optional<FovMask> mask;
    std::string note;
};

LoadedInput load_input(const fs::path& file, const EnhanceConfig& cfg) {
    LoadedInput in;
    in.id = file.stem().string();
    in.image = read_rgb8(file);
    if (cfg.mask_dir) {
        bool found = false;
        for (const char* ext : {".png", ".ppm", ".pgm"}) {
            fs::path candidate = *cfg.mask_dir / (in.id + ext);
            std::error_code ec;
            if (fs::exists(candidate, ec)) {
                in.mask = read_mask(candidate);
                found = true;
                break;
            }
        }
        if (!found) in.note = "mask missing (stats unmasked)";
    }
    return in;
}

const char* output_extension(ImageFormat format, bool rgb) {
    if (format == ImageFormat::png) return ".png";
    return rgb ? ".ppm" : ".pgm";
}

JobResult run_one(const LoadedInput& in, Method method, const EnhanceConfig& cfg,
                  const Plane& grayscale_ref, const fs::path& out_dir) {
    JobResult res;
    res.image_id = in.id;
    res.method = method_name(method);
    res.note = in.note;
    try {
        MethodOutput out = enhance_image(in.image, in.mask ? &*in.mask : nullptr, method, cfg);
        res.metrics = make_metrics(in.id, method, out.plane, grayscale_ref);

        const bool rgb = out.rgb.has_value();
        fs::path path = out_dir / (in.id + output_extension(cfg.format, rgb));
        if (rgb)
            write_rgb8(path, *out.rgb, cfg.format);
        else
            write_plane(path, out.plane, cfg.format);
        res.output_path = path;
        res.ok = true;
    } catch (const Error& e) {
        res.ok = false;
        res.error = e.what();
    }
    return res;
}

}  // namespace

MethodOutput enhance_image(const Rgb8Image& img, const FovMask* mask, Method method,
                           const EnhanceConfig& cfg) {
    MethodOutput out;
    switch (method) {
        case Method::grayscale:
            out.plane = to_grayscale(img);
            break;
        case Method::he:
            out.plane = histogram_equalize(to_grayscale(img));
            break;
        case Method::clahe:
            out.plane = clahe(luminosity255(img), cfg.clahe);
            break;
        case Method::fce:
            out.plane = rescale_to_255(fce(img, mask));
            break;
        case Method::fce_clahe:
            out.plane = blended_plane(img, mask, cfg);
            break;
        case Method::full: {
            Plane blended = blended_plane(img, mask, cfg);
            out.rgb = yellow_colorize(blended, cfg.hue);
            out.plane = std::move(blended);
            break;
        }
    }
    return out;
}

std::vector<JobResult> run_enhance(const fs::path& input, const EnhanceConfig& cfg) {
    const std::vector<fs::path> files = collect_inputs(input);
    fs::create_directories(cfg.out_dir);

    std::vector<JobResult> results;
    results.reserve(files.size());
    for (const fs::path& file : files) {
        try {
            const LoadedInput in = load_input(file, cfg);
            const Plane gray = to_grayscale(in.image);
            results.push_back(run_one(in, cfg.method, cfg, gray, cfg.out_dir));
        } catch (const Error& e) {
            JobResult res;
            res.image_id = file.stem().string();
            res.method = method_name(cfg.method);
            res.ok = false;
            res.error = e.what();
            results.push_back(std::move(res));
        }
    }
    return results;
}

std::vector<JobResult> run_compare(const fs::path& input, const EnhanceConfig& cfg,
                                   const fs::path& metrics_csv) {
    const std::vector<fs::path> files = collect_inputs(input);
    for (Method m : kMethodOrder) fs::create_directories(cfg.out_dir / method_name(m));
    if (metrics_csv.has_parent_path()) fs::create_directories(metrics_csv.parent_path());

    std::vector<JobResult> results;
    results.reserve(files.size() * kMethodOrder.size());
    for (const fs::path& file : files) {
        try {
            const LoadedInput in = load_input(file, cfg);
            const Plane gray = to_grayscale(in.image);
            for (Method m : kMethodOrder)
                results.push_back(run_one(in, m, cfg, gray, cfg.out_dir / method_name(m)));
        } catch (const Error& e) {
            for (Method m : kMethodOrder) {
                JobResult res;
                res.image_id = file.stem().string();
                res.method = method_name(m);
                res.ok = false;
                res.error = e.what();
                results.push_back(std::move(res));
            }
        }
    }

    std::string csv = std::string(kMetricsCsvHeader) + '\n';
    for (const JobResult& r : results) append_csv_row(csv, r);
    std::ofstream out(metrics_csv, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::ConfigError, metrics_csv.string() + ": cannot write metrics CSV");
    out << csv;
    return results;
}

void run_membership_plot(double m, const fs::path& out_csv) {
    const MembershipSet set = membership_set(m);
    std::string csv = "x,very_dark,dark,medium,bright,very_bright\n";
    char buf[192];
    for (int i = 0; i <= 200; ++i) {
        const double x = i * 0.5;
        const MembershipDegrees d = evaluate_memberships(x, set);
        std::snprintf(buf, sizeof buf, "%.1f,%.12g,%.12g,%.12g,%.12g,%.12g\n", x, d.very_dark,
                      d.dark, d.medium, d.bright, d.very_bright);
        csv += buf;
    }
    if (out_csv.has_parent_path()) fs::create_directories(out_csv.parent_path());
    std::ofstream out(out_csv, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::ConfigError, out_csv.string() + ": cannot write CSV");
    out << csv;
}

}  // namespace retina

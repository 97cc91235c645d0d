// retenh: batch contrast enhancement for fundus images.
//
// Subcommands:
//   enhance    run one method over a file or directory
//   compare    run all six methods and emit a metrics CSV
//   membership dump the five membership curves for a given mean luminosity

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <string>

#include "retina/errors.hpp"
#include "retina/pipeline.hpp"

namespace {

struct CommonFlags {
    std::string input;
    std::string out_dir;
    std::string method = "full";
    std::string tiles = "8x8";
    std::string format = "png";
    std::string mask_dir;
    retina::EnhanceConfig cfg;
};

void add_common_flags(CLI::App* cmd, CommonFlags& f, bool with_method) {
    cmd->add_option("--input", f.input, "Input image or directory (.png/.ppm/.pgm)")->required();
    cmd->add_option("--out-dir", f.out_dir, "Output directory")->required();
    if (with_method)
        cmd->add_option("--method", f.method,
                        "grayscale|he|fce|clahe|fce_clahe|full (default full)");
    cmd->add_option("--w1", f.cfg.blend.w1, "Fuzzy blend weight (default 0.6)");
    cmd->add_option("--w2", f.cfg.blend.w2, "CLAHE blend weight (default 0.8)");
    cmd->add_option("--c", f.cfg.blend.c, "Blend constant, subtracted (default -0.4)");
    cmd->add_option("--clip-limit", f.cfg.clahe.clip_limit, "CLAHE clip limit (default 2.0)");
    cmd->add_option("--tiles", f.tiles, "CLAHE tile grid as NxM (default 8x8)");
    cmd->add_option("--hue", f.cfg.hue.hue_degrees, "Colorize hue in degrees (default 60)");
    cmd->add_option("--saturation", f.cfg.hue.saturation, "Colorize saturation (default 0.6)");
    cmd->add_option("--mask-dir", f.mask_dir, "Directory of FOV masks matched by filename stem");
    cmd->add_option("--format", f.format, "Output format: png|ppm (default png)");
}

// Throws retina::Error(ConfigError) on bad flag values.
void finalize_config(CommonFlags& f) {
    const auto sep = f.tiles.find('x');
    if (sep == std::string::npos)
        retina::fail(retina::Errc::ConfigError, "--tiles expects NxM, e.g. 8x8");
    try {
        f.cfg.clahe.tiles_x = std::stoi(f.tiles.substr(0, sep));
        f.cfg.clahe.tiles_y = std::stoi(f.tiles.substr(sep + 1));
    } catch (const std::exception&) {
        retina::fail(retina::Errc::ConfigError, "--tiles expects NxM, e.g. 8x8");
    }
    if (f.cfg.clahe.tiles_x < 1 || f.cfg.clahe.tiles_x > 64 || f.cfg.clahe.tiles_y < 1 ||
        f.cfg.clahe.tiles_y > 64)
        retina::fail(retina::Errc::ConfigError, "tiles must lie in [1,64]");
    if (f.cfg.clahe.clip_limit <= 0.0)
        retina::fail(retina::Errc::ConfigError, "clip limit must be positive");

    if (f.format == "png")
        f.cfg.format = retina::ImageFormat::png;
    else if (f.format == "ppm")
        f.cfg.format = retina::ImageFormat::ppm;
    else
        retina::fail(retina::Errc::ConfigError, "--format must be png or ppm");

    auto method = retina::method_from_name(f.method);
    if (!method) retina::fail(retina::Errc::ConfigError, "unknown method: " + f.method);
    f.cfg.method = *method;

    if (!f.mask_dir.empty()) f.cfg.mask_dir = f.mask_dir;
    f.cfg.out_dir = f.out_dir;
}

int report(const std::vector<retina::JobResult>& results) {
    int failures = 0;
    for (const auto& r : results) {
        if (r.ok) {
            std::printf("ok    %-10s %s -> %s%s%s\n", r.method.c_str(), r.image_id.c_str(),
                        r.output_path.string().c_str(), r.note.empty() ? "" : "  # ",
                        r.note.c_str());
        } else {
            ++failures;
            std::printf("error %-10s %s: %s\n", r.method.c_str(), r.image_id.c_str(),
                        r.error.c_str());
        }
    }
    std::printf("%zu job(s), %d failed\n", results.size(), failures);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fundus image contrast enhancement"};
    app.require_subcommand(1);

    CommonFlags enhance_flags;
    CLI::App* enhance = app.add_subcommand("enhance", "Run one enhancement method");
    add_common_flags(enhance, enhance_flags, true);

    CommonFlags compare_flags;
    std::string metrics_path;
    CLI::App* compare = app.add_subcommand("compare", "Run all methods and emit metrics");
    add_common_flags(compare, compare_flags, false);
    compare->add_option("--metrics", metrics_path, "Metrics CSV output path")->required();

    double mean_luminosity = 50.0;
    std::string membership_out;
    CLI::App* membership = app.add_subcommand("membership", "Emit membership curves as CSV");
    membership->add_option("--mean", mean_luminosity, "Mean luminosity M in [5,95]")->required();
    membership->add_option("--out", membership_out, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints help or the parse problem
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (enhance->parsed()) {
            finalize_config(enhance_flags);
            return report(retina::run_enhance(enhance_flags.input, enhance_flags.cfg));
        }
        if (compare->parsed()) {
            finalize_config(compare_flags);
            auto results = retina::run_compare(compare_flags.input, compare_flags.cfg, metrics_path);
            int rc = report(results);
            std::printf("metrics: %s\n", metrics_path.c_str());
            return rc;
        }
        if (membership->parsed()) {
            retina::run_membership_plot(mean_luminosity, membership_out);
            std::printf("membership curves: %s\n", membership_out.c_str());
            return 0;
        }
    } catch (const retina::Error& e) {
        const auto code = e.code();
        std::fprintf(stderr, "retenh: %s\n", e.what());
        if (code == retina::Errc::ConfigError || code == retina::Errc::InputNotFound ||
            code == retina::Errc::OutOfRange)
            return 2;
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "retenh: %s\n", e.what());
        return 1;
    }
    return 2;
}

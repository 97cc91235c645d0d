// Times the parallel kernels against their serial references on a synthetic
// fundus phantom and checks that both sides agree while doing so.
//
// usage: bench_kernels [size] [iterations]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "reference.hpp"
#include "retina/blend.hpp"
#include "retina/color.hpp"
#include "retina/equalize.hpp"
#include "retina/fuzzy.hpp"
#include "retina/stats.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double time_best_ms(int iters, const std::function<void()>& fn) {
    double best = 1e300;
    for (int i = 0; i < iters; ++i) {
        const auto t0 = Clock::now();
        fn();
        best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
    }
    return best;
}

double max_abs_diff(const retina::Plane& a, const retina::Plane& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::fabs(a.data[i] - b.data[i]));
    return worst;
}

void report(const char* name, double serial_ms, double parallel_ms, double diff) {
    std::printf("%-18s %10.2f %12.2f %9.2fx %12.3g\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, diff);
}

}  // namespace

int main(int argc, char** argv) {
    const int size = argc > 1 ? std::atoi(argv[1]) : 1024;
    const int iters = argc > 2 ? std::atoi(argv[2]) : 5;

    refimpl::Phantom ph = refimpl::make_fundus_phantom(size, size, 42);
    const retina::HlsImage hls = retina::rgb_to_hls(ph.image);
    const retina::Plane lum = retina::luminosity_plane(hls);
    const double m = retina::compute_stats(lum, &ph.fov).m;
    const retina::MembershipSet set = retina::membership_set(m);
    const retina::Plane lum255 = retina::rescale_to_255(lum);

    std::printf("phantom %dx%d, best of %d runs (M = %.3f)\n\n", size, size, iters, m);
    std::printf("%-18s %10s %12s %9s %12s\n", "kernel", "serial-ms", "parallel-ms", "speedup",
                "max|diff|");

    {
        retina::Plane serial_out(1, 1, 0, 1), parallel_out(1, 1, 0, 1);
        const double serial_ms =
            time_best_ms(iters, [&] { serial_out = refimpl::fuzzy_transform_reference(lum, m); });
        const double parallel_ms =
            time_best_ms(iters, [&] { parallel_out = retina::fuzzy_transform(lum, set); });
        report("fuzzy_transform", serial_ms, parallel_ms, max_abs_diff(serial_out, parallel_out));
    }

    {
        retina::ClaheConfig cfg;  // 2.0, 8x8
        retina::Plane serial_out(1, 1, 0, 1), parallel_out(1, 1, 0, 1);
        const double serial_ms =
            time_best_ms(iters, [&] { serial_out = refimpl::clahe_reference(lum255, cfg); });
        const double parallel_ms = time_best_ms(iters, [&] { parallel_out = retina::clahe(lum255, cfg); });
        report("clahe", serial_ms, parallel_ms, max_abs_diff(serial_out, parallel_out));
    }

    {
        retina::HlsImage serial_out(ph.image.width, ph.image.height);
        retina::HlsImage parallel_out(1, 1);
        const double serial_ms = time_best_ms(iters, [&] {
            for (std::size_t i = 0; i < ph.image.pixels(); ++i) {
                const std::uint8_t* p = ph.image.data.data() + i * 3;
                const retina::HlsPixel px = retina::rgb_to_hls_px(p[0], p[1], p[2]);
                serial_out.h[i] = px.h;
                serial_out.l[i] = px.l;
                serial_out.s[i] = px.s;
            }
        });
        const double parallel_ms = time_best_ms(iters, [&] { parallel_out = retina::rgb_to_hls(ph.image); });
        double diff = 0.0;
        for (std::size_t i = 0; i < serial_out.size(); ++i)
            diff = std::max(diff, std::fabs(serial_out.l[i] - parallel_out.l[i]));
        report("rgb_to_hls", serial_ms, parallel_ms, diff);
    }

    {
        std::vector<int> ints(lum255.size());
        for (std::size_t i = 0; i < lum255.size(); ++i) ints[i] = static_cast<int>(lum255.data[i]);
        std::vector<int> serial_out;
        retina::Plane parallel_out(1, 1, 0, 1);
        const double serial_ms = time_best_ms(iters, [&] { serial_out = refimpl::he_oracle(ints); });
        const double parallel_ms =
            time_best_ms(iters, [&] { parallel_out = retina::histogram_equalize(lum255); });
        double diff = 0.0;
        for (std::size_t i = 0; i < serial_out.size(); ++i)
            diff = std::max(diff, std::fabs(serial_out[i] - parallel_out.data[i]));
        report("histogram_eq", serial_ms, parallel_ms, diff);
    }

    return 0;
}

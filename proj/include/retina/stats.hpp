#pragma once

#include "retina/image.hpp"

namespace retina {

/// Image-wide luminosity statistics. M is the trimmed mean: samples outside
/// [mean - 2*sigma, mean + 2*sigma] are dropped and the rest re-averaged
/// (falling back to the plain mean when the trim set is empty), then M is
/// clamped to [5, 95] so the membership widths derived from it stay positive.
struct LuminosityStats {
    double mean = 0.0;   // [0,100]
    double sigma = 0.0;  // population std-dev
    double m = 0.0;      // trimmed mean, clamped to [5,95]
};

/// mask may be null (all pixels). Throws MaskMismatch on dimension mismatch,
/// EmptyMask when the mask selects nothing.
LuminosityStats compute_stats(const Plane& luminosity, const FovMask* mask = nullptr);

}  // namespace retina

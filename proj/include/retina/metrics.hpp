#pragma once

#include <optional>
#include <string>

#include "retina/image.hpp"

namespace retina {

/// Shannon entropy of the 256-bin normalized histogram, in bits.
double entropy(const Plane& plane);

/// Population standard deviation of the samples.
double rms_contrast(const Plane& plane);

/// |mean(bg) - mean(fg)| / (mean(bg) + mean(fg)); 0 when both means are 0.
/// Throws EmptyMask / MaskOverlap / MaskMismatch.
double michelson_contrast(const Plane& plane, const FovMask& fg, const FovMask& bg);

/// 10*log10(255^2 / MSE); +infinity when the planes are identical.
/// Throws DimensionMismatch.
double psnr(const Plane& reference, const Plane& test);

struct MetricsRecord {
    std::string image_id;
    std::string method;
    double mean_l = 0.0;         // luminosity units [0,100]
    double std_l = 0.0;          // luminosity units
    double entropy_bits = 0.0;
    double rms = 0.0;            // intensity units [0,255]
    std::optional<double> michelson;  // set only when region masks exist
    std::optional<double> psnr_db;    // absent for the reference method itself
};

}  // namespace retina

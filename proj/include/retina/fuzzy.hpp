#pragma once

#include "retina/image.hpp"

namespace retina {

struct Membership {
    double center;
    double width;  // > 0
};

/// Five Gaussian linguistic values over luminosity, positioned from the
/// image's trimmed mean luminosity M:
///
///   very_dark    center max(-20, M-40)   width M/2
///   dark         center 0.45*M           width M/4
///   medium       center 1.1*M            width M/6
///   bright       center 2.5*M - 25       width (100-M)/4
///   very_bright  center 125              width (100-M)/4
struct MembershipSet {
    Membership very_dark;
    Membership dark;
    Membership medium;
    Membership bright;
    Membership very_bright;
    double source_m = 0.0;
};

struct MembershipDegrees {
    double very_dark;
    double dark;
    double medium;
    double bright;
    double very_bright;
};

/// Throws OutOfRange unless 5 <= m <= 95.
MembershipSet membership_set(double m);

/// exp(-0.5*((x-center)/width)^2) per linguistic value; x may lie outside [0,100].
MembershipDegrees evaluate_memberships(double x, const MembershipSet& set);

/// Three-rule weighted-average transform: dark pulls toward very_dark.center,
/// medium toward medium.center, bright toward very_bright.center. Pixels whose
/// rule activation sum underflows below 1e-12 pass through unchanged. The
/// output plane's declared range is its actual sample min/max.
Plane fuzzy_transform(const Plane& plane, const MembershipSet& set);

/// (v - min) / (max - min) * 100. Throws DegenerateRange when the sample
/// span is below 1e-9. Output min is exactly 0 and max exactly 100.
Plane min_max_scale(const Plane& plane);

/// Full fuzzy contrast enhancement: HLS luminosity, adaptive membership set
/// from its stats (optionally FOV-masked), transform, then min-max scaling.
Plane fce(const Rgb8Image& img, const FovMask* mask = nullptr);

}  // namespace retina

#pragma once

#include "retina/image.hpp"

namespace retina {

/// Weights and constant for blending the fuzzy and CLAHE outputs in the
/// [0,255] intensity domain: y = clamp(round(w1*a + w2*b - c), 0, 255).
struct BlendConfig {
    double w1 = 0.6;
    double w2 = 0.8;
    double c = -0.4;
};

struct HueConfig {
    double hue_degrees = 60.0;  // [0,360)
    double saturation = 0.6;    // [0,1]
};

/// Throws DimensionMismatch when the planes disagree in size.
Plane linear_blend(const Plane& fuzzy, const Plane& clahe, const BlendConfig& cfg);

/// [0,100] luminosity to integer [0,255] intensity, round half up.
Plane rescale_to_255(const Plane& plane);

/// Recolors an integer [0,255] plane at a fixed hue and saturation through
/// the HLS hexcone; 0 stays black and 255 stays white for any hue.
Rgb8Image yellow_colorize(const Plane& plane, const HueConfig& cfg);

}  // namespace retina

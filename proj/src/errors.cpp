#include "retina/errors.hpp"

namespace retina {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::DegenerateRange: return "DegenerateRange";
        case Errc::MaskMismatch: return "MaskMismatch";
        case Errc::EmptyMask: return "EmptyMask";
        case Errc::MaskOverlap: return "MaskOverlap";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::ConfigError: return "ConfigError";
        case Errc::InputNotFound: return "InputNotFound";
        case Errc::UnreadableImage: return "UnreadableImage";
    }
    return "UnknownError";
}

}  // namespace retina

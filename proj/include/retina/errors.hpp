#pragma once

#include <stdexcept>
#include <string>

namespace retina {

enum class Errc {
    OutOfRange,
    DegenerateRange,
    MaskMismatch,
    EmptyMask,
    MaskOverlap,
    DimensionMismatch,
    ConfigError,
    InputNotFound,
    UnreadableImage,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
    throw Error(code, detail);
}

}  // namespace retina

#pragma once

#include <stdexcept>
#include <string>

namespace surprisal {

enum class ErrorKind {
    format,            // malformed container / file structure
    unsupported_codec, // recognizable but unsupported encoding
    too_short,         // input below the minimum length for the operation
    invalid_schedule,  // noise schedule precondition violated
    shape,             // tensor shape mismatch
    out_of_range,      // index/step outside its valid interval
    invalid_argument,  // bad scalar argument
    config,            // configuration failed validation (CLI exit code 1)
    singular_design,   // rank-deficient regression design
    numeric,           // NaN/divergence during computation
    data,              // runtime data error (missing clip, bad join, ...)
    io,                // filesystem failure
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace surprisal

#pragma once

#include <stdexcept>
#include <string>

namespace sketchlayout {

enum class ErrorKind {
    InvalidInput,
    Io,
    SketchNotChainable,
    DegenerateGraph,
    Validation,
    NumericFailure,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (CLI, HTTP
// service) can map it to an exit code or status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace sketchlayout

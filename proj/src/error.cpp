#include "sketchlayout/error.hpp"

namespace sketchlayout {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Io: return "io";
    case ErrorKind::SketchNotChainable: return "sketch-not-chainable";
    case ErrorKind::DegenerateGraph: return "degenerate-graph";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::NumericFailure: return "numeric-failure";
    }
    return "unknown";
}

} // namespace sketchlayout

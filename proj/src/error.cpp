#include "achull/error.hpp"

namespace achull {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::degenerate_input: return "DEGENERATE_INPUT";
        case Errc::too_large: return "TOO_LARGE";
        case Errc::generation_failed: return "GENERATION_FAILED";
        case Errc::negative_error: return "NEGATIVE_ERROR";
    }
    return "UNKNOWN";
}

DomainError::DomainError(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

}  // namespace achull

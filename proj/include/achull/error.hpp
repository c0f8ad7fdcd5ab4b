#pragma once

#include <stdexcept>
#include <string>

namespace achull {

enum class Errc {
    degenerate_input,
    too_large,
    generation_failed,
    negative_error,
};

const char* errc_name(Errc code);

// Domain-contract violation. `code()` identifies the contract error,
// what() carries the error name plus a detail message.
class DomainError : public std::runtime_error {
public:
    DomainError(Errc code, const std::string& detail);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace achull

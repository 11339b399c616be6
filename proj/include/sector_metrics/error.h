#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sector_metrics {

enum class ErrorCode {
    PointNotInDomain,
    NumericFallbackRequired,
    UnsupportedDomain,
    DegenerateInput,
    DegenerateConfiguration,
    InvalidTheta,
    InvalidK,
    OutOfRange,
    NoWitness,
    UnsupportedPair,
    IoFailure,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sector_metrics

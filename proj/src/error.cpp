#include "sector_metrics/error.h"

namespace sector_metrics {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::PointNotInDomain: return "PointNotInDomain";
        case ErrorCode::NumericFallbackRequired: return "NumericFallbackRequired";
        case ErrorCode::UnsupportedDomain: return "UnsupportedDomain";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
        case ErrorCode::InvalidTheta: return "InvalidTheta";
        case ErrorCode::InvalidK: return "InvalidK";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NoWitness: return "NoWitness";
        case ErrorCode::UnsupportedPair: return "UnsupportedPair";
        case ErrorCode::IoFailure: return "IoFailure";
    }
    return "Unknown";
}

}  // namespace sector_metrics

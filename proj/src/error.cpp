#include "wsh/error.hpp"

namespace wsh {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidSimplex: return "InvalidSimplex";
    case ErrorCode::DuplicateSimplex: return "DuplicateSimplex";
    case ErrorCode::MissingFace: return "MissingFace";
    case ErrorCode::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorCode::ZeroChain: return "ZeroChain";
    case ErrorCode::MismatchedDimensions: return "MismatchedDimensions";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> line)
    : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + message : message),
      code_(code),
      line_(line) {}

}  // namespace wsh

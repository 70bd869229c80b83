#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wsh {

enum class ErrorCode {
    InvalidSimplex,
    DuplicateSimplex,
    MissingFace,
    MonotonicityViolation,
    EmptyInput,
    DimensionOutOfRange,
    ZeroChain,
    MismatchedDimensions,
    PrecisionExhausted,
    InvalidField,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` tells callers what failed.
/// Errors raised while reading a complex file carry the offending line.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::optional<std::size_t> line = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> line_;
};

}  // namespace wsh

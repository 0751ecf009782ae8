#pragma once

#include <stdexcept>
#include <string>

namespace fermat {

enum class ErrorCode {
    InvalidAngle,
    InvalidExponent,
    InvalidFrame,
    SingularFrame,
    OriginPoint,
    TooFewSamples,
    QuadratureFailure,
    OutOfRange,
    InvalidCurve,
    InvalidArgument,
};

[[nodiscard]] constexpr const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidAngle: return "invalid angle";
    case ErrorCode::InvalidExponent: return "invalid exponent";
    case ErrorCode::InvalidFrame: return "invalid frame";
    case ErrorCode::SingularFrame: return "singular frame";
    case ErrorCode::OriginPoint: return "origin point";
    case ErrorCode::TooFewSamples: return "too few samples";
    case ErrorCode::QuadratureFailure: return "quadrature failure";
    case ErrorCode::OutOfRange: return "out of range";
    case ErrorCode::InvalidCurve: return "invalid curve";
    case ErrorCode::InvalidArgument: return "invalid argument";
    }
    return "unknown error";
}

/// Recoverable domain error. The code identifies the failure class; the
/// message carries the offending values.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code)
    {
    }

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace fermat

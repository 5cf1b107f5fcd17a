#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace enu {

enum class ErrorCode {
    NegativeRadicand,
    DegenerateC3,
    NonPositiveRadius,
    ComplexV,
    DegenerateState,
    NoBoundState,
    ParameterOutOfDomain,
    QuadratureFailure,
    InvalidParameter,
    ParseError,
    UnknownKey,
    InvalidValue,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NegativeRadicand: return "NegativeRadicand";
        case ErrorCode::DegenerateC3: return "DegenerateC3";
        case ErrorCode::NonPositiveRadius: return "NonPositiveRadius";
        case ErrorCode::ComplexV: return "ComplexV";
        case ErrorCode::DegenerateState: return "DegenerateState";
        case ErrorCode::NoBoundState: return "NoBoundState";
        case ErrorCode::ParameterOutOfDomain: return "ParameterOutOfDomain";
        case ErrorCode::QuadratureFailure: return "QuadratureFailure";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownKey: return "UnknownKey";
        case ErrorCode::InvalidValue: return "InvalidValue";
    }
    return "Unknown";
}

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace enu

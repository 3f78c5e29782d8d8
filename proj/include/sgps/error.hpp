#pragma once

/**
 * @file error.hpp
 * @brief Error kinds raised by the semigroup library.
 *
 * Every failure is reported as a single exception type carrying a stable
 * machine-readable kind. The CLI maps the kind name straight into its JSON
 * error records, so the names below are part of the external interface.
 */

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgps {

enum class ErrorKind {
    EmptyInput,
    InvalidArgument,
    NotCoprime,
    InvalidGapSet,
    InvalidSmallElements,
    InvalidApery,
    EmptyInterval,
    NotSubadditive,
    NotInSemigroup,
    NotApplicable,
    NotMinimalGenerator,
    NotSpecialGap,
    InvalidFrobenius,
    AmbientMismatch,
    NotInVariety,
    DimensionMismatch,
    ZeroPolynomial,
    NotMonic,
    Overflow,
    ResourceLimit,
};

constexpr std::string_view kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::InvalidGapSet: return "InvalidGapSet";
    case ErrorKind::InvalidSmallElements: return "InvalidSmallElements";
    case ErrorKind::InvalidApery: return "InvalidApery";
    case ErrorKind::EmptyInterval: return "EmptyInterval";
    case ErrorKind::NotSubadditive: return "NotSubadditive";
    case ErrorKind::NotInSemigroup: return "NotInSemigroup";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NotMinimalGenerator: return "NotMinimalGenerator";
    case ErrorKind::NotSpecialGap: return "NotSpecialGap";
    case ErrorKind::InvalidFrobenius: return "InvalidFrobenius";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotInVariety: return "NotInVariety";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace sgps

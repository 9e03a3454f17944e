#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tamefiber {

enum class ErrorKind {
    NonIntegralSelfIntersection,
    UnknownComponent,
    InvalidConfiguration,
    NotAPolynomial,
    NotRelativelyMinimal,
    JacobianTypeRequired,
    NotTame,
    HypothesisViolated,
    InvalidSite,
    NotContractible,
    InvalidParameter,
    InternalInconsistency,
    ParseError,
    InvariantError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NonIntegralSelfIntersection: return "NonIntegralSelfIntersection";
    case ErrorKind::UnknownComponent: return "UnknownComponent";
    case ErrorKind::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorKind::NotAPolynomial: return "NotAPolynomial";
    case ErrorKind::NotRelativelyMinimal: return "NotRelativelyMinimal";
    case ErrorKind::JacobianTypeRequired: return "JacobianTypeRequired";
    case ErrorKind::NotTame: return "NotTame";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::InvalidSite: return "InvalidSite";
    case ErrorKind::NotContractible: return "NotContractible";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantError: return "InvariantError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (and the CLI)
/// can branch without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

    /// Malformed input (syntax or invariant) as opposed to a domain verdict.
    [[nodiscard]] bool is_input_error() const noexcept {
        return kind_ == ErrorKind::ParseError || kind_ == ErrorKind::InvariantError;
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace tamefiber

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rnnen {

/// Every failure the library reports carries one of these codes.
enum class Errc {
    NonPositiveLambda,
    DimensionMismatch,
    BadSignal,
    ActivationSlopeMismatch,
    StepTooLarge,
    NotUncoupled,
    PoleEvaluation,
    SingularResolvent,
    EigenSolverFailure,
    NonPositiveCapacitance,
    NonPositiveInductance,
    InconsistentNetwork,
    SyntaxError,
    UnknownElement,
    DanglingNode,
    SingularSystem,
    DegenerateFit,
    InvalidArgument,
    IoError,
    ParseError,
    ValidationError,
};

[[nodiscard]] std::string_view errc_name(Errc code) noexcept;

/// Library exception. `where()` names the offending field, key path, line
/// number or node, whichever applies; it may be empty.
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string where, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + (where.empty() ? "" : " at " + where) +
                             ": " + message),
          code_(code),
          where_(std::move(where)) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }
    [[nodiscard]] const std::string& where() const noexcept { return where_; }

private:
    Errc code_;
    std::string where_;
};

/// Wraps a lower-level error encountered while loading a document, keeping
/// the original code available as `cause()`.
class ValidationError : public Error {
public:
    ValidationError(const Error& cause, std::string key_path)
        : Error(Errc::ValidationError, std::move(key_path),
                std::string(errc_name(cause.code())) + ": " + cause.what()),
          cause_(cause.code()) {}

    [[nodiscard]] Errc cause() const noexcept { return cause_; }

private:
    Errc cause_;
};

}  // namespace rnnen

#pragma once

#include <stdexcept>
#include <string>

namespace bqctl {

/// Failure categories raised by the toolkit. Validation errors indicate bad
/// inputs; the numerical codes signal that a solver or check detected an
/// inconsistency it cannot recover from.
enum class Errc {
    NonPositiveDensity,
    NonPositiveStiffness,
    NegativePotential,
    LengthMismatch,
    GridTooCoarse,
    EigenSolveFailure,
    DegenerateEigenvalue,
    SignViolation,
    AsymptoticMismatch,
    TraceMismatch,
    NonPositiveH,
    TruncationMismatch,
    QuadratureUnderResolved,
    UnstableStep,
    BlowupDetected,
    UnderSampled,
    GapViolation,
    ZeroTrace,
    IllConditioned,
    NoContraction,
    MaxIterExceeded,
    ConfigParse,
    UnknownKey,
    OutputExists,
    InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace bqctl

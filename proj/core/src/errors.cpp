#include "bqctl/errors.hpp"

namespace bqctl {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPositiveDensity: return "NonPositiveDensity";
        case Errc::NonPositiveStiffness: return "NonPositiveStiffness";
        case Errc::NegativePotential: return "NegativePotential";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::GridTooCoarse: return "GridTooCoarse";
        case Errc::EigenSolveFailure: return "EigenSolveFailure";
        case Errc::DegenerateEigenvalue: return "DegenerateEigenvalue";
        case Errc::SignViolation: return "SignViolation";
        case Errc::AsymptoticMismatch: return "AsymptoticMismatch";
        case Errc::TraceMismatch: return "TraceMismatch";
        case Errc::NonPositiveH: return "NonPositiveH";
        case Errc::TruncationMismatch: return "TruncationMismatch";
        case Errc::QuadratureUnderResolved: return "QuadratureUnderResolved";
        case Errc::UnstableStep: return "UnstableStep";
        case Errc::BlowupDetected: return "BlowupDetected";
        case Errc::UnderSampled: return "UnderSampled";
        case Errc::GapViolation: return "GapViolation";
        case Errc::ZeroTrace: return "ZeroTrace";
        case Errc::IllConditioned: return "IllConditioned";
        case Errc::NoContraction: return "NoContraction";
        case Errc::MaxIterExceeded: return "MaxIterExceeded";
        case Errc::ConfigParse: return "ConfigParse";
        case Errc::UnknownKey: return "UnknownKey";
        case Errc::OutputExists: return "OutputExists";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

}  // namespace bqctl

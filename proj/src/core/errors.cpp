#include "errors.hpp"

namespace bazlab {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::NonzeroInnerConstant: return "NonzeroInnerConstant";
    case ErrorKind::RadiusOutOfRange: return "RadiusOutOfRange";
    case ErrorKind::InvalidMeasure: return "InvalidMeasure";
    case ErrorKind::InvalidJanowski: return "InvalidJanowski";
    case ErrorKind::OmegaNotSchwarz: return "OmegaNotSchwarz";
    case ErrorKind::BetaUnsupported: return "BetaUnsupported";
    case ErrorKind::SpecInvalid: return "SpecInvalid";
    case ErrorKind::DivisionByVanishing: return "DivisionByVanishing";
    case ErrorKind::AlphaMismatch: return "AlphaMismatch";
    case ErrorKind::NormalizationError: return "NormalizationError";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::TruncationInsufficient: return "TruncationInsufficient";
    }
    return "UnknownError";
}

} // namespace bazlab

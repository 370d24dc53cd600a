#ifndef BAZLAB_CORE_ERRORS_HPP
#define BAZLAB_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bazlab {

enum class ErrorKind {
    InvalidArgument,
    ParseError,
    ZeroConstantTerm,
    NonUnitConstantTerm,
    NonzeroInnerConstant,
    RadiusOutOfRange,
    InvalidMeasure,
    InvalidJanowski,
    OmegaNotSchwarz,
    BetaUnsupported,
    SpecInvalid,
    DivisionByVanishing,
    AlphaMismatch,
    NormalizationError,
    LengthMismatch,
    AlphaOutOfRange,
    TruncationInsufficient,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace bazlab

#endif

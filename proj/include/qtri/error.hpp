#ifndef QTRI_ERROR_HPP
#define QTRI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qtri {

enum class ErrorKind {
    MixedMode,
    ZeroToNegativePower,
    DivisionByZero,
    NegativeIndex,
    VanishingDenominatorFactor,
    ExcludedParameter,
    WindowMismatch,
    NonUnitDiagonal,
    AsymmetricInput,
    NonUnitConstantTerm,
    DegenerateCentral,
    InvalidParameter,
};

const char* error_kind_name(ErrorKind k);

/// Structured error: a kind plus a message naming the offending
/// sub-expression (e.g. which q-Pochhammer factor vanished and where).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace qtri

#endif // QTRI_ERROR_HPP

#pragma once

#include <stdexcept>
#include <string>

namespace pep {

// Error categories drive the CLI exit codes: parse errors, math-domain
// errors, and resource-cap errors are distinguishable by base class.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct MathError : Error {
    using Error::Error;
};
struct CapError : Error {
    using Error::Error;
};
struct ParseError : Error {
    int line = 0, column = 0;
    ParseError(const std::string& msg, int l, int c)
        : Error(msg + " (line " + std::to_string(l) + ", column " + std::to_string(c) + ")"),
          line(l), column(c) {}
};

struct NonMonicError : MathError {
    using MathError::MathError;
};
struct ReduciblePolynomialError : MathError {
    using MathError::MathError;
};
struct InvalidPolynomialError : MathError {
    using MathError::MathError;
};
struct IntegralBasisRequiredError : MathError {
    using MathError::MathError;
};
struct FieldMismatchError : MathError {
    using MathError::MathError;
};
struct DivisionByZeroError : MathError {
    using MathError::MathError;
};
struct AllZeroError : MathError {
    using MathError::MathError;
};
struct NotIntegralError : MathError {
    using MathError::MathError;
};
struct DimensionMismatchError : MathError {
    using MathError::MathError;
};
struct NotSemisimpleError : MathError {
    using MathError::MathError;
};
struct EigenvaluesNotInFieldError : MathError {
    std::string factors;  // offending irreducible factors, printable
    EigenvaluesNotInFieldError(const std::string& msg, std::string f)
        : MathError(msg), factors(std::move(f)) {}
};
struct NotInvertibleError : MathError {
    using MathError::MathError;
};
struct NotUnipotentError : MathError {
    using MathError::MathError;
};
struct NonMonotoneThresholdsError : MathError {
    using MathError::MathError;
};
struct UnsupportedFieldError : MathError {
    using MathError::MathError;
};
struct UnknownSymbolError : MathError {
    using MathError::MathError;
};

struct PrecisionCapExceededError : CapError {
    using CapError::CapError;
};
struct BoxTooLargeError : CapError {
    using CapError::CapError;
};
struct ExponentBoxTooLargeError : CapError {
    using CapError::CapError;
};
struct DegreeCapExceededError : CapError {
    using CapError::CapError;
};
struct SubsetCapExceededError : CapError {
    using CapError::CapError;
};
struct TorsionBoundExceededError : CapError {
    using CapError::CapError;
};

}  // namespace pep

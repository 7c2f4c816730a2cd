#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace somos {

/// Base for all domain errors. `name()` is the stable machine-readable
/// error case; `what()` adds detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class ZeroPivotError : public Error {
public:
    explicit ZeroPivotError(std::int64_t index)
        : Error("ZeroPivot", "pivot term at index " + std::to_string(index) + " is zero"),
          index_(index) {}
    std::int64_t index() const noexcept { return index_; }

private:
    std::int64_t index_;
};

class ZeroTermError : public Error {
public:
    explicit ZeroTermError(std::int64_t index)
        : Error("ZeroTerm", "term at index " + std::to_string(index) + " is zero"),
          index_(index) {}
    std::int64_t index() const noexcept { return index_; }

private:
    std::int64_t index_;
};

class MissingIndexError : public Error {
public:
    explicit MissingIndexError(std::int64_t index)
        : Error("MissingIndex", "index " + std::to_string(index) + " is not available"),
          index_(index) {}
    std::int64_t index() const noexcept { return index_; }

private:
    std::int64_t index_;
};

class NotDivisibleError : public Error {
public:
    explicit NotDivisibleError(const std::string& msg) : Error("NotDivisible", msg) {}
};

class MixedExtensionError : public Error {
public:
    explicit MixedExtensionError(const std::string& msg) : Error("MixedExtension", msg) {}
};

class VariableMismatchError : public Error {
public:
    explicit VariableMismatchError(const std::string& msg) : Error("VariableMismatch", msg) {}
};

class ZeroPolynomialError : public Error {
public:
    ZeroPolynomialError() : Error("ZeroPolynomial", "operation undefined for the zero polynomial") {}
};

class ZeroDivideError : public Error {
public:
    explicit ZeroDivideError(const std::string& msg) : Error("ZeroDivide", msg) {}
};

class ZeroAlphaError : public Error {
public:
    ZeroAlphaError() : Error("ZeroAlpha", "operation requires alpha != 0") {}
};

class ZeroParameterError : public Error {
public:
    ZeroParameterError() : Error("ZeroParameter", "parameter must be nonzero") {}
};

class ZeroGaugeParameterError : public Error {
public:
    ZeroGaugeParameterError() : Error("ZeroGaugeParameter", "gauge parameters must be nonzero") {}
};

class ZeroValueError : public Error {
public:
    ZeroValueError() : Error("ZeroValue", "value must be nonzero") {}
};

class PointNotOnCurveError : public Error {
public:
    explicit PointNotOnCurveError(const std::string& msg) : Error("PointNotOnCurve", msg) {}
};

class DegenerateInvariantError : public Error {
public:
    explicit DegenerateInvariantError(const std::string& msg)
        : Error("DegenerateInvariant", msg) {}
};

class MembershipViolationError : public Error {
public:
    MembershipViolationError(std::int64_t n, const std::string& witness)
        : Error("MembershipViolation",
                "term " + std::to_string(n) + " leaves the ring, witness monomial " + witness),
          index_(n), witness_(witness) {}
    std::int64_t index() const noexcept { return index_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::int64_t index_;
    std::string witness_;
};

class ConstraintViolatedError : public Error {
public:
    explicit ConstraintViolatedError(const std::string& msg) : Error("ConstraintViolated", msg) {}
};

class NonIntegerSequenceError : public Error {
public:
    explicit NonIntegerSequenceError(const std::string& msg)
        : Error("NonIntegerSequence", msg) {}
};

class NonIntegerOrbitError : public Error {
public:
    explicit NonIntegerOrbitError(const std::string& msg) : Error("NonIntegerOrbit", msg) {}
};

class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(const std::string& msg) : Error("InsufficientData", msg) {}
};

class InconsistentWindowError : public Error {
public:
    explicit InconsistentWindowError(const std::string& msg)
        : Error("InconsistentWindow", msg) {}
};

class BoundExceededError : public Error {
public:
    explicit BoundExceededError(const std::string& msg) : Error("BoundExceeded", msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("ParseError", msg) {}
};

}  // namespace somos

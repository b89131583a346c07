#pragma once

#include <stdexcept>
#include <string>

namespace ringtower {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class NoCoercion : public Error {
public:
    using Error::Error;
};

class MixedParents : public Error {
public:
    MixedParents() : Error("operands belong to different parents") {}
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    using Error::Error;
};

/// An inverse was requested for a non-unit.
///
/// This is expected control flow: algorithms that work over rings with zero
/// divisors catch it and switch to a division-free fallback. The witness is
/// the textual form of a nontrivial factor exposing the zero divisor
/// (gcd(rep, n) for Z/nZ, the common factor with the modulus for polynomial
/// residue rings, or the element itself when no finer factor is known).
class ImpossibleInverse : public Error {
public:
    explicit ImpossibleInverse(std::string witness)
        : Error("impossible inverse, witness " + witness), witness_(std::move(witness)) {}

    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

class InexactDivision : public Error {
public:
    InexactDivision() : Error("inexact division") {}
    using Error::Error;
};

class NonSquare : public Error {
public:
    NonSquare() : Error("matrix is not square") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InsufficientPoints : public Error {
public:
    using Error::Error;
};

class ZeroPivotUnresolvable : public Error {
public:
    using Error::Error;
};

class NotSquarefree : public Error {
public:
    NotSquarefree() : Error("polynomial is not squarefree") {}
};

class ContainsZero : public Error {
public:
    ContainsZero() : Error("ball contains zero") {}
    using Error::Error;
};

class ContainsNegative : public Error {
public:
    ContainsNegative() : Error("ball contains negative numbers") {}
    using Error::Error;
};

class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

class IndexDivisor : public Error {
public:
    using Error::Error;
};

class RandomSearchExhausted : public Error {
public:
    using Error::Error;
};

class TorsionCertificationFailed : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace ringtower

#pragma once

#include <stdexcept>
#include <string>

namespace resitan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (not prime, a ≡ 0 mod p, bad range...).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// The hypotheses of an identity do not hold for this input (for example
/// 2m does not divide p - 1, or 2 is not an m-th power residue).
/// The scan harness turns these into skipped records.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// No representation p = x^2 + d y^2 exists.
class NotRepresentableError : public HypothesisError {
public:
    using HypothesisError::HypothesisError;
};

/// Input belongs to a branch of an identity that is not implemented.
class BranchViolationError : public HypothesisError {
public:
    using HypothesisError::HypothesisError;
};

/// a^((p-1)/(2m)) mod p is not +-1.
class NonRealSymbolError : public Error {
public:
    using Error::Error;
};

class BoundExceededError : public Error {
public:
    using Error::Error;
};

class RingMismatchError : public Error {
public:
    using Error::Error;
};

/// A tangent argument lies within tolerance of a pole.
class PoleProximityError : public Error {
public:
    using Error::Error;
};

}  // namespace resitan

#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Gamma(a) has a pole in a numerator position.
class NumeratorPole : public Error {
public:
    using Error::Error;
};

/// Numerator and denominator poles coincide; the expression has no defined value.
class IndeterminatePole : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Function evaluated at one of its poles.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Parameters of an identity put one of its Gamma factors on a pole.
class PoleConfiguration : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature ran out of panels before meeting its tolerance.
class NoConvergence : public Error {
public:
    using Error::Error;
};

/// A truncated infinite sum cannot be certified within the requested tail tolerance.
class PolicyRejected : public Error {
public:
    using Error::Error;
};

/// Two evaluation routes of the same quantity disagree beyond their tolerance.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

} // namespace hardy

#pragma once

#include <stdexcept>
#include <string>

namespace stereodual {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Point too close to the boundary of the Poincare disk (epsilon = -1).
class BoundaryError : public Error { public: using Error::Error; };

/// Argument outside the domain of a map (z = 0 for inversion, Bohlin, KS).
class DomainError : public Error { public: using Error::Error; };

/// Observable evaluated on a singular set of its potential.
class SingularityError : public Error { public: using Error::Error; };

/// Integration entered the guard zone of a singular set.
class SingularityApproach : public Error { public: using Error::Error; };

/// Adaptive step size underflow or step budget exhausted.
class StepFailure : public Error { public: using Error::Error; };

/// Quantum number beyond a spectrum cutoff.
class RangeError : public Error { public: using Error::Error; };

/// Inadmissible combination of quantum numbers.
class QuantumNumberError : public Error { public: using Error::Error; };

/// The right-hand side of the oscillator/Coulomb interrelation is negative.
class PositivityViolation : public Error { public: using Error::Error; };

/// Input does not satisfy a level-set or membership precondition.
class PreconditionError : public Error { public: using Error::Error; };

}  // namespace stereodual

#pragma once

#include <stdexcept>
#include <string>

namespace cusp {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or ill-typed input (files, flags, preconditions). CLI exit code 2.
struct InputError : Error {
  using Error::Error;
};

/// Input file could not be parsed; the message names the offending location.
struct ParseError : InputError {
  using InputError::InputError;
};

/// A computation violated an invariant the theory guarantees. CLI exit code 3.
struct InternalError : Error {
  using Error::Error;
};

// --- domain-specific input errors -----------------------------------------

/// A product of tau-monomials would leave the squarefree span, where the
/// zero test is no longer sound.
struct SquarefreeViolation : InputError {
  using InputError::InputError;
};

/// A potential series (or log branch) fails its parity/shape invariants.
struct ParityViolation : InputError {
  using InputError::InputError;
};

/// Generator forms handed to a fit have linearly dependent linear parts.
struct DependentGenerators : InputError {
  using InputError::InputError;
};

/// Staircase support conditions fail for the odd-term rank computation.
struct MalformedStaircase : InputError {
  using InputError::InputError;
};

/// A relation matrix with no nonzero rows where relations are required.
struct EmptyRelation : InputError {
  using InputError::InputError;
};

/// The anomaly-excess formula produced a negative value.
struct NotAnomalousConsistent : InputError {
  using InputError::InputError;
};

/// The pair family admits an independent full selection, so the deficient
/// subset machinery does not apply.
struct HypothesisFailed : InputError {
  using InputError::InputError;
};

// --- internal invariant violations -----------------------------------------

/// The constructive deficient-subset walk emitted a set violating its own
/// validity predicate. Never silently repaired.
struct InternalProofDeviation : InternalError {
  using InternalError::InternalError;
};

/// An anomalous subgroup located no complete cusp under the declared
/// independence hypothesis.
struct NoCuspLocated : InternalError {
  using InternalError::InternalError;
};

/// Cross-checked rational substitutions disagreed on a fit verdict.
struct UnstableFit : InternalError {
  using InternalError::InternalError;
};

}  // namespace cusp

#pragma once

#include <stdexcept>
#include <string>

namespace weingarten {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two values over different (non-nested) symbol alphabets were combined.
struct AlphabetMismatchError : Error {
  using Error::Error;
};

/// A derivative was requested past the declared closure depth of a symbol.
struct DerivativeDepthError : Error {
  using Error::Error;
};

/// A radical symbol was differentiated without a declared quotient form.
struct RadicalDerivativeError : Error {
  using Error::Error;
};

/// Bad substitution request: cyclic bindings, unresolved radicals, ...
struct SubstitutionError : Error {
  using Error::Error;
};

/// Malformed expression text.
struct ParseError : Error {
  using Error::Error;
};

/// Unknown catalog entry, branch precondition violation, ...
struct CatalogError : Error {
  using Error::Error;
};

/// Frame vectors of different frame kinds were combined.
struct FrameMismatchError : Error {
  using Error::Error;
};

/// Jet with W = EG - F^2 below the degeneracy floor.
struct DegenerateJetError : Error {
  using Error::Error;
};

/// Curvature data violating H^2 >= K beyond tolerance.
struct CurvatureConsistencyError : Error {
  using Error::Error;
};

/// ODE integration hit a singular state or left the admissible region.
struct SingularStateError : Error {
  using Error::Error;
};

/// A generated surface failed its construction-time certification.
struct ConstructionError : Error {
  using Error::Error;
};

/// Parameter point outside a surface's domain box.
struct DomainError : Error {
  using Error::Error;
};

/// Invalid run configuration (CLI layer).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace weingarten

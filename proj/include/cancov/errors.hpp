#ifndef CANCOV_ERRORS_HPP
#define CANCOV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cancov {

/// Base class for every error signalled by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroDenominatorError : Error {
  ZeroDenominatorError() : Error("rational with zero denominator") {}
};

struct DivisionByZeroError : Error {
  DivisionByZeroError() : Error("division by zero") {}
};

/// Linear forms in different formal parameters cannot be combined.
struct ParameterMismatchError : Error {
  ParameterMismatchError(const std::string& a, const std::string& b)
      : Error("incompatible parameters: '" + a + "' vs '" + b + "'") {}
};

/// A quotient formula produced a non-integral invariant; the message names
/// the formula that failed.
struct DivisibilityError : Error {
  using Error::Error;
};

/// A fixed-point character was trivial, so the fixed locus is not isolated.
struct NonIsolatedFixedPointError : Error {
  NonIsolatedFixedPointError()
      : Error("zero character: fixed locus is not isolated") {}
};

/// The h^1 vanishing needed by the residue-sequence computation failed.
struct VanishingHypothesisError : Error {
  using Error::Error;
};

/// Malformed weight configuration (empty weights, residues outside 0..2, ...).
struct InvalidConfigError : Error {
  using Error::Error;
};

/// Unknown pair/example id, malformed catalog file, and similar.
struct CatalogError : Error {
  using Error::Error;
};

/// Parameter outside the admissible range of a catalog entry (e.g. n < 3).
struct OutOfRangeError : Error {
  using Error::Error;
};

/// Command-line input that cannot be acted on (unknown format name, ...).
struct UsageError : Error {
  using Error::Error;
};

}  // namespace cancov

#endif

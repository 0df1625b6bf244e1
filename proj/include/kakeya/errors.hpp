#pragma once
#include <stdexcept>

namespace kakeya {

// Error taxonomy shared by the whole library.  The CLI maps these to exit
// codes: DomainError/ConfigError -> 2, PrecisionError/ResourceError -> 3.
// Theorem or lemma violations are never exceptions; they are reported
// outcomes (see the report structs) so a run can dump its artifact first.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The operation is not defined for the given value (inverting 0, a
// non-primitive direction, a repeated interpolation node, ...).
struct DomainError : Error {
  using Error::Error;
};

// The answer exists but is not determined at working precision; retry with
// more digits rather than trust a truncated zero.
struct PrecisionError : Error {
  using Error::Error;
};

// An enumeration or search exceeded its configured budget.
struct ResourceError : Error {
  using Error::Error;
};

// An internal invariant failed (nonzero remainder in an exact division,
// a malformed Eisenstein quotient, ...).  Always a bug or corrupt input.
struct ConsistencyError : Error {
  using Error::Error;
};

// Bad CLI flags or config file.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace kakeya

#pragma once

#include <stdexcept>
#include <string>

namespace augval {

// All library failures derive from Error so callers (the CLI in particular)
// can map categories onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input: bad JSON, zero divisor, singular map.
class InputError : public Error {
 public:
  using Error::Error;
};

// Operation undefined for this kind of object, e.g. a pseudo-valuation
// evaluated on a fraction whose denominator lies in its socle.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A chain handed to an evaluator failed structural validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A family violated monotonicity or one of its presentation invariants.
class FamilyInvalidError : public Error {
 public:
  using Error::Error;
};

// A stabilized value was required but the presented horizon ran out.
class HorizonError : public Error {
 public:
  using Error::Error;
};

// Transport produced an object that does not satisfy the invariants the
// generator-independence theorem guarantees.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace augval

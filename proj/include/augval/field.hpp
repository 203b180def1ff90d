#pragma once

#include <string>

#include "augval/value.hpp"

namespace augval {

/// The valuation nu on the coefficient field Q: either p-adic for a prime p
/// or trivial. The prime is checked at construction.
class BaseValuation {
 public:
  enum class Kind { PAdic, Trivial };

  static BaseValuation padic(const mpz_class& p);
  static BaseValuation padic(long p) { return padic(mpz_class(p)); }
  static BaseValuation trivial() { return BaseValuation(); }

  Kind kind() const { return kind_; }
  bool is_padic() const { return kind_ == Kind::PAdic; }
  /// Precondition: is_padic().
  const mpz_class& prime() const { return prime_; }

  /// nu(a); nu(0) = +inf.
  Value operator()(const Rational& a) const;

  std::string describe() const;

  friend bool operator==(const BaseValuation&, const BaseValuation&) = default;

 private:
  BaseValuation() = default;
  Kind kind_ = Kind::Trivial;
  mpz_class prime_ = 0;
};

inline Value nu(const BaseValuation& v, const Rational& a) { return v(a); }

/// Exact order of p in a nonzero integer.
long padic_order(const mpz_class& n, const mpz_class& p);

}  // namespace augval

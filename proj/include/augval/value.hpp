#pragma once

#include <compare>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>

#include <gmpxx.h>

namespace augval {

using Rational = mpq_class;

/// An element of Q ∪ {+inf}, the value group of every valuation in this
/// library. Finite values are kept canonical (reduced, positive denominator),
/// so equality is structural.
class Value {
 public:
  Value() : Value(Rational(0)) {}
  Value(const Rational& q) : finite_(q) { finite_.canonicalize(); }  // NOLINT
  Value(long n) : finite_(n) {}                                      // NOLINT

  static Value infinity() {
    Value v;
    v.infinite_ = true;
    v.finite_ = 0;
    return v;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Precondition: is_finite().
  const Rational& rational() const;

  friend bool operator==(const Value& a, const Value& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.finite_ == b.finite_;
  }
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

  friend Value operator+(const Value& a, const Value& b);
  /// a - b for finite b. Subtracting infinity is undefined and throws
  /// DomainError.
  friend Value operator-(const Value& a, const Value& b);
  Value& operator+=(const Value& b) { return *this = *this + b; }

  /// "p/q", "p" or "inf".
  std::string str() const;
  /// Inverse of str(); throws InputError on malformed text.
  static Value parse(const std::string& text);

 private:
  bool infinite_ = false;
  Rational finite_;
};

std::ostream& operator<<(std::ostream& os, const Value& v);

/// j * v for j >= 1. The j = 0 term of an expansion carries no gamma summand,
/// so scale(0, inf) is rejected rather than given a meaning.
Value value_scale(long j, const Value& v);

Value value_add(const Value& a, const Value& b);
std::strong_ordering value_compare(const Value& a, const Value& b);

/// Minimum under the total order; the empty list gives +inf.
Value value_inf(std::span<const Value> vs);
inline Value value_inf(std::initializer_list<Value> vs) {
  return value_inf(std::span<const Value>(vs.begin(), vs.size()));
}

/// Parses "p/q" or "p" (optional sign, decimal digits, nonzero denominator)
/// into a canonical rational. Throws InputError otherwise.
Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& q);

}  // namespace augval

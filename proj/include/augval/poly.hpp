#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "augval/value.hpp"

namespace augval {

/// Dense univariate polynomial over Q, coefficient j of x^j at index j.
/// The leading coefficient is nonzero; the zero polynomial has no
/// coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

  static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }
  static Poly x() { return Poly({0, 1}); }
  /// c * x^k
  static Poly monomial(const Rational& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& leading() const;
  /// Coefficient of x^j, zero beyond the degree.
  Rational coeff(std::size_t j) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& at) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& a);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly pow(unsigned e) const;
  Poly monic() const;

  friend bool operator==(const Poly&, const Poly&) = default;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// f = q*g + r with deg r < deg g. Throws InputError when g = 0.
DivMod poly_divmod(const Poly& f, const Poly& g);

/// f = sum_j digits[j] * phi^j with deg digits[j] < deg phi.
struct Expansion {
  Poly phi;
  std::vector<Poly> digits;

  Poly reconstruct() const;
};

/// Low digit first: g_0 = f mod phi, then recurse on the quotient.
/// Throws InputError unless phi is monic of degree >= 1.
Expansion phi_expand(const Poly& f, const Poly& phi);

/// Element num/den of K(x). Not reduced; den is never zero.
struct RatFn {
  Poly num;
  Poly den;

  RatFn(Poly n = Poly(), Poly d = Poly::constant(1));
  static RatFn from_poly(Poly p) { return RatFn(std::move(p)); }

  friend RatFn operator*(const RatFn& a, const RatFn& b);
  std::string str(const std::string& var = "x") const;
};

/// Homogenized substitution x -> (num_sub / den_sub):
/// returns (sum_j a_j num_sub^j den_sub^(n-j), den_sub^n) with n = deg p.
/// Substitutes into the zero polynomial as 0/1.
RatFn substitute(const Poly& p, const Poly& num_sub, const Poly& den_sub);
RatFn substitute(const RatFn& r, const Poly& num_sub, const Poly& den_sub);

}  // namespace augval

#include "augval/poly.hpp"

#include <sstream>

#include "augval/errors.hpp"

namespace augval {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return Poly(std::move(v));
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Poly::coeff(std::size_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : Rational(0);
}

Rational Poly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Rational& c, const Poly& a) {
  std::vector<Rational> v(a.coeffs_);
  for (auto& x : v) x *= c;
  return Poly(std::move(v));
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(1);
  Poly base = *this;
  while (e != 0) {
    if ((e & 1U) != 0) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  Rational inv = 1 / leading();
  return inv * *this;
}

std::string Poly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (k == 0 || !unit) os << mag.get_str();
    if (k >= 1) {
      if (!unit) os << "*";
      os << var;
      if (k >= 2) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

DivMod poly_divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw InputError("division by the zero polynomial");
  if (f.degree() < g.degree()) return {Poly(), f};
  std::vector<Rational> rem(f.coeffs());
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  std::vector<Rational> quot(rem.size() - dg, Rational(0));
  Rational lead_inv = 1 / g.leading();
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (rem[k] == 0) continue;
    Rational q = rem[k] * lead_inv;
    quot[k - dg] = q;
    for (std::size_t i = 0; i <= dg; ++i) rem[k - dg + i] -= q * gc[i];
  }
  rem.resize(dg);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Expansion::reconstruct() const {
  Poly acc;
  for (std::size_t j = digits.size(); j-- > 0;) acc = acc * phi + digits[j];
  return acc;
}

Expansion phi_expand(const Poly& f, const Poly& phi) {
  if (phi.degree() < 1 || !phi.is_monic()) {
    throw InputError("expansion base must be monic of degree >= 1, got " + phi.str());
  }
  Expansion e{phi, {}};
  Poly rest = f;
  while (!rest.is_zero()) {
    auto [q, r] = poly_divmod(rest, phi);
    e.digits.push_back(std::move(r));
    rest = std::move(q);
  }
  return e;
}

RatFn::RatFn(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw InputError("rational function with zero denominator");
}

RatFn operator*(const RatFn& a, const RatFn& b) { return RatFn(a.num * b.num, a.den * b.den); }

std::string RatFn::str(const std::string& var) const {
  return "(" + num.str(var) + ") / (" + den.str(var) + ")";
}

RatFn substitute(const Poly& p, const Poly& num_sub, const Poly& den_sub) {
  if (p.is_zero()) return RatFn(Poly(), Poly::constant(1));
  const auto n = static_cast<unsigned>(p.degree());
  std::vector<Poly> num_pows{Poly::constant(1)};
  std::vector<Poly> den_pows{Poly::constant(1)};
  for (unsigned k = 1; k <= n; ++k) {
    num_pows.push_back(num_pows.back() * num_sub);
    den_pows.push_back(den_pows.back() * den_sub);
  }
  Poly acc;
  for (unsigned j = 0; j <= n; ++j) {
    const Rational& a = p.coeffs()[j];
    if (a == 0) continue;
    acc += a * (num_pows[j] * den_pows[n - j]);
  }
  return RatFn(std::move(acc), den_pows[n]);
}

RatFn substitute(const RatFn& r, const Poly& num_sub, const Poly& den_sub) {
  RatFn top = substitute(r.num, num_sub, den_sub);
  RatFn bottom = substitute(r.den, num_sub, den_sub);
  // (N / D^n) / (M / D^m) = (N * D^m) / (M * D^n)
  return RatFn(top.num * bottom.den, bottom.num * top.den);
}

}  // namespace augval

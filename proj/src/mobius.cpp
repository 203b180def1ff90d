#include "augval/mobius.hpp"

#include <algorithm>

#include "augval/errors.hpp"

namespace augval {

MobiusMap::MobiusMap(Rational a_, Rational b_, Rational c_, Rational d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (det() == 0) throw InputError("singular Mobius map (ad - bc = 0): " + str());
}

std::string MobiusMap::str() const {
  return "(" + rational_str(a) + ", " + rational_str(b) + ", " + rational_str(c) + ", " + rational_str(d) + ")";
}

RatFn MobiusMap::pullback(const Poly& g) const { return substitute(g, Poly({b, a}), Poly({d, c})); }

RatFn MobiusMap::pullback(const RatFn& g) const { return substitute(g, Poly({b, a}), Poly({d, c})); }

bool operator==(const MobiusMap& l, const MobiusMap& r) {
  // Proportional matrices: all 2x2 minors of the stacked rows vanish.
  const Rational lv[4] = {l.a, l.b, l.c, l.d};
  const Rational rv[4] = {r.a, r.b, r.c, r.d};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (lv[i] * rv[j] != lv[j] * rv[i]) return false;
    }
  }
  return true;
}

MobiusMap compose(const MobiusMap& o, const MobiusMap& i) {
  return {o.a * i.a + o.b * i.c, o.a * i.b + o.b * i.d, o.c * i.a + o.d * i.c, o.c * i.b + o.d * i.d};
}

Atom Atom::affine(const Rational& a, const Rational& b) {
  if (a == 0) throw InputError("affine atom with a = 0");
  return {Kind::Affine, a, b};
}

std::string Atom::str() const {
  if (is_inv()) return "Inv";
  return "Affine(" + rational_str(a) + ", " + rational_str(b) + ")";
}

GeneratorWord mobius_decompose(const MobiusMap& m) {
  if (m.det() == 0) throw InputError("singular Mobius map (ad - bc = 0): " + m.str());
  if (m.c == 0) return {Atom::affine(m.a / m.d, m.b / m.d)};
  // (ax+b)/(cx+d) = a/c + ((bc - ad)/c) / (cx + d)
  GeneratorWord w;
  Atom outer = Atom::affine((m.b * m.c - m.a * m.d) / m.c, m.a / m.c);
  Atom inner = Atom::affine(m.c, m.d);
  auto is_identity = [](const Atom& t) { return t.a == 1 && t.b == 0; };
  if (!is_identity(outer)) w.push_back(outer);
  w.push_back(Atom::inv());
  if (!is_identity(inner)) w.push_back(inner);
  return w;
}

MobiusMap recompose(const GeneratorWord& w) {
  MobiusMap m;
  for (const Atom& t : w) m = compose(m, t.as_map());
  return m;
}

std::string word_str(const GeneratorWord& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out += ", ";
    out += w[i].str();
  }
  return out + "]";
}

Poly inv_transform(const Poly& phi) {
  if (!phi.is_monic() || phi.degree() < 1) throw InputError("inv_transform: key must be monic of degree >= 1");
  if (phi == Poly::x()) return phi;
  const Rational a0 = phi.coeff(0);
  if (a0 == 0) throw InputError("inv_transform: " + phi.str() + " has zero constant term (reducible key)");
  std::vector<Rational> rev(phi.coeffs().rbegin(), phi.coeffs().rend());
  for (auto& q : rev) q /= a0;
  return Poly(std::move(rev));
}

Poly affine_transform(const Poly& phi, const Rational& a, const Rational& b) {
  if (a == 0) throw InputError("affine_transform: a = 0");
  if (!phi.is_monic() || phi.degree() < 1) throw InputError("affine_transform: key must be monic of degree >= 1");
  RatFn r = substitute(phi, Poly({-b, 1}), Poly::constant(a));
  // num / a^d with a^d * phi((y-b)/a) = num.
  return r.num;
}

Poly transform_key(const Poly& phi, const Atom& atom) {
  return atom.is_inv() ? inv_transform(phi) : affine_transform(phi, atom.a, atom.b);
}

}  // namespace augval

#pragma once

#include <string>
#include <vector>

#include "augval/poly.hpp"

namespace augval {

/// y = (a x + b) / (c x + d), ad - bc != 0. Equality is projective.
struct MobiusMap {
  Rational a = 1, b = 0, c = 0, d = 1;

  MobiusMap() = default;
  MobiusMap(Rational a_, Rational b_, Rational c_, Rational d_);  // throws InputError when singular

  static MobiusMap inv() { return {0, 1, 1, 0}; }
  static MobiusMap affine(const Rational& a, const Rational& b) { return {a, b, 0, 1}; }

  Rational det() const { return a * d - b * c; }
  bool is_affine() const { return c == 0; }
  MobiusMap inverse() const { return {d, -b, -c, a}; }
  std::string str() const;

  /// g(y) pulled back to K(x): g((ax+b)/(cx+d)).
  RatFn pullback(const Poly& g) const;
  RatFn pullback(const RatFn& g) const;
  /// fr(x) rewritten in y: fr(m^{-1}(y)).
  RatFn pushforward(const RatFn& fr) const { return inverse().pullback(fr); }

  friend bool operator==(const MobiusMap& l, const MobiusMap& r);
};

/// outer o inner (apply inner first).
MobiusMap compose(const MobiusMap& outer, const MobiusMap& inner);

struct Atom {
  enum class Kind { Inv, Affine } kind = Kind::Affine;
  Rational a = 1, b = 0;

  static Atom inv() { return {Kind::Inv, 0, 0}; }
  static Atom affine(const Rational& a, const Rational& b);
  bool is_inv() const { return kind == Kind::Inv; }
  MobiusMap as_map() const { return is_inv() ? MobiusMap::inv() : MobiusMap::affine(a, b); }
  std::string str() const;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// m = w[0] o w[1] o ... o w[n-1]; the last atom acts first on x.
using GeneratorWord = std::vector<Atom>;

GeneratorWord mobius_decompose(const MobiusMap& m);
MobiusMap recompose(const GeneratorWord& w);
std::string word_str(const GeneratorWord& w);

/// a0^{-1} y^d phi(1/y) for monic phi with a0 != 0; x maps to x.
/// The result is written in the same indeterminate (the caller renames).
Poly inv_transform(const Poly& phi);

/// a^d phi((y - b)/a).
Poly affine_transform(const Poly& phi, const Rational& a, const Rational& b);

Poly transform_key(const Poly& phi, const Atom& atom);

}  // namespace augval

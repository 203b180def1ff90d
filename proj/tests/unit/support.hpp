#pragma once

#include <string>

#include "augval/io.hpp"
#include "augval/sampling.hpp"

namespace support {

using namespace augval;

inline const std::string kCatalog = std::string(AUGVAL_DATA) + "/catalog.json";

inline BaseValuation nu2() { return BaseValuation::padic(2); }

inline Chain catalog_chain(const std::string& name) {
  auto r = io::resolve(kCatalog + "#" + name, "chains");
  return io::chain_from_json(r.node, r.where, r.default_field);
}

inline MobiusMap catalog_map(const std::string& name) {
  auto r = io::resolve(kCatalog + "#" + name, "maps");
  return io::map_from_json(r.node, r.where);
}

inline ContinuousFamily catalog_family(const std::string& name) {
  auto r = io::resolve(kCatalog + "#" + name, "families");
  return io::family_from_json(r.node, r.where, r.default_field);
}

inline LimitAugmentation catalog_limit(const std::string& name) {
  auto r = io::resolve(kCatalog + "#" + name, "limits");
  return io::limit_from_json(r.node, r.where, r.default_field);
}

inline AdmissibleFamily catalog_admissible(const std::string& name) {
  auto r = io::resolve(kCatalog + "#" + name, "admissible");
  return io::admissible_from_json(r.node, r.where, r.default_field);
}

inline Rational q(const char* s) { return parse_rational(s); }
inline Value v(const char* s) { return Value::parse(s); }

/// ord_p by repeated exact division on plain mpz integers.
inline long naive_ord(mpz_class n, long p) {
  if (n == 0) return 1L << 40;
  long k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

/// nu_p of a rational, infinity for zero.
inline Value oracle_nu(const Rational& a, long p) {
  if (a == 0) return Value::infinity();
  return Value(naive_ord(a.get_num(), p) - naive_ord(a.get_den(), p));
}

/// min_j (nu(a_j) + j*gamma), the monomial (Gauss when gamma = 0) closed form.
inline Value oracle_monomial(const Poly& f, const Rational& gamma, long p) {
  Value best = Value::infinity();
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
    const Rational& a = f.coeffs()[j];
    if (a == 0) continue;
    Value t = oracle_nu(a, p) + Value(Rational(gamma * static_cast<long>(j)));
    if (t < best) best = t;
  }
  return best;
}

/// Horner evaluation written independently of Poly::operator().
inline Rational oracle_eval(const Poly& f, const Rational& at) {
  Rational acc = 0;
  Rational pw = 1;
  for (const auto& c : f.coeffs()) {
    acc += c * pw;
    pw *= at;
  }
  return acc;
}

}  // namespace support

// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "augval/errors.hpp"
#include "../unit/support.hpp"

using namespace augval;
using support::catalog_chain;
using support::catalog_map;

namespace {

const char* kValuationChains[] = {"gauss", "e1", "e2", "x_plus_2", "cubic"};
const char* kAllChains[] = {"gauss", "e1", "e2", "x_plus_2", "socle", "cubic"};

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

MobiusMap seeded_mobius(std::uint64_t i) {
  for (std::uint64_t k = 0;; ++k) {
    auto rng = sample_rng(2024, i * 1000 + k);
    Rational a = random_rational(rng, 5), b = random_rational(rng, 5);
    Rational c = random_rational(rng, 5), d = random_rational(rng, 5);
    if (c != 0 && a * d - b * c != 0) return MobiusMap(a, b, c, d);
  }
}

std::vector<MobiusMap> criterion_maps() {
  std::vector<MobiusMap> maps{MobiusMap::inv(), catalog_map("scale2"), catalog_map("shift1"), catalog_map("affine23")};
  for (std::uint64_t i = 0; i < 5; ++i) maps.push_back(seeded_mobius(i));
  return maps;
}

Outcome c1() {
  Outcome o;
  std::size_t pairs = 0;
  for (const char* name : kAllChains) {
    ProbeReport r = multiplicativity_probe(catalog_chain(name), 1000, 1);
    pairs += r.pairs_checked;
    if (!r.ok()) o.fail(std::string(name) + ": " + r.violations[0].f.str() + " * " + r.violations[0].g.str());
  }
  o.detail = o.pass ? std::to_string(pairs) + " pairs, 0 violations" : o.detail;
  return o;
}

Outcome c2() {
  Outcome o;
  SamplingOptions opt;
  opt.max_degree = 8;
  std::size_t n = 0;
  for (const char* name : {"gauss", "e1"}) {
    Chain c = catalog_chain(name);
    const Rational gamma = c.steps()[0].gamma.rational();
    for (std::uint64_t i = 0; i < 5000; ++i, ++n) {
      auto rng = sample_rng(2, i);
      Poly f = random_poly(rng, c.base(), opt);
      if (chain_eval(c, f) != support::oracle_monomial(f, gamma, 2)) o.fail(std::string(name) + " on " + f.str());
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " polynomials match the closed forms";
  return o;
}

Outcome c3() {
  Outcome o;
  Chain s = catalog_chain("socle");
  const Poly key = s.steps().back().phi;
  SamplingOptions opt;
  opt.max_degree = 6;
  std::size_t multiples = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = sample_rng(3, i);
    Poly f = random_poly(rng, s.base(), opt);
    if (i < 200) {
      if (f.is_zero()) f = Poly({1});
      f = f * key;
      ++multiples;
    }
    const bool divides = poly_divmod(f, key).remainder.is_zero();
    if (chain_eval(s, f).is_infinite() != divides) o.fail("mismatch on " + f.str());
  }
  if (o.pass) o.detail = "1000 inputs, " + std::to_string(multiples) + " constructed multiples";
  return o;
}

Outcome c4() {
  Outcome o;
  auto nu = support::nu2();
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = sample_rng(4, i);
    Poly phi = random_monic(rng, nu, 1 + static_cast<int>(i % 6));
    if (phi.coeff(0) == 0) phi += Poly({1});
    Poly psi = inv_transform(phi);
    if (psi.degree() != phi.degree() || !psi.is_monic()) o.fail("degree or monicity lost on " + phi.str());
    if (inv_transform(psi) != phi) o.fail("Inv(Inv(f)) != f for " + phi.str());
  }
  if (o.pass) o.detail = "1000 monic polynomials";
  return o;
}

Outcome c5() {
  Outcome o;
  std::size_t cases = 0, runs = 0;
  for (const char* name : kValuationChains) {
    for (const MobiusMap& m : criterion_maps()) {
      try {
        TransportReport r = transport_chain(catalog_chain(name), m);
        Verdict v = transport_equal_check(r, 500, 5, true);
        cases += v.cases_checked;
        ++runs;
        if (!v.pass) o.fail(std::string(name) + " under " + m.str() + ": " + v.counterexample->fr.str());
      } catch (const Error& e) {
        o.fail(std::string(name) + " under " + m.str() + ": " + e.what());
      }
    }
  }
  if (o.pass) o.detail = std::to_string(runs) + " transports, " + std::to_string(cases) + " cases equal";
  return o;
}

Outcome c6() {
  Outcome o;
  std::size_t rows = 0;
  for (const char* name : kValuationChains) {
    Chain c = catalog_chain(name);
    TransportReport r = transport_chain(c, MobiusMap::inv());
    const Value mux = chain_eval(c, Poly::x());
    for (const auto& row : r.rows) {
      ++rows;
      Value expect;
      if (row.origin == 0) {
        expect = Value(0) - mux;
      } else if (row.from_phi == Poly::x()) {
        expect = Value(0) - row.from_gamma;
      } else {
        expect = row.from_gamma - value_scale(row.from_phi.degree(), mux) - c.base()(row.from_phi.coeff(0));
      }
      if (row.delta != expect) o.fail(std::string(name) + ": delta " + row.delta.str() + " != " + expect.str());
    }
  }
  if (o.pass) o.detail = std::to_string(rows) + " inversion steps satisfy the closed form";
  return o;
}

Outcome c7() {
  Outcome o;
  LimitAugmentation a = support::catalog_limit("f_minus2_pseudo");
  const auto& nu = a.family().base();
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = sample_rng(7, i);
    Poly f = random_poly(rng, nu);
    if (limit_eval(a, f) != support::oracle_nu(support::oracle_eval(f, -2), 2)) o.fail("oracle mismatch on " + f.str());
  }
  LimitAugmentation fin = support::catalog_limit("f_minus2_finite");
  const Poly phi({2, 1});
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = sample_rng(71, i);
    std::vector<std::pair<Poly, long>> rep;
    Poly assembled;
    for (long j = 0; j < 3; ++j) {
      Poly fj = random_poly(rng, nu) * phi + Poly({random_coefficient(rng, nu, {})});
      rep.emplace_back(fj, j);
      assembled += fj * phi.pow(static_cast<unsigned>(j));
    }
    if (limit_eval_general(fin, rep) != limit_eval(fin, assembled)) o.fail("general representation mismatch");
  }
  const ContinuousFamily& fam = a.family();
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = sample_rng(72, i);
    Poly qq = random_poly(rng, nu);
    if (qq.is_zero()) qq = Poly({1});
    Rational r = random_coefficient(rng, nu, {});
    WitnessReport w = a_divisibility_witness(fam, phi, qq * phi + Poly({r}));
    if (w.status != WitnessStatus::NotDivisible || !w.mu_f || !w.mu_r || *w.mu_f != *w.mu_r ||
        !(fam.member_value(*w.witness_t, qq * phi) > *w.mu_f)) {
      o.fail("witness pattern broken at case " + std::to_string(i));
    }
  }
  if (o.pass) o.detail = "1000 oracle, 100 representation, 100 witness cases";
  return o;
}

Outcome c8() {
  Outcome o;
  const char* families[] = {"e2_finite", "approx_minus2", "approx_minus2_limit", "approx_minus1", "sqrt_m7"};
  std::size_t n = 0, low = 0;
  for (std::uint64_t i = 0; i < 1000; ++i, ++n) {
    const char* name = families[i % 5];
    AdmissibleFamily fam = support::catalog_admissible(name);
    auto rng = sample_rng(8, i);
    Poly g = random_poly(rng, fam.base());
    try {
      family_sup(fam, g, 64, 4);
    } catch (const FamilyInvalidError&) {
      o.fail(std::string(name) + " decreased on " + g.str());
    }
  }
  for (const char* name : {"f_minus2", "f_minus1", "f_3adic", "f_sqrt_m7"}) {
    ContinuousFamily f = support::catalog_family(name);
    for (std::uint64_t i = 0; i < 100; ++i) {
      auto rng = sample_rng(81, i);
      SamplingOptions opt;
      opt.max_degree = f.degree() - 1;
      Poly g = random_poly(rng, f.base(), opt);
      ++low;
      if (!stabilized_value(f, g, 4).stabilized) o.fail(std::string(name) + " did not stabilize on " + g.str());
    }
  }
  for (const char* name : families) {
    AdmissibleFamily fam = support::catalog_admissible(name);
    for (std::uint64_t i = 0; i < 50; ++i) {
      auto rng = sample_rng(82, i);
      Poly g({random_coefficient(rng, fam.base(), {})});
      ++low;
      if (!family_sup(fam, g, 64, 4).stabilized) o.fail(std::string(name) + " did not stabilize on " + g.str());
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " monotone sups, " + std::to_string(low) + " below-degree inputs stabilized";
  return o;
}

Outcome c9() {
  Outcome o;
  const auto maps = criterion_maps();
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto rng = sample_rng(9, s);
    const char* name = kValuationChains[rng() % 5];
    const MobiusMap& m = maps[rng() % maps.size()];
    TransportReport r = transport_chain(catalog_chain(name), m);
    auto steps = r.transported.steps();
    const std::size_t j = rng() % steps.size();
    Rational eps = random_rational(rng, 7);
    if (eps == 0) eps = 1;
    steps[j].gamma = steps[j].gamma + Value(eps);
    TransportReport bad = external_report(r.source, m, Chain(r.transported.base(), steps, r.transported.variable()));
    Verdict v = transport_equal_check(bad, 200, s);
    if (v.pass || !v.counterexample || v.counterexample->source_value == v.counterexample->transported_value) {
      o.fail(std::string("perturbation ") + std::to_string(s) + " of " + name + " went undetected");
    }
  }
  if (o.pass) o.detail = "20 perturbations each produced a counterexample";
  return o;
}

}  // namespace

int main() {
  const std::function<Outcome()> criteria[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9};
  bool all = true;
  for (int i = 0; i < 9; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s  %s (%.2fs)\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}

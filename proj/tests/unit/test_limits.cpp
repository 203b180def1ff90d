#include <doctest.h>

#include "augval/errors.hpp"
#include "support.hpp"

using namespace augval;
using support::catalog_family;
using support::catalog_limit;
using support::v;

TEST_CASE("F-2 presentation") {
  ContinuousFamily f = catalog_family("f_minus2");
  CHECK(f.horizon() == 64);
  CHECK(f.degree() == 1);
  for (int t = 0; t < 5; ++t) {
    mpz_class c = (mpz_class(1) << (t + 1)) - 2;
    CHECK(f.member(t).phi == Poly({Rational(-c), 1}));
    CHECK(f.member(t).gamma == Value(t + 1));
  }
}

TEST_CASE("stabilized_value examples") {
  ContinuousFamily f = catalog_family("f_minus2");
  auto sx = stabilized_value(f, Poly::x(), 3);
  CHECK(sx.value == v("1"));
  CHECK(sx.stabilized);
  CHECK(*sx.first_stable_t == 0);  // mu_0(x) = min(1, nu(0)) = 1 already
  auto s2 = stabilized_value(f, Poly({2, 1}), 3);
  CHECK_FALSE(s2.stabilized);
  CHECK(s2.value == Value(f.horizon() + 1));
  CHECK_FALSE(s2.first_stable_t.has_value());
  auto s5 = stabilized_value(f, Poly({5}), 3);
  CHECK(s5.value == v("0"));
  CHECK(*s5.first_stable_t == 0);
  auto s0 = stabilized_value(f, Poly(), 3);
  CHECK(s0.value.is_infinite());
  CHECK(s0.stabilized);
  CHECK_THROWS_AS(stabilized_value(f, Poly::x(), 0), InputError);
}

TEST_CASE("family invariants are enforced") {
  auto nu = support::nu2();
  Chain empty(nu, {});
  // gammas not increasing
  CHECK_THROWS_AS(ContinuousFamily(empty, 1, {{Poly::x(), v("2")}, {Poly({-4, 1}), v("2")}}), FamilyInvalidError);
  // compatibility: mu_0(x - 1) = 0, not 2
  CHECK_THROWS_AS(ContinuousFamily(empty, 1, {{Poly::x(), v("2")}, {Poly({-1, 1}), v("3")}}), FamilyInvalidError);
  // degree mismatch
  CHECK_THROWS_AS(ContinuousFamily(empty, 1, {{Poly::x(), v("2")}, {Poly({4, 0, 1}), v("3")}}), FamilyInvalidError);
  CHECK_NOTHROW(ContinuousFamily(empty, 1, {{Poly::x(), v("2")}, {Poly({-4, 1}), v("3")}}));
}

TEST_CASE("below-degree stabilization and member monotonicity") {
  for (const char* name : {"f_minus2", "f_minus1", "f_3adic", "f_sqrt_m7"}) {
    ContinuousFamily f = catalog_family(name);
    for (std::uint64_t i = 0; i < 200; ++i) {
      auto rng = sample_rng(71, i);
      Rational c = random_coefficient(rng, f.base(), {});
      auto s = stabilized_value(f, Poly({c}), 4);
      CHECK(s.stabilized);
      CHECK(s.last_t < std::max(2, 4));
      Poly g = random_poly(rng, f.base());
      Value prev = f.member_value(0, g);
      for (int t = 1; t <= f.horizon(); t += 7) {
        Value cur = f.member_value(t, g);
        CHECK(prev <= cur);
        prev = cur;
      }
    }
  }
}

TEST_CASE("phi_tilde_probe examples") {
  ContinuousFamily f = catalog_family("f_minus2");
  std::vector<Poly> pool{Poly::x(), Poly({2, 1}), Poly({4, 0, 1})};
  auto r = phi_tilde_probe(f, pool);
  REQUIRE(r.non_stabilized.size() == 1);
  CHECK(r.non_stabilized[0] == Poly({2, 1}));
  CHECK(r.minimal_degree == 1);
  CHECK(r.entries[2].value.value == v("3"));
  std::vector<Poly> constants{Poly({1}), Poly({6})};
  CHECK(phi_tilde_probe(f, constants).non_stabilized.empty());
  std::vector<Poly> both{Poly({2, 1}), Poly({2, 1}) * Poly::x()};
  auto rb = phi_tilde_probe(f, both);
  CHECK(rb.non_stabilized.size() == 2);
  CHECK(rb.minimal_degree == 1);
  CHECK(rb.minimal_monic == std::vector<Poly>{Poly({2, 1})});
}

TEST_CASE("a_divisibility_witness examples") {
  ContinuousFamily f = catalog_family("f_minus2");
  auto w = a_divisibility_witness(f, Poly({2, 1}), Poly({4, 0, 1}));
  CHECK(w.status == WitnessStatus::NotDivisible);
  CHECK(w.remainder == Poly({8}));
  CHECK(w.quotient == Poly({-2, 1}));
  CHECK(*w.mu_f == v("3"));
  CHECK(*w.mu_r == v("3"));
  CHECK(*w.witness_t == 1);
  auto inc = a_divisibility_witness(f, Poly({2, 1}), Poly({2, 1}) * Poly::x());
  CHECK(inc.status == WitnessStatus::Inconclusive);
  auto triv = a_divisibility_witness(f, Poly({2, 1}), Poly({12}));
  CHECK(triv.status == WitnessStatus::NotDivisible);
  CHECK(triv.quotient.is_zero());
}

TEST_CASE("witness pattern on constructed non-divisible inputs") {
  ContinuousFamily f = catalog_family("f_minus2");
  const Poly phi({2, 1});
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = sample_rng(81, i);
    Poly qq = random_poly(rng, f.base());
    Rational r = random_coefficient(rng, f.base(), {});
    Poly g = qq * phi + Poly({r});
    auto w = a_divisibility_witness(f, phi, g);
    REQUIRE(w.status == WitnessStatus::NotDivisible);
    CHECK(*w.mu_r == *w.mu_f);
    CHECK(*w.mu_f == f.base()(r));
    CHECK(f.member_value(f.horizon(), qq * phi) > *w.mu_f);
    CHECK(f.member_value(*w.witness_t, qq * phi) > *w.mu_f);
  }
}

TEST_CASE("limit_eval examples and the substitution oracle") {
  LimitAugmentation a = catalog_limit("f_minus2_pseudo");
  CHECK(limit_eval(a, Poly({4, 0, 1})) == v("3"));
  CHECK(limit_eval(a, Poly({-4, 0, 1})).is_infinite());
  CHECK(limit_eval(a, Poly({1})) == v("0"));
  SamplingOptions opt;
  opt.max_degree = 5;
  for (std::uint64_t i = 0; i < 500; ++i) {
    auto rng = sample_rng(91, i);
    Poly g = random_poly(rng, a.family().base(), opt);
    CHECK(limit_eval(a, g) == support::oracle_nu(support::oracle_eval(g, -2), 2));
  }
}

TEST_CASE("finite limit gamma and horizon errors") {
  LimitAugmentation a = catalog_limit("f_minus2_finite");
  CHECK(limit_eval(a, Poly({2, 1})) == v("100"));
  CHECK(limit_eval(a, Poly({4, 4, 1})) == v("200"));
  CHECK_THROWS_AS(LimitAugmentation(a.family(), Poly({2, 1}), v("10")), InputError);
  ContinuousFamily fam = a.family();
  LimitAugmentation wrong(fam, Poly({0, 0, 1}), Value::infinity());
  // x + 2 is a digit of the expansion in x^2 and never stabilizes.
  CHECK_THROWS_AS(limit_eval(wrong, Poly({2, 1})), HorizonError);
}

TEST_CASE("sqrt(-7) limit against a truncated 2-adic root") {
  LimitAugmentation a = catalog_limit("sqrt_m7_pseudo");
  const ContinuousFamily& f = a.family();
  // c_T agrees with a root r of x^2 + 7 to 2-adic precision gamma_T.
  const Rational root = -f.member(f.horizon()).phi.coeff(0);
  const Rational prec = f.member(f.horizon()).gamma.rational();
  CHECK(support::oracle_nu(root * root + 7, 2) >= Value(prec));
  SamplingOptions opt;
  opt.max_degree = 4;
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = sample_rng(101, i);
    Poly g = random_poly(rng, f.base(), opt);
    if (g.is_zero()) continue;
    Value got = limit_eval(a, g);
    Value oracle = support::oracle_nu(support::oracle_eval(g, root), 2);
    if (poly_divmod(g, a.limit_key()).remainder.is_zero()) {
      CHECK(got.is_infinite());
    } else if (oracle < Value(prec - 10)) {
      CHECK(got == oracle);
    }
  }
}

TEST_CASE("limit_eval_general examples and agreement") {
  LimitAugmentation a = catalog_limit("f_minus2_pseudo");
  std::vector<std::pair<Poly, long>> rep1{{Poly({8}), 0}, {Poly({-4}), 1}, {Poly({1}), 2}};
  CHECK(limit_eval_general(a, rep1) == v("3"));
  std::vector<std::pair<Poly, long>> rep2{{Poly({4, 0, 1}), 0}};
  CHECK(limit_eval_general(a, rep2) == v("3"));
  std::vector<std::pair<Poly, long>> rep3{{Poly({1}), 0}};
  CHECK(limit_eval_general(a, rep3) == v("0"));
  std::vector<std::pair<Poly, long>> bad{{Poly({2, 1}), 0}};
  CHECK_THROWS_AS(limit_eval_general(a, bad), InputError);

  LimitAugmentation fin = catalog_limit("f_minus2_finite");
  const Poly phi({2, 1});
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = sample_rng(111, i);
    std::vector<std::pair<Poly, long>> rep;
    Poly assembled;
    for (long j = 0; j < 3; ++j) {
      Poly qq = random_poly(rng, fin.family().base());
      Rational r = random_coefficient(rng, fin.family().base(), {});
      Poly fj = qq * phi + Poly({r});  // arbitrary degree, not A-divisible
      rep.emplace_back(fj, j);
      assembled += fj * phi.pow(static_cast<unsigned>(j));
    }
    CHECK(limit_eval_general(fin, rep) == limit_eval(fin, assembled));
  }
}

#include <doctest.h>

#include "augval/errors.hpp"
#include "support.hpp"

using namespace augval;
using support::q;

TEST_CASE("nu examples") {
  auto n = support::nu2();
  CHECK(n(12) == Value(2));
  CHECK(n(0).is_infinite());
  CHECK(n(q("3/4")) == Value(-2));
  CHECK(BaseValuation::trivial()(q("3/4")) == Value(0));
  CHECK(BaseValuation::trivial()(0).is_infinite());
  CHECK_THROWS_AS(BaseValuation::padic(12), InputError);
  CHECK_THROWS_AS(BaseValuation::padic(1), InputError);
  CHECK(BaseValuation::padic(101).prime() == 101);
}

TEST_CASE("nu matches the repeated-division oracle and its axioms") {
  SamplingOptions opt;
  for (long p : {2L, 3L, 5L}) {
    auto n = BaseValuation::padic(p);
    for (std::uint64_t i = 0; i < 4000; ++i) {
      auto rng = sample_rng(static_cast<std::uint64_t>(p), i);
      Rational a = random_coefficient(rng, n, opt);
      Rational b = random_coefficient(rng, n, opt);
      REQUIRE(n(a) == support::oracle_nu(a, p));
      CHECK(n(a * b) == n(a) + n(b));
      CHECK(n(a + b) >= std::min(n(a), n(b)));
      if (n(a) != n(b)) CHECK(n(a + b) == std::min(n(a), n(b)));
    }
  }
}

TEST_CASE("poly_divmod examples") {
  Poly x3({0, 0, 0, 1}), key({2, 0, 1});
  auto [q1, r1] = poly_divmod(x3, key);
  CHECK(q1 == Poly::x());
  CHECK(r1 == Poly({0, -2}));
  auto [q2, r2] = poly_divmod(Poly({1, 1}), key);
  CHECK(q2.is_zero());
  CHECK(r2 == Poly({1, 1}));
  auto [q3, r3] = poly_divmod(Poly({4, 0, 4, 0, 1}), key);
  CHECK(q3 == key);
  CHECK(r3.is_zero());
  CHECK_THROWS_AS(poly_divmod(x3, Poly()), InputError);
}

TEST_CASE("phi_expand examples") {
  Poly key({2, 0, 1});
  auto e1 = phi_expand(Poly({4, 0, 4, 0, 1}), key);
  REQUIRE(e1.digits.size() == 3);
  CHECK(e1.digits[0].is_zero());
  CHECK(e1.digits[1].is_zero());
  CHECK(e1.digits[2] == Poly({1}));
  auto e2 = phi_expand(Poly({0, 0, 0, 1}), key);
  REQUIRE(e2.digits.size() == 2);
  CHECK(e2.digits[0] == Poly({0, -2}));
  CHECK(e2.digits[1] == Poly::x());
  auto e3 = phi_expand(Poly({7}), key);
  REQUIRE(e3.digits.size() == 1);
  CHECK(e3.digits[0] == Poly({7}));
  CHECK(phi_expand(Poly(), key).digits.empty());
  CHECK_THROWS_AS(phi_expand(key, Poly({1, 2})), InputError);
  CHECK_THROWS_AS(phi_expand(key, Poly({3})), InputError);
}

TEST_CASE("divmod and expansion against multiply-back oracles") {
  auto n = support::nu2();
  SamplingOptions opt;
  opt.max_degree = 7;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = sample_rng(5, i);
    Poly f = random_poly(rng, n, opt);
    Poly phi = random_monic(rng, n, 1 + static_cast<int>(i % 3));
    auto [qq, rr] = poly_divmod(f, phi);
    CHECK(qq * phi + rr == f);
    CHECK(rr.degree() < phi.degree());
    Expansion e = phi_expand(f, phi);
    Poly back;
    Poly pw({1});
    for (const auto& d : e.digits) {
      CHECK(d.degree() < phi.degree());
      back += d * pw;
      pw *= phi;
    }
    CHECK(back == f);
    CHECK(e.reconstruct() == f);
    if (!f.is_zero()) CHECK(static_cast<long>(e.digits.size()) <= f.degree() / phi.degree() + 1);
  }
}

TEST_CASE("homogenized substitution agrees with pointwise evaluation") {
  auto n = support::nu2();
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = sample_rng(6, i);
    Poly p = random_poly(rng, n);
    Poly num = random_poly(rng, n);
    Poly den = random_poly(rng, n);
    RatFn s = substitute(p, num, den);
    for (int t = -3; t <= 3; ++t) {
      Rational at(t * 3 + 1, 7);
      at.canonicalize();
      Rational d = support::oracle_eval(den, at);
      if (d == 0) continue;
      Rational expect = support::oracle_eval(p, support::oracle_eval(num, at) / d);
      CHECK(support::oracle_eval(s.num, at) == expect * support::oracle_eval(s.den, at));
    }
  }
}

TEST_CASE("poly printing") {
  CHECK(Poly({2, 0, 1}).str() == "x^2 + 2");
  CHECK(Poly({q("1/2"), 0, 1}).str("y") == "y^2 + 1/2");
  CHECK(Poly().str() == "0");
  CHECK_THROWS_AS(RatFn(Poly({1}), Poly()), InputError);
}

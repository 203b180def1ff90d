#include "augval/sampling.hpp"

namespace augval {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

mpz_class scale_prime(const BaseValuation& nu) { return nu.is_padic() ? nu.prime() : mpz_class(2); }

mpz_class random_unit_part(std::mt19937_64& rng, const mpz_class& p, int height) {
  for (;;) {
    mpz_class a = uniform_int(rng, 1, height);
    if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()) == 0) return a;
  }
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(derive_seed(seed, index));
}

Rational random_coefficient(std::mt19937_64& rng, const BaseValuation& nu, const SamplingOptions& opt) {
  const mpz_class p = scale_prime(nu);
  mpz_class num = random_unit_part(rng, p, opt.unit_height);
  mpz_class den = random_unit_part(rng, p, opt.unit_height);
  if (uniform_int(rng, 0, 1) == 1) num = -num;
  int e = uniform_int(rng, opt.min_exponent, opt.max_exponent);
  mpz_class pe;
  mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) {
    num *= pe;
  } else {
    den *= pe;
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational random_rational(std::mt19937_64& rng, int height) {
  mpz_class num = uniform_int(rng, 1, height);
  mpz_class den = uniform_int(rng, 1, height);
  if (uniform_int(rng, 0, 1) == 1) num = -num;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Poly random_poly(std::mt19937_64& rng, const BaseValuation& nu, const SamplingOptions& opt) {
  const int deg = uniform_int(rng, 0, opt.max_degree);
  std::bernoulli_distribution zero(opt.zero_probability);
  std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
  for (int j = 0; j < deg; ++j) {
    c[static_cast<std::size_t>(j)] = zero(rng) ? Rational(0) : random_coefficient(rng, nu, opt);
  }
  c[static_cast<std::size_t>(deg)] = random_coefficient(rng, nu, opt);
  return Poly(std::move(c));
}

Poly random_monic(std::mt19937_64& rng, const BaseValuation& nu, int degree, const SamplingOptions& opt) {
  std::bernoulli_distribution zero(opt.zero_probability);
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (int j = 0; j < degree; ++j) {
    c[static_cast<std::size_t>(j)] = zero(rng) ? Rational(0) : random_coefficient(rng, nu, opt);
  }
  c[static_cast<std::size_t>(degree)] = 1;
  return Poly(std::move(c));
}

RatFn random_ratfn(std::mt19937_64& rng, const BaseValuation& nu, const SamplingOptions& opt) {
  Poly num = random_poly(rng, nu, opt);
  Poly den = random_poly(rng, nu, opt);
  return RatFn(std::move(num), std::move(den));
}

}  // namespace augval

#pragma once

#include <cstdint>
#include <random>

#include "augval/field.hpp"
#include "augval/poly.hpp"

namespace augval {

/// Every random draw in the library comes from a generator derived from a
/// user seed and a sample index, so results do not depend on the order in
/// which samples are processed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

struct SamplingOptions {
  int max_degree = 4;
  int min_exponent = -3;  // coefficient p^e * u with e in [min, max]
  int max_exponent = 3;
  int unit_height = 9;    // u = +-a/b with 1 <= a, b <= unit_height, p-units
  double zero_probability = 0.3;
};

/// p^e * u with e uniform in the configured range and u a p-unit of small
/// height. Under the trivial valuation p = 2 is used for the scale.
Rational random_coefficient(std::mt19937_64& rng, const BaseValuation& nu,
                            const SamplingOptions& opt = {});
/// Nonzero rational of small height, any valuation.
Rational random_rational(std::mt19937_64& rng, int height = 9);
/// Degree uniform in [0, max_degree], leading coefficient nonzero, lower
/// coefficients zero with the configured probability.
Poly random_poly(std::mt19937_64& rng, const BaseValuation& nu, const SamplingOptions& opt = {});
Poly random_monic(std::mt19937_64& rng, const BaseValuation& nu, int degree,
                  const SamplingOptions& opt = {});
RatFn random_ratfn(std::mt19937_64& rng, const BaseValuation& nu, const SamplingOptions& opt = {});

}  // namespace augval

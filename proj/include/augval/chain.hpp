#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "augval/field.hpp"
#include "augval/poly.hpp"
#include "augval/value.hpp"

namespace augval {

/// One augmentation [mu; mu'(phi) = gamma].
struct AugStep {
  Poly phi;
  Value gamma;

  friend bool operator==(const AugStep&, const AugStep&) = default;
};

enum class ChainRule {
  NoSteps,
  KeyNotMonic,
  FirstKeyDegree,
  DegreeDecrease,
  InfiniteGammaNotLast,
  GammaNotAbovePrevious,
  EquivalentConsecutiveKeys,
  KeyValueChanged,
};

struct Violation {
  std::size_t step;  // 1-based
  ChainRule rule;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ChainRule rule) const;
  std::string str() const;
};

/// A base valuation nu followed by augmentation steps mu_1, ..., mu_n.
/// Immutable; the structural report is computed once at construction so
/// evaluation can refuse invalid chains cheaply. A final gamma of +inf makes
/// the chain a pseudo-valuation whose socle is generated by the last key.
class Chain {
 public:
  Chain(BaseValuation base, std::vector<AugStep> steps, std::string variable = "x");

  const BaseValuation& base() const { return base_; }
  const std::vector<AugStep>& steps() const { return steps_; }
  const std::string& variable() const { return variable_; }
  std::size_t size() const { return steps_.size(); }
  bool is_pseudo() const { return !steps_.empty() && steps_.back().gamma.is_infinite(); }

  const ValidationReport& report() const { return report_; }
  bool valid() const { return report_.ok(); }

  /// The chain of the first k steps (mu_k).
  Chain truncated(std::size_t k) const;

 private:
  BaseValuation base_;
  std::vector<AugStep> steps_;
  std::string variable_;
  ValidationReport report_;
};

/// Evaluates inf_j (inner(g_j) + j*gamma) over the phi-adic digits of f,
/// skipping zero digits and the gamma summand at j = 0.
template <class Inner>
Value augmented_eval(const Poly& phi, const Value& gamma, const Poly& f, Inner&& inner) {
  if (f.is_zero()) return Value::infinity();
  if (f.degree() < phi.degree()) return inner(f);
  Expansion e = phi_expand(f, phi);
  Value best = Value::infinity();
  for (std::size_t j = 0; j < e.digits.size(); ++j) {
    const Poly& g = e.digits[j];
    if (g.is_zero()) continue;
    Value term = inner(g);
    if (j > 0) term += value_scale(static_cast<long>(j), gamma);
    if (term < best) best = term;
  }
  return best;
}

/// Evaluation through the first steps.size() augmentations without any
/// validity check. Constants fall through to nu; a non-constant input with
/// no steps left is a DomainError.
Value eval_steps(const BaseValuation& base, std::span<const AugStep> steps, const Poly& f);
Value eval_steps_L(const BaseValuation& base, std::span<const AugStep> steps, const RatFn& fr);

/// mu_n(f). Throws ValidationError for an invalid chain.
Value chain_eval(const Chain& c, const Poly& f);

/// mu_n(num) - mu_n(den). Throws InputError for a zero denominator and
/// DomainError when the denominator lies in the socle.
Value chain_eval_L(const Chain& c, const RatFn& fr);

ValidationReport chain_validate(const Chain& c);

/// mu(f - g) > mu(f) = mu(g). Throws InputError for a zero argument.
bool mu_equivalent(const Chain& c, const Poly& f, const Poly& g);

struct ProbeViolation {
  enum class Kind { Product, Sum } kind;
  Poly f;
  Poly g;
  Value lhs;  // mu(fg) or mu(f+g)
  Value rhs;  // mu(f)+mu(g) or min(mu(f), mu(g))
};

struct ProbeReport {
  std::size_t pairs_checked = 0;
  std::vector<ProbeViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks mu(fg) = mu(f)+mu(g) and mu(f+g) >= min on random pairs of degree
/// at most degree_bound, plus the zero pair and pairs built from the keys.
/// Deterministic in seed.
ProbeReport multiplicativity_probe(const Chain& c, std::size_t samples, std::uint64_t seed,
                                   int degree_bound = 4);

struct RefineEntry {
  Poly candidate;
  Value current_value;
  Value target_value;
  bool member;  // current(phi) < target(phi)
};

struct RefineReport {
  std::vector<RefineEntry> entries;
  long minimal_degree = -1;  // -1 when no candidate is a member
  std::vector<Poly> minimal_members;
};

/// Pool restriction of the refinement set {phi monic : current(phi) < target(phi)}
/// and its minimal degree.
RefineReport refine_probe(const Chain& target, const Chain& current, std::span<const Poly> candidates);

}  // namespace augval

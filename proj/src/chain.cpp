#include "augval/chain.hpp"

#include <algorithm>
#include <sstream>

#include "augval/errors.hpp"
#include "augval/sampling.hpp"

namespace augval {

bool ValidationReport::has(ChainRule rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [rule](const Violation& v) { return v.rule == rule; });
}

std::string ValidationReport::str() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i != 0) os << "; ";
    os << "step " << violations[i].step << ": " << violations[i].message;
  }
  return os.str();
}

Chain::Chain(BaseValuation base, std::vector<AugStep> steps, std::string variable)
    : base_(std::move(base)), steps_(std::move(steps)), variable_(std::move(variable)) {
  report_ = chain_validate(*this);
}

Chain Chain::truncated(std::size_t k) const {
  k = std::min(k, steps_.size());
  return Chain(base_, std::vector<AugStep>(steps_.begin(), steps_.begin() + static_cast<long>(k)), variable_);
}

Value eval_steps(const BaseValuation& base, std::span<const AugStep> steps, const Poly& f) {
  if (f.is_zero()) return Value::infinity();
  if (steps.empty()) {
    if (!f.is_constant()) {
      throw DomainError("no augmentation step left to expand " + f.str());
    }
    return base(f.coeff(0));
  }
  const AugStep& last = steps.back();
  auto inner = steps.first(steps.size() - 1);
  return augmented_eval(last.phi, last.gamma, f,
                        [&](const Poly& g) { return eval_steps(base, inner, g); });
}

Value eval_steps_L(const BaseValuation& base, std::span<const AugStep> steps, const RatFn& fr) {
  Value den = eval_steps(base, steps, fr.den);
  if (den.is_infinite()) {
    throw DomainError("denominator " + fr.den.str() + " lies in the socle");
  }
  return eval_steps(base, steps, fr.num) - den;
}

namespace {

void require_valid(const Chain& c) {
  if (!c.valid()) throw ValidationError("invalid chain: " + c.report().str());
}

}  // namespace

Value chain_eval(const Chain& c, const Poly& f) {
  require_valid(c);
  return eval_steps(c.base(), c.steps(), f);
}

Value chain_eval_L(const Chain& c, const RatFn& fr) {
  require_valid(c);
  if (fr.den.is_zero()) throw InputError("zero denominator");
  return eval_steps_L(c.base(), c.steps(), fr);
}

ValidationReport chain_validate(const Chain& c) {
  ValidationReport rep;
  const auto& steps = c.steps();
  auto add = [&](std::size_t step, ChainRule rule, std::string msg) {
    rep.violations.push_back({step, rule, std::move(msg)});
  };
  if (steps.empty()) {
    add(0, ChainRule::NoSteps, "chain has no steps");
    return rep;
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const AugStep& s = steps[i];
    if (s.phi.degree() < 1 || !s.phi.is_monic()) {
      add(i + 1, ChainRule::KeyNotMonic, "key must be monic of degree >= 1");
    }
    if (i == 0 && s.phi.degree() != 1) add(1, ChainRule::FirstKeyDegree, "first key must have degree 1");
    if (i > 0 && s.phi.degree() < steps[i - 1].phi.degree()) {
      add(i + 1, ChainRule::DegreeDecrease, "key degrees must be non-decreasing");
    }
    if (s.gamma.is_infinite() && i + 1 != steps.size()) {
      add(i + 1, ChainRule::InfiniteGammaNotLast, "infinite gamma only allowed in the last step");
    }
  }
  if (!rep.ok()) return rep;

  std::span<const AugStep> all(steps);
  for (std::size_t i = 1; i < steps.size(); ++i) {
    auto prev = all.first(i);
    const AugStep& s = steps[i];
    Value before = eval_steps(c.base(), prev, s.phi);
    if (!(s.gamma > before)) {
      add(i + 1, ChainRule::GammaNotAbovePrevious,
          "gamma not strictly above previous value (" + s.gamma.str() + " <= " + before.str() + ")");
    }
    const AugStep& p = steps[i - 1];
    if (s.phi.degree() == p.phi.degree()) {
      // mu_{i-1}(phi_{i-1}) = gamma_{i-1} by construction of the truncation.
      Value gap = eval_steps(c.base(), prev, s.phi - p.phi);
      if (gap > eval_steps(c.base(), prev, p.phi)) {
        add(i + 1, ChainRule::EquivalentConsecutiveKeys, "consecutive keys of equal degree are mu-equivalent");
      }
    }
  }
  if (!rep.ok()) return rep;

  // In a chain built from key polynomials every key keeps its value under
  // the full chain; a change means the sequence of valuations is not
  // increasing.
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    Value full = eval_steps(c.base(), all, steps[i].phi);
    if (full != steps[i].gamma) {
      add(i + 1, ChainRule::KeyValueChanged,
          "key value under the full chain differs from its gamma (" + full.str() + " != " +
              steps[i].gamma.str() + ")");
    }
  }
  return rep;
}

bool mu_equivalent(const Chain& c, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) throw InputError("mu_equivalent requires nonzero polynomials");
  Value vf = chain_eval(c, f);
  Value vg = chain_eval(c, g);
  return vf == vg && chain_eval(c, f - g) > vf;
}

ProbeReport multiplicativity_probe(const Chain& c, std::size_t samples, std::uint64_t seed, int degree_bound) {
  require_valid(c);
  std::vector<std::pair<Poly, Poly>> pairs;
  pairs.emplace_back(Poly(), Poly());
  for (const auto& s : c.steps()) {
    pairs.emplace_back(Poly(), s.phi);
    for (const auto& t : c.steps()) pairs.emplace_back(s.phi, t.phi);
    pairs.emplace_back(s.phi, Poly::x());
  }
  SamplingOptions opt;
  opt.max_degree = degree_bound;
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = sample_rng(seed, i);
    Poly f = random_poly(rng, c.base(), opt);
    Poly g = random_poly(rng, c.base(), opt);
    pairs.emplace_back(std::move(f), std::move(g));
  }
  ProbeReport rep;
  for (const auto& [f, g] : pairs) {
    Value vf = chain_eval(c, f);
    Value vg = chain_eval(c, g);
    Value prod = chain_eval(c, f * g);
    if (prod != vf + vg) rep.violations.push_back({ProbeViolation::Kind::Product, f, g, prod, vf + vg});
    Value sum = chain_eval(c, f + g);
    Value lower = std::min(vf, vg);
    if (sum < lower) rep.violations.push_back({ProbeViolation::Kind::Sum, f, g, sum, lower});
    ++rep.pairs_checked;
  }
  return rep;
}

RefineReport refine_probe(const Chain& target, const Chain& current, std::span<const Poly> candidates) {
  if (!(target.base() == current.base())) throw InputError("refine_probe: chains use different base valuations");
  RefineReport rep;
  for (const Poly& phi : candidates) {
    if (!phi.is_monic()) throw InputError("refine_probe: candidate " + phi.str() + " is not monic");
    Value cur = chain_eval(current, phi);
    Value tgt = chain_eval(target, phi);
    rep.entries.push_back({phi, cur, tgt, cur < tgt});
  }
  for (const auto& e : rep.entries) {
    if (!e.member) continue;
    if (rep.minimal_degree < 0 || e.candidate.degree() < rep.minimal_degree) {
      rep.minimal_degree = e.candidate.degree();
    }
  }
  for (const auto& e : rep.entries) {
    if (e.member && e.candidate.degree() == rep.minimal_degree) rep.minimal_members.push_back(e.candidate);
  }
  return rep;
}

}  // namespace augval

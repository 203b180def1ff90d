#include "augval/limits.hpp"

#include <sstream>

#include "augval/errors.hpp"

namespace augval {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

std::vector<AugStep> with_step(const std::vector<AugStep>& prefix, const AugStep& step) {
  std::vector<AugStep> v(prefix);
  v.push_back(step);
  return v;
}

}  // namespace

std::vector<std::string> ContinuousFamily::check(const Chain& prefix, int degree,
                                                 const std::vector<AugStep>& members) {
  std::vector<std::string> problems;
  if (degree < 1) problems.push_back("family degree must be >= 1");
  if (members.size() < 2) problems.push_back("a continuous family needs at least two presented members");
  if (prefix.size() == 0 && degree != 1) problems.push_back("a family without prefix steps must have degree 1");
  if (prefix.size() != 0 && !prefix.valid()) problems.push_back("prefix chain invalid: " + prefix.report().str());
  if (!problems.empty()) return problems;

  for (std::size_t t = 0; t < members.size(); ++t) {
    const AugStep& m = members[t];
    std::string at = "member " + std::to_string(t) + ": ";
    if (m.phi.degree() != degree) problems.push_back(at + "key degree differs from family degree");
    if (m.gamma.is_infinite()) problems.push_back(at + "gamma must be finite");
    if (t > 0 && !(m.gamma > members[t - 1].gamma)) problems.push_back(at + "gamma not strictly increasing");
    Chain c(prefix.base(), with_step(prefix.steps(), m), prefix.variable());
    if (!c.valid()) problems.push_back(at + "member chain invalid: " + c.report().str());
  }
  if (!problems.empty()) return problems;

  for (std::size_t t = 0; t + 1 < members.size(); ++t) {
    Value v = eval_steps(prefix.base(), with_step(prefix.steps(), members[t]), members[t + 1].phi);
    if (v != members[t].gamma) {
      problems.push_back("member " + std::to_string(t) + " gives the next key " + v.str() + ", expected " +
                         members[t].gamma.str());
    }
  }
  return problems;
}

ContinuousFamily::ContinuousFamily(Chain prefix, int degree, std::vector<AugStep> members,
                                   std::optional<FamilyRule> rule)
    : prefix_(std::move(prefix)), degree_(degree), members_(std::move(members)), rule_(std::move(rule)) {
  auto problems = check(prefix_, degree_, members_);
  if (!problems.empty()) throw FamilyInvalidError("invalid continuous family: " + join(problems));
  chains_.reserve(members_.size());
  for (const auto& m : members_) chains_.emplace_back(prefix_.base(), with_step(prefix_.steps(), m), prefix_.variable());
}

ContinuousFamily ContinuousFamily::from_rule(const BaseValuation& base, const FamilyRule& rule, int horizon,
                                             std::vector<AugStep> prefix_steps, const std::string& variable) {
  if (rule.type != "geometric-approx") throw InputError("unknown family rule type \"" + rule.type + "\"");
  if (!base.is_padic() || base.prime() != rule.p) {
    throw InputError("geometric-approx rule needs the p-adic base valuation with p = " + rule.p.get_str());
  }
  if (horizon < 1) throw InputError("family horizon must be >= 1");
  if (rule.start < 0) throw InputError("geometric-approx start must be >= 0");
  std::vector<AugStep> members;
  mpz_class c = 0;
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), rule.p.get_mpz_t(), static_cast<unsigned long>(rule.start));
  for (int t = 0; t <= horizon; ++t) {
    members.push_back({Poly({Rational(-c), 1}), Value(static_cast<long>(t) + rule.start)});
    c += power;
    power *= rule.p;
  }
  return ContinuousFamily(Chain(base, std::move(prefix_steps), variable), 1, std::move(members), rule);
}

ContinuousFamily ContinuousFamily::with_horizon(int horizon) const {
  if (rule_) return from_rule(base(), *rule_, horizon, prefix_.steps(), prefix_.variable());
  if (horizon > this->horizon()) {
    throw InputError("explicit member list only presents " + std::to_string(this->horizon()) +
                     " as horizon, cannot extend to " + std::to_string(horizon));
  }
  std::vector<AugStep> members(members_.begin(), members_.begin() + horizon + 1);
  return ContinuousFamily(prefix_, degree_, std::move(members));
}

StabilizedValue stabilized_value(const ContinuousFamily& fam, const Poly& f, int window) {
  if (window < 1) throw InputError("stabilization window must be >= 1");
  StabilizedValue out;
  if (f.is_zero()) {
    out.value = Value::infinity();
    out.stabilized = true;
    out.first_stable_t = 0;
    return out;
  }
  int run_start = 0;
  for (int t = 0; t <= fam.horizon(); ++t) {
    Value v = fam.member_value(t, f);
    if (t > 0) {
      if (v < out.value) {
        throw FamilyInvalidError("family value of " + f.str() + " decreases at member " + std::to_string(t) + " (" +
                                 out.value.str() + " -> " + v.str() + ")");
      }
      if (v != out.value) run_start = t;
    }
    out.value = v;
    out.last_t = t;
    if (t - run_start + 1 >= window) {
      out.stabilized = true;
      out.first_stable_t = run_start;
      return out;
    }
  }
  return out;
}

LimitKeyReport phi_tilde_probe(const ContinuousFamily& fam, std::span<const Poly> candidates, int window) {
  LimitKeyReport rep;
  for (const Poly& f : candidates) {
    if (f.is_zero()) throw InputError("phi_tilde_probe: zero candidate");
    StabilizedValue sv = stabilized_value(fam, f, window);
    rep.entries.push_back({f, sv});
    if (!sv.stabilized) {
      rep.non_stabilized.push_back(f);
      if (rep.minimal_degree < 0 || f.degree() < rep.minimal_degree) rep.minimal_degree = f.degree();
    }
  }
  for (const Poly& f : rep.non_stabilized) {
    if (f.degree() == rep.minimal_degree && f.is_monic()) rep.minimal_monic.push_back(f);
  }
  return rep;
}

std::string to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::NotDivisible:
      return "not A-divisible";
    case WitnessStatus::Inconclusive:
      return "inconclusive at horizon";
    case WitnessStatus::PatternViolation:
      return "pattern violation";
  }
  return "?";
}

WitnessReport a_divisibility_witness(const ContinuousFamily& fam, const Poly& phi, const Poly& f, int window) {
  if (!phi.is_monic()) throw InputError("a_divisibility_witness: phi must be monic");
  if (f.is_zero()) throw InputError("a_divisibility_witness: f must be nonzero");
  auto [q, r] = poly_divmod(f, phi);
  WitnessReport rep{WitnessStatus::Inconclusive, q, r, std::nullopt, std::nullopt, std::nullopt, {}};

  StabilizedValue sf = stabilized_value(fam, f, window);
  if (!sf.stabilized) {
    rep.detail = "f does not stabilize within horizon " + std::to_string(fam.horizon());
    return rep;
  }
  rep.mu_f = sf.value;
  StabilizedValue sr = stabilized_value(fam, r, window);
  if (sr.stabilized) rep.mu_r = sr.value;
  if (!sr.stabilized || sr.value != sf.value) {
    rep.status = WitnessStatus::PatternViolation;
    rep.detail = "remainder value differs from the value of f";
    return rep;
  }

  // First t from which mu_t(q*phi) stays strictly above mu_A(f) up to the horizon.
  const Poly qphi = q * phi;
  std::optional<int> above_from;
  for (int t = 0; t <= fam.horizon(); ++t) {
    if (fam.member_value(t, qphi) > sf.value) {
      if (!above_from) above_from = t;
    } else {
      above_from.reset();
    }
  }
  if (!above_from) {
    rep.status = WitnessStatus::PatternViolation;
    rep.detail = "mu_t(q*phi) does not exceed mu_A(f) at the horizon";
    return rep;
  }
  rep.status = WitnessStatus::NotDivisible;
  rep.witness_t = std::max({*above_from, sf.first_stable_t.value_or(0), sr.first_stable_t.value_or(0)});
  return rep;
}

LimitAugmentation::LimitAugmentation(ContinuousFamily family, Poly limit_key, Value gamma)
    : family_(std::move(family)), limit_key_(std::move(limit_key)), gamma_(std::move(gamma)) {
  if (!limit_key_.is_monic()) throw InputError("limit key must be monic");
  if (limit_key_.degree() < family_.degree()) {
    throw InputError("limit key degree " + std::to_string(limit_key_.degree()) + " below family degree " +
                     std::to_string(family_.degree()));
  }
  const Value& top = family_.members().back().gamma;
  if (!(gamma_ > top)) {
    throw InputError("limit gamma " + gamma_.str() + " must exceed every member gamma (last is " + top.str() + ")");
  }
}

namespace {

Value stabilized_or_throw(const ContinuousFamily& fam, const Poly& g, int window) {
  StabilizedValue sv = stabilized_value(fam, g, window);
  if (!sv.stabilized) {
    throw HorizonError("digit " + g.str() + " does not stabilize within horizon " + std::to_string(fam.horizon()) +
                       "; raise the horizon");
  }
  return sv.value;
}

}  // namespace

Value limit_eval(const LimitAugmentation& aug, const Poly& f, int window) {
  return augmented_eval(aug.limit_key(), aug.gamma(), f,
                        [&](const Poly& g) { return stabilized_or_throw(aug.family(), g, window); });
}

Value limit_eval_L(const LimitAugmentation& aug, const RatFn& fr, int window) {
  Value den = limit_eval(aug, fr.den, window);
  if (den.is_infinite()) throw DomainError("denominator " + fr.den.str() + " lies in the socle");
  return limit_eval(aug, fr.num, window) - den;
}

Value limit_eval_general(const LimitAugmentation& aug, std::span<const std::pair<Poly, long>> representation,
                         int window) {
  Value best = Value::infinity();
  for (const auto& [fj, j] : representation) {
    if (j < 0) throw InputError("negative exponent in representation");
    if (fj.is_zero()) continue;
    WitnessReport w = a_divisibility_witness(aug.family(), aug.limit_key(), fj, window);
    if (w.status != WitnessStatus::NotDivisible) {
      throw InputError("coefficient " + fj.str() + " of phi^" + std::to_string(j) + ": " + to_string(w.status) +
                       (w.detail.empty() ? "" : " (" + w.detail + ")"));
    }
    Value term = *w.mu_f;
    if (j > 0) term += value_scale(j, aug.gamma());
    best = std::min(best, term);
  }
  return best;
}

}  // namespace augval

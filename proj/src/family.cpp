#include "augval/family.hpp"

#include <algorithm>

#include "augval/errors.hpp"

namespace augval {

std::string FamilyIndex::str() const {
  return "(" + std::to_string(segment) + ", " + (continuous ? "t=" : "") + std::to_string(position) + ")";
}

AdmissibleFamily::AdmissibleFamily(BaseValuation base, std::vector<Segment> segments, std::string variable)
    : base_(std::move(base)), segments_(std::move(segments)), variable_(std::move(variable)) {
  if (segments_.empty()) throw InputError("admissible family has no segments");
  limits_.resize(segments_.size());
  for (std::size_t j = 0; j < segments_.size(); ++j) {
    const Segment& s = segments_[j];
    const std::string at = "segment " + std::to_string(j + 1) + ": ";
    if (s.discrete.empty()) throw InputError(at + "discrete part is empty");
    if (j + 1 < segments_.size() && !s.continuous) {
      throw InputError(at + "only the last segment may omit its continuous part");
    }
    if (j == 0) {
      Chain c(base_, s.discrete, variable_);
      if (!c.valid()) throw ValidationError(at + c.report().str());
      if (s.continuous) {
        const auto& pre = s.continuous->prefix().steps();
        if (!(s.continuous->base() == base_)) throw InputError(at + "continuous part uses another base valuation");
        if (pre.size() > s.discrete.size() || !std::equal(pre.begin(), pre.end(), s.discrete.begin())) {
          throw InputError(at + "continuous prefix is not a prefix of the discrete steps");
        }
        // The continuous part starts above the discrete part it extends.
        const AugStep& last = s.discrete.back();
        if (s.continuous->degree() < last.phi.degree()) {
          throw InputError(at + "continuous degree below the last discrete key degree");
        }
      }
      continue;
    }
    if (s.continuous) throw InputError(at + "continuous parts beyond the first segment are not supported");
    const ContinuousFamily& prev = *segments_[j - 1].continuous;
    limits_[j].emplace(prev, s.discrete[0].phi, s.discrete[0].gamma);
    for (std::size_t k = 1; k < s.discrete.size(); ++k) {
      const AugStep& a = s.discrete[k];
      if (!a.phi.is_monic() || a.phi.degree() < s.discrete[k - 1].phi.degree()) {
        throw InputError(at + "step " + std::to_string(k + 1) + " key must be monic of non-decreasing degree");
      }
      if (s.discrete[k - 1].gamma.is_infinite()) {
        throw InputError(at + "infinite gamma only allowed in the last step");
      }
    }
  }
}

Value AdmissibleFamily::eval_limit_segment(std::size_t seg, std::size_t k, const Poly& f, int window) const {
  const LimitAugmentation& aug = *limits_[seg];
  if (k == 1) return limit_eval(aug, f, window);
  const AugStep& s = segments_[seg].discrete[k - 1];
  return augmented_eval(s.phi, s.gamma, f, [&](const Poly& g) { return eval_limit_segment(seg, k - 1, g, window); });
}

Value AdmissibleFamily::eval(const FamilyIndex& i, const Poly& f, int window) const {
  if (i.segment < 1 || i.segment > segments_.size()) {
    throw InputError("index " + i.str() + " beyond the presented segments");
  }
  const std::size_t seg = i.segment - 1;
  const Segment& s = segments_[seg];
  if (i.continuous) {
    if (!s.continuous || i.position > static_cast<std::size_t>(s.continuous->horizon())) {
      throw InputError("index " + i.str() + " beyond the presented continuous members");
    }
    return s.continuous->member_value(static_cast<int>(i.position), f);
  }
  if (i.position < 1 || i.position > s.discrete.size()) {
    throw InputError("index " + i.str() + " beyond the presented discrete steps");
  }
  if (seg == 0) {
    return eval_steps(base_, std::span<const AugStep>(s.discrete).first(i.position), f);
  }
  return eval_limit_segment(seg, i.position, f, window);
}

Value family_eval(const AdmissibleFamily& fam, const FamilyIndex& i, const Poly& f, int window) {
  return fam.eval(i, f, window);
}

FamilySup family_sup(const AdmissibleFamily& fam, const Poly& f, int horizon, int window) {
  if (window < 1 || horizon < window) throw InputError("family_sup needs horizon >= window >= 1");
  std::vector<FamilyIndex> order;
  for (std::size_t j = 0; j < fam.segments().size(); ++j) {
    const Segment& s = fam.segments()[j];
    for (std::size_t k = 1; k <= s.discrete.size(); ++k) order.push_back({j + 1, false, k});
    if (s.continuous) {
      const int top = std::min(horizon, s.continuous->horizon());
      for (int t = 0; t <= top; ++t) order.push_back({j + 1, true, static_cast<std::size_t>(t)});
    }
  }

  FamilySup out;
  std::size_t run_start = 0;
  for (std::size_t n = 0; n < order.size(); ++n) {
    Value v = fam.eval(order[n], f, window);
    if (n > 0) {
      if (v < out.value) {
        throw FamilyInvalidError("family value of " + f.str() + " decreases from " + order[n - 1].str() + " to " +
                                 order[n].str() + " (" + out.value.str() + " -> " + v.str() + ")");
      }
      if (v != out.value) run_start = n;
    }
    out.value = v;
  }
  out.indices_walked = order.size();
  out.at = order[run_start];
  out.stabilized = fam.is_finite() || order.size() - run_start >= static_cast<std::size_t>(window);
  return out;
}

}  // namespace augval

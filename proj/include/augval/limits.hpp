#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "augval/chain.hpp"

namespace augval {

inline constexpr int kDefaultHorizon = 64;
inline constexpr int kDefaultWindow = 4;

/// Closed-form member rule. geometric-approx: phi_t = x - c_t with
/// c_t = sum_{k=start}^{start+t-1} p^k and gamma_t = t + start, i.e. the
/// truncations of the p-adic number p^start / (1 - p).
struct FamilyRule {
  std::string type = "geometric-approx";
  mpz_class p = 2;
  long start = 1;
};

/// A continuous family (mu_t), t = 0..horizon: member t is the prefix chain
/// augmented by (phi_t, gamma_t). All keys share one degree, the gammas
/// increase strictly, and member t gives phi_{t+1} exactly gamma_t.
/// The invariants are checked on construction (FamilyInvalidError).
class ContinuousFamily {
 public:
  ContinuousFamily(Chain prefix, int degree, std::vector<AugStep> members,
                   std::optional<FamilyRule> rule = std::nullopt);

  static ContinuousFamily from_rule(const BaseValuation& base, const FamilyRule& rule, int horizon,
                                    std::vector<AugStep> prefix_steps = {}, const std::string& variable = "x");

  const Chain& prefix() const { return prefix_; }
  const BaseValuation& base() const { return prefix_.base(); }
  int degree() const { return degree_; }
  int horizon() const { return static_cast<int>(members_.size()) - 1; }
  const std::vector<AugStep>& members() const { return members_; }
  const AugStep& member(int t) const { return members_.at(static_cast<std::size_t>(t)); }
  const Chain& member_chain(int t) const { return chains_.at(static_cast<std::size_t>(t)); }
  const std::optional<FamilyRule>& rule() const { return rule_; }

  Value member_value(int t, const Poly& f) const { return chain_eval(member_chain(t), f); }

  /// Same family presented up to a different horizon. Rule families are
  /// regenerated; explicit lists can only be shortened.
  ContinuousFamily with_horizon(int horizon) const;

  /// Human-readable invariant failures; empty when the presentation is valid.
  static std::vector<std::string> check(const Chain& prefix, int degree, const std::vector<AugStep>& members);

 private:
  Chain prefix_;
  int degree_;
  std::vector<AugStep> members_;
  std::vector<Chain> chains_;
  std::optional<FamilyRule> rule_;
};

struct StabilizedValue {
  Value value;
  bool stabilized = false;
  std::optional<int> first_stable_t;  // start of the constant run
  int last_t = 0;                     // last member evaluated
};

/// Walks t = 0..horizon until `window` consecutive members agree on f.
/// first_stable_t is the first index of that constant run. A decrease along
/// the family throws FamilyInvalidError.
StabilizedValue stabilized_value(const ContinuousFamily& fam, const Poly& f, int window = kDefaultWindow);

struct LimitKeyEntry {
  Poly candidate;
  StabilizedValue value;
};

struct LimitKeyReport {
  std::vector<LimitKeyEntry> entries;
  std::vector<Poly> non_stabilized;    // candidates for the non-stabilizing set
  long minimal_degree = -1;            // among non_stabilized, -1 if none
  std::vector<Poly> minimal_monic;     // monic non_stabilized of minimal degree
};

LimitKeyReport phi_tilde_probe(const ContinuousFamily& fam, std::span<const Poly> candidates,
                               int window = kDefaultWindow);

enum class WitnessStatus {
  NotDivisible,      // mu_A(r) = mu_A(f) < mu_t(q*phi) from witness_t on
  Inconclusive,      // f did not stabilize within the horizon
  PatternViolation,  // f stabilized but the division pattern failed
};

struct WitnessReport {
  WitnessStatus status;
  Poly quotient;
  Poly remainder;
  std::optional<Value> mu_f;  // stabilized value of f
  std::optional<Value> mu_r;  // stabilized value of r
  std::optional<int> witness_t;
  std::string detail;
};

std::string to_string(WitnessStatus s);

/// Executable form of the Euclidean-division lemma for a limit key phi.
WitnessReport a_divisibility_witness(const ContinuousFamily& fam, const Poly& phi, const Poly& f,
                                     int window = kDefaultWindow);

/// [(mu_t)_t ; mu'(limit_key) = gamma]. gamma exceeds every presented gamma_t
/// and may be +inf (pseudo-valuation with socle (limit_key)).
class LimitAugmentation {
 public:
  LimitAugmentation(ContinuousFamily family, Poly limit_key, Value gamma);

  const ContinuousFamily& family() const { return family_; }
  const Poly& limit_key() const { return limit_key_; }
  const Value& gamma() const { return gamma_; }
  bool is_pseudo() const { return gamma_.is_infinite(); }

 private:
  ContinuousFamily family_;
  Poly limit_key_;
  Value gamma_;
};

/// inf_j (mu_A(g_j) + j*gamma) over the limit-key expansion of f. A digit
/// that does not stabilize within the horizon throws HorizonError.
Value limit_eval(const LimitAugmentation& aug, const Poly& f, int window = kDefaultWindow);
Value limit_eval_L(const LimitAugmentation& aug, const RatFn& fr, int window = kDefaultWindow);

/// Same formula over any representation f = sum f_j phi^j whose coefficients
/// are not A-divisible by the limit key (checked; InputError otherwise).
Value limit_eval_general(const LimitAugmentation& aug, std::span<const std::pair<Poly, long>> representation,
                         int window = kDefaultWindow);

}  // namespace augval

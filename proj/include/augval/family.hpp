#pragma once

#include <optional>
#include <string>
#include <vector>

#include "augval/limits.hpp"

namespace augval {

/// One simple subfamily: finitely many discrete steps, then optionally a
/// continuous part. In segments after the first, discrete[0] is the limit
/// augmentation (limit key, gamma) of the previous segment's continuous part.
struct Segment {
  std::vector<AugStep> discrete;
  std::optional<ContinuousFamily> continuous;
};

/// Position in the lexicographic index set. Segments and discrete positions
/// are 1-based; continuous positions are member indices t >= 0.
struct FamilyIndex {
  std::size_t segment = 1;
  bool continuous = false;
  std::size_t position = 1;

  friend bool operator==(const FamilyIndex&, const FamilyIndex&) = default;
  std::string str() const;
};

class AdmissibleFamily {
 public:
  AdmissibleFamily(BaseValuation base, std::vector<Segment> segments, std::string variable = "x");

  const BaseValuation& base() const { return base_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const std::string& variable() const { return variable_; }
  /// True when the last segment has no continuous part.
  bool is_finite() const { return !segments_.back().continuous.has_value(); }

  /// mu_i(f) for the valuation at index i.
  Value eval(const FamilyIndex& i, const Poly& f, int window = kDefaultWindow) const;

 private:
  Value eval_limit_segment(std::size_t seg, std::size_t k, const Poly& f, int window) const;

  BaseValuation base_;
  std::vector<Segment> segments_;
  std::string variable_;
  std::vector<std::optional<LimitAugmentation>> limits_;  // per segment; set for segments >= 2
};

Value family_eval(const AdmissibleFamily& fam, const FamilyIndex& i, const Poly& f, int window = kDefaultWindow);

struct FamilySup {
  Value value;
  bool stabilized = false;
  FamilyIndex at;            // first index of the final constant run
  std::size_t indices_walked = 0;
};

/// Walks discrete steps, then members t = 0..horizon of each continuous part.
/// A finite family is stabilized by definition (its last index is its
/// maximum); otherwise stabilized means the final constant run has at least
/// `window` indices. A decrease throws FamilyInvalidError.
FamilySup family_sup(const AdmissibleFamily& fam, const Poly& f, int horizon, int window = kDefaultWindow);

}  // namespace augval

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "augval/chain.hpp"
#include "augval/limits.hpp"
#include "augval/mobius.hpp"

namespace augval {

/// One key processed while pushing a chain through one atom of the word.
struct TransportRow {
  enum class Fate {
    Kept,
    Redundant,   // delta equals the value the steps before already give psi
    Superseded,  // replaced by a later degree-one key equivalent to it
  };
  std::size_t origin = 0;  // 1-based source step, 0 for an inserted (y, delta_0)
  std::size_t stage = 1;   // 1-based position of the atom in processing order
  Poly from_phi;           // key before this atom (unset for inserted steps)
  Value from_gamma;
  Poly psi;
  Value delta;
  Fate fate = Fate::Kept;
};

std::string to_string(TransportRow::Fate f);

struct Counterexample {
  std::string check;  // "final", "key", "truncation"
  RatFn fr;           // in the source generator
  RatFn image;        // fr o m^{-1}, in the new generator
  Value source_value;
  Value transported_value;
  std::size_t source_steps = 0;       // truncation compared (0 = full)
  std::size_t transported_steps = 0;
};

struct Verdict {
  bool pass = true;
  std::size_t cases_checked = 0;
  std::optional<Counterexample> counterexample;
};

struct TransportReport {
  Chain source;
  MobiusMap map;
  GeneratorWord word;
  Chain transported;
  /// Source step behind each transported step (0 = inserted). Empty when the
  /// transported chain was supplied from outside.
  std::vector<std::size_t> origins;
  std::vector<TransportRow> rows;
};

/// Rewrites a valuation chain in the generator y = m(x). Each key is carried
/// atom by atom; each delta is the source value of the key pulled back to x.
/// At an Inv atom whose current first key is not the variable, the step
/// (y, mu(y)) is inserted first. Keys whose delta adds nothing are dropped.
/// Throws DomainError for pseudo-valuations, TheoremViolation when the result
/// does not validate.
TransportReport transport_chain(const Chain& c, const MobiusMap& m);

/// Report with an externally supplied transported chain (e.g. a fixture).
TransportReport external_report(const Chain& source, const MobiusMap& m, const Chain& transported);

/// mu(fr) = mu'(fr o m^{-1}) exactly on structured cases and `samples` random
/// rational functions, plus mu(pullback psi_j) = mu'_j(psi_j) for every
/// transported key and, when the source key degrees strictly increase,
/// agreement of every source truncation with its transported counterpart.
/// The transported side is evaluated without validity checks.
Verdict transport_equal_check(const TransportReport& report, std::size_t samples, std::uint64_t seed,
                              bool parallel = false);

struct DegreeOneEntry {
  Rational c;
  Poly x_key;  // x + c
  Value x_value;
  Poly y_key;  // image under the word
  Value y_value;
};

struct DegreeOneReport {
  std::vector<DegreeOneEntry> entries;
  Value x_max;
  Value y_max;
  std::vector<Poly> x_argmax;
  std::vector<Poly> y_argmax;
  bool correspondence = true;
};

/// mu(x + c) for each candidate and the value of its image key in y. The
/// correspondence asserted: images of the x-side maximizers are y-side
/// maximizers, where x itself, when present and maximal, is the only
/// x-side maximizer considered (its image y is the distinguished key).
/// Only Inv and affine maps are accepted.
DegreeOneReport degree_one_probe(const Chain& c, std::span<const Rational> candidates,
                                 const MobiusMap& m = MobiusMap::inv());

struct LimitTransport {
  LimitAugmentation transported;
  GeneratorWord word;
  int first_member = 0;  // source member index of transported member 0
  Verdict verdict;
};

/// Transports every member chain and the limit key, recomputes the limit
/// gamma, and checks limit values on sampled polynomials of degree at most
/// the limit-key degree (pulled back through m) plus member-level equality.
/// Leading members whose transported prefix differs from the tail's prefix
/// are dropped (the tail is cofinal). TheoremViolation when the transported
/// family or augmentation is invalid.
LimitTransport transport_limit(const LimitAugmentation& aug, const MobiusMap& m, std::size_t samples,
                               std::uint64_t seed, int window = kDefaultWindow);

}  // namespace augval

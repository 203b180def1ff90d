#include "augval/transport.hpp"

#include <algorithm>
#include <thread>

#include "augval/errors.hpp"
#include "augval/sampling.hpp"

namespace augval {

std::string to_string(TransportRow::Fate f) {
  switch (f) {
    case TransportRow::Fate::Kept:
      return "kept";
    case TransportRow::Fate::Redundant:
      return "redundant";
    case TransportRow::Fate::Superseded:
      return "superseded";
  }
  return "?";
}

namespace {

std::string other_variable(const std::string& v) { return v == "y" ? "x" : "y"; }

struct Item {
  AugStep step;
  std::size_t origin;
  std::size_t row;
};

std::vector<AugStep> steps_of(const std::vector<Item>& items) {
  std::vector<AugStep> out;
  out.reserve(items.size());
  for (const auto& it : items) out.push_back(it.step);
  return out;
}

}  // namespace

TransportReport transport_chain(const Chain& c, const MobiusMap& m) {
  if (!c.valid()) throw ValidationError("invalid chain: " + c.report().str());
  if (c.is_pseudo()) throw DomainError("transport of a pseudo-valuation chain is not supported");
  GeneratorWord word = mobius_decompose(m);

  std::vector<Item> cur;
  for (std::size_t i = 0; i < c.size(); ++i) cur.push_back({c.steps()[i], i + 1, 0});
  std::vector<TransportRow> rows;
  MobiusMap acc;
  std::size_t stage = 0;

  for (std::size_t k = word.size(); k-- > 0;) {
    const Atom& atom = word[k];
    acc = compose(atom.as_map(), acc);
    ++stage;
    std::vector<Item> next;

    auto append = [&](const AugStep& s, std::size_t origin, const AugStep* from) {
      TransportRow row{origin, stage, from ? from->phi : Poly(), from ? from->gamma : Value(), s.phi, s.gamma,
                       TransportRow::Fate::Kept};
      if (!next.empty()) {
        const auto before = steps_of(next);
        Value now = eval_steps(c.base(), before, s.phi);
        if (now == s.gamma) {
          row.fate = TransportRow::Fate::Redundant;
          rows.push_back(std::move(row));
          return;
        }
        if (now > s.gamma) {
          throw TheoremViolation("transported key " + s.phi.str("y") + " gets " + s.gamma.str() +
                                 " below its current value " + now.str());
        }
        // Degree-one chains collapse to their last step, so an equivalent
        // predecessor can be removed without changing any valuation.
        while (!next.empty() && s.phi.degree() == 1) {
          const AugStep& prev = next.back().step;
          if (!(eval_steps(c.base(), steps_of(next), s.phi - prev.phi) > prev.gamma)) break;
          rows[next.back().row].fate = TransportRow::Fate::Superseded;
          next.pop_back();
        }
      }
      rows.push_back(std::move(row));
      next.push_back({s, origin, rows.size() - 1});
    };

    if (atom.is_inv() && cur.front().step.phi != Poly::x()) {
      append({Poly::x(), chain_eval_L(c, acc.pullback(Poly::x()))}, 0, nullptr);
    }
    for (const Item& it : cur) {
      Poly psi = transform_key(it.step.phi, atom);
      Value delta = it.step.gamma.is_infinite() ? Value::infinity() : chain_eval_L(c, acc.pullback(psi));
      append({psi, delta}, it.origin, &it.step);
    }
    cur = std::move(next);
  }

  std::vector<std::size_t> origins;
  for (const auto& it : cur) origins.push_back(it.origin);
  Chain out(c.base(), steps_of(cur), other_variable(c.variable()));
  if (!out.valid()) {
    throw TheoremViolation("transported chain fails validation: " + out.report().str());
  }
  return TransportReport{c, m, std::move(word), std::move(out), std::move(origins), std::move(rows)};
}

TransportReport external_report(const Chain& source, const MobiusMap& m, const Chain& transported) {
  return TransportReport{source, m, mobius_decompose(m), transported, {}, {}};
}

namespace {

struct Comparer {
  const TransportReport& rep;
  std::size_t src_steps;  // 0 = full
  std::size_t dst_steps;

  std::optional<Counterexample> operator()(const RatFn& fr, const std::string& check) const {
    const auto& ss = rep.source.steps();
    const auto& ts = rep.transported.steps();
    std::span<const AugStep> s(ss);
    std::span<const AugStep> t(ts);
    if (src_steps != 0) s = s.first(src_steps);
    if (dst_steps != 0) t = t.first(dst_steps);
    RatFn image = rep.map.pushforward(fr);
    Value lhs = eval_steps_L(rep.source.base(), s, fr);
    Value rhs = eval_steps_L(rep.transported.base(), t, image);
    if (lhs == rhs) return std::nullopt;
    return Counterexample{check, fr, image, lhs, rhs, src_steps, dst_steps};
  }
};

/// First failing sample by index; identical with or without threads.
std::optional<Counterexample> run_samples(const Comparer& cmp, const BaseValuation& base, std::size_t samples,
                                          std::uint64_t seed, bool parallel) {
  std::vector<std::optional<Counterexample>> found(samples);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      auto rng = sample_rng(seed, i);
      RatFn fr = random_ratfn(rng, base);
      found[i] = cmp(fr, cmp.src_steps == 0 ? "final" : "truncation");
      if (found[i] && !parallel) return;
    }
  };
  if (parallel && samples > 1) {
    std::size_t n = std::max(1U, std::thread::hardware_concurrency());
    n = std::min(n, samples);
    std::vector<std::thread> pool;
    const std::size_t chunk = (samples + n - 1) / n;
    for (std::size_t lo = 0; lo < samples; lo += chunk) pool.emplace_back(work, lo, std::min(samples, lo + chunk));
    for (auto& th : pool) th.join();
  } else {
    work(0, samples);
  }
  for (auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

bool strictly_increasing_degrees(const Chain& c) {
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c.steps()[i].phi.degree() <= c.steps()[i - 1].phi.degree()) return false;
  }
  return true;
}

}  // namespace

Verdict transport_equal_check(const TransportReport& rep, std::size_t samples, std::uint64_t seed, bool parallel) {
  Verdict v;
  auto fail = [&](Counterexample ce) {
    v.pass = false;
    v.counterexample = std::move(ce);
    return v;
  };

  std::vector<RatFn> structured;
  const Poly x = Poly::x();
  structured.emplace_back(Poly::constant(1));
  structured.emplace_back(x);
  structured.emplace_back(Poly::constant(1), x);
  std::vector<RatFn> keys;
  for (const auto& s : rep.source.steps()) keys.emplace_back(s.phi);
  for (const auto& s : rep.transported.steps()) keys.push_back(rep.map.pullback(s.phi));
  for (const auto& k : keys) {
    structured.push_back(k);
    structured.push_back(k * RatFn(x));
    structured.push_back(k * RatFn(Poly::constant(1), x));
    for (const auto& l : keys) structured.push_back(k * l);
  }

  Comparer full{rep, 0, 0};
  for (const auto& fr : structured) {
    ++v.cases_checked;
    if (auto ce = full(fr, "final")) return fail(*ce);
  }

  for (std::size_t j = 1; j <= rep.transported.size(); ++j) {
    ++v.cases_checked;
    Comparer at_key{rep, 0, j};
    if (auto ce = at_key(rep.map.pullback(rep.transported.steps()[j - 1].phi), "key")) return fail(*ce);
  }

  v.cases_checked += samples;
  if (auto ce = run_samples(full, rep.source.base(), samples, seed, parallel)) return fail(*ce);

  if (rep.origins.size() == rep.transported.size() && strictly_increasing_degrees(rep.source)) {
    const std::size_t per = std::min<std::size_t>(samples, 64);
    for (std::size_t i = 1; i < rep.source.size(); ++i) {
      const auto j = static_cast<std::size_t>(
          std::count_if(rep.origins.begin(), rep.origins.end(), [i](std::size_t o) { return o <= i; }));
      if (j == 0) continue;
      Comparer trunc{rep, i, j};
      for (const auto& fr : structured) {
        ++v.cases_checked;
        if (auto ce = trunc(fr, "truncation")) return fail(*ce);
      }
      v.cases_checked += per;
      if (auto ce = run_samples(trunc, rep.source.base(), per, derive_seed(seed, i), parallel)) return fail(*ce);
    }
  }
  return v;
}

DegreeOneReport degree_one_probe(const Chain& c, std::span<const Rational> candidates, const MobiusMap& m) {
  if (!(m == MobiusMap::inv()) && !m.is_affine()) {
    throw InputError("degree_one_probe supports the inversion and affine maps only");
  }
  if (c.is_pseudo()) throw DomainError("degree_one_probe needs a valuation chain");
  const GeneratorWord word = mobius_decompose(m);
  DegreeOneReport rep;
  for (const Rational& cv : candidates) {
    Poly xk({cv, 1});
    Poly yk = xk;
    for (std::size_t k = word.size(); k-- > 0;) yk = transform_key(yk, word[k]);
    rep.entries.push_back({cv, xk, chain_eval(c, xk), yk, chain_eval_L(c, m.pullback(yk))});
  }
  if (rep.entries.empty()) return rep;

  rep.x_max = rep.entries.front().x_value;
  rep.y_max = rep.entries.front().y_value;
  for (const auto& e : rep.entries) {
    rep.x_max = std::max(rep.x_max, e.x_value);
    rep.y_max = std::max(rep.y_max, e.y_value);
  }
  bool x_is_max = false;
  for (const auto& e : rep.entries) {
    if (e.x_value == rep.x_max) {
      rep.x_argmax.push_back(e.x_key);
      if (e.c == 0) x_is_max = true;
    }
    if (e.y_value == rep.y_max) rep.y_argmax.push_back(e.y_key);
  }
  const bool distinguished = x_is_max && m == MobiusMap::inv();
  for (const auto& e : rep.entries) {
    if (e.x_value != rep.x_max) continue;
    if (distinguished && e.c != 0) continue;
    if (e.y_value != rep.y_max) rep.correspondence = false;
  }
  return rep;
}

namespace {

Poly transform_word(Poly p, const GeneratorWord& w) {
  for (std::size_t k = w.size(); k-- > 0;) p = transform_key(p, w[k]);
  return p;
}

}  // namespace

LimitTransport transport_limit(const LimitAugmentation& aug, const MobiusMap& m, std::size_t samples,
                               std::uint64_t seed, int window) {
  const ContinuousFamily& fam = aug.family();
  const GeneratorWord word = mobius_decompose(m);
  const std::size_t pre = fam.prefix().size();

  std::vector<TransportReport> reports;
  for (int t = 0; t <= fam.horizon(); ++t) reports.push_back(transport_chain(fam.member_chain(t), m));

  auto prefix_of = [](const TransportReport& r) {
    return std::vector<AugStep>(r.transported.steps().begin(), r.transported.steps().end() - 1);
  };
  auto member_kept = [pre](const TransportReport& r) { return r.origins.back() == pre + 1; };

  const TransportReport& last = reports.back();
  if (!member_kept(last)) throw TheoremViolation("transported member key vanished as redundant");
  const std::vector<AugStep> tail_prefix = prefix_of(last);
  int t0 = fam.horizon();
  while (t0 > 0 && member_kept(reports[static_cast<std::size_t>(t0 - 1)]) &&
         prefix_of(reports[static_cast<std::size_t>(t0 - 1)]) == tail_prefix) {
    --t0;
  }

  std::vector<AugStep> members;
  for (int t = t0; t <= fam.horizon(); ++t) members.push_back(reports[static_cast<std::size_t>(t)].transported.steps().back());
  const std::string var = last.transported.variable();

  std::optional<ContinuousFamily> fam_y;
  std::optional<LimitAugmentation> aug_y;
  try {
    fam_y.emplace(Chain(fam.base(), tail_prefix, var), fam.degree(), std::move(members));
    Poly key = transform_word(aug.limit_key(), word);
    Value gamma = aug.gamma().is_infinite() ? Value::infinity() : limit_eval_L(aug, m.pullback(key), window);
    aug_y.emplace(*fam_y, std::move(key), std::move(gamma));
  } catch (const FamilyInvalidError& e) {
    throw TheoremViolation(std::string("transported family invalid: ") + e.what());
  } catch (const InputError& e) {
    throw TheoremViolation(std::string("transported limit augmentation invalid: ") + e.what());
  }

  Verdict v;
  auto check_poly = [&](const Poly& g) -> bool {
    ++v.cases_checked;
    RatFn back = m.pullback(g);
    Value lhs = limit_eval_L(aug, back, window);
    Value rhs = limit_eval(*aug_y, g, window);
    if (lhs == rhs) return true;
    v.pass = false;
    v.counterexample = Counterexample{"limit", back, RatFn(g), lhs, rhs, 0, 0};
    return false;
  };

  std::vector<Poly> structured{Poly::constant(1), Poly::x(), aug_y->limit_key()};
  for (const auto& s : aug_y->family().prefix().steps()) structured.push_back(s.phi);
  for (const auto& g : structured) {
    if (!check_poly(g)) return {*aug_y, word, t0, v};
  }
  SamplingOptions opt;
  opt.max_degree = static_cast<int>(aug_y->limit_key().degree());
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = sample_rng(seed, i);
    Poly g = random_poly(rng, fam.base(), opt);
    if (!check_poly(g)) return {*aug_y, word, t0, v};
  }

  // Member level: the first transported members against their sources.
  const int top = std::min(fam.horizon() - t0, 8);
  for (int t = 0; t <= top; ++t) {
    const TransportReport& r = reports[static_cast<std::size_t>(t + t0)];
    Verdict mv = transport_equal_check(r, std::min<std::size_t>(samples, 16), derive_seed(seed, 1000 + t));
    v.cases_checked += mv.cases_checked;
    if (!mv.pass) {
      v.pass = false;
      v.counterexample = mv.counterexample;
      break;
    }
  }
  return {*aug_y, word, t0, v};
}

}  // namespace augval

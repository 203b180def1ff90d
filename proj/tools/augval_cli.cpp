// augval: command-line front end over the augval library.
// Exit codes: 0 pass, 1 mismatch or violation, 2 input error, 3 inconclusive.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "augval/errors.hpp"
#include "augval/io.hpp"

using namespace augval;
using io::Json;

namespace {

constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kInput = 2;
constexpr int kInconclusive = 3;

struct Options {
  std::string chain, family, map, poly, ratfn, phi, current, candidates, transported, out;
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  std::optional<int> horizon;
  int window = kDefaultWindow;
  bool parallel = false;
};

void require(const std::string& value, const std::string& flag) {
  if (value.empty()) throw InputError("missing required option " + flag);
}

/// Looks `ref` up in the first section that has the entry.
io::Resolved resolve_any(const std::string& ref, std::initializer_list<const char*> sections) {
  std::string last;
  for (const char* s : sections) {
    try {
      return io::resolve(ref, s);
    } catch (const InputError& e) {
      last = e.what();
      if (last.find("no entry") == std::string::npos) throw;
    }
  }
  throw InputError(last);
}

Chain load_chain(const std::string& ref) {
  auto r = io::resolve(ref, "chains");
  return io::chain_from_json(r.node, r.where, r.default_field);
}

Poly load_poly(const std::string& ref) {
  auto r = io::resolve(ref, "polys");
  return io::poly_from_json(r.node, r.where);
}

RatFn load_ratfn(const std::string& ref) {
  auto r = resolve_any(ref, {"ratfns", "polys"});
  return io::ratfn_from_json(r.node, r.where);
}

MobiusMap load_map(const std::string& ref) {
  auto r = io::resolve(ref, "maps");
  return io::map_from_json(r.node, r.where);
}

bool is_limit_node(const Json& j) { return j.is_object() && j.contains("limit_key"); }

ContinuousFamily load_family(const Options& o) {
  auto r = resolve_any(o.family, {"families", "limits"});
  if (is_limit_node(r.node)) return io::limit_from_json(r.node, r.where, r.default_field, o.horizon).family();
  return io::family_from_json(r.node, r.where, r.default_field, o.horizon);
}

LimitAugmentation load_limit(const Options& o) {
  auto r = io::resolve(o.family, "limits");
  return io::limit_from_json(r.node, r.where, r.default_field, o.horizon);
}

void write_out(const Options& o, const Json& j) {
  if (o.out.empty()) return;
  std::ofstream f(o.out);
  if (!f) throw InputError(o.out + ": cannot write");
  f << j.dump(2) << "\n";
}

std::string step_list(const Chain& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += "(" + c.steps()[i].phi.str(c.variable()) + ", " + c.steps()[i].gamma.str() + ")";
  }
  return s + "]";
}

int cmd_eval(const Options& o) {
  require(o.chain, "--chain");
  Chain c = load_chain(o.chain);
  Value v;
  if (!o.ratfn.empty()) {
    v = chain_eval_L(c, load_ratfn(o.ratfn));
  } else {
    require(o.poly, "--poly or --ratfn");
    v = chain_eval(c, load_poly(o.poly));
  }
  std::cout << v << "\n";
  write_out(o, Json{{"value", io::to_json(v)}});
  return kPass;
}

int cmd_eval_l(const Options& o) {
  require(o.chain, "--chain");
  require(o.ratfn, "--ratfn");
  Value v = chain_eval_L(load_chain(o.chain), load_ratfn(o.ratfn));
  std::cout << v << "\n";
  write_out(o, Json{{"value", io::to_json(v)}});
  return kPass;
}

int cmd_expand(const Options& o) {
  require(o.poly, "--poly");
  require(o.phi, "--phi");
  Expansion e = phi_expand(load_poly(o.poly), load_poly(o.phi));
  Json digits = Json::array();
  for (std::size_t j = 0; j < e.digits.size(); ++j) {
    std::cout << "g_" << j << " = " << e.digits[j] << "\n";
    digits.push_back(io::to_json(e.digits[j]));
  }
  write_out(o, Json{{"phi", io::to_json(e.phi)}, {"digits", digits}});
  return kPass;
}

int cmd_validate(const Options& o) {
  require(o.chain, "--chain");
  Chain c = load_chain(o.chain);
  Json viol = Json::array();
  for (const auto& v : c.report().violations) viol.push_back(Json{{"step", v.step}, {"message", v.message}});
  write_out(o, Json{{"ok", c.valid()}, {"violations", viol}});
  if (c.valid()) {
    std::cout << "ok\n";
    return kPass;
  }
  for (const auto& v : c.report().violations) std::cout << "step " << v.step << ": " << v.message << "\n";
  return kMismatch;
}

void print_report(const TransportReport& r) {
  const std::string sv = r.source.variable();
  const std::string tv = r.transported.variable();
  std::cout << "map " << r.map.str() << " word " << word_str(r.word) << "\n";
  std::cout << "source " << step_list(r.source) << "\n";
  for (const auto& row : r.rows) {
    std::cout << "  stage " << row.stage << " ";
    if (row.origin == 0) {
      std::cout << "inserted";
    } else {
      std::cout << "step " << row.origin << " (" << row.from_phi.str(sv) << ", " << row.from_gamma << ")";
    }
    std::cout << " -> (" << row.psi.str(tv) << ", " << row.delta << ") " << to_string(row.fate) << "\n";
  }
  std::cout << "transported " << step_list(r.transported) << "\n";
}

int cmd_transport(const Options& o) {
  require(o.chain, "--chain");
  require(o.map, "--map");
  TransportReport r = transport_chain(load_chain(o.chain), load_map(o.map));
  print_report(r);
  write_out(o, io::to_json(r));
  return kPass;
}

int cmd_compare(const Options& o) {
  require(o.chain, "--chain");
  require(o.map, "--map");
  Chain c = load_chain(o.chain);
  MobiusMap m = load_map(o.map);
  TransportReport r = o.transported.empty() ? transport_chain(c, m) : external_report(c, m, load_chain(o.transported));
  Verdict v = transport_equal_check(r, o.samples, o.seed, o.parallel);
  print_report(r);
  const std::string sv = r.source.variable();
  const std::string tv = r.transported.variable();
  std::cout << "verdict " << (v.pass ? "pass" : "fail") << " (" << v.cases_checked << " cases, seed " << o.seed
            << ")\n";
  if (v.counterexample) {
    const auto& ce = *v.counterexample;
    std::cout << "counterexample [" << ce.check << "] fr = " << ce.fr.str(sv) << " -> " << ce.image.str(tv)
              << ": source " << ce.source_value << " != transported " << ce.transported_value << "\n";
  }
  Json j = io::to_json(r);
  j["check"] = io::to_json(v, sv, tv);
  write_out(o, j);
  return v.pass ? kPass : kMismatch;
}

int cmd_limit_eval(const Options& o) {
  require(o.family, "--family");
  require(o.poly, "--poly");
  Value v = limit_eval(load_limit(o), load_poly(o.poly), o.window);
  std::cout << v << "\n";
  write_out(o, Json{{"value", io::to_json(v)}});
  return kPass;
}

int cmd_limit_stabilize(const Options& o) {
  require(o.family, "--family");
  require(o.poly, "--poly");
  ContinuousFamily fam = load_family(o);
  StabilizedValue s = stabilized_value(fam, load_poly(o.poly), o.window);
  Json j{{"value", io::to_json(s.value)}, {"stabilized", s.stabilized}, {"last_t", s.last_t}};
  if (s.stabilized) {
    std::cout << s.value << ", stabilized at t=" << *s.first_stable_t << "\n";
    j["first_stable_t"] = *s.first_stable_t;
  } else {
    std::cout << s.value << ", non-stabilized at horizon " << fam.horizon() << "\n";
  }
  write_out(o, j);
  return s.stabilized ? kPass : kInconclusive;
}

int cmd_limit_witness(const Options& o) {
  require(o.family, "--family");
  require(o.poly, "--poly");
  ContinuousFamily fam = load_family(o);
  Poly phi;
  if (!o.phi.empty()) {
    phi = load_poly(o.phi);
  } else {
    auto r = resolve_any(o.family, {"limits"});
    phi = io::limit_from_json(r.node, r.where, r.default_field, o.horizon).limit_key();
  }
  WitnessReport w = a_divisibility_witness(fam, phi, load_poly(o.poly), o.window);
  std::cout << to_string(w.status);
  if (w.witness_t) std::cout << ", witnessed at t=" << *w.witness_t;
  std::cout << " (q = " << w.quotient << ", r = " << w.remainder;
  if (w.mu_f) std::cout << ", mu_A(f) = " << *w.mu_f;
  if (w.mu_r) std::cout << ", mu_A(r) = " << *w.mu_r;
  std::cout << ")";
  if (!w.detail.empty()) std::cout << ": " << w.detail;
  std::cout << "\n";
  Json j{{"status", to_string(w.status)}, {"quotient", io::to_json(w.quotient)}, {"remainder", io::to_json(w.remainder)}};
  if (w.mu_f) j["mu_f"] = io::to_json(*w.mu_f);
  if (w.mu_r) j["mu_r"] = io::to_json(*w.mu_r);
  if (w.witness_t) j["witness_t"] = *w.witness_t;
  write_out(o, j);
  switch (w.status) {
    case WitnessStatus::NotDivisible:
      return kPass;
    case WitnessStatus::Inconclusive:
      return kInconclusive;
    case WitnessStatus::PatternViolation:
      return kMismatch;
  }
  return kMismatch;
}

int cmd_limit_transport(const Options& o) {
  require(o.family, "--family");
  require(o.map, "--map");
  LimitAugmentation aug = load_limit(o);
  LimitTransport lt = transport_limit(aug, load_map(o.map), o.samples, o.seed, o.window);
  const auto& fam = lt.transported.family();
  std::cout << "word " << word_str(lt.word) << "\n";
  std::cout << "prefix " << (fam.prefix().size() ? step_list(fam.prefix()) : "[]") << "\n";
  for (int t = 0; t <= std::min(fam.horizon(), 4); ++t) {
    std::cout << "  member " << t << " (source " << t + lt.first_member << "): (" << fam.member(t).phi.str("y")
              << ", " << fam.member(t).gamma << ")\n";
  }
  std::cout << "limit key " << lt.transported.limit_key().str("y") << ", gamma " << lt.transported.gamma() << "\n";
  std::cout << "verdict " << (lt.verdict.pass ? "pass" : "fail") << " (" << lt.verdict.cases_checked << " cases)\n";
  Json j{{"transported", io::to_json(lt.transported)}, {"first_member", lt.first_member},
         {"check", io::to_json(lt.verdict, "x", "y")}};
  write_out(o, j);
  return lt.verdict.pass ? kPass : kMismatch;
}

int cmd_refine(const Options& o) {
  require(o.chain, "--chain");
  require(o.current, "--current");
  require(o.candidates, "--candidates");
  auto r = resolve_any(o.candidates, {"candidates", "polys"});
  if (!r.node.is_array()) r.where.fail("expected an array of polynomials", r.node);
  std::vector<Poly> pool;
  for (std::size_t i = 0; i < r.node.size(); ++i) pool.push_back(io::poly_from_json(r.node[i], r.where.at(i)));
  RefineReport rep = refine_probe(load_chain(o.chain), load_chain(o.current), pool);
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    std::cout << e.candidate << ": current " << e.current_value << ", target " << e.target_value
              << (e.member ? "  member" : "") << "\n";
    entries.push_back(Json{{"candidate", io::to_json(e.candidate)},
                           {"current", io::to_json(e.current_value)},
                           {"target", io::to_json(e.target_value)},
                           {"member", e.member}});
  }
  std::cout << "minimal degree " << rep.minimal_degree << "\n";
  write_out(o, Json{{"entries", entries}, {"minimal_degree", rep.minimal_degree}});
  return kPass;
}

int cmd_probe_degree_one(const Options& o) {
  require(o.chain, "--chain");
  require(o.candidates, "--candidates");
  auto r = resolve_any(o.candidates, {"candidates"});
  if (!r.node.is_array()) r.where.fail("expected an array of rationals", r.node);
  std::vector<Rational> cs;
  for (std::size_t i = 0; i < r.node.size(); ++i) cs.push_back(io::rational_from_json(r.node[i], r.where.at(i)));
  MobiusMap m = o.map.empty() ? MobiusMap::inv() : load_map(o.map);
  DegreeOneReport rep = degree_one_probe(load_chain(o.chain), cs, m);
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    std::cout << e.x_key << ": " << e.x_value << "    " << e.y_key.str("y") << ": " << e.y_value << "\n";
    entries.push_back(Json{{"c", io::to_json(e.c)},
                           {"x_key", io::to_json(e.x_key)},
                           {"x_value", io::to_json(e.x_value)},
                           {"y_key", io::to_json(e.y_key)},
                           {"y_value", io::to_json(e.y_value)}});
  }
  auto list = [](const std::vector<Poly>& ps, const std::string& var) {
    std::string s;
    for (const auto& p : ps) s += (s.empty() ? "" : ", ") + p.str(var);
    return "{" + s + "}";
  };
  std::cout << "x-argmax " << list(rep.x_argmax, "x") << " at " << rep.x_max << "\n";
  std::cout << "y-argmax " << list(rep.y_argmax, "y") << " at " << rep.y_max << "\n";
  std::cout << "correspondence " << (rep.correspondence ? "holds" : "fails") << "\n";
  write_out(o, Json{{"entries", entries}, {"correspondence", rep.correspondence}});
  return rep.correspondence ? kPass : kMismatch;
}

int cmd_family_sup(const Options& o) {
  require(o.family, "--family");
  require(o.poly, "--poly");
  auto r = io::resolve(o.family, "admissible");
  AdmissibleFamily fam = io::admissible_from_json(r.node, r.where, r.default_field, o.horizon);
  const int horizon = o.horizon.value_or(kDefaultHorizon);
  FamilySup s = family_sup(fam, load_poly(o.poly), horizon, o.window);
  std::cout << s.value << ", " << (s.stabilized ? "stabilized" : "non-stabilized") << " from index " << s.at.str()
            << "\n";
  write_out(o, Json{{"value", io::to_json(s.value)}, {"stabilized", s.stabilized}, {"at", s.at.str()}});
  return s.stabilized ? kPass : kInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact MacLane augmented valuations and generator-change transport"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--chain", o.chain, "chain JSON (file or file#name)");
    sub->add_option("--family", o.family, "family or limit JSON (file or file#name)");
    sub->add_option("--map", o.map, "Mobius map JSON");
    sub->add_option("--poly", o.poly, "polynomial JSON, coefficients lowest first");
    sub->add_option("--ratfn", o.ratfn, "rational function JSON {num, den}");
    sub->add_option("--phi", o.phi, "key polynomial JSON");
    sub->add_option("--current", o.current, "current chain for refine");
    sub->add_option("--candidates", o.candidates, "candidate pool JSON array");
    sub->add_option("--transported", o.transported, "use this transported chain instead of computing it");
    sub->add_option("--samples", o.samples, "random samples")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", o.seed, "64-bit seed");
    sub->add_option("--horizon", o.horizon, "family horizon T_max")->check(CLI::PositiveNumber);
    sub->add_option("--window", o.window, "stabilization window")->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "write the JSON report here");
    sub->add_flag("--parallel", o.parallel, "parallel sampling (same output)");
  };

  std::function<int()> run;
  auto command = [&](const std::string& name, const std::string& help, int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->callback([&run, fn, &o] { run = [fn, &o] { return fn(o); }; });
    return sub;
  };
  command("eval", "value of a polynomial or rational function", cmd_eval);
  command("eval-l", "value of a rational function", cmd_eval_l);
  command("expand", "phi-adic expansion", cmd_expand);
  command("validate", "check chain invariants", cmd_validate);
  command("transport", "rewrite a chain in the generator y = m(x)", cmd_transport);
  command("compare", "transport and check equality on samples", cmd_compare);
  command("refine", "refinement set on a candidate pool", cmd_refine);
  command("probe-degree-one", "degree-one maximizers on both sides of a map", cmd_probe_degree_one);
  command("family-sup", "supremum along an admissible family", cmd_family_sup);
  CLI::App* limit = app.add_subcommand("limit", "continuous families and limit augmentations");
  limit->require_subcommand(1);
  for (auto [name, fn] : std::initializer_list<std::pair<const char*, int (*)(const Options&)>>{
           {"eval", cmd_limit_eval},
           {"stabilize", cmd_limit_stabilize},
           {"witness", cmd_limit_witness},
           {"transport", cmd_limit_transport}}) {
    CLI::App* sub = limit->add_subcommand(name);
    add_common(sub);
    sub->callback([&run, fn, &o] { run = [fn, &o] { return fn(o); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    return run();
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kMismatch;
  } catch (const HorizonError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}

#include "augval/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "augval/errors.hpp"

namespace augval::io {

namespace {

std::size_t line_of(const std::string& text, std::size_t offset) {
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

std::string last_segment(const std::string& pointer) {
  auto pos = pointer.rfind('/');
  return pos == std::string::npos ? pointer : pointer.substr(pos + 1);
}

}  // namespace

void Where::fail(const std::string& what, const Json& offending) const {
  std::string msg = doc ? doc->path : "<json>";
  if (doc) {
    std::size_t pos = doc->text.find(offending.dump());
    if (pos == std::string::npos && !pointer.empty()) pos = doc->text.find("\"" + last_segment(pointer) + "\"");
    msg += ":" + std::to_string(pos == std::string::npos ? 1 : line_of(doc->text, pos));
  }
  msg += ": at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what;
  throw InputError(msg);
}

Document parse_document(const std::string& text, const std::string& path) {
  Document d{path, text, {}};
  try {
    d.root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::string msg = path;
    if (e.byte > 0) msg += ":" + std::to_string(line_of(text, std::min<std::size_t>(e.byte - 1, text.size())));
    throw InputError(msg + ": malformed JSON (" + e.what() + ")");
  }
  return d;
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

Rational rational_from_json(const Json& j, const Where& w) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (!j.is_string()) w.fail("expected a rational as a string such as \"-3/4\"", j);
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError&) {
    w.fail("expected a rational such as \"-3/4\", got " + j.dump(), j);
  }
}

Value value_from_json(const Json& j, const Where& w) {
  if (j.is_number_integer()) return Value(rational_from_json(j, w));
  if (!j.is_string()) w.fail("expected a value as a string (rational or \"inf\")", j);
  try {
    return Value::parse(j.get<std::string>());
  } catch (const InputError&) {
    w.fail("expected a rational or \"inf\", got " + j.dump(), j);
  }
}

Poly poly_from_json(const Json& j, const Where& w) {
  if (!j.is_array()) w.fail("expected a polynomial as an array of coefficients, lowest degree first", j);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], w.at(i)));
  return Poly(std::move(c));
}

RatFn ratfn_from_json(const Json& j, const Where& w) {
  if (j.is_array()) return RatFn(poly_from_json(j, w));
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    w.fail("expected a rational function {\"num\": [...], \"den\": [...]}", j);
  }
  Poly den = poly_from_json(j["den"], w.at("den"));
  if (den.is_zero()) w.fail("zero denominator", j["den"]);
  return RatFn(poly_from_json(j["num"], w.at("num")), std::move(den));
}

BaseValuation field_from_json(const Json& j, const Where& w) {
  if (!j.is_object()) w.fail("expected a field object {\"valuation\": {...}}", j);
  const Json* v = &j;
  Where vw = w;
  if (j.contains("valuation")) {
    v = &j["valuation"];
    vw = w.at("valuation");
  }
  if (!v->is_object() || !v->contains("type")) vw.fail("expected {\"type\": \"p-adic\", \"p\": \"2\"}", *v);
  const Json& type = (*v)["type"];
  if (type == "trivial") return BaseValuation::trivial();
  if (type != "p-adic" && type != "padic") vw.at("type").fail("unknown valuation type " + type.dump(), type);
  if (!v->contains("p")) vw.fail("p-adic valuation needs \"p\"", *v);
  Rational p = rational_from_json((*v)["p"], vw.at("p"));
  if (p.get_den() != 1) vw.at("p").fail("p must be an integer", (*v)["p"]);
  try {
    return BaseValuation::padic(p.get_num());
  } catch (const InputError& e) {
    vw.at("p").fail(e.what(), (*v)["p"]);
  }
}

namespace {

std::vector<AugStep> steps_from_json(const Json& j, const Where& w) {
  if (!j.is_array()) w.fail("expected an array of steps", j);
  std::vector<AugStep> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& s = j[i];
    Where sw = w.at(i);
    if (!s.is_object() || !s.contains("phi") || !s.contains("gamma")) {
      sw.fail("expected a step {\"phi\": [...], \"gamma\": \"...\"}", s);
    }
    out.push_back({poly_from_json(s["phi"], sw.at("phi")), value_from_json(s["gamma"], sw.at("gamma"))});
  }
  return out;
}

BaseValuation field_or_default(const Json& j, const Where& w, const std::optional<BaseValuation>& dflt) {
  if (j.is_object() && j.contains("field")) return field_from_json(j["field"], w.at("field"));
  if (dflt) return *dflt;
  w.fail("missing \"field\"", j);
}

int int_from_json(const Json& j, const Where& w, int lo) {
  if (!j.is_number_integer() || j.get<long>() < lo) w.fail("expected an integer >= " + std::to_string(lo), j);
  return j.get<int>();
}

}  // namespace

Chain chain_from_json(const Json& j, const Where& w, const std::optional<BaseValuation>& dflt) {
  if (!j.is_object() || !j.contains("steps")) w.fail("expected a chain {\"field\", \"steps\"}", j);
  BaseValuation base = field_or_default(j, w, dflt);
  std::string var = "x";
  if (j.contains("variable")) {
    if (!j["variable"].is_string()) w.at("variable").fail("expected a string", j["variable"]);
    var = j["variable"].get<std::string>();
  }
  return Chain(base, steps_from_json(j["steps"], w.at("steps")), var);
}

MobiusMap map_from_json(const Json& j, const Where& w) {
  if (!j.is_object()) w.fail("expected a map {\"a\", \"b\", \"c\", \"d\"}", j);
  Rational v[4];
  const char* names[4] = {"a", "b", "c", "d"};
  for (int i = 0; i < 4; ++i) {
    if (!j.contains(names[i])) w.fail(std::string("missing \"") + names[i] + "\"", j);
    v[i] = rational_from_json(j[names[i]], w.at(names[i]));
  }
  if (v[0] * v[3] - v[1] * v[2] == 0) w.fail("singular map (ad - bc = 0)", j);
  return MobiusMap(v[0], v[1], v[2], v[3]);
}

ContinuousFamily family_from_json(const Json& j, const Where& w, const std::optional<BaseValuation>& dflt,
                                  std::optional<int> horizon_override) {
  if (!j.is_object()) w.fail("expected a family object", j);
  BaseValuation base = dflt ? *dflt : BaseValuation::trivial();
  std::vector<AugStep> prefix;
  std::string var = "x";
  if (j.contains("prefix") && !j["prefix"].is_null()) {
    const Json& p = j["prefix"];
    Where pw = w.at("prefix");
    if (!p.is_object() || !p.contains("steps")) pw.fail("expected a chain {\"field\", \"steps\"}", p);
    base = field_or_default(p, pw, dflt);
    prefix = steps_from_json(p["steps"], pw.at("steps"));
    if (p.contains("variable") && p["variable"].is_string()) var = p["variable"].get<std::string>();
  } else if (j.contains("field")) {
    base = field_from_json(j["field"], w.at("field"));
  } else if (!dflt) {
    w.fail("missing \"prefix\" (or \"field\")", j);
  }
  int degree = j.contains("degree") ? int_from_json(j["degree"], w.at("degree"), 1) : 1;
  int horizon = j.contains("horizon") ? int_from_json(j["horizon"], w.at("horizon"), 1) : kDefaultHorizon;
  if (horizon_override) horizon = *horizon_override;

  try {
    if (j.contains("members")) {
      auto members = steps_from_json(j["members"], w.at("members"));
      ContinuousFamily fam(Chain(base, prefix, var), degree, std::move(members));
      if (horizon_override) return fam.with_horizon(std::min(horizon, fam.horizon()));
      return fam;
    }
    if (!j.contains("rule")) w.fail("family needs \"members\" or \"rule\"", j);
    const Json& r = j["rule"];
    Where rw = w.at("rule");
    if (!r.is_object() || !r.contains("type")) rw.fail("expected a rule {\"type\": \"geometric-approx\", ...}", r);
    FamilyRule rule;
    rule.type = r["type"].is_string() ? r["type"].get<std::string>() : "";
    if (rule.type != "geometric-approx") rw.at("type").fail("unknown rule type " + r["type"].dump(), r["type"]);
    if (degree != 1) w.at("degree").fail("geometric-approx families have degree 1", j["degree"]);
    if (r.contains("p")) {
      Rational p = rational_from_json(r["p"], rw.at("p"));
      if (p.get_den() != 1) rw.at("p").fail("p must be an integer", r["p"]);
      rule.p = p.get_num();
    } else if (base.is_padic()) {
      rule.p = base.prime();
    }
    if (r.contains("start")) rule.start = int_from_json(r["start"], rw.at("start"), 0);
    return ContinuousFamily::from_rule(base, rule, horizon, prefix, var);
  } catch (const FamilyInvalidError& e) {
    w.fail(e.what(), j);
  } catch (const InputError& e) {
    if (std::string(e.what()).find(": at /") != std::string::npos) throw;
    w.fail(e.what(), j);
  }
}

LimitAugmentation limit_from_json(const Json& j, const Where& w, const std::optional<BaseValuation>& dflt,
                                  std::optional<int> horizon_override) {
  if (!j.is_object() || !j.contains("family") || !j.contains("limit_key") || !j.contains("gamma")) {
    w.fail("expected a limit augmentation {\"family\", \"limit_key\", \"gamma\"}", j);
  }
  ContinuousFamily fam = [&] {
    const Json& f = j["family"];
    if (f.is_string()) {
      const Json& root = w.doc->root;
      std::string name = f.get<std::string>();
      if (!name.empty() && name[0] == '#') name = name.substr(1);
      if (!root.contains("families") || !root["families"].contains(name)) {
        w.at("family").fail("unknown family \"" + name + "\"", f);
      }
      return family_from_json(root["families"][name], {w.doc, "/families/" + name}, dflt, horizon_override);
    }
    return family_from_json(f, w.at("family"), dflt, horizon_override);
  }();
  Poly key = poly_from_json(j["limit_key"], w.at("limit_key"));
  Value gamma = value_from_json(j["gamma"], w.at("gamma"));
  try {
    return LimitAugmentation(std::move(fam), std::move(key), std::move(gamma));
  } catch (const InputError& e) {
    w.fail(e.what(), j["limit_key"]);
  }
}

AdmissibleFamily admissible_from_json(const Json& j, const Where& w, const std::optional<BaseValuation>& dflt,
                                      std::optional<int> horizon_override) {
  if (!j.is_object() || !j.contains("segments") || !j["segments"].is_array()) {
    w.fail("expected an admissible family {\"field\", \"segments\": [...]}", j);
  }
  BaseValuation base = field_or_default(j, w, dflt);
  std::vector<Segment> segs;
  const Json& s = j["segments"];
  for (std::size_t i = 0; i < s.size(); ++i) {
    Where sw = w.at("segments").at(i);
    if (!s[i].is_object() || !s[i].contains("discrete")) sw.fail("expected a segment {\"discrete\", \"continuous\"}", s[i]);
    Segment seg{steps_from_json(s[i]["discrete"], sw.at("discrete")), std::nullopt};
    if (s[i].contains("continuous") && !s[i]["continuous"].is_null()) {
      const Json& c = s[i]["continuous"];
      if (c.is_string()) {
        std::string name = c.get<std::string>();
        if (!name.empty() && name[0] == '#') name = name.substr(1);
        const Json& root = w.doc->root;
        if (!root.contains("families") || !root["families"].contains(name)) {
          sw.at("continuous").fail("unknown family \"" + name + "\"", c);
        }
        seg.continuous.emplace(family_from_json(root["families"][name], {w.doc, "/families/" + name}, base,
                                                horizon_override));
      } else {
        seg.continuous.emplace(family_from_json(c, sw.at("continuous"), base, horizon_override));
      }
    }
    segs.push_back(std::move(seg));
  }
  try {
    return AdmissibleFamily(base, std::move(segs));
  } catch (const Error& e) {
    w.fail(e.what(), j);
  }
}

Resolved resolve(const std::string& ref, const std::string& section) {
  if (!ref.empty() && (ref[0] == '[' || ref[0] == '{')) {
    auto doc = std::make_shared<Document>(parse_document(ref, "<inline>"));
    Json node = doc->root;
    return {doc, node, Where{doc.get(), ""}, std::nullopt};
  }
  const auto hash = ref.find('#');
  const std::string path = ref.substr(0, hash);
  auto doc = std::make_shared<Document>(load_document(path));
  const Json& root = doc->root;
  std::optional<BaseValuation> field;
  if (root.is_object() && root.contains("field") && hash != std::string::npos) {
    field = field_from_json(root["field"], Where{doc.get(), "/field"});
  }
  if (hash == std::string::npos) return {doc, root, Where{doc.get(), ""}, field};
  const std::string name = ref.substr(hash + 1);
  if (!root.is_object() || !root.contains(section) || !root[section].is_object() || !root[section].contains(name)) {
    throw InputError(path + ": no entry \"" + name + "\" in section \"" + section + "\"");
  }
  Json node = root[section][name];
  return {doc, node, Where{doc.get(), "/" + section + "/" + name}, field};
}

Json to_json(const Rational& q) { return rational_str(q); }

Json to_json(const Value& v) { return v.str(); }

Json to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_str(c));
  return a;
}

Json to_json(const RatFn& r) { return Json{{"num", to_json(r.num)}, {"den", to_json(r.den)}}; }

Json to_json(const BaseValuation& b) {
  if (!b.is_padic()) return Json{{"valuation", {{"type", "trivial"}}}};
  return Json{{"valuation", {{"type", "p-adic"}, {"p", b.prime().get_str()}}}};
}

namespace {

Json steps_json(const std::vector<AugStep>& steps) {
  Json a = Json::array();
  for (const auto& s : steps) a.push_back(Json{{"phi", to_json(s.phi)}, {"gamma", to_json(s.gamma)}});
  return a;
}

}  // namespace

Json to_json(const Chain& c) {
  return Json{{"field", to_json(c.base())}, {"variable", c.variable()}, {"steps", steps_json(c.steps())}};
}

Json to_json(const MobiusMap& m) {
  return Json{{"a", to_json(m.a)}, {"b", to_json(m.b)}, {"c", to_json(m.c)}, {"d", to_json(m.d)}};
}

Json to_json(const ContinuousFamily& f) {
  Json j{{"prefix", to_json(f.prefix())}, {"degree", f.degree()}};
  if (f.rule()) {
    j["rule"] = Json{{"type", f.rule()->type}, {"p", f.rule()->p.get_str()}, {"start", f.rule()->start}};
  } else {
    j["members"] = steps_json(f.members());
  }
  j["horizon"] = f.horizon();
  return j;
}

Json to_json(const LimitAugmentation& a) {
  return Json{{"family", to_json(a.family())}, {"limit_key", to_json(a.limit_key())}, {"gamma", to_json(a.gamma())}};
}

Json to_json(const Verdict& v, const std::string& source_var, const std::string& target_var) {
  Json j{{"verdict", v.pass ? "pass" : "fail"}, {"cases_checked", v.cases_checked}};
  if (v.counterexample) {
    const auto& c = *v.counterexample;
    j["counterexample"] = Json{{"check", c.check},
                               {"fr", c.fr.str(source_var)},
                               {"image", c.image.str(target_var)},
                               {"source_value", to_json(c.source_value)},
                               {"transported_value", to_json(c.transported_value)},
                               {"source_steps", c.source_steps},
                               {"transported_steps", c.transported_steps}};
  }
  return j;
}

Json to_json(const TransportReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr{{"origin", row.origin}, {"stage", row.stage}};
    if (row.origin != 0) {
      jr["from_phi"] = to_json(row.from_phi);
      jr["from_gamma"] = to_json(row.from_gamma);
    }
    jr["psi"] = to_json(row.psi);
    jr["delta"] = to_json(row.delta);
    jr["fate"] = to_string(row.fate);
    rows.push_back(std::move(jr));
  }
  Json word = Json::array();
  for (const auto& a : r.word) word.push_back(a.str());
  return Json{{"source", to_json(r.source)},
              {"map", to_json(r.map)},
              {"word", word},
              {"transported", to_json(r.transported)},
              {"origins", r.origins},
              {"rows", rows}};
}

}  // namespace augval::io

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "augval/family.hpp"
#include "augval/transport.hpp"

namespace augval::io {

using Json = nlohmann::ordered_json;

/// A parsed JSON file plus its text, so schema errors can cite a line.
struct Document {
  std::string path;
  std::string text;
  Json root;
};

Document load_document(const std::string& path);
Document parse_document(const std::string& text, const std::string& path = "<inline>");

/// Location inside a document used when raising schema errors.
struct Where {
  const Document* doc;
  std::string pointer;  // JSON pointer, e.g. /steps/1/gamma

  Where at(const std::string& key) const { return {doc, pointer + "/" + key}; }
  Where at(std::size_t i) const { return {doc, pointer + "/" + std::to_string(i)}; }
  [[noreturn]] void fail(const std::string& what, const Json& offending) const;
};

Rational rational_from_json(const Json& j, const Where& w);
Value value_from_json(const Json& j, const Where& w);
Poly poly_from_json(const Json& j, const Where& w);
RatFn ratfn_from_json(const Json& j, const Where& w);
BaseValuation field_from_json(const Json& j, const Where& w);
Chain chain_from_json(const Json& j, const Where& w, const std::optional<BaseValuation>& default_field = {});
MobiusMap map_from_json(const Json& j, const Where& w);
ContinuousFamily family_from_json(const Json& j, const Where& w, const std::optional<BaseValuation>& default_field = {},
                                  std::optional<int> horizon_override = {});
LimitAugmentation limit_from_json(const Json& j, const Where& w, const std::optional<BaseValuation>& default_field = {},
                                  std::optional<int> horizon_override = {});
AdmissibleFamily admissible_from_json(const Json& j, const Where& w,
                                      const std::optional<BaseValuation>& default_field = {},
                                      std::optional<int> horizon_override = {});

/// Reference "file.json" or "file.json#name". A named reference is looked up
/// in the catalog sections (chains, families, limits, maps, polys, ratfns,
/// admissible); a catalog "field" supplies the default base valuation.
/// Arguments starting with '[' or '{' are parsed as inline JSON.
struct Resolved {
  std::shared_ptr<Document> doc;
  Json node;
  Where where;
  std::optional<BaseValuation> default_field;
};

Resolved resolve(const std::string& ref, const std::string& section);

Json to_json(const Rational& q);
Json to_json(const Value& v);
Json to_json(const Poly& p);
Json to_json(const RatFn& r);
Json to_json(const BaseValuation& b);
Json to_json(const Chain& c);
Json to_json(const MobiusMap& m);
Json to_json(const ContinuousFamily& f);
Json to_json(const LimitAugmentation& a);
Json to_json(const Verdict& v, const std::string& source_var, const std::string& target_var);
Json to_json(const TransportReport& r);

}  // namespace augval::io

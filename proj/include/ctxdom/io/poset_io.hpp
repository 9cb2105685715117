#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "ctxdom/io/json_common.hpp"
#include "ctxdom/order.hpp"

namespace ctxdom::io {

/// Parsed poset input file: the raw poset description plus an optional
/// content map
/// (needed only for orthogonality queries).
struct PosetFile {
  PosetSpec spec;
  std::optional<std::map<std::string, double>> content;
};

/// Schema: {"elements": ["a", ...], "covers": [["lower","upper"], ...],
///          "content": {"a": 1.0, ...}}  — content optional.
/// Duplicate elements are an error; cover order is (lower, upper).
inline PosetFile parse_poset_file(const json& doc) {
  if (!doc.is_object()) throw parse_error("poset file must be a JSON object");
  PosetFile out;

  const json& elements = require_field(doc, "elements", "poset file");
  if (!elements.is_array()) throw parse_error("\"elements\" must be an array");
  std::set<std::string> seen;
  for (const auto& e : elements) {
    if (!e.is_string()) throw parse_error("element ids must be strings");
    const std::string id = e.get<std::string>();
    if (!seen.insert(id).second) throw parse_error("duplicate element: " + id);
    out.spec.elements.push_back(id);
  }

  const json& covers = require_field(doc, "covers", "poset file");
  if (!covers.is_array()) throw parse_error("\"covers\" must be an array");
  for (const auto& c : covers) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw parse_error("each cover must be a [lower, upper] string pair");
    out.spec.covers.emplace_back(c[0].get<std::string>(),
                                 c[1].get<std::string>());
  }

  if (doc.contains("content")) {
    const json& content = doc.at("content");
    if (!content.is_object())
      throw parse_error("\"content\" must be an object of element: number");
    std::map<std::string, double> m;
    for (const auto& [key, value] : content.items()) {
      if (!value.is_number())
        throw parse_error("content for \"" + key + "\" must be a number");
      m[key] = value.get<double>();
    }
    out.content = std::move(m);
  }
  return out;
}

}  // namespace ctxdom::io

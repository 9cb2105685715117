#pragma once

#include <utility>
#include <vector>

#include "ctxdom/classical.hpp"
#include "ctxdom/io/json_common.hpp"

namespace ctxdom::io {

struct PuzzleScenario {
  int length = 0;
  std::vector<puzzle::Message> hypothesis_class;
  std::vector<std::pair<int, int>> reveals;  // (index, bit), applied in order
  double confidence = 0.99;
  bool static_flag = true;
};

/// Schema: {"N": 8,
///          "class": "full" | {"periodic": 2} | ["bitstring", ...],
///          "reveals": [[0, 1], [3, 0], ...],
///          "confidence": 0.99}
/// plus an optional "static": false to model a mutating message.
inline PuzzleScenario parse_puzzle_scenario(const json& doc) {
  if (!doc.is_object())
    throw parse_error("puzzle scenario must be a JSON object");
  PuzzleScenario out;

  const json& n = require_field(doc, "N", "puzzle scenario");
  if (!n.is_number_unsigned() || n == 0)
    throw parse_error("\"N\" must be a positive integer");
  out.length = n.get<int>();

  const json& cls = require_field(doc, "class", "puzzle scenario");
  try {
    if (cls.is_string() && cls == "full") {
      out.hypothesis_class = puzzle::full_class(out.length);
    } else if (cls.is_object() && cls.contains("periodic")) {
      const json& period = cls.at("periodic");
      if (!period.is_number_unsigned() || period == 0)
        throw parse_error("\"periodic\" must be a positive integer");
      out.hypothesis_class =
          puzzle::periodic_class(out.length, period.get<int>());
    } else if (cls.is_array() && !cls.empty()) {
      for (const auto& s : cls) {
        if (!s.is_string()) throw parse_error("explicit class entries must be strings");
        const std::string str = s.get<std::string>();
        if (static_cast<int>(str.size()) != out.length)
          throw parse_error("hypothesis \"" + str + "\" does not have length N");
        out.hypothesis_class.push_back(puzzle::from_string(str));
      }
    } else {
      throw parse_error(
          "\"class\" must be \"full\", {\"periodic\": k} or a bitstring array");
    }
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }

  const json& reveals = require_field(doc, "reveals", "puzzle scenario");
  if (!reveals.is_array()) throw parse_error("\"reveals\" must be an array");
  for (const auto& r : reveals) {
    if (!r.is_array() || r.size() != 2 || !r[0].is_number_unsigned() ||
        !r[1].is_number_unsigned())
      throw parse_error("each reveal must be an [index, bit] pair");
    out.reveals.emplace_back(r[0].get<int>(), r[1].get<int>());
  }

  const json& confidence = require_field(doc, "confidence", "puzzle scenario");
  if (!confidence.is_number())
    throw parse_error("\"confidence\" must be a number");
  out.confidence = confidence.get<double>();
  if (!(out.confidence > 0.0) || out.confidence > 1.0)
    throw parse_error("\"confidence\" must be in (0, 1]");

  if (doc.contains("static")) {
    if (!doc.at("static").is_boolean())
      throw parse_error("\"static\" must be a boolean");
    out.static_flag = doc.at("static").get<bool>();
  }
  return out;
}

}  // namespace ctxdom::io

#pragma once

#include <fstream>
#include <string>

#include "json.hpp"

#include "ctxdom/errors.hpp"

namespace ctxdom::io {

using json = nlohmann::json;

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
  return doc;
}

inline const json& require_field(const json& doc, const std::string& key,
                                 const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end())
    throw parse_error(where + " is missing required field \"" + key + "\"");
  return *it;
}

}  // namespace ctxdom::io

#pragma once

#include <cstdint>
#include <vector>

#include "ctxdom/io/json_common.hpp"
#include "ctxdom/quantum.hpp"

namespace ctxdom::io {

// Angles are degrees in files, radians internally.

inline SpinAxis parse_axis_deg(const json& node, const std::string& where) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() ||
      !node[1].is_number())
    throw parse_error(where + " must be a [theta_deg, phi_deg] number pair");
  return SpinAxis::from_degrees(node[0].get<double>(), node[1].get<double>());
}

struct ChainConfig {
  SpinAxis initial_axis = SpinAxis::z();
  Outcome initial_sign = Outcome::plus;
  std::vector<SpinAxis> context_axes;
  std::size_t trials = 100000;
  std::uint64_t seed = 0;
};

/// Schema: {"initial": {"axis_deg": [t, p], "sign": "+"},
///          "contexts": [{"axis_deg": [t, p]}, ...],
///          "trials": 100000, "seed": 42}
inline ChainConfig parse_chain_config(const json& doc) {
  if (!doc.is_object()) throw parse_error("chain config must be a JSON object");
  ChainConfig out;

  const json& initial = require_field(doc, "initial", "chain config");
  out.initial_axis =
      parse_axis_deg(require_field(initial, "axis_deg", "\"initial\""),
                     "\"initial.axis_deg\"");
  const json& sign = require_field(initial, "sign", "\"initial\"");
  if (!sign.is_string() || (sign != "+" && sign != "-"))
    throw parse_error("\"initial.sign\" must be \"+\" or \"-\"");
  out.initial_sign = sign == "+" ? Outcome::plus : Outcome::minus;

  const json& contexts = require_field(doc, "contexts", "chain config");
  if (!contexts.is_array() || contexts.empty())
    throw parse_error("\"contexts\" must be a nonempty array");
  for (const auto& c : contexts)
    out.context_axes.push_back(parse_axis_deg(
        require_field(c, "axis_deg", "context entry"), "context \"axis_deg\""));

  if (doc.contains("trials")) {
    if (!doc.at("trials").is_number_unsigned() || doc.at("trials") == 0)
      throw parse_error("\"trials\" must be a positive integer");
    out.trials = doc.at("trials").get<std::size_t>();
  }
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_integer())
      throw parse_error("\"seed\" must be an integer");
    out.seed = doc.at("seed").get<std::uint64_t>();
  }
  return out;
}

/// Schema: {"axes_deg": [[t, p], [t, p], ...]} — at least two axes.
inline std::vector<SpinAxis> parse_overlap_config(const json& doc) {
  if (!doc.is_object())
    throw parse_error("overlap config must be a JSON object");
  const json& axes = require_field(doc, "axes_deg", "overlap config");
  if (!axes.is_array() || axes.size() < 2)
    throw parse_error("\"axes_deg\" must list at least two axes");
  std::vector<SpinAxis> out;
  for (const auto& a : axes) out.push_back(parse_axis_deg(a, "axes_deg entry"));
  return out;
}

}  // namespace ctxdom::io

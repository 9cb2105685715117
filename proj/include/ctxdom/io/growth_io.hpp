#pragma once

#include <cstdint>

#include "ctxdom/experiments.hpp"
#include "ctxdom/io/json_common.hpp"
#include "ctxdom/io/quantum_io.hpp"

namespace ctxdom::io {

struct GrowthConfig {
  Policy policy = Policy::fixed();
  std::size_t steps = 6;
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  SpinAxis initial_axis = SpinAxis::z();
  Outcome initial_sign = Outcome::plus;
};

/// Schema: {"policy": "fixed" | {"alternating_deg": 90} | "random_axis",
///          "steps": 6, "trials": 10000, "seed": 7}
/// plus an optional "initial" object as in the chain schema (defaults to the
/// z-aligned state so the fixed arm is exactly flat).
inline GrowthConfig parse_growth_config(const json& doc) {
  if (!doc.is_object())
    throw parse_error("experiment config must be a JSON object");
  GrowthConfig out;

  const json& policy = require_field(doc, "policy", "experiment config");
  if (policy.is_string()) {
    const std::string name = policy.get<std::string>();
    if (name == "fixed")
      out.policy = Policy::fixed();
    else if (name == "random_axis")
      out.policy = Policy::random_axis();
    else
      throw parse_error("unknown policy \"" + name + "\"");
  } else if (policy.is_object() && policy.contains("alternating_deg")) {
    const json& deg = policy.at("alternating_deg");
    if (!deg.is_number()) throw parse_error("\"alternating_deg\" must be a number");
    out.policy = Policy::alternating(deg.get<double>() * std::numbers::pi / 180.0);
  } else {
    throw parse_error(
        "\"policy\" must be \"fixed\", \"random_axis\" or {\"alternating_deg\": x}");
  }

  const json& steps = require_field(doc, "steps", "experiment config");
  if (!steps.is_number_unsigned() || steps == 0)
    throw parse_error("\"steps\" must be a positive integer");
  out.steps = steps.get<std::size_t>();

  const json& trials = require_field(doc, "trials", "experiment config");
  if (!trials.is_number_unsigned() || trials == 0)
    throw parse_error("\"trials\" must be a positive integer");
  out.trials = trials.get<std::size_t>();

  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_integer())
      throw parse_error("\"seed\" must be an integer");
    out.seed = doc.at("seed").get<std::uint64_t>();
  }

  if (doc.contains("initial")) {
    const json& initial = doc.at("initial");
    out.initial_axis =
        parse_axis_deg(require_field(initial, "axis_deg", "\"initial\""),
                       "\"initial.axis_deg\"");
    const json& sign = require_field(initial, "sign", "\"initial\"");
    if (!sign.is_string() || (sign != "+" && sign != "-"))
      throw parse_error("\"initial.sign\" must be \"+\" or \"-\"");
    out.initial_sign = sign == "+" ? Outcome::plus : Outcome::minus;
  }
  return out;
}

}  // namespace ctxdom::io

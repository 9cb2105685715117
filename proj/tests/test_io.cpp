#include "doctest.h"

#include "ctxdom/io/format.hpp"
#include "ctxdom/io/growth_io.hpp"
#include "ctxdom/io/poset_io.hpp"
#include "ctxdom/io/puzzle_io.hpp"
#include "ctxdom/io/quantum_io.hpp"

using namespace ctxdom;
using ctxdom::io::json;

TEST_SUITE_BEGIN("io");

TEST_CASE("number formatting is stable and plain") {
  CHECK(io::format_number(0.5) == "0.5");
  CHECK(io::format_number(1.0) == "1");
  CHECK(io::format_number(0.18872187554086717) == "0.188722");
  CHECK(io::format_number(100000.0) == "100000");
  CHECK(io::format_bool(true) == "true");
}

TEST_CASE("csv fields with separators get quoted") {
  CHECK(io::csv_field("plain") == "plain");
  CHECK(io::csv_field("a,b") == "\"a,b\"");
  CHECK(io::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("poset file parsing") {
  const json good = json::parse(R"({
    "elements": ["a", "b"],
    "covers": [["a", "b"]],
    "content": {"a": 1.0, "b": 0.0}
  })");
  const auto file = io::parse_poset_file(good);
  CHECK(file.spec.elements.size() == 2);
  CHECK(file.spec.covers.size() == 1);
  CHECK(file.spec.covers[0].first == "a");   // covers order is (lower, upper)
  REQUIRE(file.content.has_value());
  CHECK(file.content->at("a") == 1.0);

  CHECK_THROWS_AS(io::parse_poset_file(json::parse(
                      R"({"elements": ["a", "a"], "covers": []})")),
                  parse_error);
  CHECK_THROWS_AS(io::parse_poset_file(json::parse(R"({"covers": []})")),
                  parse_error);
  CHECK_THROWS_AS(io::parse_poset_file(json::parse(
                      R"({"elements": ["a"], "covers": [["a"]]})")),
                  parse_error);
  CHECK_THROWS_AS(io::parse_poset_file(json::parse(
                      R"({"elements": ["a"], "covers": [], "content": {"a": "x"}})")),
                  parse_error);
}

TEST_CASE("chain config parsing converts degrees to radians") {
  const json good = json::parse(R"({
    "initial": {"axis_deg": [0, 0], "sign": "+"},
    "contexts": [{"axis_deg": [90, 0]}, {"axis_deg": [0, 0]}],
    "trials": 500,
    "seed": 42
  })");
  const auto config = io::parse_chain_config(good);
  CHECK(config.trials == 500);
  CHECK(config.seed == 42);
  CHECK(config.initial_sign == Outcome::plus);
  REQUIRE(config.context_axes.size() == 2);
  CHECK(config.context_axes[0].theta() ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));

  CHECK_THROWS_AS(io::parse_chain_config(json::parse(
                      R"({"initial": {"axis_deg": [0, 0], "sign": "?"},
                          "contexts": [{"axis_deg": [0, 0]}]})")),
                  parse_error);
  CHECK_THROWS_AS(io::parse_chain_config(json::parse(
                      R"({"initial": {"axis_deg": [0, 0], "sign": "+"},
                          "contexts": []})")),
                  parse_error);
}

TEST_CASE("overlap config parsing") {
  const auto axes = io::parse_overlap_config(
      json::parse(R"({"axes_deg": [[0, 0], [90, 0]]})"));
  CHECK(axes.size() == 2);
  CHECK_THROWS_AS(
      io::parse_overlap_config(json::parse(R"({"axes_deg": [[0, 0]]})")),
      parse_error);
}

TEST_CASE("growth config parsing covers all three policies") {
  const auto fixed = io::parse_growth_config(json::parse(
      R"({"policy": "fixed", "steps": 6, "trials": 100, "seed": 1})"));
  CHECK(fixed.policy.kind == Policy::Kind::fixed);

  const auto alt = io::parse_growth_config(json::parse(
      R"({"policy": {"alternating_deg": 90}, "steps": 6, "trials": 100})"));
  CHECK(alt.policy.kind == Policy::Kind::alternating);
  CHECK(angle_between(alt.policy.first_axis, alt.policy.second_axis) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));

  const auto rnd = io::parse_growth_config(json::parse(
      R"({"policy": "random_axis", "steps": 6, "trials": 100})"));
  CHECK(rnd.policy.kind == Policy::Kind::random_axis);

  CHECK_THROWS_AS(io::parse_growth_config(json::parse(
                      R"({"policy": "warble", "steps": 6, "trials": 100})")),
                  parse_error);
  CHECK_THROWS_AS(io::parse_growth_config(json::parse(
                      R"({"policy": "fixed", "steps": 0, "trials": 100})")),
                  parse_error);
}

TEST_CASE("puzzle scenario parsing covers all three class forms") {
  const auto full = io::parse_puzzle_scenario(json::parse(
      R"({"N": 8, "class": "full", "reveals": [[0, 1]], "confidence": 0.9})"));
  CHECK(full.hypothesis_class.size() == 256);
  CHECK(full.static_flag);

  const auto periodic = io::parse_puzzle_scenario(json::parse(
      R"({"N": 8, "class": {"periodic": 2}, "reveals": [], "confidence": 0.99})"));
  CHECK(periodic.hypothesis_class.size() == 4);

  const auto explicit_class = io::parse_puzzle_scenario(json::parse(
      R"({"N": 4, "class": ["0101", "1111"], "reveals": [[0, 1]],
          "confidence": 0.5, "static": false})"));
  CHECK(explicit_class.hypothesis_class.size() == 2);
  CHECK_FALSE(explicit_class.static_flag);

  CHECK_THROWS_AS(io::parse_puzzle_scenario(json::parse(
                      R"({"N": 4, "class": ["01"], "reveals": [],
                          "confidence": 0.5})")),
                  parse_error);
  CHECK_THROWS_AS(io::parse_puzzle_scenario(json::parse(
                      R"({"N": 4, "class": "full", "reveals": [],
                          "confidence": 1.5})")),
                  parse_error);
}

TEST_CASE("loading a missing file is a parse error") {
  CHECK_THROWS_AS(io::load_json("definitely_not_here.json"), parse_error);
}

TEST_SUITE_END();

// ctxdom — order-theoretic information measures and spin-1/2 measurement
// chains from the command line.
//
// Subcommands: poset, chain, overlap, growth, puzzle. Each reads a JSON
// input file (schema documented in the README) and emits CSV or JSON.
// Exit codes: 0 success, 1 input/parse errors, 2 invariant-violation
// detections.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ctxdom/classical.hpp"
#include "ctxdom/experiments.hpp"
#include "ctxdom/info.hpp"
#include "ctxdom/io/format.hpp"
#include "ctxdom/io/growth_io.hpp"
#include "ctxdom/io/json_common.hpp"
#include "ctxdom/io/poset_io.hpp"
#include "ctxdom/io/puzzle_io.hpp"
#include "ctxdom/io/quantum_io.hpp"
#include "ctxdom/order.hpp"
#include "ctxdom/quantum.hpp"

namespace {

using ctxdom::io::format_bool;
using ctxdom::io::format_number;
using ctxdom::io::json;

struct CommonOpts {
  std::string input;
  std::string format = "csv";
  std::string output;  // empty = stdout
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
};

void write_output(const CommonOpts& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) throw ctxdom::parse_error("cannot write " + opts.output);
  out << text;
}

std::size_t poset_enumeration_cap() {
  const char* env = std::getenv("CTXDOM_MAX_POSET");
  if (!env) return ctxdom::kDefaultEnumerationCap;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || v == 0)
    throw ctxdom::parse_error("CTXDOM_MAX_POSET must be a positive integer");
  return static_cast<std::size_t>(v);
}

// ---------------------------------------------------------------- poset ---

int run_poset(const CommonOpts& opts) {
  const auto file = ctxdom::io::parse_poset_file(ctxdom::io::load_json(opts.input));
  const std::size_t cap = poset_enumeration_cap();

  const ctxdom::FiniteDomain domain = ctxdom::validate_poset(file.spec);
  const bool dcpo = ctxdom::is_dcpo(domain, cap);
  const auto maximal = ctxdom::maximal_elements(domain);
  const auto table = ctxdom::way_below_table(domain, cap);

  std::optional<ctxdom::MeasurementMap> measurement;
  if (file.content) measurement.emplace(domain, *file.content);

  if (opts.format == "json") {
    json doc;
    doc["valid"] = true;
    doc["element_count"] = domain.size();
    doc["enumeration_cap"] = cap;
    doc["dcpo"] = dcpo;
    doc["maximal"] = maximal;
    json wb = json::array();
    for (std::size_t x = 0; x < domain.size(); ++x)
      for (std::size_t y = 0; y < domain.size(); ++y)
        wb.push_back({{"x", domain.id_of(x)},
                      {"y", domain.id_of(y)},
                      {"way_below", static_cast<bool>(table[x][y])}});
    doc["way_below"] = wb;
    if (measurement) {
      json ortho = json::array();
      for (std::size_t x = 0; x < domain.size(); ++x)
        for (std::size_t y = x; y < domain.size(); ++y)
          ortho.push_back({{"x", domain.id_of(x)},
                           {"y", domain.id_of(y)},
                           {"orthogonal", ctxdom::orthogonal(
                                              *measurement, domain.id_of(x),
                                              domain.id_of(y))}});
      doc["orthogonal"] = ortho;
    }
    write_output(opts, doc.dump(2) + "\n");
    return 0;
  }

  std::ostringstream csv;
  csv << "section,x,y,value\n";
  csv << "meta,valid,," << format_bool(true) << "\n";
  csv << "meta,element_count,," << domain.size() << "\n";
  csv << "meta,enumeration_cap,," << cap << "\n";
  csv << "meta,dcpo,," << format_bool(dcpo) << "\n";
  for (const auto& id : maximal)
    csv << "maximal," << ctxdom::io::csv_field(id) << ",,true\n";
  for (std::size_t x = 0; x < domain.size(); ++x)
    for (std::size_t y = 0; y < domain.size(); ++y)
      csv << "way_below," << ctxdom::io::csv_field(domain.id_of(x)) << ","
          << ctxdom::io::csv_field(domain.id_of(y)) << ","
          << format_bool(table[x][y]) << "\n";
  if (measurement)
    for (std::size_t x = 0; x < domain.size(); ++x)
      for (std::size_t y = x; y < domain.size(); ++y)
        csv << "orthogonal," << ctxdom::io::csv_field(domain.id_of(x)) << ","
            << ctxdom::io::csv_field(domain.id_of(y)) << ","
            << format_bool(ctxdom::orthogonal(*measurement, domain.id_of(x),
                                              domain.id_of(y)))
            << "\n";
  write_output(opts, csv.str());
  return 0;
}

// ---------------------------------------------------------------- chain ---

struct ResetSummary {
  double p_third_plus_given_first_plus = 0.0;
  double p_third_minus_given_first_plus = 0.0;
  double overlap_direct = 0.0;
  double overlap_along_chain = 0.0;
};

// The reset pattern of the three-device chain: middle axis at right angles
// to both neighbors, outer axes identical.
std::optional<ResetSummary> detect_reset(
    const std::vector<ctxdom::SpinAxis>& axes,
    const std::map<std::string, double>& exact) {
  if (axes.size() != 3) return std::nullopt;
  constexpr double kAngleTol = 1e-6;
  const double ab = ctxdom::angle_between(axes[0], axes[1]);
  const double bc = ctxdom::angle_between(axes[1], axes[2]);
  const double ac = ctxdom::angle_between(axes[0], axes[2]);
  if (std::abs(ab - std::numbers::pi / 2) > kAngleTol ||
      std::abs(bc - std::numbers::pi / 2) > kAngleTol || ac > kAngleTol)
    return std::nullopt;

  double first_plus = 0.0, third_plus = 0.0, third_minus = 0.0;
  for (const auto& [seq, p] : exact) {
    if (seq[0] != '+') continue;
    first_plus += p;
    (seq[2] == '+' ? third_plus : third_minus) += p;
  }
  if (first_plus <= 1e-12) return std::nullopt;

  ResetSummary s;
  s.p_third_plus_given_first_plus = third_plus / first_plus;
  s.p_third_minus_given_first_plus = third_minus / first_plus;
  s.overlap_direct = ctxdom::context_overlap(axes[0], axes[2]);
  s.overlap_along_chain = ctxdom::context_overlap(axes[0], axes[1]) *
                          ctxdom::context_overlap(axes[1], axes[2]);
  return s;
}

int run_chain(const CommonOpts& opts) {
  auto config = ctxdom::io::parse_chain_config(ctxdom::io::load_json(opts.input));
  if (opts.seed) config.seed = *opts.seed;
  if (opts.trials) config.trials = *opts.trials;

  std::vector<ctxdom::Context> contexts;
  for (const auto& axis : config.context_axes)
    contexts.push_back(ctxdom::context_from_axis(axis));
  const ctxdom::Context prep = ctxdom::context_from_axis(config.initial_axis);
  const ctxdom::PureState initial = prep.eigenstate(config.initial_sign);

  const auto exact = ctxdom::chain_distribution(initial, contexts);

  std::map<std::string, std::size_t> counts;
  for (std::size_t i = 0; i < config.trials; ++i) {
    const auto record =
        ctxdom::run_chain(initial, contexts, ctxdom::rng::sub_seed(config.seed, i));
    counts[record.outcome_string()]++;
  }
  const double n = static_cast<double>(config.trials);

  // per-step outcome frequencies, empirical and exact
  const std::size_t len = contexts.size();
  std::vector<double> emp_plus(len, 0.0), exact_plus(len, 0.0);
  for (const auto& [seq, count] : counts)
    for (std::size_t k = 0; k < len; ++k)
      if (seq[k] == '+') emp_plus[k] += static_cast<double>(count) / n;
  for (const auto& [seq, p] : exact)
    for (std::size_t k = 0; k < len; ++k)
      if (seq[k] == '+') exact_plus[k] += p;

  double tv = 0.0;
  for (const auto& [seq, p] : exact) {
    const auto it = counts.find(seq);
    const double emp = it == counts.end() ? 0.0 : static_cast<double>(it->second) / n;
    tv += std::abs(p - emp);
  }
  tv /= 2.0;

  const auto reset = detect_reset(config.context_axes, exact);

  if (opts.format == "json") {
    json doc;
    doc["trials"] = config.trials;
    doc["seed"] = config.seed;
    json steps = json::array();
    for (std::size_t k = 0; k < len; ++k)
      steps.push_back({{"step", k + 1},
                       {"empirical_plus", emp_plus[k]},
                       {"empirical_minus", 1.0 - emp_plus[k]},
                       {"exact_plus", exact_plus[k]},
                       {"exact_minus", 1.0 - exact_plus[k]}});
    doc["steps"] = steps;
    json sequences = json::array();
    for (const auto& [seq, p] : exact) {
      const auto it = counts.find(seq);
      sequences.push_back(
          {{"sequence", seq},
           {"empirical", it == counts.end() ? 0.0 : static_cast<double>(it->second) / n},
           {"exact", p}});
    }
    doc["sequences"] = sequences;
    doc["tv_distance"] = tv;
    if (reset) {
      doc["reset"] = {
          {"p_third_plus_given_first_plus", reset->p_third_plus_given_first_plus},
          {"p_third_minus_given_first_plus", reset->p_third_minus_given_first_plus},
          {"overlap_direct", reset->overlap_direct},
          {"overlap_along_chain", reset->overlap_along_chain}};
    }
    write_output(opts, doc.dump(2) + "\n");
    return 0;
  }

  std::ostringstream csv;
  csv << "section,key,empirical,exact\n";
  for (std::size_t k = 0; k < len; ++k) {
    csv << "step," << (k + 1) << ":+," << format_number(emp_plus[k]) << ","
        << format_number(exact_plus[k]) << "\n";
    csv << "step," << (k + 1) << ":-," << format_number(1.0 - emp_plus[k])
        << "," << format_number(1.0 - exact_plus[k]) << "\n";
  }
  for (const auto& [seq, p] : exact) {
    const auto it = counts.find(seq);
    const double emp = it == counts.end() ? 0.0 : static_cast<double>(it->second) / n;
    csv << "sequence," << seq << "," << format_number(emp) << ","
        << format_number(p) << "\n";
  }
  csv << "summary,tv_distance," << format_number(tv) << ",\n";
  csv << "summary,trials," << config.trials << ",\n";
  csv << "summary,seed," << config.seed << ",\n";
  if (reset) {
    csv << "reset,p_third_plus_given_first_plus,,"
        << format_number(reset->p_third_plus_given_first_plus) << "\n";
    csv << "reset,p_third_minus_given_first_plus,,"
        << format_number(reset->p_third_minus_given_first_plus) << "\n";
    csv << "reset,overlap_direct,," << format_number(reset->overlap_direct)
        << "\n";
    csv << "reset,overlap_along_chain,,"
        << format_number(reset->overlap_along_chain) << "\n";
  }
  write_output(opts, csv.str());
  return 0;
}

// -------------------------------------------------------------- overlap ---

int run_overlap(const CommonOpts& opts) {
  const auto axes =
      ctxdom::io::parse_overlap_config(ctxdom::io::load_json(opts.input));

  if (opts.format == "json") {
    json pairs = json::array();
    for (std::size_t i = 0; i < axes.size(); ++i)
      for (std::size_t j = i + 1; j < axes.size(); ++j)
        pairs.push_back(
            {{"i", i},
             {"j", j},
             {"angle_deg",
              ctxdom::angle_between(axes[i], axes[j]) * 180.0 / std::numbers::pi},
             {"overlap", ctxdom::context_overlap(axes[i], axes[j])}});
    json doc;
    doc["pairs"] = pairs;
    write_output(opts, doc.dump(2) + "\n");
    return 0;
  }

  std::ostringstream csv;
  csv << "i,j,angle_deg,overlap\n";
  for (std::size_t i = 0; i < axes.size(); ++i)
    for (std::size_t j = i + 1; j < axes.size(); ++j) {
      const double deg =
          ctxdom::angle_between(axes[i], axes[j]) * 180.0 / std::numbers::pi;
      csv << i << "," << j << "," << format_number(deg) << ","
          << format_number(ctxdom::context_overlap(axes[i], axes[j])) << "\n";
    }
  write_output(opts, csv.str());
  return 0;
}

// --------------------------------------------------------------- growth ---

int run_growth(const CommonOpts& opts) {
  auto config = ctxdom::io::parse_growth_config(ctxdom::io::load_json(opts.input));
  if (opts.seed) config.seed = *opts.seed;
  if (opts.trials) config.trials = *opts.trials;

  const ctxdom::PureState initial =
      ctxdom::context_from_axis(config.initial_axis).eigenstate(config.initial_sign);
  const ctxdom::GrowthCurve curve = ctxdom::entropy_growth(
      config.policy, config.steps, config.trials, config.seed, initial);
  const ctxdom::SecondLawReport report = ctxdom::second_law_report({curve});

  if (opts.format == "json") {
    json points = json::array();
    for (const auto& p : curve.points) {
      json point = {{"step", p.step},
                    {"empirical_entropy_bits", p.empirical_bits},
                    {"stderr_bits", p.stderr_bits}};
      point["exact_entropy_bits"] =
          p.exact_bits ? json(*p.exact_bits) : json(nullptr);
      points.push_back(point);
    }
    json arms = json::array();
    for (const auto& arm : report.arms)
      arms.push_back({{"policy", arm.policy},
                      {"verdict", arm.verdict},
                      {"expected", arm.expected},
                      {"ok", arm.ok},
                      {"max_increment", arm.max_increment},
                      {"mean_increment", arm.mean_increment}});
    json doc;
    doc["policy"] = config.policy.kind_name();
    doc["trials"] = config.trials;
    doc["seed"] = config.seed;
    doc["curve"] = points;
    doc["report"] = arms;
    write_output(opts, doc.dump(2) + "\n");
    return report.all_ok ? 0 : 2;
  }

  std::ostringstream csv;
  csv << "step,empirical_entropy_bits,exact_entropy_bits,stderr_bits\n";
  for (const auto& p : curve.points) {
    csv << p.step << "," << format_number(p.empirical_bits) << ",";
    if (p.exact_bits) csv << format_number(*p.exact_bits);
    csv << "," << format_number(p.stderr_bits) << "\n";
  }
  write_output(opts, csv.str());

  for (const auto& arm : report.arms)
    std::cerr << "policy=" << arm.policy << " verdict=" << arm.verdict
              << " expected=" << arm.expected
              << " mean_increment=" << format_number(arm.mean_increment)
              << " max_increment=" << format_number(arm.max_increment)
              << " ok=" << format_bool(arm.ok) << "\n";
  return report.all_ok ? 0 : 2;
}

// --------------------------------------------------------------- puzzle ---

int run_puzzle(const CommonOpts& opts) {
  const auto scenario =
      ctxdom::io::parse_puzzle_scenario(ctxdom::io::load_json(opts.input));

  ctxdom::Trajectory trajectory;
  trajectory.static_flag = scenario.static_flag;
  ctxdom::PuzzleState state(scenario.length, scenario.hypothesis_class);
  trajectory.states.push_back(state);
  for (const auto& [index, bit] : scenario.reveals) {
    state = ctxdom::place_piece(state, index, bit);
    trajectory.states.push_back(state);
  }

  const auto threshold =
      ctxdom::determinism_threshold(trajectory, scenario.confidence);

  if (opts.format == "json") {
    json states = json::array();
    for (std::size_t i = 0; i < trajectory.states.size(); ++i) {
      const auto& s = trajectory.states[i];
      const auto guess = ctxdom::predict_message(s, scenario.confidence);
      states.push_back({{"state", i},
                        {"revealed", s.revealed().size()},
                        {"entropy_bits", ctxdom::puzzle_entropy(s)},
                        {"consistent", s.count_consistent()},
                        {"prediction", guess ? json(*guess) : json(nullptr)}});
    }
    json doc;
    doc["confidence"] = scenario.confidence;
    doc["static"] = scenario.static_flag;
    doc["states"] = states;
    doc["threshold"] = threshold ? json(*threshold) : json(nullptr);
    write_output(opts, doc.dump(2) + "\n");
    return 0;
  }

  std::ostringstream csv;
  csv << "row,state,revealed,entropy_bits,consistent,prediction\n";
  for (std::size_t i = 0; i < trajectory.states.size(); ++i) {
    const auto& s = trajectory.states[i];
    const auto guess = ctxdom::predict_message(s, scenario.confidence);
    csv << "state," << i << "," << s.revealed().size() << ","
        << format_number(ctxdom::puzzle_entropy(s)) << ","
        << s.count_consistent() << "," << (guess ? *guess : "") << "\n";
  }
  csv << "threshold,";
  if (threshold) {
    const auto guess =
        ctxdom::predict_message(trajectory.states[*threshold], scenario.confidence);
    csv << *threshold << ",,,," << (guess ? *guess : "") << "\n";
  } else {
    csv << ",,,,\n";
  }
  write_output(opts, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"order-theoretic information measures and sequential spin-1/2 "
               "measurement chains"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::uint64_t seed_arg = 0;
  std::size_t trials_arg = 0;
  std::vector<CLI::Option*> seed_opts;
  std::vector<CLI::Option*> trials_opts;

  auto add_common = [&](CLI::App* cmd, bool sampled) {
    cmd->add_option("--input", opts.input, "input JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", opts.output, "write output to a file");
    if (sampled) {
      seed_opts.push_back(
          cmd->add_option("--seed", seed_arg, "override the config seed"));
      trials_opts.push_back(
          cmd->add_option("--trials", trials_arg, "override the config trials")
              ->check(CLI::PositiveNumber));
    }
  };

  CLI::App* poset = app.add_subcommand(
      "poset", "validate a poset; report maximal elements, dcpo check, "
               "way-below table and orthogonality");
  add_common(poset, false);
  CLI::App* chain = app.add_subcommand(
      "chain", "run a sequential measurement chain against its exact "
               "distribution");
  add_common(chain, true);
  CLI::App* overlap =
      app.add_subcommand("overlap", "tabulate pairwise context overlaps");
  add_common(overlap, false);
  CLI::App* growth = app.add_subcommand(
      "growth", "record-entropy growth of a measurement policy");
  add_common(growth, true);
  CLI::App* puzzle = app.add_subcommand(
      "puzzle", "puzzle entropy, prediction and the determinism threshold");
  add_common(puzzle, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help requests exit 0; every argument problem is an input error (1)
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  for (const CLI::Option* o : seed_opts)
    if (o->count()) opts.seed = seed_arg;
  for (const CLI::Option* o : trials_opts)
    if (o->count()) opts.trials = trials_arg;

  try {
    if (poset->parsed()) return run_poset(opts);
    if (chain->parsed()) return run_chain(opts);
    if (overlap->parsed()) return run_overlap(opts);
    if (growth->parsed()) return run_growth(opts);
    if (puzzle->parsed()) return run_puzzle(opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

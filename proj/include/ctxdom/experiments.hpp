#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctxdom/errors.hpp"
#include "ctxdom/info.hpp"
#include "ctxdom/quantum.hpp"
#include "ctxdom/rng.hpp"

// Entropy growth of measurement records under basis-changing policies versus
// a fixed basis: seeded Monte Carlo ensembles with exact analytic baselines
// where the policy admits one, and a verdict report juxtaposing the arms.

namespace ctxdom {

/// A rule for choosing the measurement basis at every step of a chain.
struct Policy {
  enum class Kind { fixed, alternating, random_axis };

  Kind kind = Kind::fixed;
  SpinAxis first_axis = SpinAxis::z();   // fixed axis, or first of the pair
  SpinAxis second_axis = SpinAxis::z();  // second of the alternating pair

  static Policy fixed(SpinAxis axis = SpinAxis::z()) {
    return Policy{Kind::fixed, axis, axis};
  }

  /// Alternates between the z axis and an axis at the given angle from it.
  static Policy alternating(double theta) {
    return Policy{Kind::alternating, SpinAxis::z(), SpinAxis(theta, 0.0)};
  }

  static Policy alternating_pair(SpinAxis a, SpinAxis b) {
    return Policy{Kind::alternating, a, b};
  }

  static Policy random_axis() {
    return Policy{Kind::random_axis, SpinAxis::z(), SpinAxis::z()};
  }

  std::string kind_name() const {
    switch (kind) {
      case Kind::fixed: return "fixed";
      case Kind::alternating: return "alternating";
      case Kind::random_axis: return "random_axis";
    }
    return "?";
  }
};

namespace detail {

// Axis draws use a dedicated child stream so they can never collide with a
// trial's sub-seed.
inline constexpr std::uint64_t kAxisStream = ~std::uint64_t{0};

inline SpinAxis uniform_axis(std::uint64_t axis_seed, std::size_t step) {
  const double u = rng::uniform01(axis_seed, 2 * step);
  const double v = rng::uniform01(axis_seed, 2 * step + 1);
  // acos(1-2u) makes the direction uniform on the sphere.
  return SpinAxis(std::acos(1.0 - 2.0 * u), 2.0 * std::numbers::pi * v);
}

}  // namespace detail

/// The context sequence a policy prescribes. The sequence is a function of
/// (policy, steps, seed) alone and is shared by every trial of an ensemble:
/// the experimenter picks the bases, the quantum outcomes vary.
inline std::vector<Context> policy_contexts(const Policy& policy,
                                            std::size_t steps,
                                            std::uint64_t seed) {
  if (steps < 1) throw invalid_policy("steps must be >= 1");
  std::vector<Context> contexts;
  contexts.reserve(steps);
  switch (policy.kind) {
    case Policy::Kind::fixed: {
      const Context ctx = context_from_axis(policy.first_axis);
      contexts.assign(steps, ctx);
      break;
    }
    case Policy::Kind::alternating: {
      const Context a = context_from_axis(policy.first_axis);
      const Context b = context_from_axis(policy.second_axis);
      for (std::size_t k = 0; k < steps; ++k)
        contexts.push_back(k % 2 == 0 ? a : b);
      break;
    }
    case Policy::Kind::random_axis: {
      const std::uint64_t axis_seed = rng::sub_seed(seed, detail::kAxisStream);
      for (std::size_t k = 0; k < steps; ++k)
        contexts.push_back(context_from_axis(detail::uniform_axis(axis_seed, k)));
      break;
    }
  }
  return contexts;
}

/// Counts of outcome prefixes of the given length across an ensemble.
inline std::map<std::string, std::size_t> prefix_counts(
    const std::vector<OutcomeRecord>& records, std::size_t upto_step) {
  if (records.empty()) throw empty_record_set("no records");
  std::map<std::string, std::size_t> counts;
  for (const auto& r : records) {
    if (upto_step < 1 || upto_step > r.steps.size())
      throw step_out_of_range("prefix length " + std::to_string(upto_step) +
                              " for a chain of length " +
                              std::to_string(r.steps.size()));
    counts[r.outcome_string().substr(0, upto_step)]++;
  }
  return counts;
}

/// Shannon entropy of the empirical distribution of outcome prefixes of the
/// given length.
inline double record_entropy(const std::vector<OutcomeRecord>& records,
                             std::size_t upto_step) {
  const auto counts = prefix_counts(records, upto_step);
  const double n = static_cast<double>(records.size());
  std::vector<double> freqs;
  freqs.reserve(counts.size());
  for (const auto& [prefix, count] : counts)
    freqs.push_back(static_cast<double>(count) / n);
  return shannon_entropy(ProbVector(std::move(freqs)));
}

/// Jackknife standard error of the plug-in entropy estimator. Leave-one-out
/// estimates coincide within a prefix class, so the sum runs over classes
/// weighted by their multiplicity.
inline double record_entropy_stderr(
    const std::map<std::string, std::size_t>& counts, std::size_t n) {
  if (n < 2 || counts.size() < 2) return 0.0;
  const double total = static_cast<double>(n);
  std::vector<double> loo;      // leave-one-out entropy per class
  std::vector<double> weight;   // class multiplicity
  loo.reserve(counts.size());
  weight.reserve(counts.size());
  for (const auto& [removed, removed_count] : counts) {
    double h = 0.0;
    for (const auto& [prefix, count] : counts) {
      const double adjusted =
          static_cast<double>(count) - (prefix == removed ? 1.0 : 0.0);
      if (adjusted > 0.0) {
        const double f = adjusted / (total - 1.0);
        h -= f * std::log2(f);
      }
    }
    loo.push_back(h);
    weight.push_back(static_cast<double>(removed_count));
  }
  double mean = 0.0;
  for (std::size_t i = 0; i < loo.size(); ++i) mean += weight[i] * loo[i];
  mean /= total;
  double ss = 0.0;
  for (std::size_t i = 0; i < loo.size(); ++i)
    ss += weight[i] * (loo[i] - mean) * (loo[i] - mean);
  return std::sqrt((total - 1.0) / total * ss);
}

struct GrowthPoint {
  std::size_t step = 0;
  double empirical_bits = 0.0;
  std::optional<double> exact_bits;  // closed form, when the policy has one
  double stderr_bits = 0.0;
};

/// Record-entropy curve of one policy arm. Reproducible bit-for-bit from
/// (policy, steps, trials, seed).
struct GrowthCurve {
  Policy policy;
  std::vector<GrowthPoint> points;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

/// Closed-form record entropy after k steps, when available. The outcome
/// sequence is a two-state Markov chain: entry distribution from the Born
/// rule at the first context, then per-step flip probability sin²(θ/2) of
/// the angle between consecutive axes. Fixed bases never flip; alternating
/// bases flip with a constant rate, so the prefix entropy is
/// H₂(p₁) + (k−1)·H₂(sin² θ/2).
inline std::optional<double> exact_record_entropy(const Policy& policy,
                                                  const PureState& initial,
                                                  std::size_t step) {
  const Context first = context_from_axis(policy.first_axis);
  const double p1 = born_probabilities(initial, first)[0];
  switch (policy.kind) {
    case Policy::Kind::fixed:
      return binary_entropy(p1);
    case Policy::Kind::alternating: {
      const double theta = angle_between(policy.first_axis, policy.second_axis);
      const double flip = std::sin(theta / 2.0) * std::sin(theta / 2.0);
      return binary_entropy(p1) +
             static_cast<double>(step - 1) * binary_entropy(flip);
    }
    case Policy::Kind::random_axis:
      return std::nullopt;
  }
  return std::nullopt;
}

/// Runs `trials` independent chains under the policy and returns the record
/// entropy per step. Trial i draws its outcomes from sub-seed (seed, i), so
/// any execution order — or degree of parallelism — yields the same curve.
inline GrowthCurve entropy_growth(
    const Policy& policy, std::size_t steps, std::size_t trials,
    std::uint64_t seed,
    const PureState& initial = context_from_axis(SpinAxis::z()).plus_state) {
  if (steps < 1) throw invalid_policy("steps must be >= 1");
  if (trials < 1) throw invalid_policy("trials must be >= 1");

  const auto contexts = policy_contexts(policy, steps, seed);
  std::vector<OutcomeRecord> records;
  records.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i)
    records.push_back(run_chain(initial, contexts, rng::sub_seed(seed, i)));

  GrowthCurve curve{policy, {}, trials, seed};
  curve.points.reserve(steps);
  for (std::size_t k = 1; k <= steps; ++k) {
    const auto counts = prefix_counts(records, k);
    GrowthPoint point;
    point.step = k;
    point.empirical_bits = record_entropy(records, k);
    point.exact_bits = exact_record_entropy(policy, initial, k);
    point.stderr_bits = record_entropy_stderr(counts, trials);
    curve.points.push_back(point);
  }
  return curve;
}

/// Curves with increments below this are flat; a mean increment above it is
/// growth.
inline constexpr double kFlatToleranceBits = 0.02;

struct PolicyVerdict {
  std::string policy;
  std::string verdict;   // observed: "flat" | "increasing" | "irregular"
  std::string expected;  // what the policy kind implies
  bool ok = false;
  double max_increment = 0.0;
  double mean_increment = 0.0;
};

struct SecondLawReport {
  std::vector<PolicyVerdict> arms;
  bool all_ok = true;
};

/// Judges each curve flat or increasing and compares against what its policy
/// arm should do: a never-changing basis pins the record, any genuinely
/// basis-changing policy keeps creating fresh alternatives.
inline SecondLawReport second_law_report(
    const std::vector<GrowthCurve>& curves) {
  if (curves.empty()) throw insufficient_data("no curves");
  SecondLawReport report;
  for (const auto& curve : curves) {
    if (curve.points.size() < 2)
      throw insufficient_data("a curve needs at least 2 steps to judge growth");

    PolicyVerdict v;
    v.policy = curve.policy.kind_name();

    double max_inc = -1e300, min_inc = 1e300, sum_inc = 0.0, max_se = 0.0;
    for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
      const double inc =
          curve.points[i + 1].empirical_bits - curve.points[i].empirical_bits;
      max_inc = std::max(max_inc, inc);
      min_inc = std::min(min_inc, inc);
      sum_inc += inc;
      max_se = std::max(max_se, curve.points[i + 1].stderr_bits);
    }
    v.max_increment = max_inc;
    v.mean_increment = sum_inc / static_cast<double>(curve.points.size() - 1);

    if (std::abs(max_inc) < kFlatToleranceBits &&
        std::abs(min_inc) < kFlatToleranceBits)
      v.verdict = "flat";
    else if (min_inc >= -3.0 * max_se && v.mean_increment > kFlatToleranceBits)
      v.verdict = "increasing";
    else
      v.verdict = "irregular";

    switch (curve.policy.kind) {
      case Policy::Kind::fixed:
        v.expected = "flat";
        break;
      case Policy::Kind::alternating: {
        const double theta =
            angle_between(curve.policy.first_axis, curve.policy.second_axis);
        const double flip = std::sin(theta / 2.0) * std::sin(theta / 2.0);
        v.expected =
            binary_entropy(flip) < kFlatToleranceBits ? "flat" : "increasing";
        break;
      }
      case Policy::Kind::random_axis:
        v.expected = "increasing";
        break;
    }
    v.ok = v.verdict == v.expected;
    report.all_ok = report.all_ok && v.ok;
    report.arms.push_back(std::move(v));
  }
  return report;
}

}  // namespace ctxdom

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ctxdom/errors.hpp"
#include "ctxdom/order.hpp"

// Information measures: Shannon entropy on finite distributions, the two
// measurement laws (monotonicity, reflection of maximal elements), the
// Bayesian order on distributions and the best-guess success probability.

namespace ctxdom {

/// Normalization tolerance for probability vectors.
inline constexpr double kDistributionTol = 1e-9;

/// A finite probability distribution. Entries are validated to be in [0,1]
/// and to sum to 1 within kDistributionTol; entries within tolerance of the
/// boundary are clamped into range.
class ProbVector {
 public:
  explicit ProbVector(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty())
      throw invalid_distribution("distribution must have length >= 1");
    double sum = 0.0;
    for (double& p : probs_) {
      if (!std::isfinite(p) || p < -kDistributionTol || p > 1.0 + kDistributionTol)
        throw invalid_distribution("entry " + std::to_string(p) +
                                   " outside [0,1]");
      p = std::clamp(p, 0.0, 1.0);
      sum += p;
    }
    if (std::abs(sum - 1.0) > kDistributionTol)
      throw invalid_distribution("entries sum to " + std::to_string(sum));
  }

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& values() const { return probs_; }

 private:
  std::vector<double> probs_;
};

/// −Σ p_i log₂ p_i with the 0·log 0 = 0 convention. Result in [0, log₂ n].
inline double shannon_entropy(const ProbVector& p) {
  double h = 0.0;
  for (double x : p.values())
    if (x > 0.0) h -= x * std::log2(x);
  return std::max(h, 0.0);
}

/// Binary entropy in bits of a single probability.
inline double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return std::max(h, 0.0);
}

/// Outcome of checking a content map against the measurement laws.
/// For the monotonicity check, violations are (lower, upper) pairs whose
/// content increases along the order; for the max-reflection check they are
/// (zero-content element, strictly greater element) witnesses.
struct ContentReport {
  bool monotone = true;
  bool max_reflecting = true;
  std::vector<std::pair<std::string, std::string>> violations;
};

/// The first measurement law: x ⊑ y implies content(x) ≥ content(y).
inline ContentReport is_monotone_measurement(const MeasurementMap& m) {
  const auto& d = m.domain();
  ContentReport report;
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t y = 0; y < d.size(); ++y) {
      if (x == y || !d.leq_index(x, y)) continue;
      if (m.content_at(x) < m.content_at(y) - kContentTol) {
        report.monotone = false;
        report.violations.emplace_back(d.id_of(x), d.id_of(y));
      }
    }
  return report;
}

/// The second measurement law: content zero (the maximal content value in
/// the reversed-order codomain) only occurs on maximal elements.
inline ContentReport reflects_max(const MeasurementMap& m) {
  const auto& d = m.domain();
  ContentReport report;
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (m.content_at(x) > kContentTol) continue;
    for (std::size_t y = 0; y < d.size(); ++y)
      if (y != x && d.leq_index(x, y)) {
        report.max_reflecting = false;
        report.violations.emplace_back(d.id_of(x), d.id_of(y));
      }
  }
  return report;
}

/// The Bayesian order on distributions of equal length: with both arguments
/// sorted in non-increasing order, x ⊑ y iff x_i·y_{i+1} ≤ x_{i+1}·y_i for
/// every consecutive pair. Reflexive and transitive; Shannon entropy is
/// monotone decreasing along it.
inline bool bayesian_leq(const ProbVector& x, const ProbVector& y) {
  if (x.size() != y.size())
    throw dimension_mismatch("distributions have lengths " +
                             std::to_string(x.size()) + " and " +
                             std::to_string(y.size()));
  std::vector<double> xs = x.values();
  std::vector<double> ys = y.values();
  std::sort(xs.rbegin(), xs.rend());
  std::sort(ys.rbegin(), ys.rend());
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (xs[i] * ys[i + 1] > xs[i + 1] * ys[i] + kContentTol) return false;
  return true;
}

/// Probability of determining the value with one best guess: max_i p_i.
inline double success_probability(const ProbVector& p) {
  return *std::max_element(p.values().begin(), p.values().end());
}

}  // namespace ctxdom

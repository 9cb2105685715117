#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "ctxdom/errors.hpp"
#include "ctxdom/info.hpp"
#include "ctxdom/rng.hpp"

// Spin-1/2 states and measurement contexts: Born probabilities, projective
// collapse, seeded sequential measurement chains with an exact distribution
// oracle, the context-overlap quantifier, von Neumann entropy and its
// factorization through a classical measurement.

namespace ctxdom {

using Amplitude = std::complex<double>;

inline constexpr double kUnitTol = 1e-12;

enum class Outcome : std::uint8_t { plus, minus };

inline char outcome_char(Outcome o) { return o == Outcome::plus ? '+' : '-'; }

/// A spatial direction in polar coordinates. Angles are normalized into
/// θ ∈ [0, π], φ ∈ [0, 2π); non-finite input is rejected.
class SpinAxis {
 public:
  SpinAxis(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi))
      throw invalid_axis("angles must be finite");
    constexpr double tau = 2.0 * std::numbers::pi;
    theta = std::fmod(theta, tau);
    if (theta < 0.0) theta += tau;
    if (theta > std::numbers::pi) {
      theta = tau - theta;
      phi += std::numbers::pi;
    }
    phi = std::fmod(phi, tau);
    if (phi < 0.0) phi += tau;
    theta_ = theta;
    phi_ = phi;
  }

  static SpinAxis from_degrees(double theta_deg, double phi_deg) {
    constexpr double rad = std::numbers::pi / 180.0;
    return SpinAxis(theta_deg * rad, phi_deg * rad);
  }

  static SpinAxis z() { return SpinAxis(0.0, 0.0); }
  static SpinAxis x() { return SpinAxis(std::numbers::pi / 2.0, 0.0); }

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  std::array<double, 3> unit_vector() const {
    return {std::sin(theta_) * std::cos(phi_),
            std::sin(theta_) * std::sin(phi_), std::cos(theta_)};
  }

 private:
  double theta_;
  double phi_;
};

/// Angle between two axes, from the clamped arccosine of the dot product.
inline double angle_between(const SpinAxis& a, const SpinAxis& b) {
  const auto u = a.unit_vector();
  const auto v = b.unit_vector();
  const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

/// A normalized spin-1/2 state.
class PureState {
 public:
  explicit PureState(std::array<Amplitude, 2> amplitudes)
      : amp_(amplitudes) {
    const double norm2 = std::norm(amp_[0]) + std::norm(amp_[1]);
    if (!std::isfinite(norm2) || std::abs(std::sqrt(norm2) - 1.0) > kUnitTol)
      throw invalid_state("state norm is " + std::to_string(std::sqrt(norm2)));
  }

  const Amplitude& operator[](std::size_t i) const { return amp_[i]; }

  Amplitude inner(const PureState& other) const {
    return std::conj(amp_[0]) * other.amp_[0] +
           std::conj(amp_[1]) * other.amp_[1];
  }

 private:
  std::array<Amplitude, 2> amp_;
};

/// A measurement context: the orthonormal eigenbasis of a spatial axis.
/// plus/minus are aligned/anti-aligned with the axis; their inner product
/// vanishes by construction.
struct Context {
  SpinAxis axis;
  PureState plus_state;
  PureState minus_state;

  const PureState& eigenstate(Outcome o) const {
    return o == Outcome::plus ? plus_state : minus_state;
  }
};

/// Eigenbasis of the spin observable along the axis, with the global phase
/// fixed as plus = (cos θ/2, e^{iφ} sin θ/2),
///         minus = (sin θ/2, −e^{iφ} cos θ/2).
inline Context context_from_axis(const SpinAxis& axis) {
  const double half = axis.theta() / 2.0;
  const Amplitude phase = std::polar(1.0, axis.phi());
  PureState plus({Amplitude(std::cos(half), 0.0), phase * std::sin(half)});
  PureState minus({Amplitude(std::sin(half), 0.0), -phase * std::cos(half)});
  return Context{axis, plus, minus};
}

/// Born rule: (|⟨m+|ψ⟩|², |⟨m−|ψ⟩|²). For an eigenstate of an axis at angle
/// θ to the context axis this is (sin² θ/2, cos² θ/2) when anti-aligned.
inline ProbVector born_probabilities(const PureState& state,
                                     const Context& ctx) {
  const double p_plus = std::norm(ctx.plus_state.inner(state));
  const double p_minus = std::norm(ctx.minus_state.inner(state));
  return ProbVector({p_plus, p_minus});
}

/// Projective collapse: replaces the state by the eigenstate of the observed
/// outcome. Requesting a zero-probability branch is an error.
inline PureState collapse(const PureState& state, const Context& ctx,
                          Outcome outcome) {
  const ProbVector p = born_probabilities(state, ctx);
  const double branch = outcome == Outcome::plus ? p[0] : p[1];
  if (branch <= kUnitTol)
    throw impossible_outcome(std::string("outcome ") + outcome_char(outcome) +
                             " has probability " + std::to_string(branch));
  return ctx.eigenstate(outcome);
}

/// One step of a measurement chain: the context used, the sampled outcome,
/// the probability that outcome had, and the post-measurement state.
struct ChainStep {
  Context context;
  Outcome outcome;
  double probability;
  PureState post_state;
};

/// Seeded results of a sequential measurement chain. Bitwise reproducible
/// for a given (initial, contexts, seed) triple.
struct OutcomeRecord {
  std::uint64_t seed = 0;
  std::vector<ChainStep> steps;

  std::string outcome_string() const {
    std::string s;
    s.reserve(steps.size());
    for (const auto& step : steps) s.push_back(outcome_char(step.outcome));
    return s;
  }
};

/// Runs the chain, sampling each outcome from its Born distribution with a
/// counter-based draw (step k uses draw k of the seed's stream), collapsing,
/// and proceeding to the next context.
inline OutcomeRecord run_chain(const PureState& initial,
                               const std::vector<Context>& contexts,
                               std::uint64_t seed) {
  if (contexts.empty())
    throw std::invalid_argument("chain needs at least one context");
  OutcomeRecord record;
  record.seed = seed;
  record.steps.reserve(contexts.size());
  PureState state = initial;
  for (std::size_t k = 0; k < contexts.size(); ++k) {
    const ProbVector p = born_probabilities(state, contexts[k]);
    const double u = rng::uniform01(seed, k);
    const Outcome outcome = u < p[0] ? Outcome::plus : Outcome::minus;
    const PureState post = contexts[k].eigenstate(outcome);
    record.steps.push_back(
        {contexts[k], outcome, outcome == Outcome::plus ? p[0] : p[1], post});
    state = post;
  }
  return record;
}

/// Maximum chain length for exact sequence enumeration (2^length sequences).
inline constexpr std::size_t kMaxExactChainLength = 20;

/// Exact distribution over outcome sequences, by multiplying Born factors
/// along the collapse tree. Keys are strings of '+'/'-'; probabilities sum
/// to 1 up to rounding.
inline std::map<std::string, double> chain_distribution(
    const PureState& initial, const std::vector<Context>& contexts) {
  if (contexts.empty())
    throw std::invalid_argument("chain needs at least one context");
  if (contexts.size() > kMaxExactChainLength)
    throw chain_too_long(std::to_string(contexts.size()) +
                         " contexts; exact enumeration is capped at " +
                         std::to_string(kMaxExactChainLength));

  struct Branch {
    std::string prefix;
    double probability;
    PureState state;
  };
  std::vector<Branch> branches{{"", 1.0, initial}};
  for (const auto& ctx : contexts) {
    std::vector<Branch> next;
    next.reserve(branches.size() * 2);
    for (const auto& b : branches) {
      const ProbVector p = born_probabilities(b.state, ctx);
      next.push_back(
          {b.prefix + "+", b.probability * p[0], ctx.eigenstate(Outcome::plus)});
      next.push_back({b.prefix + "-", b.probability * p[1],
                      ctx.eigenstate(Outcome::minus)});
    }
    branches = std::move(next);
  }
  std::map<std::string, double> dist;
  for (const auto& b : branches) dist[b.prefix] = b.probability;
  return dist;
}

/// Shared information between two contexts: 1 − H₂(cos² θ/2) of the
/// inter-axis angle. 0 for mutually unbiased axes (90°), 1 for identical or
/// opposite axes. The endpoints are the contract; the interpolation between
/// them is the information carried by one axis's eigenstates about the other.
inline double context_overlap(const SpinAxis& m, const SpinAxis& n) {
  const double theta = angle_between(m, n);
  const double c = std::cos(theta / 2.0);
  return 1.0 - binary_entropy(c * c);
}

/// A 2×2 density matrix: Hermitian, unit trace, positive semidefinite
/// within tolerance. Entries row-major.
class DensityMatrix {
 public:
  explicit DensityMatrix(std::array<Amplitude, 4> entries) : m_(entries) {
    for (const Amplitude& e : m_)
      if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
        throw invalid_density_matrix("non-finite entry");
    if (std::abs(m_[0].imag()) > kUnitTol || std::abs(m_[3].imag()) > kUnitTol)
      throw invalid_density_matrix("diagonal must be real");
    if (std::abs(m_[1] - std::conj(m_[2])) > kUnitTol)
      throw invalid_density_matrix("matrix is not Hermitian");
    if (std::abs(m_[0].real() + m_[3].real() - 1.0) > 1e-9)
      throw invalid_density_matrix("trace must be 1");
    const auto lambda = eigenvalues_of(m_);
    if (lambda[0] < -1e-9 || lambda[1] < -1e-9)
      throw invalid_density_matrix("matrix is not positive semidefinite");
  }

  static DensityMatrix from_pure(const PureState& psi) {
    return DensityMatrix({psi[0] * std::conj(psi[0]), psi[0] * std::conj(psi[1]),
                          psi[1] * std::conj(psi[0]),
                          psi[1] * std::conj(psi[1])});
  }

  static DensityMatrix maximally_mixed() {
    return DensityMatrix({0.5, 0.0, 0.0, 0.5});
  }

  static DensityMatrix diagonal(double p0, double p1) {
    return DensityMatrix({p0, 0.0, 0.0, p1});
  }

  const Amplitude& at(std::size_t row, std::size_t col) const {
    return m_[row * 2 + col];
  }

  /// Eigenvalues in descending order, clamped into [0, 1].
  std::array<double, 2> eigenvalues() const {
    auto lambda = eigenvalues_of(m_);
    lambda[0] = std::clamp(lambda[0], 0.0, 1.0);
    lambda[1] = std::clamp(lambda[1], 0.0, 1.0);
    return lambda;
  }

 private:
  // Closed form for 2×2 Hermitian: λ = (tr ± sqrt((a−d)² + 4|b|²)) / 2.
  static std::array<double, 2> eigenvalues_of(const std::array<Amplitude, 4>& m) {
    const double a = m[0].real();
    const double d = m[3].real();
    const double disc =
        std::sqrt((a - d) * (a - d) + 4.0 * std::norm(m[1]));
    return {(a + d + disc) / 2.0, (a + d - disc) / 2.0};
  }

  std::array<Amplitude, 4> m_;
};

/// −tr(ρ log₂ ρ) over the eigenvalue spectrum; in [0, 1] for spin-1/2.
inline double von_neumann_entropy(const DensityMatrix& rho) {
  const auto lambda = rho.eigenvalues();
  double h = 0.0;
  for (double l : lambda)
    if (l > 0.0) h -= l * std::log2(l);
  return std::max(h, 0.0);
}

/// The classical image of a quantum state: its eigenvalue spectrum as a
/// probability distribution (descending). Composing with Shannon entropy
/// recovers the von Neumann entropy — the factorization through a classical
/// measurement.
inline ProbVector classical_projection(const DensityMatrix& rho) {
  const auto lambda = rho.eigenvalues();
  return ProbVector({lambda[0], lambda[1]});
}

/// The reset/no-memory demonstration: a three-measurement chain a, b, c with
/// configurable inter-axis angles, a at the pole and c placed so that
/// θ_ab = θ_bc puts it back on a. Everything here is exact (collapse-tree
/// probabilities), no sampling.
struct ResetReport {
  double theta_ab = 0.0;
  double theta_bc = 0.0;
  /// P(third outcome | first outcome +), second outcome marginalized.
  std::array<double, 2> third_given_first_plus{};
  /// P(third outcome) along the realized two-sided path: second outcome
  /// taken as − when that branch has nonzero probability, else +.
  std::array<double, 2> third_along_path{};
  Outcome path_second_outcome = Outcome::minus;
  /// Overlap of the first and last axes compared directly...
  double overlap_direct = 0.0;
  /// ...and composed through the chain (product of per-link overlaps).
  double overlap_along_chain = 0.0;
  /// True when the defining identities hold: for θ_ab = θ_bc = 90° the third
  /// outcome is fair and the chained overlap vanishes although a = c.
  bool reset_confirmed = false;
};

inline ResetReport reset_demonstration(double theta_ab = std::numbers::pi / 2,
                                       double theta_bc = std::numbers::pi / 2) {
  const SpinAxis a = SpinAxis::z();
  const SpinAxis b(theta_ab, 0.0);
  const SpinAxis c(theta_ab - theta_bc, 0.0);

  const Context ctx_a = context_from_axis(a);
  const Context ctx_b = context_from_axis(b);
  const Context ctx_c = context_from_axis(c);

  // First measurement of |a+> along a is deterministic, so conditioning on
  // first outcome + keeps the full tree.
  const PureState after_first = ctx_a.plus_state;
  const ProbVector second = born_probabilities(after_first, ctx_b);

  ResetReport report;
  report.theta_ab = theta_ab;
  report.theta_bc = theta_bc;

  const ProbVector third_from_plus =
      born_probabilities(ctx_b.plus_state, ctx_c);
  const ProbVector third_from_minus =
      born_probabilities(ctx_b.minus_state, ctx_c);
  report.third_given_first_plus = {
      second[0] * third_from_plus[0] + second[1] * third_from_minus[0],
      second[0] * third_from_plus[1] + second[1] * third_from_minus[1]};

  report.path_second_outcome =
      second[1] > kUnitTol ? Outcome::minus : Outcome::plus;
  const ProbVector& along = report.path_second_outcome == Outcome::minus
                                ? third_from_minus
                                : third_from_plus;
  report.third_along_path = {along[0], along[1]};

  report.overlap_direct = context_overlap(a, c);
  report.overlap_along_chain = context_overlap(a, b) * context_overlap(b, c);

  report.reset_confirmed =
      std::abs(report.third_given_first_plus[0] - 0.5) <= kUnitTol &&
      std::abs(report.third_given_first_plus[1] - 0.5) <= kUnitTol &&
      report.overlap_along_chain <= kUnitTol &&
      std::abs(report.overlap_direct - 1.0) <= kUnitTol;
  return report;
}

}  // namespace ctxdom

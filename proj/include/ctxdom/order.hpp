#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ctxdom/errors.hpp"

// Finite partial orders and the domain-theoretic predicates built on them:
// poset validation, up/down sets, directed sets, suprema, dcpo verification,
// the way-below relation and the orthogonality criterion for content maps.
//
// All values are immutable after construction; every operation is a pure
// function, safe to share across threads.

namespace ctxdom {

/// Subset enumerations (is_dcpo, way_below, ...) are exponential in the
/// element count and refuse to run above this cap unless overridden.
inline constexpr std::size_t kDefaultEnumerationCap = 16;

/// Absolute ceiling for subset enumeration regardless of the configured cap.
inline constexpr std::size_t kHardEnumerationLimit = 20;

/// Content values within this absolute tolerance of zero count as zero.
inline constexpr double kContentTol = 1e-12;

/// Raw description of a finite poset: element identifiers plus cover pairs
/// (lower, upper). The full order is derived by validate_poset.
struct PosetSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
};

/// A validated finite poset. Stores the reflexive-transitive closure of the
/// covers as an explicit matrix, so leq queries are O(1).
class FiniteDomain {
 public:
  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& elements() const { return ids_; }

  bool contains(const std::string& id) const { return index_.count(id) != 0; }

  std::size_t index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw unknown_element(id);
    return it->second;
  }

  const std::string& id_of(std::size_t i) const { return ids_.at(i); }

  bool leq_index(std::size_t x, std::size_t y) const {
    return closure_[x * ids_.size() + y] != 0;
  }

  /// x ⊑ y in the derived order.
  bool leq(const std::string& x, const std::string& y) const {
    return leq_index(index_of(x), index_of(y));
  }

 private:
  friend FiniteDomain validate_poset(const PosetSpec& spec);

  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::uint8_t> closure_;  // row-major n*n, closure_[x*n+y] = x ⊑ y
};

/// Builds the reflexive-transitive closure of the covers and verifies the
/// result is a partial order. Rejects unknown ids, self-covers and any pair
/// of distinct mutually-related elements.
inline FiniteDomain validate_poset(const PosetSpec& spec) {
  FiniteDomain d;
  d.ids_ = spec.elements;
  for (std::size_t i = 0; i < d.ids_.size(); ++i) {
    if (!d.index_.emplace(d.ids_[i], i).second)
      throw std::invalid_argument("duplicate element id: " + d.ids_[i]);
  }

  const std::size_t n = d.ids_.size();
  d.closure_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) d.closure_[i * n + i] = 1;

  for (const auto& [lower, upper] : spec.covers) {
    if (lower == upper) throw self_cover(lower);
    auto lo = d.index_.find(lower);
    if (lo == d.index_.end()) throw unknown_element(lower);
    auto hi = d.index_.find(upper);
    if (hi == d.index_.end()) throw unknown_element(upper);
    d.closure_[lo->second * n + hi->second] = 1;
  }

  // Warshall transitive closure; n is desk scale.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (d.closure_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (d.closure_[k * n + j]) d.closure_[i * n + j] = 1;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d.closure_[i * n + j] && d.closure_[j * n + i])
        throw cycle_detected(d.ids_[i] + " and " + d.ids_[j] +
                             " are mutually related");
  return d;
}

/// ↑x — every y with x ⊑ y, in domain element order. Always contains x.
inline std::vector<std::string> upset(const FiniteDomain& d,
                                      const std::string& x) {
  const std::size_t xi = d.index_of(x);
  std::vector<std::string> out;
  for (std::size_t y = 0; y < d.size(); ++y)
    if (d.leq_index(xi, y)) out.push_back(d.id_of(y));
  return out;
}

/// ↓x — every y with y ⊑ x, in domain element order.
inline std::vector<std::string> downset(const FiniteDomain& d,
                                        const std::string& x) {
  const std::size_t xi = d.index_of(x);
  std::vector<std::string> out;
  for (std::size_t y = 0; y < d.size(); ++y)
    if (d.leq_index(y, xi)) out.push_back(d.id_of(y));
  return out;
}

/// True iff s is nonempty and every pair in s has an upper bound within s.
inline bool is_directed(const FiniteDomain& d,
                        const std::vector<std::string>& s) {
  if (s.empty()) return false;
  std::vector<std::size_t> idx;
  idx.reserve(s.size());
  for (const auto& id : s) idx.push_back(d.index_of(id));
  for (std::size_t a : idx)
    for (std::size_t b : idx) {
      bool bounded = false;
      for (std::size_t z : idx)
        if (d.leq_index(a, z) && d.leq_index(b, z)) {
          bounded = true;
          break;
        }
      if (!bounded) return false;
    }
  return true;
}

/// Least upper bound of s when it exists.
inline std::optional<std::string> supremum(const FiniteDomain& d,
                                           const std::vector<std::string>& s) {
  if (s.empty()) throw empty_set("supremum of the empty set is not defined");
  std::vector<std::size_t> idx;
  idx.reserve(s.size());
  for (const auto& id : s) idx.push_back(d.index_of(id));

  std::vector<std::size_t> bounds;
  for (std::size_t u = 0; u < d.size(); ++u) {
    bool upper = true;
    for (std::size_t a : idx)
      if (!d.leq_index(a, u)) {
        upper = false;
        break;
      }
    if (upper) bounds.push_back(u);
  }
  for (std::size_t u : bounds) {
    bool least = true;
    for (std::size_t w : bounds)
      if (!d.leq_index(u, w)) {
        least = false;
        break;
      }
    if (least) return d.id_of(u);
  }
  return std::nullopt;
}

namespace detail {

inline std::vector<std::uint32_t> up_masks(const FiniteDomain& d) {
  std::vector<std::uint32_t> up(d.size(), 0);
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t y = 0; y < d.size(); ++y)
      if (d.leq_index(x, y)) up[x] |= std::uint32_t{1} << y;
  return up;
}

inline std::vector<std::uint32_t> down_masks(const FiniteDomain& d) {
  std::vector<std::uint32_t> down(d.size(), 0);
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t y = 0; y < d.size(); ++y)
      if (d.leq_index(y, x)) down[x] |= std::uint32_t{1} << y;
  return down;
}

inline bool mask_directed(std::uint32_t s,
                          const std::vector<std::uint32_t>& up) {
  if (s == 0) return false;
  for (std::uint32_t rest = s; rest;) {
    const auto i = static_cast<std::size_t>(std::countr_zero(rest));
    rest &= rest - 1;
    for (std::uint32_t rest2 = s; rest2;) {
      const auto j = static_cast<std::size_t>(std::countr_zero(rest2));
      rest2 &= rest2 - 1;
      if ((up[i] & up[j] & s) == 0) return false;
    }
  }
  return true;
}

/// Least upper bound of the mask, or -1 when none exists.
inline int mask_supremum(std::size_t n, std::uint32_t s,
                         const std::vector<std::uint32_t>& up) {
  std::uint32_t bounds = (n >= 32) ? ~std::uint32_t{0}
                                   : ((std::uint32_t{1} << n) - 1);
  for (std::uint32_t rest = s; rest;) {
    const auto i = static_cast<std::size_t>(std::countr_zero(rest));
    rest &= rest - 1;
    bounds &= up[i];
  }
  for (std::uint32_t rest = bounds; rest;) {
    const auto u = static_cast<std::size_t>(std::countr_zero(rest));
    rest &= rest - 1;
    if ((bounds & ~up[u]) == 0) return static_cast<int>(u);
  }
  return -1;
}

inline void check_enumerable(const FiniteDomain& d, std::size_t cap,
                             const char* op) {
  const std::size_t limit = std::min(cap, kHardEnumerationLimit);
  if (d.size() > limit)
    throw size_limit_exceeded(std::string(op) +
                              " enumerates subsets; domain has " +
                              std::to_string(d.size()) + " elements, cap is " +
                              std::to_string(limit));
}

struct DirectedSubset {
  std::uint32_t members = 0;
  int sup = -1;             // -1 when no supremum exists
  std::uint32_t below = 0;  // union of the members' downsets
};

inline std::vector<DirectedSubset> enumerate_directed(const FiniteDomain& d) {
  const auto up = up_masks(d);
  const auto down = down_masks(d);
  const std::uint32_t full = std::uint32_t{1} << d.size();
  std::vector<DirectedSubset> out;
  for (std::uint32_t s = 1; s < full; ++s) {
    if (!mask_directed(s, up)) continue;
    DirectedSubset ds;
    ds.members = s;
    ds.sup = mask_supremum(d.size(), s, up);
    for (std::uint32_t rest = s; rest;) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      rest &= rest - 1;
      ds.below |= down[i];
    }
    out.push_back(ds);
  }
  return out;
}

}  // namespace detail

/// Checks directed-completeness by enumerating every nonempty directed subset
/// and verifying it has a supremum. Always true for a valid finite poset;
/// this is the enumeration oracle the property suite leans on.
inline bool is_dcpo(const FiniteDomain& d,
                    std::size_t cap = kDefaultEnumerationCap) {
  detail::check_enumerable(d, cap, "is_dcpo");
  for (const auto& ds : detail::enumerate_directed(d))
    if (ds.sup < 0) return false;
  return true;
}

/// Elements whose upset is just themselves. Nonempty for nonempty domains.
inline std::vector<std::string> maximal_elements(const FiniteDomain& d) {
  std::vector<std::string> out;
  for (std::size_t x = 0; x < d.size(); ++x) {
    bool maximal = true;
    for (std::size_t y = 0; y < d.size(); ++y)
      if (y != x && d.leq_index(x, y)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(d.id_of(x));
  }
  return out;
}

/// x approximates y: every directed subset S with y ⊑ ⊔S contains some s
/// with x ⊑ s. Computed by exhaustive enumeration of directed subsets, not
/// via the order shortcut; on finite domains the two must agree, and the
/// test suite checks exactly that.
inline bool way_below(const FiniteDomain& d, const std::string& x,
                      const std::string& y,
                      std::size_t cap = kDefaultEnumerationCap) {
  const std::size_t xi = d.index_of(x);
  const std::size_t yi = d.index_of(y);
  detail::check_enumerable(d, cap, "way_below");
  for (const auto& ds : detail::enumerate_directed(d)) {
    if (ds.sup < 0) continue;
    if (!d.leq_index(yi, static_cast<std::size_t>(ds.sup))) continue;
    if ((ds.below & (std::uint32_t{1} << xi)) == 0) return false;
  }
  return true;
}

/// Full way-below table, row = x, column = y. Shares one subset enumeration
/// across all pairs.
inline std::vector<std::vector<bool>> way_below_table(
    const FiniteDomain& d, std::size_t cap = kDefaultEnumerationCap) {
  detail::check_enumerable(d, cap, "way_below_table");
  const auto directed = detail::enumerate_directed(d);
  const std::size_t n = d.size();
  std::vector<std::vector<bool>> table(n, std::vector<bool>(n, true));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& ds : directed) {
        if (ds.sup < 0) continue;
        if (!d.leq_index(y, static_cast<std::size_t>(ds.sup))) continue;
        if ((ds.below & (std::uint32_t{1} << x)) == 0) {
          table[x][y] = false;
          break;
        }
      }
  return table;
}

/// A total content map over a finite domain. Content is measured in bits;
/// smaller content means more informative, content zero means maximal
/// information.
class MeasurementMap {
 public:
  MeasurementMap(FiniteDomain domain,
                 const std::map<std::string, double>& content)
      : domain_(std::move(domain)), content_(domain_.size()) {
    for (const auto& [id, value] : content) {
      (void)value;
      if (!domain_.contains(id)) throw unknown_element(id);
    }
    for (std::size_t i = 0; i < domain_.size(); ++i) {
      auto it = content.find(domain_.id_of(i));
      if (it == content.end())
        throw std::invalid_argument("content missing for element: " +
                                    domain_.id_of(i));
      const double v = it->second;
      if (!std::isfinite(v) || v < -kContentTol)
        throw std::invalid_argument("content for " + domain_.id_of(i) +
                                    " must be finite and non-negative");
      content_[i] = std::max(v, 0.0);
    }
  }

  const FiniteDomain& domain() const { return domain_; }
  double content(const std::string& id) const {
    return content_[domain_.index_of(id)];
  }
  double content_at(std::size_t i) const { return content_.at(i); }

 private:
  FiniteDomain domain_;
  std::vector<double> content_;
};

/// Orthogonality criterion: x ⊥ y iff every element of ↑x ∩ ↑y has content
/// zero (within kContentTol). An empty intersection is vacuously orthogonal.
inline bool orthogonal(const MeasurementMap& m, const std::string& x,
                       const std::string& y) {
  const auto& d = m.domain();
  const std::size_t xi = d.index_of(x);
  const std::size_t yi = d.index_of(y);
  for (std::size_t z = 0; z < d.size(); ++z) {
    if (!d.leq_index(xi, z) || !d.leq_index(yi, z)) continue;
    if (m.content_at(z) > kContentTol) return false;
  }
  return true;
}

struct TransitivityReport {
  bool passed = true;
  // (x, y, z) with x way-below y, y ⊑ z, but x not way-below z
  std::vector<std::array<std::string, 3>> counterexamples;
};

/// Context independence of approximation on a finite domain: for all triples,
/// x ≼ y and y ⊑ z imply x ≼ z. Expected to pass on every finite domain;
/// a counterexample would mean the classical order itself is contextual.
inline TransitivityReport approximation_transitivity_check(
    const FiniteDomain& d, std::size_t cap = kDefaultEnumerationCap) {
  const auto table = way_below_table(d, cap);
  TransitivityReport report;
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!table[x][y]) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (!d.leq_index(y, z)) continue;
        if (!table[x][z]) {
          report.passed = false;
          report.counterexamples.push_back(
              {d.id_of(x), d.id_of(y), d.id_of(z)});
        }
      }
    }
  return report;
}

}  // namespace ctxdom

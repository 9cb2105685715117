#pragma once

// Test-only generators and brute-force oracles. Everything here is kept
// independent of the library's computation paths on purpose: the oracles
// re-derive the same answers from first principles so the two routes can be
// compared.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ctxdom/order.hpp"
#include "ctxdom/rng.hpp"

namespace testgen {

struct Rand {
  std::uint64_t seed;
  std::uint64_t counter = 0;
  double uniform() { return ctxdom::rng::uniform01(seed, counter++); }
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
  }
};

/// Random poset of exactly n elements: edges are drawn only from lower to
/// higher index, so acyclicity (and hence antisymmetry) holds by
/// construction; the closure is left to validate_poset.
inline ctxdom::PosetSpec random_poset_spec_sized(Rand& rand, std::size_t n) {
  ctxdom::PosetSpec spec;
  for (std::size_t i = 0; i < n; ++i)
    spec.elements.push_back("e" + std::to_string(i));
  const double density = 0.15 + 0.5 * rand.uniform();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rand.uniform() < density)
        spec.covers.emplace_back(spec.elements[i], spec.elements[j]);
  return spec;
}

/// Random poset of 1..max_n elements.
inline ctxdom::PosetSpec random_poset_spec(Rand& rand, std::size_t max_n) {
  return random_poset_spec_sized(rand, 1 + rand.index(max_n));
}

/// Reachability over the raw covers by depth-first search — an independent
/// route to the order relation, used to cross-check the closure matrix.
inline bool reachable(const ctxdom::PosetSpec& spec, const std::string& from,
                      const std::string& to) {
  if (from == to) return true;
  std::set<std::string> visited{from};
  std::vector<std::string> stack{from};
  while (!stack.empty()) {
    const std::string cur = stack.back();
    stack.pop_back();
    for (const auto& [lo, hi] : spec.covers) {
      if (lo != cur || visited.count(hi)) continue;
      if (hi == to) return true;
      visited.insert(hi);
      stack.push_back(hi);
    }
  }
  return false;
}

/// Brute-force directedness: nonempty and every pair has an upper bound in
/// the subset. Deliberately written over id vectors, not bitmasks.
inline bool oracle_directed(const ctxdom::FiniteDomain& d,
                            const std::vector<std::string>& s) {
  if (s.empty()) return false;
  for (const auto& a : s)
    for (const auto& b : s) {
      bool bounded = false;
      for (const auto& z : s)
        if (d.leq(a, z) && d.leq(b, z)) bounded = true;
      if (!bounded) return false;
    }
  return true;
}

/// Brute-force least upper bound over all elements of the domain.
inline std::optional<std::string> oracle_supremum(
    const ctxdom::FiniteDomain& d, const std::vector<std::string>& s) {
  std::vector<std::string> bounds;
  for (const auto& u : d.elements()) {
    bool upper = true;
    for (const auto& a : s)
      if (!d.leq(a, u)) upper = false;
    if (upper) bounds.push_back(u);
  }
  for (const auto& u : bounds) {
    bool least = true;
    for (const auto& w : bounds)
      if (!d.leq(u, w)) least = false;
    if (least) return u;
  }
  return std::nullopt;
}

/// All nonempty subsets of the domain's elements as id vectors.
inline std::vector<std::vector<std::string>> all_nonempty_subsets(
    const ctxdom::FiniteDomain& d) {
  const auto& ids = d.elements();
  std::vector<std::vector<std::string>> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << ids.size()); ++mask) {
    std::vector<std::string> subset;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if ((mask >> i) & 1u) subset.push_back(ids[i]);
    out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace testgen

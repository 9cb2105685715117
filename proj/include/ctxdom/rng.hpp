#pragma once

#include <cstdint>

namespace ctxdom::rng {

// Counter-based generator built on the splitmix64 finalizer. Every draw is a
// pure function of (seed, counter), so results do not depend on evaluation
// order and independent streams can be split off without shared state.

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

/// Value of the splitmix64 stream seeded by `seed` at position `counter`.
constexpr std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
  return mix(seed + kGamma * (counter + 1));
}

/// Independent child seed for stream `index` (trial, worker, ...).
/// Domain-separated from `at` so step draws and sub-seeds never collide.
constexpr std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
  return at(mix(seed ^ 0x6a09e667f3bcc909ULL), index);
}

/// Uniform double in [0, 1) from the top 53 bits of the stream value.
constexpr double uniform01(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(at(seed, counter) >> 11) * 0x1.0p-53;
}

}  // namespace ctxdom::rng

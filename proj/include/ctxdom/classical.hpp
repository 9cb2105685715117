#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ctxdom/errors.hpp"

// Concrete classical instantiations: the two-valued bit domain, the
// jigsaw-puzzle message domain, and the physical-determinism threshold
// (the earliest knowledge state from which the message is predictable).

namespace ctxdom {

/// A candidate value domain. Qualifies as a bit exactly when the admissible
/// values are {0,1} and the states are mutually exclusive.
struct BitDomainSpec {
  std::set<int> values;
  bool exclusivity = true;
};

inline bool is_bit_domain(const BitDomainSpec& spec) {
  return spec.exclusivity && spec.values == std::set<int>{0, 1};
}

namespace puzzle {

inline constexpr int kMaxMessageBits = 24;

/// Bit i of the mask is the message value at position i.
using Message = std::uint32_t;

inline std::string to_string(Message m, int length) {
  std::string s(static_cast<std::size_t>(length), '0');
  for (int i = 0; i < length; ++i)
    if ((m >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

inline Message from_string(const std::string& s) {
  if (s.empty() || s.size() > kMaxMessageBits)
    throw std::invalid_argument("message length must be in [1, " +
                                std::to_string(kMaxMessageBits) + "]");
  Message m = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      m |= Message{1} << i;
    else if (s[i] != '0')
      throw std::invalid_argument("message must be a bit string");
  }
  return m;
}

/// All 2^N messages of the given length.
inline std::vector<Message> full_class(int length) {
  if (length < 1 || length > kMaxMessageBits)
    throw std::invalid_argument("full class length must be in [1, " +
                                std::to_string(kMaxMessageBits) + "]");
  std::vector<Message> out(std::size_t{1} << length);
  for (std::size_t m = 0; m < out.size(); ++m)
    out[m] = static_cast<Message>(m);
  return out;
}

/// Messages of length N whose bits repeat with some period ≤ max_period.
inline std::vector<Message> periodic_class(int length, int max_period) {
  if (length < 1 || length > kMaxMessageBits)
    throw std::invalid_argument("periodic class length out of range");
  if (max_period < 1)
    throw std::invalid_argument("period bound must be positive");
  std::set<Message> seen;
  for (int p = 1; p <= std::min(max_period, length); ++p) {
    for (Message pattern = 0; pattern < (Message{1} << p); ++pattern) {
      Message m = 0;
      for (int i = 0; i < length; ++i)
        if ((pattern >> (i % p)) & 1u) m |= Message{1} << i;
      seen.insert(m);
    }
  }
  return {seen.begin(), seen.end()};
}

/// True ordering of bit strings: position 0 compared first, '0' before '1'.
inline bool lex_less(Message a, Message b, int length) {
  for (int i = 0; i < length; ++i) {
    const unsigned ba = (a >> i) & 1u;
    const unsigned bb = (b >> i) & 1u;
    if (ba != bb) return ba < bb;
  }
  return false;
}

}  // namespace puzzle

/// Partial knowledge of a hidden binary message: which positions have been
/// revealed, and the hypothesis class the message is known a priori to
/// belong to. Immutable; place_piece returns a new state.
class PuzzleState {
 public:
  PuzzleState(int length, std::vector<puzzle::Message> hypothesis_class,
              std::map<int, int> revealed = {})
      : length_(length),
        revealed_(std::move(revealed)),
        hypotheses_(std::move(hypothesis_class)) {
    if (length_ < 1 || length_ > puzzle::kMaxMessageBits)
      throw std::invalid_argument("puzzle length must be in [1, " +
                                  std::to_string(puzzle::kMaxMessageBits) +
                                  "]");
    if (hypotheses_.empty())
      throw inconsistent_state("hypothesis class is empty");
    for (puzzle::Message m : hypotheses_)
      if (m >= (puzzle::Message{1} << length_))
        throw std::invalid_argument("hypothesis wider than the puzzle");
    for (const auto& [index, bit] : revealed_) {
      if (index < 0 || index >= length_)
        throw index_out_of_range("revealed index " + std::to_string(index));
      if (bit != 0 && bit != 1)
        throw std::invalid_argument("revealed value must be 0 or 1");
    }
    if (count_consistent() == 0)
      throw inconsistent_state("no hypothesis matches the revealed bits");
  }

  int length() const { return length_; }
  const std::map<int, int>& revealed() const { return revealed_; }
  const std::vector<puzzle::Message>& hypothesis_class() const {
    return hypotheses_;
  }

  bool consistent(puzzle::Message m) const {
    for (const auto& [index, bit] : revealed_)
      if (static_cast<int>((m >> index) & 1u) != bit) return false;
    return true;
  }

  std::size_t count_consistent() const {
    std::size_t count = 0;
    for (puzzle::Message m : hypotheses_)
      if (consistent(m)) ++count;
    return count;
  }

  std::vector<puzzle::Message> consistent_hypotheses() const {
    std::vector<puzzle::Message> out;
    for (puzzle::Message m : hypotheses_)
      if (consistent(m)) out.push_back(m);
    return out;
  }

 private:
  int length_;
  std::map<int, int> revealed_;
  std::vector<puzzle::Message> hypotheses_;
};

/// Reveals one more position. The revealed set strictly grows; a reveal no
/// hypothesis can match is rejected.
inline PuzzleState place_piece(const PuzzleState& state, int index, int bit) {
  if (index < 0 || index >= state.length())
    throw index_out_of_range("piece index " + std::to_string(index) +
                             " for length " + std::to_string(state.length()));
  if (bit != 0 && bit != 1)
    throw std::invalid_argument("piece value must be 0 or 1");
  if (state.revealed().count(index))
    throw already_placed("index " + std::to_string(index));

  std::map<int, int> revealed = state.revealed();
  revealed.emplace(index, bit);
  for (puzzle::Message m : state.consistent_hypotheses())
    if (static_cast<int>((m >> index) & 1u) == bit)
      return PuzzleState(state.length(), state.hypothesis_class(),
                         std::move(revealed));
  throw inconsistent_reveal("no hypothesis has bit " + std::to_string(bit) +
                            " at index " + std::to_string(index));
}

/// Remaining lack of information in bits: log₂ of the number of hypotheses
/// consistent with the revealed positions, under a uniform prior.
inline double puzzle_entropy(const PuzzleState& state) {
  const std::size_t count = state.count_consistent();
  if (count == 0) throw inconsistent_state("no consistent hypothesis");
  return std::log2(static_cast<double>(count));
}

/// Maximum-posterior hypothesis if its posterior reaches the confidence,
/// otherwise nothing. Uniform prior; ties broken by the lexicographically
/// smallest bit string.
inline std::optional<std::string> predict_message(const PuzzleState& state,
                                                  double confidence) {
  if (!(confidence > 0.0) || confidence > 1.0)
    throw std::invalid_argument("confidence must be in (0, 1]");
  const auto consistent = state.consistent_hypotheses();
  if (consistent.empty()) throw inconsistent_state("no consistent hypothesis");
  const double posterior = 1.0 / static_cast<double>(consistent.size());
  if (posterior < confidence) return std::nullopt;
  puzzle::Message best = consistent.front();
  for (puzzle::Message m : consistent)
    if (puzzle::lex_less(m, best, state.length())) best = m;
  return puzzle::to_string(best, state.length());
}

/// A growing sequence of knowledge states about one message. static_flag
/// records whether the underlying message is immutable across the list.
struct Trajectory {
  std::vector<PuzzleState> states;
  bool static_flag = true;
};

/// The determinism threshold: the smallest state index from which
/// predict_message succeeds at the given confidence and keeps succeeding.
/// Nothing when the message is not static or no such index exists.
inline std::optional<std::size_t> determinism_threshold(const Trajectory& t,
                                                        double confidence) {
  for (std::size_t i = 0; i + 1 < t.states.size(); ++i) {
    const auto& a = t.states[i].revealed();
    const auto& b = t.states[i + 1].revealed();
    for (const auto& [index, bit] : a) {
      auto it = b.find(index);
      if (it == b.end() || it->second != bit)
        throw inconsistent_state("revealed sets must be non-decreasing");
    }
    if (t.states[i].length() != t.states[i + 1].length())
      throw inconsistent_state("states disagree on puzzle length");
  }
  if (!t.static_flag) return std::nullopt;

  std::optional<std::size_t> threshold;
  for (std::size_t i = t.states.size(); i-- > 0;) {
    if (predict_message(t.states[i], confidence).has_value())
      threshold = i;
    else
      break;
  }
  return threshold;
}

}  // namespace ctxdom

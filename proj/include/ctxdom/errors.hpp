#pragma once

#include <stdexcept>
#include <string>

namespace ctxdom {

/// Base class for all library errors. Catch this to handle anything
/// the library can throw on bad input or exceeded limits.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// order
struct unknown_element : error {
  explicit unknown_element(const std::string& id)
      : error("unknown element: " + id) {}
};
struct cycle_detected : error {
  explicit cycle_detected(const std::string& msg) : error("cycle detected: " + msg) {}
};
struct self_cover : error {
  explicit self_cover(const std::string& id)
      : error("self-referential cover: " + id) {}
};
struct size_limit_exceeded : error {
  explicit size_limit_exceeded(const std::string& msg)
      : error("size limit exceeded: " + msg) {}
};
struct empty_set : error {
  explicit empty_set(const std::string& msg) : error("empty set: " + msg) {}
};

// info
struct invalid_distribution : error {
  explicit invalid_distribution(const std::string& msg)
      : error("invalid distribution: " + msg) {}
};
struct dimension_mismatch : error {
  explicit dimension_mismatch(const std::string& msg)
      : error("dimension mismatch: " + msg) {}
};

// classical
struct index_out_of_range : error {
  explicit index_out_of_range(const std::string& msg)
      : error("index out of range: " + msg) {}
};
struct already_placed : error {
  explicit already_placed(const std::string& msg)
      : error("already placed: " + msg) {}
};
struct inconsistent_reveal : error {
  explicit inconsistent_reveal(const std::string& msg)
      : error("inconsistent reveal: " + msg) {}
};
struct inconsistent_state : error {
  explicit inconsistent_state(const std::string& msg)
      : error("inconsistent state: " + msg) {}
};

// quantum
struct invalid_axis : error {
  explicit invalid_axis(const std::string& msg) : error("invalid axis: " + msg) {}
};
struct invalid_state : error {
  explicit invalid_state(const std::string& msg) : error("invalid state: " + msg) {}
};
struct impossible_outcome : error {
  explicit impossible_outcome(const std::string& msg)
      : error("impossible outcome: " + msg) {}
};
struct invalid_density_matrix : error {
  explicit invalid_density_matrix(const std::string& msg)
      : error("invalid density matrix: " + msg) {}
};
struct chain_too_long : error {
  explicit chain_too_long(const std::string& msg)
      : error("chain too long: " + msg) {}
};

// experiments
struct empty_record_set : error {
  explicit empty_record_set(const std::string& msg)
      : error("empty record set: " + msg) {}
};
struct step_out_of_range : error {
  explicit step_out_of_range(const std::string& msg)
      : error("step out of range: " + msg) {}
};
struct invalid_policy : error {
  explicit invalid_policy(const std::string& msg)
      : error("invalid policy: " + msg) {}
};
struct insufficient_data : error {
  explicit insufficient_data(const std::string& msg)
      : error("insufficient data: " + msg) {}
};

// io
struct parse_error : error {
  explicit parse_error(const std::string& msg) : error("parse error: " + msg) {}
};

}  // namespace ctxdom

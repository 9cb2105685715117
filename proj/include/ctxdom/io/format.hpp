#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <system_error>

namespace ctxdom::io {

// Number formatting for CSV output: std::to_chars is locale-independent by
// definition, so emitted files never depend on the host locale.

/// 6 significant digits, general format.
inline std::string format_number(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

/// Shortest representation that round-trips.
inline std::string format_full(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string format_bool(bool b) { return b ? "true" : "false"; }

/// RFC-4180 quoting for a CSV field whose content is not under our control
/// (element identifiers from input files).
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace ctxdom::io

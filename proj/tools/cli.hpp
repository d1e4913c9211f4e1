#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace artinacyl::cli {

inline constexpr const char* kToolName = "artinacyl";
inline constexpr const char* kVersion = "0.1.0";

struct RunConfig {
  /// analyze, classify, gamma, certify, shadow or export.
  std::string command;
  std::string input_path;
  std::optional<std::string> output_path;
  /// Oracle closure cap and shadow element cap; falls back to ARTINACYL_CAP.
  std::optional<std::size_t> cap;
  std::optional<std::size_t> radius;
  bool reduced = false;
  /// json or dot.
  std::string format = "json";
  /// export view: defining, complement or coxeter.
  std::string which = "defining";
  /// certify: read this plan instead of building one.
  std::optional<std::string> plan_path;
};

struct RunResult {
  int exit_code = 0;
  /// Output document (also written to output_path when set).
  std::string output;
  /// Single line "ERR:<code>: message" for nonzero exits, else empty.
  std::string error;
};

/// Runs one command; never throws.
RunResult run(const RunConfig& config);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a64(const std::string& bytes);

}  // namespace artinacyl::cli

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace zdx::cli {

/// Bad flags, malformed values or window violations: exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct RunConfig {
  std::uint64_t seed = 0;
  bool seed_set = false;  ///< the config file named a seed
  double slack_budget = 10;
  Format format = Format::csv;
  /// Known keys: "bprocess" (B-process slack), "harness" (overrides
  /// slack_budget for harness entries).
  std::map<std::string, double> tolerances;

  double tolerance(const std::string& key, double fallback) const;
};

/// Reads a JSON object with keys seed, slack_budget, format, tolerances.
/// Unknown keys and bad values throw UsageError.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& text, const std::string& origin);

/// Seed precedence: flag, then config file, then ZDX_SEED, then 0.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, std::optional<std::uint64_t> from_config);
std::uint64_t parse_seed(const std::string& text, const std::string& origin);

Format parse_format(const std::string& text);
std::string format_name(Format f);

}  // namespace zdx::cli

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "cirldp/cir_model.hpp"

namespace cirldp {

/// Settings shared by every command.
struct RunConfig {
  ProcessParams params;
  double T = 100.0;
  double steps_per_unit = kDefaultStepsPerUnitTime;
  std::size_t n_paths = 1000;
  std::optional<std::uint64_t> seed;
  std::filesystem::path out;  // empty: write to stdout

  std::size_t n_steps() const { return steps_for_horizon(T, steps_per_unit); }
  /// Throws ConfigError("seed", ...) when no seed was given.
  std::uint64_t require_seed() const;
};

/// Values given on the command line; unset fields fall back to the file, then defaults.
struct ConfigOverrides {
  std::optional<double> a, b, x0, T, steps_per_unit;
  std::optional<std::size_t> n_paths;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
};

/// Keys accepted in a config file.
inline constexpr const char* kConfigKeys[] = {"a", "b", "x0", "T", "steps_per_unit", "paths", "seed", "out"};

/// Merges flags over a flat JSON object over defaults (x0 = 1, 200 steps per
/// unit time). Unknown keys, nested values and wrong types raise
/// ConfigError naming the key; parameters outside a > 2, b < 0, x0 > 0 raise
/// RegimeError.
RunConfig parse_config(const nlohmann::json& file, const ConfigOverrides& flags);

/// Reads the file (if any) and calls parse_config.
RunConfig parse_config(const std::optional<std::filesystem::path>& file, const ConfigOverrides& flags);

}  // namespace cirldp

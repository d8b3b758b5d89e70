#include "cirldp/config.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "cirldp/errors.hpp"

namespace cirldp {

std::uint64_t RunConfig::require_seed() const {
  if (!seed) throw ConfigError("seed", "a seed is required for this command");
  return *seed;
}

namespace {

double get_number(const nlohmann::json& j, const std::string& key) {
  if (!j.is_number()) throw ConfigError(key, "config key '" + key + "' must be a number");
  return j.get<double>();
}

std::uint64_t get_unsigned(const nlohmann::json& j, const std::string& key) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw ConfigError(key, "config key '" + key + "' must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

}  // namespace

RunConfig parse_config(const nlohmann::json& file, const ConfigOverrides& flags) {
  if (!file.is_null() && !file.is_object()) throw ConfigError("", "config file must hold a JSON object");
  ConfigOverrides from_file;
  if (file.is_object()) {
    for (const auto& [key, value] : file.items()) {
      if (std::find(std::begin(kConfigKeys), std::end(kConfigKeys), key) == std::end(kConfigKeys))
        throw ConfigError(key, "unknown config key '" + key + "'");
      if (value.is_object() || value.is_array()) throw ConfigError(key, "config must be flat; '" + key + "' is nested");
      if (key == "a") from_file.a = get_number(value, key);
      if (key == "b") from_file.b = get_number(value, key);
      if (key == "x0") from_file.x0 = get_number(value, key);
      if (key == "T") from_file.T = get_number(value, key);
      if (key == "steps_per_unit") from_file.steps_per_unit = get_number(value, key);
      if (key == "paths") from_file.n_paths = get_unsigned(value, key);
      if (key == "seed") from_file.seed = get_unsigned(value, key);
      if (key == "out") {
        if (!value.is_string()) throw ConfigError(key, "config key 'out' must be a string");
        from_file.out = value.get<std::string>();
      }
    }
  }
  auto pick = [](const auto& flag, const auto& file_value, auto fallback) {
    if (flag) return *flag;
    if (file_value) return *file_value;
    return fallback;
  };
  RunConfig cfg;
  const double a = pick(flags.a, from_file.a, cfg.params.a);
  const double b = pick(flags.b, from_file.b, cfg.params.b);
  const double x0 = pick(flags.x0, from_file.x0, 1.0);
  cfg.params = validate_params(a, b, x0);
  cfg.T = pick(flags.T, from_file.T, cfg.T);
  cfg.steps_per_unit = pick(flags.steps_per_unit, from_file.steps_per_unit, kDefaultStepsPerUnitTime);
  cfg.n_paths = pick(flags.n_paths, from_file.n_paths, cfg.n_paths);
  if (flags.seed) cfg.seed = flags.seed;
  else if (from_file.seed) cfg.seed = from_file.seed;
  cfg.out = pick(flags.out, from_file.out, std::string());
  if (!(cfg.T > 0.0)) throw ConfigError("T", "horizon T must be positive");
  if (!(cfg.steps_per_unit > 0.0) || cfg.steps_per_unit * cfg.T < 2.0)
    throw ConfigError("steps_per_unit", "the grid needs at least two steps over [0, T]");
  if (cfg.n_paths == 0) throw ConfigError("paths", "need at least one path");
  return cfg;
}

RunConfig parse_config(const std::optional<std::filesystem::path>& file, const ConfigOverrides& flags) {
  nlohmann::json j;
  if (file) {
    std::ifstream in(*file);
    if (!in) throw ConfigError("config", "cannot read config file " + file->string());
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError("config", std::string("config file is not valid JSON: ") + e.what());
    }
  }
  return parse_config(j, flags);
}

}  // namespace cirldp

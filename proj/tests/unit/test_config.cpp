#include <filesystem>
#include <fstream>

#include "catch_amalgamated.hpp"
#include "cirldp/config.hpp"
#include "cirldp/errors.hpp"

using namespace cirldp;
using nlohmann::json;

TEST_CASE("defaults") {
  const auto cfg = parse_config(json::object({{"a", 4}, {"b", -1}}), {});
  CHECK(cfg.params.x0 == 1.0);
  CHECK(cfg.steps_per_unit == 200.0);
  CHECK_FALSE(cfg.seed.has_value());
  CHECK_THROWS_AS(cfg.require_seed(), ConfigError);
  CHECK(cfg.n_steps() == 20000);
}

TEST_CASE("flags override the file") {
  ConfigOverrides o;
  o.T = 50.0;
  const auto cfg = parse_config(json::object({{"T", 100}, {"seed", 9}, {"a", 3}}), o);
  CHECK(cfg.T == 50.0);
  CHECK(cfg.params.a == 3.0);
  CHECK(cfg.require_seed() == 9);
}

TEST_CASE("regime and key errors") {
  ConfigOverrides o;
  o.b = 0.5;
  CHECK_THROWS_AS(parse_config(json::object(), o), RegimeError);
  try {
    parse_config(json::object({{"sigma", 1}}), {});
    FAIL("no error");
  } catch (const ConfigError& e) {
    CHECK(e.key() == "sigma");
  }
  CHECK_THROWS_AS(parse_config(json::object({{"a", json::object({{"v", 4}})}}), {}), ConfigError);
  CHECK_THROWS_AS(parse_config(json::object({{"a", "four"}}), {}), ConfigError);
  CHECK_THROWS_AS(parse_config(json::array({1, 2}), {}), ConfigError);
  ConfigOverrides tiny;
  tiny.T = 0.001;
  tiny.steps_per_unit = 1.0;
  CHECK_THROWS_AS(parse_config(json::object(), tiny), ConfigError);
}

TEST_CASE("config files") {
  const auto dir = std::filesystem::temp_directory_path() / "cirldp_test_config";
  std::filesystem::create_directories(dir);
  const auto path = dir / "run.json";
  std::ofstream(path) << R"({"a": 6, "b": -2, "paths": 10})";
  const auto cfg = parse_config(std::optional<std::filesystem::path>(path), {});
  CHECK(cfg.params.a == 6.0);
  CHECK(cfg.n_paths == 10);
  CHECK_THROWS_AS(parse_config(std::optional<std::filesystem::path>(dir / "missing.json"), {}), ConfigError);
  std::ofstream(dir / "bad.json") << "{";
  CHECK_THROWS_AS(parse_config(std::optional<std::filesystem::path>(dir / "bad.json"), {}), ConfigError);
}

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catch_amalgamated.hpp"
#include "cirldp/commands.hpp"

using namespace cirldp;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "cir_ldp");
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("rate at a point") {
  const auto r = run({"rate", "--which", "I", "--alpha", "0", "--beta", "0", "--a", "4", "--b", "-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1.414214\n");
  CHECK(run({"rate", "--which", "J", "--alpha", "2", "--beta", "0.5"}).out == "inf\n");
  CHECK(run({"rate", "--which", "Kb", "--beta", "0", "--precision", "3"}).out == "1.414\n");
}

TEST_CASE("exit codes and error reports") {
  const auto regime = run({"rate", "--which", "J", "--alpha", "1", "--beta", "1", "--b", "0.5"});
  CHECK(regime.code == 2);
  CHECK(regime.err.find("RegimeError") != std::string::npos);
  CHECK(run({"rate", "--which", "J", "--alpha", "1", "--bogus", "1"}).code == 2);
  CHECK(run({"rate", "--which", "nope", "--alpha", "1", "--beta", "1"}).code == 2);
  CHECK(run({"rate", "--which", "J", "--alpha", "1"}).code == 2);
  CHECK(run({"simulate", "--T", "1"}).code == 2);
  const auto dom = run({"rate", "--which", "I_infsup", "--alpha", "3", "--beta", "1"});
  CHECK(dom.code == 3);
  CHECK(dom.err.find("DomainError") != std::string::npos);
}

TEST_CASE("help lists the flags") {
  const auto r = run({"rate", "--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("--which") != std::string::npos);
  CHECK(run({"--help"}).out.find("simulate") != std::string::npos);
}

TEST_CASE("cgf command") {
  const auto j = nlohmann::json::parse(run({"cgf", "--mode", "limit", "--gamma", "-1"}).out);
  CHECK(j.at("value").get<double>() == Catch::Approx(0.125));
  CHECK(nlohmann::json::parse(run({"cgf", "--mode", "limit", "--mu", "0.125"}).out).at("value") == "inf");
  const auto g = nlohmann::json::parse(run({"cgf", "--mode", "gradient"}).out);
  CHECK(g.at("gradient").at(1).get<double>() == Catch::Approx(4.0));
}

TEST_CASE("artifacts are byte-identical across runs") {
  const auto base = std::filesystem::temp_directory_path() / "cirldp_test_commands";
  std::filesystem::remove_all(base);
  for (const char* sub : {"one", "two"}) {
    const std::string dir = (base / sub).string();
    CHECK(run({"simulate", "--T", "2", "--paths", "3", "--seed", "5", "--out", dir.c_str()}).code == 0);
    CHECK(run({"estimate", "--T", "5", "--paths", "4", "--seed", "5", "--estimator", "mle", "--out", dir.c_str()}).code == 0);
  }
  for (const auto& e : std::filesystem::directory_iterator(base / "one")) {
    CHECK(slurp(e.path()) == slurp(base / "two" / e.path().filename()));
  }
  CHECK(std::filesystem::exists(base / "one" / "path_000002.csv"));
  const auto a = run({"check", "continuity"});
  const auto b = run({"check", "continuity"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("figure grids") {
  const auto r = run({"figures", "--fig", "1", "--n-alpha", "3", "--n-beta", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("alpha,beta,J,K,I\n3,-4,", 0) == 0);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 7);
}

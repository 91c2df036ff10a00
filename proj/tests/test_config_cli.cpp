#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "slzeta/cli.hpp"
#include "slzeta/config.hpp"

using namespace slzeta;
using slzeta::config::ConfigError;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    path_ = std::filesystem::temp_directory_path() /
            ("slzeta_test_" + std::to_string(counter_++) + ".cfg");
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("config files parse into problems") {
  const auto cfg = config::parse_config(
      "# a comment\n"
      "a = 0\n"
      "b = pi   # trailing comment\n"
      "p = 1 + x^2\n"
      "q = x\n"
      "alpha = dirichlet\n"
      "beta = neumann\n"
      "shift = -1\n"
      "method = eigen\n"
      "n = 3\n"
      "eigs = 200\n"
      "tol = 1e-9\n");
  CHECK(cfg.a == 0.0);
  CHECK(cfg.b == std::numbers::pi);
  CHECK(cfg.alpha == 0.0);
  CHECK(cfg.beta == std::numbers::pi / 2);
  CHECK(cfg.shift == -1.0);
  CHECK(cfg.method == "eigen");
  CHECK(cfg.n == 3);
  CHECK(cfg.eigs == 200);
  CHECK(cfg.tol == 1e-9);
  CHECK_FALSE(cfg.grid.has_value());
  const auto problem = cfg.to_problem();
  CHECK(problem.p(2.0) == 5.0);
  CHECK(problem.q(0.5) == 0.5);
  CHECK(problem.w(0.3) == 1.0);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(config::parse_config("c = 1\n"), ConfigError);
  CHECK_THROWS_AS(config::parse_config("a = 0\na = 1\n"), ConfigError);
  CHECK_THROWS_AS(config::parse_config("a = x\n"), ConfigError);
  CHECK_THROWS_AS(config::parse_config("a = 2\nb = 1\n"), ConfigError);
  CHECK_THROWS_AS(config::parse_config("p = 1 +\n"), ConfigError);
  CHECK_THROWS_AS(config::parse_config("p\n"), ConfigError);
  CHECK_THROWS_AS(config::parse_config("n = 2.5\n"), ConfigError);
  CHECK_THROWS_AS(config::parse_config("q =\n"), ConfigError);
  CHECK_THROWS_AS(config::load_config("/nonexistent/slzeta.cfg"), ConfigError);
  CHECK_THROWS_AS(config::preset("nope"), ConfigError);
}

TEST_CASE("presets and hashes") {
  CHECK(config::preset_names() ==
        std::vector<std::string>{"dirichlet-pi", "linear-potential",
                                 "mixed-unit"});
  const auto mixed = config::preset("mixed-unit");
  CHECK(mixed.b == 1.0);
  CHECK(mixed.beta == std::numbers::pi / 2);
  const auto hash = mixed.hash();
  CHECK(hash.size() == 16);
  CHECK(hash == config::preset("mixed-unit").hash());
  CHECK(hash != config::preset("dirichlet-pi").hash());
  // Spelling does not matter, the problem does.
  const auto respelled = config::parse_config(
      "b = (1)\nbeta = pi / 2\np = (1)\n# same problem\n");
  CHECK(respelled.hash() == hash);
}

TEST_CASE("angles") {
  CHECK(config::parse_angle("dirichlet") == 0.0);
  CHECK(config::parse_angle(" neumann ") == std::numbers::pi / 2);
  CHECK(config::parse_angle("pi/4") == std::numbers::pi / 4);
  CHECK_THROWS_AS(config::parse_angle("x"), ConfigError);
}

TEST_CASE("pairs output") {
  const auto table = run_cli({"pairs", "--n", "6", "--format", "table"});
  REQUIRE(table.code == 0);
  CHECK(table.out.find("{1,2,4}") != std::string::npos);
  CHECK(table.out.find("total 120") != std::string::npos);

  const auto json = run_cli({"pairs", "--n", "6", "--format", "json"});
  REQUIRE(json.code == 0);
  const auto records = json_lines(json.out);
  REQUIRE(records.size() == 9);
  CHECK(records[3]["V"] == nlohmann::json({1, 2}));
  CHECK(records[3]["P"] == nlohmann::json({5, 6}));
  CHECK(records[3]["class_number"] == "32");
  CHECK(records[3]["exponents"] == nlohmann::json({2, 2, 1, 1, 0, 0}));
  CHECK(records[0]["n"] == 6);
}

TEST_CASE("pairs output is deterministic") {
  for (int k = 2; k <= 7; ++k) {
    const std::vector<std::string> args{"pairs", "--n", std::to_string(k),
                                        "--format", "json"};
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.out == second.out);
    const auto t1 = run_cli({"pairs", "--n", std::to_string(k)});
    const auto t2 = run_cli({"pairs", "--n", std::to_string(k)});
    CHECK(t1.out == t2.out);
  }
}

TEST_CASE("classnum") {
  const auto r = run_cli({"classnum", "--n", "6", "--vales", "1,2",
                          "--pinnacles", "5,6", "--brute", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto rec = json_lines(r.out).at(0);
  CHECK(rec["class_number"] == "32");
  CHECK(rec["brute_force"] == "32");
  CHECK(rec["admissible"] == true);

  const auto bad = run_cli({"classnum", "--n", "6", "--vales", "1,4",
                            "--pinnacles", "3,6"});
  CHECK(bad.code == 0);
  CHECK(bad.out.find("class_number 0") != std::string::npos);

  CHECK(run_cli({"classnum", "--n", "6", "--vales", "1,x", "--pinnacles", "6"})
            .code == cli::kUsageError);
  CHECK(run_cli({"classnum", "--n", "6", "--vales", "1,7", "--pinnacles", "6"})
            .code == cli::kUsageError);
  CHECK(run_cli({"classnum", "--n", "12", "--vales", "1", "--pinnacles", "12",
                 "--brute"})
            .code == cli::kDomainError);
}

TEST_CASE("zeta-even and bernoulli") {
  const auto z = run_cli({"zeta-even", "--n", "3"});
  REQUIRE(z.code == 0);
  CHECK(z.out.find("1/945") != std::string::npos);

  const auto zj = run_cli({"zeta-even", "--n", "4", "--format", "json"});
  const auto rec = json_lines(zj.out).at(0);
  CHECK(rec["zeta_even"] == "1/9450");
  CHECK(rec["zeta_t"] == "17/630");
  CHECK(rec["bernoulli"] == "-1/30");

  const auto b = run_cli({"bernoulli", "--n", "8"});
  REQUIRE(b.code == 0);
  CHECK(b.out.find("B_8 = -1/30") != std::string::npos);
  CHECK(b.out.find("|B_8|") != std::string::npos);
  CHECK(b.out.find("1/9450 pi^8") != std::string::npos);

  const auto b1 = run_cli({"bernoulli", "--n", "1", "--format", "json"});
  CHECK(json_lines(b1.out).at(0)["bernoulli"] == "-1/2");
  const auto b60 = run_cli({"bernoulli", "--n", "60", "--format", "json"});
  CHECK(json_lines(b60.out).at(0)["via"] == "recurrence");
  CHECK(run_cli({"bernoulli", "--n", "7", "--via", "pairs"}).code ==
        cli::kUsageError);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({}).code == cli::kUsageError);
  CHECK(run_cli({"frobnicate"}).code == cli::kUsageError);
  CHECK(run_cli({"pairs"}).code == cli::kUsageError);
  CHECK(run_cli({"pairs", "--n", "six"}).code == cli::kUsageError);
  CHECK(run_cli({"pairs", "--n", "6", "--format", "xml"}).code ==
        cli::kUsageError);
  CHECK(run_cli({"zeta-even", "--n", "0"}).code == cli::kUsageError);
  CHECK(run_cli({"sl", "--n", "2"}).code == cli::kUsageError);
  CHECK(run_cli({"sl", "--preset", "nope", "--n", "2"}).code ==
        cli::kUsageError);
  CHECK(run_cli({"sl", "--preset", "mixed-unit", "--n", "2", "--method",
                 "magic"})
            .code == cli::kUsageError);
  CHECK(run_cli({"--help"}).code == cli::kSuccess);
}

TEST_CASE("sl on a preset") {
  const auto r = run_cli({"sl", "--preset", "mixed-unit", "--n", "3",
                          "--method", "all", "--eigs", "200", "--format",
                          "json"});
  REQUIRE(r.code == 0);
  const auto records = json_lines(r.out);
  REQUIRE(records.size() == 3);
  const char* methods[] = {"theorem", "trace", "eigen"};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& rec = records[i];
    CHECK(rec["method"] == methods[i]);
    CHECK(rec["n"] == 3);
    CHECK(rec["problem_hash"] == config::preset("mixed-unit").hash());
    CHECK(rec["value"].get<double>() == doctest::Approx(1.0 / 15).epsilon(1e-6));
    CHECK(rec["error_estimate"].is_number());
    CHECK(rec["grid_size"].is_number_integer());
    CHECK(rec["tolerances"]["eigen"] == 1e-10);
  }

  const auto table = run_cli({"sl", "--preset", "dirichlet-pi", "--n", "1",
                              "--eigs", "100"});
  REQUIRE(table.code == 0);
  CHECK(table.out.find("eigen") != std::string::npos);
  CHECK(table.err.find("skipped theorem") != std::string::npos);
  CHECK(run_cli({"sl", "--preset", "dirichlet-pi", "--n", "1", "--method",
                 "trace"})
            .code == cli::kUsageError);
}

TEST_CASE("sl on a config file") {
  const TempFile file(
      "a = 0\nb = 1\nq = x\nmethod = trace\nn = 2\ngrid = 100\n");
  const auto r = run_cli({"sl", "--config", file.path(), "--format", "json"});
  REQUIRE(r.code == 0);
  const auto rec = json_lines(r.out).at(0);
  CHECK(rec["method"] == "trace");
  CHECK(rec["grid_size"] == 100);

  const TempFile collision("a = 0\nb = pi\nshift = 1\nn = 2\nmethod = theorem\n");
  const auto c = run_cli({"sl", "--config", collision.path()});
  CHECK(c.code == cli::kDomainError);
  CHECK(c.err.find("error") != std::string::npos);

  const TempFile weighted("w = 1 + x\nn = 2\nmethod = trace\n");
  CHECK(run_cli({"sl", "--config", weighted.path()}).code == cli::kDomainError);

  const TempFile broken("a = 0\nbogus = 1\n");
  CHECK(run_cli({"sl", "--config", broken.path(), "--n", "2"}).code ==
        cli::kUsageError);

  const TempFile singular("p = x\nn = 2\n");
  CHECK(run_cli({"sl", "--config", singular.path()}).code ==
        cli::kDomainError);
}

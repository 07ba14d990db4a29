#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hslab/cli.hpp"

namespace fs = std::filesystem;
using hslab::cli::run;

namespace {
fs::path fresh_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("hslab_cli_test_" + name);
  fs::remove_all(d);
  return d;
}

std::vector<std::string> lines_of(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string s; std::getline(in, s);)
    if (!s.empty()) out.push_back(s);
  return out;
}

struct Capture {
  std::ostringstream buf;
  std::streambuf* old;
  Capture() : old(std::cout.rdbuf(buf.rdbuf())) {}
  ~Capture() { std::cout.rdbuf(old); }
};
}  // namespace

TEST_CASE("length parsing") {
  using hslab::cli::parse_length;
  CHECK(parse_length("pi") == doctest::Approx(std::numbers::pi));
  CHECK(parse_length("pi/2") == doctest::Approx(std::numbers::pi / 2));
  CHECK(parse_length("2pi") == doctest::Approx(2 * std::numbers::pi));
  CHECK(parse_length("1.5") == doctest::Approx(1.5));
  CHECK_THROWS(parse_length("banana"));
}

TEST_CASE("constants command writes a tagged record") {
  const fs::path d = fresh_dir("constants");
  int code;
  std::string printed;
  {
    Capture c;
    code = run({"hslab", "constants", "--dim", "5", "--sigma", "1", "--out", d.string()});
    printed = c.buf.str();
  }
  CHECK(code == hslab::cli::kExitOk);
  const auto rec = lines_of(d / "records.ndjson");
  REQUIRE(rec.size() == 1);
  const auto j = nlohmann::json::parse(rec[0]);
  CHECK(j["command"] == "constants");
  CHECK(j["timestamp"].get<std::string>().size() > 0);
  CHECK(nlohmann::json::parse(printed)["timestamp"].get<std::string>().size() > 0);
  for (auto& [key, value] : j["results"].items()) CHECK(j["provenance"].contains(key));
  // appended, not overwritten
  {
    Capture c;
    run({"hslab", "constants", "--dim", "4", "--sigma", "0.5", "--out", d.string()});
  }
  CHECK(lines_of(d / "records.ndjson").size() == 2);
  fs::remove_all(d);
}

TEST_CASE("bad input exits with 1") {
  const fs::path d = fresh_dir("bad");
  Capture c;
  CHECK(run({"hslab", "constants", "--dim", "2", "--sigma", "1", "--out", d.string()}) == hslab::cli::kExitError);
  CHECK(run({"hslab", "constants", "--dim", "5", "--sigma", "2.5", "--out", d.string()}) == hslab::cli::kExitError);
  CHECK(run({"hslab", "no-such-command"}) == hslab::cli::kExitError);
  CHECK(run({"hslab", "solve", "--manifold", "torus", "--out", d.string()}) == hslab::cli::kExitError);
  fs::remove_all(d);
}

TEST_CASE("mu-curve table header is written once") {
  const fs::path d = fresh_dir("curve");
  {
    Capture c;
    const std::vector<std::string> a{"hslab", "mu-curve", "--manifold", "sphere", "--dim", "3", "--nodes", "64",
                                     "--lambda-min", "-1", "--lambda-max", "0", "--steps", "3", "--out", d.string()};
    CHECK(run(a) == 0);
    CHECK(run(a) == 0);
  }
  const auto rows = lines_of(d / "mu_curve.csv");
  REQUIRE(rows.size() == 7);
  CHECK(rows[0].rfind("lambda", 0) == 0);
  for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k].rfind("lambda", 0) != 0);
  fs::remove_all(d);
}

TEST_CASE("config file values are overridden by flags") {
  const fs::path d = fresh_dir("config");
  fs::create_directories(d);
  const fs::path cfg = d / "run.cfg";
  {
    std::ofstream out(cfg);
    out << "# test\ndim = 4\nsigma = 1\n";
  }
  const auto toks = hslab::cli::config_tokens(cfg.string());
  CHECK(toks == std::vector<std::string>{"--dim", "4", "--sigma", "1"});
  {
    Capture c;
    CHECK(run({"hslab", "constants", "--config", cfg.string(), "--dim", "5", "--out", d.string()}) == 0);
  }
  const auto j = nlohmann::json::parse(lines_of(d / "records.ndjson").at(0));
  CHECK(j["parameters"]["dim"] == 5);
  fs::remove_all(d);
}

TEST_CASE("theorem check exit codes") {
  const fs::path d = fresh_dir("thm");
  Capture c;
  CHECK(run({"hslab", "theorem2-check", "--manifold", "sphere", "--dim", "4", "--sigma", "1", "--lambda", "-1",
             "--nodes", "128", "--out", d.string()}) == hslab::cli::kExitOk);
  CHECK(run({"hslab", "theorem2-check", "--manifold", "euclidean", "--dim", "4", "--sigma", "1", "--lambda", "0",
             "--nodes", "128", "--out", d.string()}) == hslab::cli::kExitInconclusive);
  fs::remove_all(d);
}

TEST_CASE("verify constants suite passes") {
  const fs::path d = fresh_dir("verify");
  Capture c;
  CHECK(run({"hslab", "verify", "--suite", "constants", "--out", d.string()}) == 0);
  CHECK(c.buf.str().find("FAIL") == std::string::npos);
  fs::remove_all(d);
}

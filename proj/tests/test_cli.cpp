#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "alphadg/cli.hpp"
#include "alphadg/errors.hpp"
#include "alphadg/formulas.hpp"

using namespace alphadg;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "alphadg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("integer and real lists") {
  CHECK(cli::parse_int_list("4..7") == std::vector<int>{4, 5, 6, 7});
  CHECK(cli::parse_int_list("1,3,8..10/2") == std::vector<int>{1, 3, 8, 10});
  CHECK(cli::parse_real_list("0,0.1,...,0.9").size() == 10);
  CHECK(cli::parse_real_list("0,0.1,...,0.9")[3] == 0.3);
  CHECK(cli::parse_real_list("0..0.9/0.05").size() == 19);
  CHECK(cli::parse_real_list("0.25") == std::vector<double>{0.25});
  CHECK_THROWS_AS(cli::parse_int_list("5..3"), InvalidInput);
  CHECK_THROWS_AS(cli::parse_int_list("a"), InvalidInput);
  CHECK_THROWS_AS(cli::parse_real_list("0..1"), InvalidInput);
  CHECK_THROWS_AS(cli::parse_real_list("...,1"), InvalidInput);
  CHECK_THROWS_AS(cli::parse_real_list("0,,1"), InvalidInput);
}

TEST_CASE("number formatting uses twelve significant digits") {
  CHECK(cli::format_real(1.0 / 3) == "0.333333333333");
  CHECK(cli::format_real(2.5) == "2.5");
}

TEST_CASE("radius of a cycle") {
  const Run r = run({"radius", "--family", "cycle", "--n", "6", "--alpha", "0.3", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["radius"].get<double>() == 1.0);
  CHECK(j["hi"].get<double>() - j["lo"].get<double>() == 0.0);
}

TEST_CASE("radius JSON schema") {
  const Run r = run({"radius", "--family", "knkm", "--n", "6", "--k", "2", "--m", "3", "--alpha", "0.5", "--format",
                     "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.size() == 5);
  REQUIRE(j["radius"].is_number());
  REQUIRE(j["lo"].is_number());
  REQUIRE(j["hi"].is_number());
  REQUIRE(j["perron"].is_array());
  CHECK(j["perron"].size() == 6);
  for (const auto& x : j["perron"]) CHECK(x.is_number());
  REQUIRE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    CHECK(c.size() == 2);
    CHECK(c["name"].is_string());
    CHECK(c["pass"].get<bool>());
  }
  CHECK(std::abs(j["radius"].get<double>() - lambda_knkm(6, 2, 3, 0.5)) <= 1e-8);
}

TEST_CASE("radius input errors map to exit codes") {
  const auto path = temp_file("alphadg_path_4.dg", "n 4\n0 1\n1 2\n2 3\n");
  Run r = run({"radius", "--file", path.string(), "--alpha", "0"});
  CHECK(r.code == cli::kExitPrecondition);
  CHECK_FALSE(r.err.empty());

  const auto bad = temp_file("alphadg_bad.dg", "n 3\n0 0\n");
  CHECK(run({"radius", "--file", bad.string()}).code == cli::kExitUsage);
  CHECK(run({"radius", "--family", "cycle", "--n", "4", "--alpha", "1.5"}).code == cli::kExitUsage);
  CHECK(run({"radius"}).code == cli::kExitUsage);
  CHECK(run({"radius", "--bogus"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == 0);
  std::filesystem::remove(path);
  std::filesystem::remove(bad);
}

TEST_CASE("radius text and csv output") {
  Run r = run({"radius", "--family", "complete", "--n", "4", "--alpha", "0.2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("radius       3") != std::string::npos);
  r = run({"radius", "--family", "complete", "--n", "4", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).front() == "quantity,value");
  CHECK(lines(r.out)[1] == "radius,3");
}

TEST_CASE("verify") {
  Run r = run({"verify", "T3.1", "--n", "4", "--alpha", "0,0.5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("confirmed") != std::string::npos);
  r = run({"verify", "R5.1", "--n", "5", "--alpha", "0.5", "--format", "json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j[0]["status"] == "confirmed");
  CHECK(j[0]["witness"].is_null());
  CHECK(run({"verify", "T9.9", "--n", "4"}).code == cli::kExitUsage);
  CHECK(run({"verify", "T3.1", "--n", "9"}).code == cli::kExitUsage);
  CHECK(run({"verify", "T3.1", "--n", "6"}).code == cli::kExitPrecondition);
}

TEST_CASE("formula sweep") {
  const Run r = run({"sweep", "formula", "--n", "4..10", "--alpha", "0,0.1,...,0.9"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.front() == "n,k,m,alpha,formula,numeric,abs_err");
  std::size_t rows = 0;
  for (int n = 4; n <= 10; ++n)
    for (int k = 1; k <= n - 2; ++k) rows += static_cast<std::size_t>(n - k - 1) * 10;
  CHECK(ls.size() == rows + 1);
  double worst = 0;
  for (std::size_t i = 1; i < ls.size(); ++i) worst = std::max(worst, std::stod(ls[i].substr(ls[i].rfind(',') + 1)));
  CHECK(worst <= 1e-8);
}

TEST_CASE("alpha sweeps") {
  Run r = run({"sweep", "alpha", "--family", "knkm", "--n", "8", "--k", "3", "--m", "4", "--alpha", "0..0.9/0.05"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 20);
  r = run({"sweep", "alpha", "--family", "complete", "--n", "7", "--alpha", "0,0.1,...,0.9"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  for (std::size_t i = 1; i < ls.size(); ++i) CHECK(ls[i].substr(ls[i].find(',') + 1, 2) == "6,");
  CHECK(run({"sweep", "alpha", "--family", "complete", "--n", "7", "--alpha", "0..x/0.1"}).code == cli::kExitUsage);
  CHECK(run({"sweep", "sideways"}).code == cli::kExitUsage);
}

TEST_CASE("scan, explore and generate") {
  Run r = run({"scan", "--n", "4", "--alpha", "0.5", "--parameter", "girth", "--mode", "min", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.size() == 3);
  CHECK(j[2]["key"] == 4);
  CHECK(j[2]["bands"][0]["value"].get<double>() == 1.0);

  r = run({"explore", "--n", "4", "--d", "2", "--alpha", "0,0.5"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).front() == "# exploratory - open problem");
  CHECK(lines(r.out).size() == 4);

  r = run({"generate", "--family", "c_ng", "--n", "5", "--g", "3", "--primed"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("n 5\n", 0) == 0);
  CHECK(r.out.find("4 2\n") != std::string::npos);
}

TEST_CASE("config file with flag overrides") {
  const auto cfg = temp_file("alphadg_cfg.txt", "# settings\ntol = 1e-6\nformat = json\nworkers=2\n");
  Run r = run({"--config", cfg.string(), "radius", "--family", "b_nd", "--n", "6", "--d", "3", "--alpha", "0.3"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["hi"].get<double>() - j["lo"].get<double>() <= 1e-6);
  r = run({"--config", cfg.string(), "--format", "csv", "radius", "--family", "cycle", "--n", "3"});
  CHECK(lines(r.out).front() == "quantity,value");

  const auto broken = temp_file("alphadg_cfg_bad.txt", "tol = fast\n");
  r = run({"--config", broken.string(), "radius", "--family", "cycle", "--n", "3"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find(":1:") != std::string::npos);
  std::filesystem::remove(cfg);
  std::filesystem::remove(broken);

  cli::RunConfig c;
  const auto keys = temp_file("alphadg_cfg_keys.txt", "long_runs = yes\nmax_iters = 50\n");
  CHECK(cli::apply_config_file(keys.string(), c) == std::vector<std::string>{"long_runs", "max_iters"});
  CHECK(c.long_runs);
  CHECK(c.max_iters == 50);
  std::filesystem::remove(keys);
}

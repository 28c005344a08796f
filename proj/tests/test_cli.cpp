#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

#ifndef IDEAL_LAB_CLI_PATH
#error "IDEAL_LAB_CLI_PATH must point at the ideal-lab binary"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "ideal_lab_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
  fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd = env + (env.empty() ? "" : " ") + IDEAL_LAB_CLI_PATH + " " + args + " >" +
                    out.string() + " 2>" + err.string();
  int status = std::system(cmd.c_str());
  Run r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("survey exit codes") {
  CHECK(run_cli("survey --type A2").exit_code == 0);
  CHECK(run_cli("survey --type B9").exit_code == 3);     // Weyl order above the default cap
  CHECK(run_cli("survey --type Z3").exit_code == 2);     // unknown type
  CHECK(run_cli("survey --type D3").exit_code == 2);     // rank outside the supported table
  CHECK(run_cli("survey").exit_code == 2);               // --type is required
  CHECK(run_cli("survey --type A2 --checks thm1,bogus").exit_code == 2);
  CHECK(run_cli("survey --type A2 --output /nonexistent/dir/out.json").exit_code == 4);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("ideal exit codes and SPEC argument parsing") {
  CHECK(run_cli("ideal A2 theta").exit_code == 0);
  CHECK(run_cli("ideal A2 empty").exit_code == 0);
  CHECK(run_cli("ideal B3 full").exit_code == 0);
  CHECK(run_cli("ideal A2 0 1 2").exit_code == 0);
  CHECK(run_cli("ideal A2 everything").exit_code == 2);  // unknown keyword
  CHECK(run_cli("ideal A2 99").exit_code == 2);          // root index out of range
  CHECK(run_cli("ideal A2 theta --format csv").exit_code == 2);
  CHECK(run_cli("ideal B9 theta").exit_code == 3);
}

TEST_CASE("survey JSON report shape") {
  fs::path out = scratch_dir() / "a2.json";
  REQUIRE(run_cli("survey --type A2 --reproducible --output " + out.string()).exit_code == 0);
  auto j = nlohmann::ordered_json::parse(slurp(out));

  CHECK(j["type"] == "A2");
  CHECK(j["rank"] == 2);
  CHECK(j["ideal_count"] == 5);
  CHECK(j["scopes"]["thm1"] == "proven");
  CHECK(j["scopes"]["thm2"] == "proven");
  CHECK(j["scopes"]["macdonald"] == "proven");
  CHECK(j["scopes"]["chambers"] == "speculative");
  CHECK(j["summary"]["thm1_checked"] == 5);
  CHECK(j["summary"]["thm1_equal"] == 5);
  CHECK(j["summary"]["free_found"] == 5);
  CHECK(j["summary"]["proven_ok"] == true);
  CHECK(j["summary"]["budget_hit"] == false);
  CHECK_FALSE(j.contains("timestamp"));  // suppressed by --reproducible
  REQUIRE(j["records"].size() == 5);

  std::vector<std::string> keys;
  for (auto it = j["records"][0].begin(); it != j["records"][0].end(); ++it)
    keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"ideal_id", "ideal_roots", "lambda", "k", "exponents",
                                         "thm1", "thm2", "free", "certificate_depth", "macdonald",
                                         "chambers", "millis"});

  // the empty ideal carries the classical exponents
  CHECK(j["records"][0]["ideal_roots"].empty());
  CHECK(j["records"][0]["exponents"].get<std::vector<int>>() == std::vector<int>{1, 2});

  // summary tallies match the records
  int equal = 0;
  for (const auto& rec : j["records"]) equal += rec["thm1"] == "equal";
  CHECK(j["summary"]["thm1_equal"] == equal);
}

TEST_CASE("survey CSV format") {
  fs::path out = scratch_dir() / "b3.csv";
  REQUIRE(run_cli("survey --type B3 --format csv --reproducible --output " + out.string())
              .exit_code == 0);
  std::istringstream in(slurp(out));
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "ideal_id,k,exponents,thm1,thm2,free,millis");
  int rows = 0;
  bool saw_classical = false;
  while (std::getline(in, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 6);
    saw_classical |= line == "0,3,1;3;5,equal,equal,found,0";
    ++rows;
  }
  CHECK(rows == 20);
  CHECK(saw_classical);
}

TEST_CASE("--reproducible output is byte-identical across runs") {
  fs::path first = scratch_dir() / "rep1.json";
  fs::path second = scratch_dir() / "rep2.json";
  REQUIRE(run_cli("survey --type B3 --reproducible --output " + first.string()).exit_code == 0);
  REQUIRE(run_cli("survey --type B3 --reproducible --output " + second.string()).exit_code == 0);
  std::string a = slurp(first);
  CHECK(!a.empty());
  CHECK(a == slurp(second));
}

TEST_CASE("ideal JSON report shape") {
  Run r = run_cli("ideal G2 empty --reproducible");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["type"] == "G2");
  CHECK(j["ideal_roots"].empty());
  CHECK(j["exponents"].get<std::vector<int>>() == std::vector<int>{1, 5});
  CHECK(j["checks"]["thm1"]["verdict"] == "equal");
  CHECK(j["checks"]["thm1"]["scope"] == "proven");
  CHECK(j["checks"]["thm2"]["verdict"] == "equal");
  CHECK(j["checks"]["macdonald"]["verdict"] == "equal");
  CHECK(j["checks"]["chambers"]["scope"] == "speculative");
  CHECK(j["free"]["status"] == "found");
  CHECK(j["proven_ok"] == true);
  CHECK(j["budget_hit"] == false);

  // mass of the thm1 polynomial is |W(G2)| = 12
  auto coeffs = j["checks"]["thm1"]["lhs_coeffs"].get<std::vector<long long>>();
  long long mass = 0;
  for (long long c : coeffs) mass += c;
  CHECK(mass == 12);
}

TEST_CASE("ideal subcommand reports upper-closure completion on stderr") {
  Run r = run_cli("ideal A2 0");
  REQUIRE(r.exit_code == 0);
  CHECK(r.err.find("note: upper closure added roots") != std::string::npos);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["ideal_roots"].get<std::vector<int>>() == std::vector<int>{0, 2});

  Run quiet = run_cli("ideal A2 theta");
  CHECK(quiet.err.find("note:") == std::string::npos);
}

TEST_CASE("checks subset limits the work") {
  fs::path out = scratch_dir() / "subset.json";
  REQUIRE(run_cli("survey --type A3 --checks thm2,free --reproducible --output " + out.string())
              .exit_code == 0);
  auto j = nlohmann::ordered_json::parse(slurp(out));
  CHECK(j["scopes"].contains("thm2"));
  CHECK(j["scopes"].contains("free"));
  CHECK_FALSE(j["scopes"].contains("thm1"));
  CHECK(j["summary"]["thm1_checked"] == 0);
  for (const auto& rec : j["records"]) {
    CHECK(rec["thm1"] == "");
    CHECK(rec["thm2"] == "equal");
  }
}

TEST_CASE("--jobs gives the same report") {
  fs::path one = scratch_dir() / "jobs1.json";
  fs::path four = scratch_dir() / "jobs4.json";
  REQUIRE(run_cli("survey --type B3 --jobs 1 --reproducible --output " + one.string()).exit_code ==
          0);
  REQUIRE(run_cli("survey --type B3 --jobs 4 --reproducible --output " + four.string())
              .exit_code == 0);
  CHECK(slurp(one) == slurp(four));
}

TEST_CASE("Weyl cache directory is honored") {
  fs::path cache = scratch_dir() / "cache";
  fs::create_directories(cache);
  fs::path out1 = scratch_dir() / "cached1.json";
  fs::path out2 = scratch_dir() / "cached2.json";
  std::string env = "IDEAL_LAB_CACHE_DIR=" + cache.string();
  REQUIRE(run_cli("survey --type B3 --reproducible --output " + out1.string(), env).exit_code == 0);
  bool has_file = false;
  for (const auto& entry : fs::directory_iterator(cache)) has_file |= entry.is_regular_file();
  CHECK(has_file);
  REQUIRE(run_cli("survey --type B3 --reproducible --output " + out2.string(), env).exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("--cap controls the group-size guard") {
  CHECK(run_cli("survey --type B5 --cap 100").exit_code == 3);
  CHECK(run_cli("survey --type A3 --cap 100000").exit_code == 0);
}

#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

const char* cli_path() { return std::getenv("GLUINGS_CLI"); }

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::filesystem::path fresh_dir() {
  std::mt19937_64 rng(std::random_device{}());
  auto p = std::filesystem::temp_directory_path() /
           ("gluings-cli-test-" + std::to_string(rng()));
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("command line interface") {
  if (!cli_path()) {
    MESSAGE("GLUINGS_CLI not set; skipping CLI tests");
    return;
  }

  SUBCASE("verify matches brute force against the formulas") {
    const CliResult r = run_cli("verify --family eps --g 0 --K 2 --N 1..5");
    CHECK(r.status == 0);
    CHECK(r.out.find("5/5 matched") != std::string::npos);
    CHECK(run_cli("verify --family B --g 0 --K 2 --N 1..5").status == 0);
    CHECK(run_cli("verify --family eps-tilde --K 2 --N 4..6 --workers 2").status == 0);
    const CliResult json = run_cli("verify --family eps --g 1 --K 2 --N 1..4 --format json");
    CHECK(json.status == 0);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j.at("matched").get<int>() == 4);
    CHECK(j.at("failures").empty());
  }

  SUBCASE("table emits the zero region") {
    const CliResult r = run_cli("table --family eps --g 1 --K 2 --N 0..0 --format csv");
    CHECK(r.status == 0);
    CHECK(r.out == "family,g,N,K,M,value\neps,1,0,2,,0\n");
  }

  SUBCASE("table csv golden output") {
    const CliResult r = run_cli("table --family eps --g 0 --K 2 --N 1..3 --format csv");
    CHECK(r.status == 0);
    CHECK(r.out == "family,g,N,K,M,value\neps,0,1,2,,1\neps,0,2,2,,8\neps,0,3,2,,48\n");
  }

  SUBCASE("genus ranges expand to one row per cell") {
    const CliResult r = run_cli("table --family eps --g 0..1 --K 2 --N 3..3 --format csv");
    CHECK(r.status == 0);
    CHECK(r.out == "family,g,N,K,M,value\neps,0,3,2,,48\neps,1,3,2,,21\n");
    CHECK(run_cli("verify --family eps --g 0..1 --K 2 --N 1..3").status == 0);
  }

  SUBCASE("invalid configuration exits with 2") {
    CHECK(run_cli("table --family nope --N 1..2").status == 2);
    CHECK(run_cli("table --family eps --g 3 --K 2 --N 1..2").status == 2);
    CHECK(run_cli("table --family eps --g 0 --K 2 --N 5..1").status == 2);
    CHECK(run_cli("brute --family eps --g 0 --K 2 --N 9..9").status == 2);  // over the bound
    CHECK(run_cli("nonsense").status == 2);
  }

  SUBCASE("warm and cold cache emit identical bytes") {
    const auto dir = fresh_dir();
    const std::string base =
        "brute --family eps --g 0 --K 2 --N 1..3 --format csv --cache-dir " + dir.string();
    const CliResult cold = run_cli(base);
    CHECK(cold.status == 0);
    CHECK(!std::filesystem::is_empty(dir));
    const CliResult warm = run_cli(base);
    CHECK(warm.status == 0);
    CHECK(warm.out == cold.out);
    const CliResult nocache = run_cli("brute --family eps --g 0 --K 2 --N 1..3 --format csv");
    CHECK(nocache.out == cold.out);
    std::filesystem::remove_all(dir);
  }

  SUBCASE("reruns read the cache instead of recomputing") {
    const auto dir = fresh_dir();
    const std::string base =
        "table --family eps --g 0 --K 2 --N 2..2 --format csv --cache-dir " + dir.string();
    CHECK(run_cli(base).out == "family,g,N,K,M,value\neps,0,2,2,,8\n");
    // plant a sentinel value in the cached entry; the rerun must emit it
    bool planted = false;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      std::ifstream in(entry.path());
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      const auto at = text.find("\"8\"");
      REQUIRE(at != std::string::npos);
      text.replace(at, 3, "\"99\"");
      std::ofstream(entry.path()) << text;
      planted = true;
    }
    CHECK(planted);
    CHECK(run_cli(base).out == "family,g,N,K,M,value\neps,0,2,2,,99\n");
    std::filesystem::remove_all(dir);
  }

  SUBCASE("GLUINGS_CACHE_DIR provides the default cache directory") {
    const auto dir = fresh_dir();
    const std::string cmd = "GLUINGS_CACHE_DIR=" + dir.string() + " " + cli_path() +
                            " brute --family B --g 0 --K 2 --N 2..2 --format csv 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    pclose(pipe);
    CHECK(!std::filesystem::is_empty(dir));
    std::filesystem::remove_all(dir);
  }

  SUBCASE("delete-audit reports per-case multiplicities") {
    const CliResult r = run_cli("delete-audit --g 0 --K 2 --N 2..3 --format json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 2);
    for (const auto& rep : j) CHECK(rep.at("passed").get<bool>());
    CHECK(run_cli("delete-audit --bicolored --N 2..3").status == 0);
  }

  SUBCASE("identities subcommand") {
    CHECK(run_cli("identities --max-n 8 --brute-max-n 3").status == 0);
  }

  SUBCASE("--out writes the rendered table to a file") {
    const auto dir = fresh_dir();
    const auto file = dir / "rows.csv";
    CHECK(run_cli("table --family B --g 0 --K 2 --N 2..3 --format csv --out " + file.string())
              .status == 0);
    std::ifstream in(file);
    const std::string text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    CHECK(text == "family,g,N,K,M,value\nB,0,2,2,,1\nB,0,3,2,,8\n");
    std::filesystem::remove_all(dir);
  }
}

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = chowsym::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("chow verb") {
  const auto r = run({"chow", "--n", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["group"] == "Z@0 + Z@3");
  const auto table = run({"chow", "--n", "2"});
  CHECK(table.code == 0);
  CHECK(table.out.find("Z@0 + Z@2") != std::string::npos);
}

TEST_CASE("graph verb") {
  const auto dot = run({"graph", "--n", "2", "--fpf-only"});
  REQUIRE(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
  const auto json = run({"graph", "--n", "2", "--fpf-only", "--format", "json"});
  REQUIRE(json.code == 0);
  CHECK(nlohmann::json::parse(json.out)["vertices"].size() == 3);

  const auto capped = run({"graph", "--n", "7", "--fpf-only"});
  CHECK(capped.code == chowsym::cli::kExitUsage);
  CHECK(capped.err.find("--max-n-override") != std::string::npos);
  CHECK(run({"graph", "--n", "2", "--format", "table"}).code == chowsym::cli::kExitUsage);
}

TEST_CASE("graph to a file") {
  const auto path = std::filesystem::temp_directory_path() / "chowsym_cli_graph.json";
  const auto r = run({"graph", "--n", "3", "--fpf-only", "--format", "json", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(nlohmann::json::parse(buffer.str())["edges"].size() == 26);
  std::filesystem::remove(path);
}

TEST_CASE("involutions, strata and fiber verbs") {
  const auto inv = run({"involutions", "--n", "3", "--fpf-only", "--format", "json"});
  REQUIRE(inv.code == 0);
  CHECK(nlohmann::json::parse(inv.out)["count"] == 15);

  const auto one = run({"involutions", "--perm", "(1 6)(2 5)(3 4)", "--format", "json"});
  REQUIRE(one.code == 0);
  const auto orbit = nlohmann::json::parse(one.out)["orbits"][0];
  CHECK(orbit["codim"] == 9);
  CHECK(orbit["stratum"] == 1);
  CHECK(orbit["splits"] == true);

  const auto strata = run({"strata", "--n", "4", "--fpf-only", "--format", "json"});
  REQUIRE(strata.code == 0);
  CHECK(nlohmann::json::parse(strata.out)["strata"].size() == 7);
  const auto spot = run({"strata", "--perm", "(12)(34)(56)"});
  CHECK(spot.out == "O_(12)(34)(56) lies in X_5\n");

  const auto fiber = run({"fiber", "--perm", "(16)(23)(45)"});
  REQUIRE(fiber.code == 0);
  CHECK(fiber.out == "f_1(O_(16)(23)(45)) = O_(12)(34), fiber dimension 6\n");
  const auto dims = run({"fiber", "--n", "2", "--i", "3", "--format", "json"});
  REQUIRE(dims.code == 0);
  CHECK(nlohmann::json::parse(dims.out)["fibrations"][0]["fiber_dim"] == 6);
  CHECK(run({"fiber", "--perm", "(12)(34)", "--n", "3"}).code == chowsym::cli::kExitUsage);
  CHECK(run({"fiber", "--n", "2", "--i", "4"}).code == chowsym::cli::kExitUsage);
}

TEST_CASE("certify verb") {
  const auto r = run({"certify", "--n", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["survivor"]["cycles"] == "(12)(34)");
  CHECK(j["killing_relations"] == 2);
  CHECK(j["failed_checks"] == 0);
}

TEST_CASE("verify verb") {
  const auto r = run({"verify", "--up-to", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("checks passed") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == chowsym::cli::kExitUsage);
  CHECK(run({"bogus"}).code == chowsym::cli::kExitUsage);
  CHECK(run({"chow"}).code == chowsym::cli::kExitUsage);
  CHECK(run({"chow", "--n", "abc"}).code == chowsym::cli::kExitUsage);
  CHECK(run({"involutions", "--perm", "(123)"}).code == chowsym::cli::kExitUsage);
  CHECK(run({"verify", "--up-to", "0"}).code == chowsym::cli::kExitUsage);
  CHECK(run({"--help"}).code == 0);
}

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "chowsym/cycle_notation.hpp"
#include "chowsym/export.hpp"

namespace {

int count_of(const std::string& text, const std::string& needle) {
  int count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
  return count;
}

std::vector<int> rank_row_sizes(const std::string& dot) {
  std::vector<int> sizes;
  std::istringstream in(dot);
  std::string line;
  bool inside = false;
  while (std::getline(in, line)) {
    if (line.find("rank=same") != std::string::npos) {
      sizes.push_back(0);
      inside = true;
    } else if (inside && line.find("label=") != std::string::npos) {
      ++sizes.back();
    } else if (line.find('}') != std::string::npos) {
      inside = false;
    }
  }
  return sizes;
}

}  // namespace

TEST_CASE("dot export") {
  const auto d1 = chowsym::export_dot(chowsym::build_orbit_graph(1, true));
  CHECK(d1.format == chowsym::GraphDocument::Format::Dot);
  CHECK(count_of(d1.payload, "label=") == 1);
  CHECK(count_of(d1.payload, "->") == 0);
  CHECK(count_of(d1.payload, "O_(12)") == 1);

  const auto d2 = chowsym::export_dot(chowsym::build_orbit_graph(2, true));
  CHECK(count_of(d2.payload, "label=") == 3);
  CHECK(count_of(d2.payload, "->") == 2);
  CHECK(rank_row_sizes(d2.payload) == std::vector<int>{1, 1, 1});
  // Deepest orbit first.
  CHECK(d2.payload.find("O_(14)(23)") < d2.payload.find("O_(12)(34)"));

  const auto d3 = chowsym::export_dot(chowsym::build_orbit_graph(3, true));
  CHECK(rank_row_sizes(d3.payload) == std::vector<int>{1, 2, 3, 3, 3, 2, 1});
  CHECK(count_of(d3.payload, "->") == 26);
}

TEST_CASE("dot styles follow cross_stratum") {
  const auto g = chowsym::build_orbit_graph(3, true);
  const auto cross = std::ranges::count_if(g.edges, [](const auto& e) { return e.cross_stratum; });
  const auto doc = chowsym::export_dot(g, {"bold", "dotted"}).payload;
  CHECK(count_of(doc, "style=dotted") == cross);
  CHECK(count_of(doc, "style=bold") == static_cast<int>(g.edges.size()) - cross);
}

TEST_CASE("json export shape") {
  using Json = nlohmann::json;
  const auto j1 = Json::parse(chowsym::export_json(chowsym::build_orbit_graph(1, true)).payload);
  CHECK(j1["vertices"].size() == 1);
  CHECK(j1["edges"].empty());

  const auto j2 = Json::parse(chowsym::export_json(chowsym::build_orbit_graph(2, true)).payload);
  std::vector<int> codims;
  for (const auto& v : j2["vertices"]) codims.push_back(v["codim"]);
  CHECK(codims == std::vector<int>{2, 3, 4});
  CHECK(j2["vertices"][0]["cycles"] == "(12)(34)");
  CHECK(j2["vertices"][0]["one_line"] == Json::array({2, 1, 4, 3}));
  CHECK(j2["n"] == 2);
  CHECK(j2["fpf_only"] == true);

  const auto j4 = Json::parse(chowsym::export_json(chowsym::build_orbit_graph(4, true)).payload);
  CHECK(j4["vertices"].size() == 105);
  std::set<int> strata;
  for (const auto& v : j4["vertices"]) strata.insert(v["stratum"].get<int>());
  CHECK(strata == std::set<int>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("json round trip and determinism") {
  for (int n = 1; n <= 4; ++n) {
    for (bool fpf : {true, false}) {
      const auto g = chowsym::build_orbit_graph(n, fpf);
      const auto text = chowsym::export_json(g).payload;
      CHECK(chowsym::parse_graph_json(text) == g);
      CHECK(chowsym::export_json(chowsym::build_orbit_graph(n, fpf)).payload == text);
      CHECK(chowsym::export_dot(g).payload == chowsym::export_dot(chowsym::build_orbit_graph(n, fpf)).payload);
    }
  }
}

TEST_CASE("json parse rejects bad documents") {
  CHECK_THROWS_AS(chowsym::parse_graph_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(chowsym::parse_graph_json("{}"), std::invalid_argument);
  auto text = chowsym::export_json(chowsym::build_orbit_graph(2, true)).payload;
  const auto tampered = std::regex_replace(text, std::regex("\"codim\": 2"), "\"codim\": 5");
  CHECK_THROWS_AS(chowsym::parse_graph_json(tampered), std::invalid_argument);
  const auto bad_edge = std::regex_replace(text, std::regex("\"source\": 1"), "\"source\": 9");
  CHECK_THROWS_AS(chowsym::parse_graph_json(bad_edge), std::invalid_argument);
}

TEST_CASE("certificate json") {
  using Json = nlohmann::json;
  const auto doc = Json::parse(chowsym::certificate_json(chowsym::certificate(3)));
  CHECK(doc["schema_version"] == chowsym::kSchemaVersion);
  CHECK(doc["n"] == 3);
  CHECK(doc["failed_checks"] == 0);
  CHECK(doc["killing_relations"] == 4);
  CHECK(doc["survivor"]["cycles"] == "(12)(34)(56)");
  CHECK(doc["survivor"]["codim"] == 3);
  CHECK(doc["chow_group"]["group"] == "Z@0 + Z@3");
  CHECK(doc["assumptions"].size() == 2);
  int divisors = 0;
  for (const auto& r : doc["relations"]) {
    CHECK(r.contains("justification"));
    for (const auto& c : r["side_conditions"]) CHECK(c["holds"] == true);
    if (r["reason"]["kind"] == "DivisorOfG") ++divisors;
  }
  CHECK(divisors == 4);
}

TEST_CASE("graded group rendering") {
  chowsym::GradedAbelianGroup g;
  g.set(0, {1, {}});
  g.set(3, {0, {chowsym::BigInt(2), chowsym::BigInt(4)}});
  CHECK(g.to_string() == "Z@0 + Z/2@3 + Z/4@3");
  const auto j = nlohmann::json::parse(chowsym::graded_group_json(2, g));
  CHECK(j["degrees"][1]["torsion"] == nlohmann::json::array({"2", "4"}));
  CHECK(chowsym::graded_group_table(g).find("2,4") != std::string::npos);
  CHECK(chowsym::GradedAbelianGroup{}.to_string() == "0");
}

TEST_CASE("GL(6) hand transcription matches the computed graph") {
  std::ifstream in(CHOWSYM_FIXTURE_DIR "/gl6_fpf_poset.txt");
  REQUIRE(in);
  std::set<std::pair<std::string, std::string>> transcribed;
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "row") {
      std::string codim, name;
      ls >> codim;
      rows.emplace_back();
      while (ls >> name) rows.back().push_back(name);
      continue;
    }
    std::string arrow, target, style;
    ls >> arrow >> target >> style;
    REQUIRE(arrow == "->");
    transcribed.emplace(first, target);
  }
  REQUIRE(transcribed.size() == 26);

  const auto g = chowsym::build_orbit_graph(3, true);
  std::set<std::pair<std::string, std::string>> computed;
  for (const auto& e : g.edges) {
    computed.emplace(g.vertices[e.source].w.cycle_notation(), g.vertices[e.target].w.cycle_notation());
  }
  CHECK(computed == transcribed);

  // Transcribed rows top to bottom are codims 9 down to 3.
  REQUIRE(rows.size() == 7);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& name : rows[r]) {
      CHECK(chowsym::orbit_codimension(chowsym::parse_cycles(name)) == 9 - static_cast<int>(r));
    }
  }
}

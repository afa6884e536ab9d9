#include "chowsym/export.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace chowsym {

using Json = nlohmann::ordered_json;

GraphDocument export_dot(const OrbitGraph& g, const DotStyle& style) {
  std::map<int, std::vector<std::size_t>, std::greater<>> rows;
  for (std::size_t k = 0; k < g.vertices.size(); ++k) rows[g.vertices[k].codim].push_back(k);

  std::ostringstream os;
  os << "digraph orbits {\n";
  os << "  // n = " << g.n << (g.fpf_only ? ", fixed-point-free orbits" : ", all orbits") << '\n';
  os << "  rankdir=TB;\n";
  os << "  node [shape=plaintext];\n";
  for (const auto& [codim, members] : rows) {
    os << "  { rank=same; // codim " << codim << '\n';
    for (std::size_t k : members) {
      const auto& v = g.vertices[k];
      os << "    v" << k << " [label=\"O_" << v.w.cycle_notation() << "\", codim=" << v.codim
         << ", stratum=" << v.stratum << "];\n";
    }
    os << "  }\n";
  }
  for (const auto& e : g.edges) {
    os << "  v" << e.source << " -> v" << e.target << " [style="
       << (e.cross_stratum ? style.cross_stratum : style.same_stratum) << "];\n";
  }
  os << "}\n";
  return {GraphDocument::Format::Dot, os.str()};
}

GraphDocument export_json(const OrbitGraph& g) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["n"] = g.n;
  doc["fpf_only"] = g.fpf_only;
  Json vertices = Json::array();
  for (const auto& v : g.vertices) {
    Json line = Json::array();
    for (int x : v.w.one_line()) line.push_back(x);
    vertices.push_back(Json{{"one_line", line},
                            {"cycles", v.w.cycle_notation()},
                            {"codim", v.codim},
                            {"stratum", v.stratum},
                            {"fpf", v.fpf}});
  }
  doc["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back(
        Json{{"source", e.source}, {"target", e.target}, {"cross_stratum", e.cross_stratum}});
  }
  doc["edges"] = std::move(edges);
  return {GraphDocument::Format::Json, doc.dump(2) + "\n"};
}

OrbitGraph parse_graph_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("graph document is not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("schema_version").get<int>() != kSchemaVersion) {
      throw std::invalid_argument("unsupported graph schema_version");
    }
    OrbitGraph g;
    g.n = doc.at("n").get<int>();
    g.fpf_only = doc.at("fpf_only").get<bool>();
    for (const auto& v : doc.at("vertices")) {
      const Orbit orbit = Orbit::of(Involution(v.at("one_line").get<std::vector<int>>()));
      if (orbit.w.size() != 2 * g.n || v.at("codim").get<int>() != orbit.codim ||
          v.at("stratum").get<int>() != orbit.stratum || v.at("fpf").get<bool>() != orbit.fpf ||
          v.at("cycles").get<std::string>() != orbit.w.cycle_notation()) {
        throw std::invalid_argument("vertex " + orbit.w.one_line_string() +
                                    " carries inconsistent attributes");
      }
      g.vertices.push_back(orbit);
    }
    for (const auto& e : doc.at("edges")) {
      OrbitEdge edge{e.at("source").get<std::size_t>(), e.at("target").get<std::size_t>(),
                     e.at("cross_stratum").get<bool>()};
      if (edge.source >= g.vertices.size() || edge.target >= g.vertices.size()) {
        throw std::invalid_argument("edge endpoint out of range");
      }
      g.edges.push_back(edge);
    }
    return g;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph document: ") + e.what());
  }
}

namespace {

Json group_to_json(const GradedAbelianGroup& group) {
  Json degrees = Json::array();
  for (const auto& [degree, c] : group.components()) {
    Json torsion = Json::array();
    for (const auto& t : c.torsion) torsion.push_back(t.get_str());
    degrees.push_back(Json{{"degree", degree}, {"rank", c.rank}, {"torsion", torsion}});
  }
  return degrees;
}

Json orbit_json(const Involution& w) {
  Json line = Json::array();
  for (int x : w.one_line()) line.push_back(x);
  return Json{{"one_line", line}, {"cycles", w.cycle_notation()}};
}

Json conditions_json(const std::vector<SideCondition>& conditions) {
  Json out = Json::array();
  for (const auto& c : conditions) out.push_back(Json{{"fact", c.fact}, {"holds", c.holds}});
  return out;
}

Json reason_json(const RelationReason& reason) {
  Json out{{"kind", reason_tag(reason)}};
  if (const auto* r = std::get_if<NonFpfVanishes>(&reason)) out["orbit"] = orbit_json(r->orbit);
  if (const auto* r = std::get_if<PlusMinusPair>(&reason)) out["orbit"] = orbit_json(r->orbit);
  if (const auto* r = std::get_if<DivisorOfG>(&reason)) out["j"] = r->j;
  return out;
}

}  // namespace

std::string graded_group_json(int n, const GradedAbelianGroup& group) {
  Json doc{{"schema_version", kSchemaVersion},
           {"n", n},
           {"group", group.to_string()},
           {"degrees", group_to_json(group)}};
  return doc.dump(2) + "\n";
}

std::string graded_group_table(const GradedAbelianGroup& group) {
  std::ostringstream os;
  os << "degree  rank  torsion\n";
  for (const auto& [degree, c] : group.components()) {
    os << std::string(6 - std::min<std::size_t>(6, std::to_string(degree).size()), ' ') << degree
       << "  " << std::string(4 - std::min<std::size_t>(4, std::to_string(c.rank).size()), ' ')
       << c.rank << "  ";
    if (c.torsion.empty()) os << '-';
    for (std::size_t k = 0; k < c.torsion.size(); ++k) os << (k ? "," : "") << c.torsion[k];
    os << '\n';
  }
  return os.str();
}

std::string certificate_json(const Certificate& cert) {
  Json generators = Json::array();
  for (const auto& g : cert.presentation.generators) {
    generators.push_back(Json{{"label", g.label()},
                              {"orbit", orbit_json(g.orbit)},
                              {"degree", g.degree},
                              {"stratum", g.stratum}});
  }
  Json relations = Json::array();
  for (const auto& r : cert.presentation.relations) {
    relations.push_back(Json{{"reason", reason_json(r.reason)},
                             {"degree", r.degree},
                             {"coefficients", r.coefficients},
                             {"justification", r.justification},
                             {"side_conditions", conditions_json(r.side_conditions)}});
  }
  Json survivor = orbit_json(cert.survivor.orbit);
  survivor["codim"] = cert.survivor.codim;
  survivor["stratum"] = cert.survivor.stratum;
  survivor["fpf"] = cert.survivor.fpf;
  survivor["uniqueness"] = Json{{"fpf_orbits_scanned", cert.survivor.fpf_orbits_scanned},
                                {"min_fpf_codim", cert.survivor.min_fpf_codim},
                                {"fpf_orbits_at_min_codim", cert.survivor.fpf_orbits_at_min_codim}};

  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["n"] = cert.n;
  doc["chow_group"] = Json{{"group", cert.chow.to_string()}, {"degrees", group_to_json(cert.chow)}};
  doc["base_chow_group"] =
      Json{{"group", cert.base_group.to_string()}, {"degrees", group_to_json(cert.base_group)}};
  doc["generators"] = std::move(generators);
  doc["relations"] = std::move(relations);
  doc["killing_relations"] = cert.killing_relations;
  doc["survivor"] = std::move(survivor);
  doc["checks"] = conditions_json(cert.global_checks);
  doc["checks_run"] = cert.checks_run;
  doc["failed_checks"] = cert.failed_checks;
  doc["assumptions"] = cert.assumptions;
  doc["notes"] = cert.notes;
  return doc.dump(2) + "\n";
}

}  // namespace chowsym

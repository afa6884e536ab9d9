#pragma once

#include <string>
#include <string_view>

#include "chowsym/chow.hpp"
#include "chowsym/orbit.hpp"

namespace chowsym {

inline constexpr int kSchemaVersion = 1;

struct GraphDocument {
  enum class Format { Dot, Json };
  Format format = Format::Json;
  std::string payload;
};

/// Edge styling for DOT output. Styling follows cross_stratum only; it does
/// not reproduce the solid/dotted split of hand-drawn Hasse diagrams.
struct DotStyle {
  std::string same_stratum = "solid";
  std::string cross_stratum = "dashed";
};

/// Graphviz digraph. Orbits of equal codimension share a rank row; rows run
/// from the deepest orbits at the top to the shallowest at the bottom.
GraphDocument export_dot(const OrbitGraph& g, const DotStyle& style = {});

/// {schema_version, n, fpf_only, vertices: [{one_line, cycles, codim, stratum, fpf}],
///  edges: [{source, target, cross_stratum}]}. Edge endpoints are indices into
/// `vertices`.
GraphDocument export_json(const OrbitGraph& g);

/// Inverse of export_json. Recomputes every derived vertex attribute and
/// rejects documents whose stored values disagree.
OrbitGraph parse_graph_json(std::string_view text);

std::string graded_group_json(int n, const GradedAbelianGroup& group);
std::string graded_group_table(const GradedAbelianGroup& group);
std::string certificate_json(const Certificate& cert);

}  // namespace chowsym

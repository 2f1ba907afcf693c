#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "starcolor/graph.hpp"
#include "starcolor/halin.hpp"
#include "starcolor/verify.hpp"

namespace starcolor {

using json = nlohmann::ordered_json;

// Family tag embedded by the generator CLI so downstream commands can pick
// the right algorithm without re-deriving structure.  The halin_* fields are
// present only for Halin families and carry what HalinGraph needs beyond the
// plain edge list.
struct FamilyMeta {
  std::string name;
  std::optional<int> n;  // size parameter (path/cycle/petersen lengths)
  std::optional<int> h;  // necklace bead count
  std::optional<std::vector<std::pair<int, int>>> halin_tree;
  std::optional<int> halin_root;
  std::optional<std::vector<int>> halin_cycle;
};

// A graph plus everything that travels with it in a file.  Vertex labels
// live on the Graph itself.
struct GraphDocument {
  Graph graph;
  std::optional<FamilyMeta> family;
};

// Schema: {"order": n, "edges": [[u,v],...], "labels": {"0": "u_0", ...}?,
// "family": {...}?}.  Field order in the input is free; output order is
// fixed for byte-stable files.  Empty labels are omitted on write and read
// back as "".
json graph_to_json(const GraphDocument& doc);
GraphDocument graph_from_json(const json& j);

// Schema: {"colors": [c_0, c_1, ...]} aligned with the graph's edge ids.
// Serialized colorings are total: every entry >= 1 on both directions.
json coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const json& j, const Graph& g);

// Violation witness with the walk spelled out both by vertex and by edge.
json violation_to_json(const StarViolation& v, const Graph& g);

// File wrappers: io_error when the file cannot be opened or written,
// parse_error when the contents are not the expected JSON.
GraphDocument load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const GraphDocument& doc);
EdgeColoring load_coloring_file(const std::string& path, const Graph& g);
void save_coloring_file(const std::string& path, const EdgeColoring& c);

// Rebuilds the HalinGraph from a document whose family metadata carries the
// halin fields; wrong_family when they are absent.
HalinGraph halin_from_document(const GraphDocument& doc);

}  // namespace starcolor

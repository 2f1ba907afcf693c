#pragma once

#include <optional>
#include <vector>

#include "starcolor/graph.hpp"

namespace starcolor {

enum class violation_kind {
  improper,          // two same-colored edges share a vertex
  bicolored_path4,   // 4-edge path using exactly 2 colors
  bicolored_cycle4,  // 4-cycle using exactly 2 colors
  strong_conflict,   // restricted strong rule broken (see check_restricted_strong)
};

const char* violation_kind_name(violation_kind kind);

// A certificate for a failed check.  vertices spell out the offending walk
// (3 vertices for improper, 5 for a path, 4 for a cycle; a strong conflict
// is the walk joining the two clashing edges: 3 vertices when they share an
// endpoint, 4 when a host edge joins them, with that edge in the middle);
// edge_ids and colors follow the walk.
struct StarViolation {
  violation_kind kind;
  std::vector<int> vertices;
  std::vector<int> edge_ids;
  std::vector<int> colors;
};

// True star edge-coloring check: proper, and no path or cycle of four edges
// is colored with only two colors.  The coloring must be total and aligned
// with g's edge ids.  Returns the first violation in deterministic order
// (lowest start vertex, then lexicographically smallest walk), or nullopt.
std::optional<StarViolation> check_star(const Graph& g, const EdgeColoring& c);

// Properness alone, same determinism contract.
std::optional<StarViolation> check_proper(const Graph& g,
                                          const EdgeColoring& c);

// Restricted strong check for a sub-edge set H inside a host graph: two
// edges of H conflict if they are adjacent in the host, or some host edge
// joins an endpoint of one to an endpoint of the other.  sub_edge_ids lists
// H by host edge id.  c may be sized over all host edges (colors read at the
// listed ids; other entries are ignored and may be 0) or over the sub list
// itself (positional).
std::optional<StarViolation> check_restricted_strong(
    const Graph& host, const std::vector<int>& sub_edge_ids,
    const EdgeColoring& c);

// All 4-edge paths (as 5-vertex sequences, reported once with
// first vertex < last vertex) and all 4-cycles (as 4-vertex sequences,
// reported once: minimal vertex first, second neighbor < last).
struct WalkInventory {
  std::vector<std::vector<int>> paths;
  std::vector<std::vector<int>> cycles;
};

WalkInventory enumerate_star_windows(const Graph& g);

// Incremental guard used by the exact solver and the greedy colorers:
// with `colors` partially filled (0 = uncolored) and edge `edge_id` freshly
// set, decides whether any violation involves that edge.  Checks exactly the
// proper/star conditions restricted to colored edges.
bool placement_ok(const Graph& g, const std::vector<int>& colors, int edge_id);

}  // namespace starcolor

#pragma once

#include <cstdint>
#include <optional>

#include "starcolor/graph.hpp"

namespace starcolor {

inline constexpr std::uint64_t default_node_budget = 100'000'000ULL;

enum class solve_status { feasible, infeasible, budget_exhausted };

const char* solve_status_name(solve_status s);

struct SolveOutcome {
  solve_status status;
  std::optional<EdgeColoring> coloring;  // present iff feasible
  std::uint64_t nodes_explored = 0;
};

// Decides whether g admits a star edge-coloring with at most k colors, by
// exhaustive backtracking over edges in BFS order from a maximum-degree
// vertex.  Color values are introduced in increasing order (a candidate may
// exceed the running maximum by at most one), which removes palette
// symmetry.  Every returned coloring is re-validated before being handed
// out.  nodes_explored counts candidate placements; once it passes `budget`
// the search stops with budget_exhausted.  Sequential runs are
// deterministic; with parallel = true the search space is split into
// prefix subtrees solved concurrently (same verdict, possibly a different
// certificate).
SolveOutcome exists_star_k_coloring(const Graph& g, int k,
                                    std::uint64_t budget =
                                        default_node_budget,
                                    bool parallel = false);

struct ExactResult {
  int k = 0;                    // the star chromatic index
  EdgeColoring certificate;     // uses exactly k colors, passes check_star
  std::uint64_t nodes_explored = 0;
  int infeasible_below = -1;    // always k - 1
};

// Smallest k admitting a star k-coloring, found by ascending feasibility
// queries from lower (default: max degree) to upper (default: edge count,
// where a rainbow coloring always works).  The node budget covers the whole
// scan; when it runs out a BUDGET_EXHAUSTED error reports the bracket
// established so far.
ExactResult star_chromatic_index(const Graph& g,
                                 std::optional<int> lower_hint = {},
                                 std::optional<int> upper_hint = {},
                                 std::uint64_t budget = default_node_budget,
                                 bool parallel = false);

// The edge elimination order used by the solver, exposed for tests: BFS
// over vertices starting from the lowest-id maximum-degree vertex (repeated
// per component), listing each vertex's still-unlisted incident edges by
// neighbor id.
std::vector<int> solver_edge_order(const Graph& g);

}  // namespace starcolor

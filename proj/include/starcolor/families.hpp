#pragma once

#include <cstdint>
#include <vector>

#include "starcolor/graph.hpp"
#include "starcolor/halin.hpp"

namespace starcolor {

Graph path_graph(int n);   // n >= 1 vertices 0..n-1, edges (i,i+1)
Graph cycle_graph(int n);  // n >= 3

// Edges between distinct vertices at distance <= k in g; k >= 1.
Graph power_graph(const Graph& g, int k);

Graph path_square(int n);   // n >= 3
Graph cycle_square(int n);  // n >= 3

// Generalized Petersen graph P(m, n): outer cycle u_0..u_{m-1}, spokes
// u_i v_i, inner edges v_i v_{i+n mod m}.  Requires m >= 3 and 1 <= n < m.
// When 2n == 0 (mod m) the inner step produces each chord twice; duplicates
// collapse to a single edge.
Graph generalized_petersen(int m, int n);

// Triangular generalized Petersen graph P(3n, n), n >= 1.
Graph petersen_3n(int n);

// Necklace with h beads: a caterpillar spine 1..h with pendant leaves
// 0, 1', .., h', h+1 plus the leaf cycle (0, 1', .., h', h+1).  Vertex ids:
// 0 -> 0, spine i -> i, h+1 -> h+1, i' -> h+1+i.  Order 2h+2.  Cubic.
HalinGraph necklace(int h);  // h >= 1

// A rooted-depth description of a Halin graph whose leaves all sit at the
// same depth: levels[0] = {root child count}, and levels[l+1] holds one
// child count per depth-(l+1) internal vertex, in planar (BFS) order.
// Vertices of the last listed level's children are the leaves.
struct CompleteHalinSpec {
  std::vector<std::vector<int>> levels;
};

// Builds the Halin graph described by spec.  Vertices are numbered in BFS
// order (root = 0); the leaf cycle follows the planar left-to-right order.
// Root child count must be >= 3 and every other count >= 2.
HalinGraph complete_halin(const CompleteHalinSpec& spec);

// Uniform random cubic Halin graph with the given number of leaves (>= 3),
// grown by repeatedly expanding a uniformly chosen leaf into an internal
// vertex with two leaf children.  Deterministic for a fixed seed.
HalinGraph random_cubic_halin(int leaves, std::uint64_t seed);

// Wheel: hub 0 joined to rim cycle 1..n, n >= 3.
Graph wheel(int n);

Graph complete_graph(int n);

// Fixed small gadgets.
Graph net_graph();   // triangle with a pendant edge at each corner (6v, 6e)
Graph fan3_graph();  // 5 vertices, 7 edges; collinear-center fan
Graph h0_graph();    // triangle, a stalk at each corner, two leaves per stalk

}  // namespace starcolor

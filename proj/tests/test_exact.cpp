#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "starcolor/exact.hpp"
#include "starcolor/families.hpp"
#include "starcolor/verify.hpp"

using namespace starcolor;

namespace {

// Naive ground truth: smallest k admitting a star k-coloring, by plain
// odometer enumeration over all k^m assignments filtered with check_star.
// Only sensible for a handful of edges.
int naive_index(const Graph& g) {
  const int m = g.edge_count();
  if (m == 0) return 0;
  for (int k = 1; k <= m; ++k) {
    std::vector<int> colors(m, 1);
    for (;;) {
      if (!check_star(g, EdgeColoring(colors)).has_value()) return k;
      int i = 0;
      while (i < m && colors[i] == k) colors[i++] = 1;
      if (i == m) break;
      ++colors[i];
    }
  }
  return m;  // rainbow always works, so the loop returns by then
}

Graph random_small_graph(rng& r, int max_vertices, int max_edges) {
  const int n = 3 + static_cast<int>(r.below(max_vertices - 2));
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  // Shuffle and keep a random prefix.
  for (std::size_t i = all.size(); i > 1; --i)
    std::swap(all[i - 1], all[r.below(i)]);
  const std::size_t keep = r.below(std::min<std::size_t>(
                               all.size(), max_edges) + 1);
  all.resize(keep);
  return build_graph(n, all);
}

}  // namespace

TEST_CASE("edge elimination order is a BFS from a maximum-degree vertex") {
  // Star with center 2: all edges touch the center, center listed first.
  Graph star = build_graph(4, {{0, 2}, {1, 2}, {2, 3}});
  std::vector<int> order = solver_edge_order(star);
  REQUIRE(order.size() == 3);
  CHECK(order[0] == star.edge_id(0, 2));

  Graph p62 = generalized_petersen(6, 2);
  std::vector<int> order2 = solver_edge_order(p62);
  std::set<int> uniq(order2.begin(), order2.end());
  CHECK(uniq.size() == order2.size());
  CHECK(static_cast<int>(order2.size()) == p62.edge_count());

  // Disconnected graphs are covered component by component.
  Graph two = build_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  CHECK(solver_edge_order(two).size() == 4);
}

TEST_CASE("feasibility answers on the smallest complete graph") {
  Graph k4 = complete_graph(4);
  SolveOutcome no = exists_star_k_coloring(k4, 4);
  CHECK(no.status == solve_status::infeasible);
  CHECK_FALSE(no.coloring.has_value());
  CHECK(no.nodes_explored > 0);

  SolveOutcome yes = exists_star_k_coloring(k4, 5);
  REQUIRE(yes.status == solve_status::feasible);
  CHECK_FALSE(check_star(k4, *yes.coloring).has_value());
  CHECK(yes.coloring->max_color() <= 5);
}

TEST_CASE("edgeless graphs are feasible with an empty assignment") {
  Graph lone = build_graph(3, {});
  SolveOutcome out = exists_star_k_coloring(lone, 1);
  REQUIRE(out.status == solve_status::feasible);
  CHECK(out.coloring->colors.empty());
  ExactResult res = star_chromatic_index(lone);
  CHECK(res.k == 0);
  CHECK(res.infeasible_below == -1);
}

TEST_CASE("known indices of the small gadgets") {
  ExactResult net = star_chromatic_index(net_graph());
  CHECK(net.k == 4);
  CHECK(net.infeasible_below == 3);
  CHECK_FALSE(check_star(net_graph(), net.certificate).has_value());
  CHECK(net.certificate.color_count() == 4);

  ExactResult n1 = star_chromatic_index(necklace(1).graph());
  CHECK(n1.k == 5);

  ExactResult n2 = star_chromatic_index(necklace(2).graph());
  CHECK(n2.k == 6);
  CHECK(n2.certificate.color_count() == 6);

  CHECK(star_chromatic_index(path_square(3)).k == 3);
  CHECK(star_chromatic_index(path_square(4)).k == 4);
  CHECK(star_chromatic_index(path_square(5)).k == 6);
  CHECK(star_chromatic_index(cycle_graph(5)).k == 4);
}

TEST_CASE("ascending scan matches naive enumeration on tiny graphs") {
  rng r(321);
  int nontrivial = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int cap = trial < 55 ? 6 : 7;
    Graph g = random_small_graph(r, 7, cap);
    const int expect = naive_index(g);
    ExactResult res = star_chromatic_index(g);
    REQUIRE(res.k == expect);
    REQUIRE(res.infeasible_below == expect - 1);
    if (g.edge_count() > 0) {
      CHECK_FALSE(check_star(g, res.certificate).has_value());
      CHECK(res.certificate.color_count() == res.k);
      if (expect > max_degree(g)) ++nontrivial;
    }
  }
  // The sample must include instances where the bound is not just Delta.
  CHECK(nontrivial > 10);
}

TEST_CASE("feasibility is monotone in the palette size") {
  rng r(654);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = random_small_graph(r, 6, 8);
    if (g.edge_count() == 0) continue;
    ExactResult res = star_chromatic_index(g);
    SolveOutcome plus = exists_star_k_coloring(g, res.k + 1);
    CHECK(plus.status == solve_status::feasible);
    if (res.k > 1) {
      SolveOutcome minus = exists_star_k_coloring(g, res.k - 1);
      CHECK(minus.status == solve_status::infeasible);
    }
    CHECK(res.k >= max_degree(g));
  }
}

TEST_CASE("sequential runs are bit-for-bit reproducible") {
  Graph g = generalized_petersen(5, 2);
  SolveOutcome a = exists_star_k_coloring(g, 5);
  SolveOutcome b = exists_star_k_coloring(g, 5);
  REQUIRE(a.status == b.status);
  CHECK(a.nodes_explored == b.nodes_explored);
  if (a.status == solve_status::feasible) {
    CHECK(a.coloring->colors == b.coloring->colors);
  }
}

TEST_CASE("hints narrow the scan without changing the answer") {
  Graph k4 = complete_graph(4);
  ExactResult pinned = star_chromatic_index(k4, 5, 5);
  CHECK(pinned.k == 5);
  CHECK(pinned.infeasible_below == 4);
  ExactResult scanned = star_chromatic_index(k4);
  CHECK(scanned.k == 5);
  CHECK(pinned.nodes_explored < scanned.nodes_explored);
  CHECK_THROWS_AS(star_chromatic_index(k4, 6, 5), error);
}

TEST_CASE("tiny budgets surface as budget_exhausted") {
  Graph k5 = complete_graph(5);
  SolveOutcome out = exists_star_k_coloring(k5, 6, 50);
  CHECK(out.status == solve_status::budget_exhausted);
  try {
    star_chromatic_index(k5, {}, {}, 100);
    FAIL("expected budget error");
  } catch (const error& e) {
    CHECK(e.code() == errc::budget_exhausted);
    // The message carries the bracket established so far.
    CHECK(std::string(e.what()).find("unresolved") != std::string::npos);
  }
}

TEST_CASE("parallel mode reaches the same verdicts") {
  Graph net = net_graph();
  SolveOutcome seq = exists_star_k_coloring(net, 4);
  SolveOutcome par = exists_star_k_coloring(net, 4, default_node_budget,
                                            true);
  CHECK(seq.status == par.status);
  REQUIRE(par.status == solve_status::feasible);
  CHECK_FALSE(check_star(net, *par.coloring).has_value());

  SolveOutcome seq3 = exists_star_k_coloring(net, 3);
  SolveOutcome par3 = exists_star_k_coloring(net, 3, default_node_budget,
                                             true);
  CHECK(seq3.status == solve_status::infeasible);
  CHECK(par3.status == solve_status::infeasible);

  ExactResult n2par = star_chromatic_index(necklace(2).graph(), {}, {},
                                           default_node_budget, true);
  CHECK(n2par.k == 6);
  CHECK_FALSE(
      check_star(necklace(2).graph(), n2par.certificate).has_value());

  rng r(42);
  for (int trial = 0; trial < 6; ++trial) {
    Graph g = random_small_graph(r, 6, 9);
    ExactResult s = star_chromatic_index(g);
    ExactResult p = star_chromatic_index(g, {}, {}, default_node_budget,
                                         true);
    CHECK(s.k == p.k);
    if (g.edge_count() > 0) {
      CHECK_FALSE(check_star(g, p.certificate).has_value());
    }
  }
}

TEST_CASE("palette size must be positive") {
  CHECK_THROWS_AS(exists_star_k_coloring(path_graph(3), 0), error);
}

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "starcolor/families.hpp"
#include "starcolor/verify.hpp"

using namespace starcolor;

namespace {

// ---- independent brute-force oracle ------------------------------------
// Everything below re-derives the star conditions from scratch (adjacency
// matrix + ordered vertex tuples) so library bugs cannot hide in a shared
// helper.

struct Mat {
  int n;
  std::vector<int> id;  // n*n edge ids, -1 if absent
  explicit Mat(const Graph& g) : n(g.order()), id(g.order() * g.order(), -1) {
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge(e);
      id[u * n + v] = id[v * n + u] = e;
    }
  }
  int at(int u, int v) const { return id[u * n + v]; }
};

bool oracle_proper(const Graph& g, const std::vector<int>& colors) {
  for (int v = 0; v < g.order(); ++v) {
    std::set<int> seen;
    for (auto [w, e] : g.incident(v)) {
      (void)w;
      if (!seen.insert(colors[e]).second) return false;
    }
  }
  return true;
}

int distinct4(int a, int b, int c, int d) {
  std::set<int> s{a, b, c, d};
  return static_cast<int>(s.size());
}

// Canonical 4-edge windows by exhaustive tuple scan.
void oracle_windows(const Graph& g, std::vector<std::vector<int>>& paths,
                    std::vector<std::vector<int>>& cycles) {
  Mat m(g);
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (m.at(a, b) < 0 || m.at(b, c) < 0 || m.at(c, d) < 0) continue;
          std::set<int> abc{a, b, c, d};
          if (abc.size() != 4) continue;
          // cycle: close d back to a, spelled once
          if (m.at(d, a) >= 0 && a < b && a < c && a < d && b < d)
            cycles.push_back({a, b, c, d});
          for (int e = 0; e < n; ++e) {
            if (m.at(d, e) < 0 || abc.count(e)) continue;
            if (a < e) paths.push_back({a, b, c, d, e});
          }
        }
}

bool oracle_star_ok(const Graph& g, const std::vector<int>& colors) {
  if (!oracle_proper(g, colors)) return false;
  Mat m(g);
  std::vector<std::vector<int>> paths, cycles;
  oracle_windows(g, paths, cycles);
  for (const auto& p : paths) {
    if (distinct4(colors[m.at(p[0], p[1])], colors[m.at(p[1], p[2])],
                  colors[m.at(p[2], p[3])], colors[m.at(p[3], p[4])]) == 2)
      return false;
  }
  for (const auto& c : cycles) {
    if (distinct4(colors[m.at(c[0], c[1])], colors[m.at(c[1], c[2])],
                  colors[m.at(c[2], c[3])], colors[m.at(c[3], c[0])]) == 2)
      return false;
  }
  return true;
}

Graph random_graph(rng& r, int max_n) {
  const int n = 2 + static_cast<int>(r.below(max_n - 1));
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (r.below(2)) es.emplace_back(u, v);
  return build_graph(n, es);
}

EdgeColoring random_coloring(rng& r, const Graph& g, int palette) {
  std::vector<int> c(g.edge_count());
  for (auto& x : c) x = 1 + static_cast<int>(r.below(palette));
  return EdgeColoring(std::move(c));
}

EdgeColoring rainbow(const Graph& g) {
  std::vector<int> c(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) c[e] = e + 1;
  return EdgeColoring(std::move(c));
}

// Re-validates a returned witness against the instance it came from.
void require_sound(const Graph& g, const EdgeColoring& c,
                   const StarViolation& v) {
  const auto& vs = v.vertices;
  REQUIRE(v.edge_ids.size() == v.colors.size());
  for (size_t i = 0; i < v.edge_ids.size(); ++i) {
    // A cycle witness wraps; every other kind walks straight through.
    const int to = vs[(i + 1) % vs.size()];
    REQUIRE(g.edge_id(vs[i], to) == v.edge_ids[i]);
    REQUIRE(c.colors[v.edge_ids[i]] == v.colors[i]);
  }
  switch (v.kind) {
    case violation_kind::improper:
      REQUIRE(vs.size() == 3);
      REQUIRE(v.colors[0] == v.colors[1]);
      break;
    case violation_kind::bicolored_path4: {
      REQUIRE(vs.size() == 5);
      REQUIRE(std::set<int>(vs.begin(), vs.end()).size() == 5);
      REQUIRE(distinct4(v.colors[0], v.colors[1], v.colors[2], v.colors[3]) ==
              2);
      break;
    }
    case violation_kind::bicolored_cycle4: {
      REQUIRE(vs.size() == 4);
      REQUIRE(std::set<int>(vs.begin(), vs.end()).size() == 4);
      REQUIRE(v.edge_ids.size() == 4);
      REQUIRE(distinct4(v.colors[0], v.colors[1], v.colors[2], v.colors[3]) ==
              2);
      break;
    }
    default:
      FAIL("unexpected kind from check_star");
  }
}

}  // namespace

TEST_CASE("improper pair is found before any window") {
  Graph p3 = path_graph(3);
  auto v = check_star(p3, EdgeColoring({1, 1}));
  REQUIRE(v.has_value());
  CHECK(v->kind == violation_kind::improper);
  CHECK(v->vertices == std::vector<int>{0, 1, 2});
  CHECK(v->edge_ids == std::vector<int>{0, 1});
  CHECK(check_proper(p3, EdgeColoring({1, 1})).has_value());
  CHECK_FALSE(check_proper(p3, EdgeColoring({1, 2})).has_value());
}

TEST_CASE("first witness is deterministic and canonically spelled") {
  Graph c5 = cycle_graph(5);
  // Edges around the cycle: (0,1)(1,2)(2,3)(3,4)(4,0).
  auto v = check_star(c5, EdgeColoring({1, 2, 1, 2, 3}));
  REQUIRE(v.has_value());
  CHECK(v->kind == violation_kind::bicolored_path4);
  CHECK(v->vertices == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(v->edge_ids == std::vector<int>{0, 1, 2, 3});
  CHECK(v->colors == std::vector<int>{1, 2, 1, 2});

  Graph c4 = cycle_graph(4);
  auto w = check_star(c4, EdgeColoring({1, 2, 1, 2}));
  REQUIRE(w.has_value());
  CHECK(w->kind == violation_kind::bicolored_cycle4);
  CHECK(w->vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(w->colors == std::vector<int>{1, 2, 1, 2});

  // Four colors suffice for C5; every 4-edge run below sees three colors.
  CHECK_FALSE(check_star(c5, EdgeColoring({1, 2, 3, 1, 4})).has_value());
}

TEST_CASE("totality is enforced") {
  Graph p3 = path_graph(3);
  CHECK_THROWS_AS(check_star(p3, EdgeColoring({1})), error);
  try {
    check_star(p3, EdgeColoring({1, 0}));
    FAIL("expected uncolored edge error");
  } catch (const error& e) {
    CHECK(e.code() == errc::uncolored_edge);
  }
}

TEST_CASE("window inventory matches hand counts") {
  auto count = [](const Graph& g) {
    WalkInventory inv = enumerate_star_windows(g);
    return std::pair<int, int>(static_cast<int>(inv.paths.size()),
                               static_cast<int>(inv.cycles.size()));
  };
  CHECK(count(path_graph(5)) == std::pair<int, int>(1, 0));
  CHECK(count(path_graph(6)) == std::pair<int, int>(2, 0));
  CHECK(count(cycle_graph(4)) == std::pair<int, int>(0, 1));
  CHECK(count(cycle_graph(5)) == std::pair<int, int>(5, 0));
  CHECK(count(cycle_graph(6)) == std::pair<int, int>(6, 0));
  CHECK(count(complete_graph(4)) == std::pair<int, int>(0, 3));
  CHECK(count(path_graph(2)) == std::pair<int, int>(0, 0));
}

TEST_CASE("window inventory equals exhaustive tuple scan on random graphs") {
  rng r(2024);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(r, 9);
    WalkInventory inv = enumerate_star_windows(g);
    std::vector<std::vector<int>> paths, cycles;
    oracle_windows(g, paths, cycles);
    auto sorted = [](std::vector<std::vector<int>> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    REQUIRE(sorted(inv.paths) == sorted(paths));
    REQUIRE(sorted(inv.cycles) == sorted(cycles));
  }
}

TEST_CASE("star check agrees with the oracle on 200 random instances") {
  rng r(77);
  int bad = 0, good = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(r, 10);
    EdgeColoring c = random_coloring(r, g, 1 + static_cast<int>(r.below(6)));
    auto v = check_star(g, c);
    REQUIRE(v.has_value() == !oracle_star_ok(g, c.colors));
    if (v) {
      ++bad;
      if (v->kind != violation_kind::improper) require_sound(g, c, *v);
    } else {
      ++good;
    }
  }
  // The sample must exercise both verdicts to mean anything.
  CHECK(bad > 20);
  CHECK(good > 20);
}

TEST_CASE("painted windows are caught with sound witnesses") {
  // Paint one known window with two alternating colors and give every other
  // edge its own color: the painted window is then the only violation, so
  // the returned witness must describe it exactly.
  rng r(5150);
  int paths_seen = 0, cycles_seen = 0;
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = random_graph(r, 9);
    std::vector<std::vector<int>> paths, cycles;
    oracle_windows(g, paths, cycles);
    Mat m(g);
    auto fresh = [&] {
      std::vector<int> colors(g.edge_count());
      for (int e = 0; e < g.edge_count(); ++e) colors[e] = 10 + e;
      return colors;
    };
    if (!paths.empty()) {
      const auto& p = paths[r.below(paths.size())];
      auto colors = fresh();
      for (int i = 0; i < 4; ++i) colors[m.at(p[i], p[i + 1])] = 1 + i % 2;
      EdgeColoring c{std::move(colors)};
      auto v = check_star(g, c);
      REQUIRE(v.has_value());
      REQUIRE(v->kind == violation_kind::bicolored_path4);
      require_sound(g, c, *v);
      ++paths_seen;
    }
    if (!cycles.empty()) {
      const auto& cy = cycles[r.below(cycles.size())];
      auto colors = fresh();
      for (int i = 0; i < 4; ++i)
        colors[m.at(cy[i], cy[(i + 1) % 4])] = 1 + i % 2;
      EdgeColoring c{std::move(colors)};
      auto v = check_star(g, c);
      REQUIRE(v.has_value());
      REQUIRE(v->kind == violation_kind::bicolored_cycle4);
      require_sound(g, c, *v);
      // The witness must spell the very cycle that was painted.
      std::set<int> painted(cy.begin(), cy.end());
      std::set<int> reported(v->vertices.begin(), v->vertices.end());
      REQUIRE(painted == reported);
      ++cycles_seen;
    }
  }
  CHECK(paths_seen > 20);
  CHECK(cycles_seen > 10);
}

TEST_CASE("rainbow colorings always pass") {
  rng r(31);
  CHECK_FALSE(check_star(complete_graph(5), rainbow(complete_graph(5)))
                  .has_value());
  CHECK_FALSE(check_star(generalized_petersen(5, 2),
                         rainbow(generalized_petersen(5, 2)))
                  .has_value());
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(r, 10);
    CHECK_FALSE(check_star(g, rainbow(g)).has_value());
  }
}

TEST_CASE("renaming colors preserves the verdict and the witness walk") {
  rng r(99);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(r, 9);
    EdgeColoring c = random_coloring(r, g, 6);
    std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
    for (int i = 6; i > 1; --i)
      std::swap(perm[i], perm[1 + static_cast<int>(r.below(i))]);
    EdgeColoring renamed = c;
    for (auto& x : renamed.colors) x = perm[x];
    auto a = check_star(g, c);
    auto b = check_star(g, renamed);
    REQUIRE(a.has_value() == b.has_value());
    if (a) {
      CHECK(a->kind == b->kind);
      CHECK(a->vertices == b->vertices);
      CHECK(a->edge_ids == b->edge_ids);
    }
  }
}

TEST_CASE("restricted strong check on the squared path") {
  Graph host = path_square(5);
  const int e23 = host.edge_id(1, 2);  // second and third path vertices
  const int e45 = host.edge_id(3, 4);
  REQUIRE(e23 >= 0);
  REQUIRE(e45 >= 0);

  CHECK_FALSE(check_restricted_strong(host, {e23, e45}, EdgeColoring({1, 2}))
                  .has_value());

  auto v = check_restricted_strong(host, {e23, e45}, EdgeColoring({1, 1}));
  REQUIRE(v.has_value());
  CHECK(v->kind == violation_kind::strong_conflict);
  // The witness spells edge, joining host edge, edge as one walk.
  REQUIRE(v->edge_ids.size() == 3);
  CHECK(v->edge_ids[0] == e23);
  CHECK(v->edge_ids[2] == e45);
  auto [p, q] = host.edge(v->edge_ids[1]);
  auto [a, b] = host.edge(e23);
  auto [x, y] = host.edge(e45);
  bool touches_i = p == a || p == b || q == a || q == b;
  bool touches_j = p == x || p == y || q == x || q == y;
  CHECK(touches_i);
  CHECK(touches_j);

  // Full-size coloring vectors address edges by host id instead.
  std::vector<int> full(host.edge_count(), 0);
  full[e23] = 1;
  full[e45] = 1;
  CHECK(check_restricted_strong(host, {e23, e45}, EdgeColoring(full))
            .has_value());
  full[e45] = 2;
  CHECK_FALSE(check_restricted_strong(host, {e23, e45}, EdgeColoring(full))
                  .has_value());
}

TEST_CASE("adjacent sub-edges conflict directly") {
  Graph c5 = cycle_graph(5);
  std::vector<int> all{0, 1, 2, 3, 4};
  CHECK_FALSE(
      check_restricted_strong(c5, all, EdgeColoring({1, 2, 3, 4, 5}))
          .has_value());
  auto v = check_restricted_strong(c5, all, EdgeColoring({1, 2, 3, 1, 5}));
  REQUIRE(v.has_value());
  CHECK(v->kind == violation_kind::strong_conflict);
  // Edges 0 and 3 share no endpoint; edge (1,2) or (3,4)... they are joined
  // through edge 2 = (2,3) or edge 4 = (4,0).  Witness must re-validate.
  REQUIRE(v->edge_ids.size() == 3);
  CHECK(v->edge_ids[0] == 0);
  CHECK(v->edge_ids[2] == 3);

  auto w = check_restricted_strong(c5, all, EdgeColoring({1, 1, 2, 3, 4}));
  REQUIRE(w.has_value());
  CHECK(w->edge_ids == std::vector<int>{0, 1});
  CHECK(w->vertices.size() == 3);
  CHECK(w->vertices[1] == 1);  // shared endpoint of (0,1) and (1,2)
}

TEST_CASE("restricted strong validates its inputs") {
  Graph c5 = cycle_graph(5);
  CHECK_THROWS_AS(
      check_restricted_strong(c5, {0, 1}, EdgeColoring({1, 2, 3})), error);
  try {
    check_restricted_strong(c5, {0, 9}, EdgeColoring({1, 2}));
    FAIL("expected range error");
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_argument);
  }
  try {
    check_restricted_strong(c5, {0, 0}, EdgeColoring({1, 2}));
    FAIL("expected duplicate error");
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_argument);
  }
  try {
    check_restricted_strong(c5, {0, 1}, EdgeColoring({1, 0}));
    FAIL("expected uncolored error");
  } catch (const error& e) {
    CHECK(e.code() == errc::uncolored_edge);
  }
}

TEST_CASE("placement guard matches a from-scratch local scan") {
  rng r(404);
  // Equivalence on total colorings: every placement passes iff the whole
  // coloring is a star coloring.
  for (int trial = 0; trial < 120; ++trial) {
    Graph g = random_graph(r, 8);
    if (g.edge_count() == 0) continue;
    EdgeColoring c = random_coloring(r, g, 5);
    bool all_ok = true;
    for (int e = 0; e < g.edge_count(); ++e)
      all_ok = all_ok && placement_ok(g, c.colors, e);
    CHECK(all_ok == !check_star(g, c).has_value());
  }
}

TEST_CASE("placement guard is exact on partial colorings") {
  // Oracle semantics: a placement is rejected iff the edge sits in an
  // improper pair, or in a fully-colored alternating window (under the
  // incremental discipline every 2-colored window alternates, since a
  // non-alternating one would contain an improper pair placed earlier).
  rng r(808);
  for (int trial = 0; trial < 120; ++trial) {
    Graph g = random_graph(r, 8);
    if (g.edge_count() == 0) continue;
    std::vector<int> colors(g.edge_count(), 0);
    for (auto& x : colors)
      if (r.below(3)) x = 1 + static_cast<int>(r.below(4));

    Mat m(g);
    std::vector<std::vector<int>> paths, cycles;
    oracle_windows(g, paths, cycles);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (colors[e] == 0) {
        CHECK(placement_ok(g, colors, e));
        continue;
      }
      auto [a, b] = g.edge(e);
      bool bad = false;
      for (auto [w, f] : g.incident(a)) {
        (void)w;
        if (f != e && colors[f] == colors[e]) bad = true;
      }
      for (auto [w, f] : g.incident(b)) {
        (void)w;
        if (f != e && colors[f] == colors[e]) bad = true;
      }
      auto window_hits = [&](const std::vector<int>& vs, bool cyc) {
        std::vector<int> ids;
        for (size_t i = 0; i + 1 < vs.size(); ++i)
          ids.push_back(m.at(vs[i], vs[i + 1]));
        if (cyc) ids.push_back(m.at(vs.back(), vs.front()));
        if (std::find(ids.begin(), ids.end(), e) == ids.end()) return false;
        for (int id : ids)
          if (colors[id] == 0) return false;
        return colors[ids[0]] == colors[ids[2]] &&
               colors[ids[1]] == colors[ids[3]] &&
               colors[ids[0]] != colors[ids[1]];
      };
      if (!bad) {
        for (const auto& p : paths)
          if (window_hits(p, false)) bad = true;
        for (const auto& cy : cycles)
          if (window_hits(cy, true)) bad = true;
      }
      REQUIRE(placement_ok(g, colors, e) == !bad);
    }
  }
}

TEST_CASE("incremental greedy construction ends star-valid") {
  rng r(1234);
  int completed = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(r, 9);
    std::vector<int> colors(g.edge_count(), 0);
    bool stuck = false;
    for (int e = 0; e < g.edge_count() && !stuck; ++e) {
      bool placed = false;
      for (int k = 1; k <= 12 && !placed; ++k) {
        colors[e] = k;
        if (placement_ok(g, colors, e)) placed = true;
      }
      if (!placed) {
        colors[e] = 0;
        stuck = true;
      }
    }
    if (stuck || g.edge_count() == 0) continue;
    CHECK_FALSE(check_star(g, EdgeColoring(colors)).has_value());
    ++completed;
  }
  CHECK(completed > 30);
}

#include "starcolor/verify.hpp"

#include <algorithm>
#include <string>

namespace starcolor {

namespace {

// Incidence lists reordered by neighbor id so walk enumeration (and hence
// first-witness selection) does not depend on edge insertion order.
std::vector<std::vector<std::pair<int, int>>> sorted_incidence(
    const Graph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.order());
  for (int v = 0; v < g.order(); ++v) {
    adj[v] = g.incident(v);
    std::sort(adj[v].begin(), adj[v].end());
  }
  return adj;
}

void require_total(const Graph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.edge_count()) {
    throw error(errc::coloring_size_mismatch,
                "coloring has " + std::to_string(c.colors.size()) +
                    " entries for " + std::to_string(g.edge_count()) +
                    " edges");
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (c.colors[e] <= 0) {
      throw error(errc::uncolored_edge,
                  "edge " + std::to_string(e) + " has no color");
    }
  }
}

std::optional<StarViolation> first_improper_walk(
    const Graph& g, const std::vector<int>& colors,
    const std::vector<std::vector<std::pair<int, int>>>& adj) {
  // A clash u-v-w and its reversal are the same violation; scanning all
  // ordered walks lexicographically returns the reversal-minimal one first.
  for (int u = 0; u < g.order(); ++u) {
    for (const auto& [v, e1] : adj[u]) {
      for (const auto& [w, e2] : adj[v]) {
        if (w == u) continue;
        if (colors[e1] == colors[e2]) {
          return StarViolation{violation_kind::improper,
                               {u, v, w},
                               {e1, e2},
                               {colors[e1], colors[e2]}};
        }
      }
    }
  }
  return std::nullopt;
}

// Depth-first walk extension hunting a 4-edge window on exactly two colors.
// walk/eids carry the partial walk; a window's colors alternate under a
// proper coloring, so any prefix reaching three distinct colors is dead.
bool find_bicolored_window(
    const std::vector<std::vector<std::pair<int, int>>>& adj,
    const std::vector<int>& colors, std::vector<int>& walk,
    std::vector<int>& eids, int c1, int c2, StarViolation& out) {
  const int v = walk.back();
  const int depth = static_cast<int>(eids.size());
  for (const auto& [w, e] : adj[v]) {
    const int col = colors[e];
    int n1 = c1, n2 = c2;
    if (col != n1 && col != n2) {
      if (n1 == 0) {
        n1 = col;
      } else if (n2 == 0) {
        n2 = col;
      } else {
        continue;  // third color: no 2-colored window extends this walk
      }
    }
    const bool closes = (w == walk.front() && depth == 3);
    if (!closes &&
        std::find(walk.begin(), walk.end(), w) != walk.end()) {
      continue;
    }
    walk.push_back(w);
    eids.push_back(e);
    if (depth == 3) {
      if (n1 != 0 && n2 != 0) {  // exactly two colors across four edges
        out.kind = closes ? violation_kind::bicolored_cycle4
                          : violation_kind::bicolored_path4;
        out.vertices = walk;
        if (closes) out.vertices.pop_back();  // cycle spelled without repeat
        out.edge_ids = eids;
        out.colors.clear();
        for (int id : eids) out.colors.push_back(colors[id]);
        return true;
      }
    } else if (find_bicolored_window(adj, colors, walk, eids, n1, n2, out)) {
      return true;
    }
    walk.pop_back();
    eids.pop_back();
  }
  return false;
}

// Color of sub-list entry i under the dual sizing rule of
// check_restricted_strong.
int sub_color(const Graph& host, const std::vector<int>& sub_edge_ids,
              const EdgeColoring& c, int i) {
  if (c.colors.size() == sub_edge_ids.size() &&
      static_cast<int>(c.colors.size()) != host.edge_count()) {
    return c.colors[i];
  }
  return c.colors[sub_edge_ids[i]];
}

}  // namespace

const char* violation_kind_name(violation_kind kind) {
  switch (kind) {
    case violation_kind::improper: return "IMPROPER";
    case violation_kind::bicolored_path4: return "BICOLORED_PATH4";
    case violation_kind::bicolored_cycle4: return "BICOLORED_CYCLE4";
    case violation_kind::strong_conflict: return "STRONG_CONFLICT";
  }
  return "UNKNOWN";
}

std::optional<StarViolation> check_proper(const Graph& g,
                                          const EdgeColoring& c) {
  require_total(g, c);
  const auto adj = sorted_incidence(g);
  return first_improper_walk(g, c.colors, adj);
}

std::optional<StarViolation> check_star(const Graph& g,
                                        const EdgeColoring& c) {
  require_total(g, c);
  const auto adj = sorted_incidence(g);
  if (auto bad = first_improper_walk(g, c.colors, adj)) return bad;
  // Properness holds, so the first 2-colored window in lexicographic walk
  // order is also the reversal/rotation-minimal spelling of its window.
  StarViolation out;
  std::vector<int> walk, eids;
  for (int v0 = 0; v0 < g.order(); ++v0) {
    walk.assign(1, v0);
    eids.clear();
    if (find_bicolored_window(adj, c.colors, walk, eids, 0, 0, out)) {
      return out;
    }
  }
  return std::nullopt;
}

std::optional<StarViolation> check_restricted_strong(
    const Graph& host, const std::vector<int>& sub_edge_ids,
    const EdgeColoring& c) {
  if (c.colors.size() != sub_edge_ids.size() &&
      static_cast<int>(c.colors.size()) != host.edge_count()) {
    throw error(errc::coloring_size_mismatch,
                "coloring has " + std::to_string(c.colors.size()) +
                    " entries; expected " +
                    std::to_string(sub_edge_ids.size()) + " (sub list) or " +
                    std::to_string(host.edge_count()) + " (host edges)");
  }
  const int m = static_cast<int>(sub_edge_ids.size());
  std::vector<char> listed(host.edge_count(), 0);
  for (int i = 0; i < m; ++i) {
    const int id = sub_edge_ids[i];
    if (id < 0 || id >= host.edge_count()) {
      throw error(errc::bad_argument,
                  "sub edge id " + std::to_string(id) + " out of range");
    }
    if (listed[id]) {
      throw error(errc::bad_argument,
                  "duplicate sub edge id " + std::to_string(id));
    }
    listed[id] = 1;
    if (sub_color(host, sub_edge_ids, c, i) <= 0) {
      throw error(errc::uncolored_edge,
                  "sub edge " + std::to_string(id) + " has no color");
    }
  }
  for (int i = 0; i < m; ++i) {
    const auto [a, b] = host.edge(sub_edge_ids[i]);
    const int ci = sub_color(host, sub_edge_ids, c, i);
    for (int j = i + 1; j < m; ++j) {
      if (sub_color(host, sub_edge_ids, c, j) != ci) continue;
      const auto [x, y] = host.edge(sub_edge_ids[j]);
      // Shared endpoint: spell the conflict as a 2-edge walk.
      int shared = -1;
      if (a == x || a == y) shared = a;
      if (b == x || b == y) shared = b;
      if (shared >= 0) {
        const int p = (shared == a) ? b : a;
        const int q = (shared == x) ? y : x;
        return StarViolation{violation_kind::strong_conflict,
                             {p, shared, q},
                             {sub_edge_ids[i], sub_edge_ids[j]},
                             {ci, ci}};
      }
      // Otherwise look for a host edge joining the endpoint pairs, in a
      // fixed probe order so the witness walk is deterministic.
      const std::pair<int, int> probes[4] = {{a, x}, {a, y}, {b, x}, {b, y}};
      for (const auto& [p, q] : probes) {
        const int join = host.edge_id(p, q);
        if (join < 0) continue;
        const int ei = (p == a) ? b : a;  // far endpoint of edge i
        const int ej = (q == x) ? y : x;  // far endpoint of edge j
        const int joincol = static_cast<int>(c.colors.size()) ==
                                    host.edge_count()
                                ? c.colors[join]
                                : 0;
        return StarViolation{violation_kind::strong_conflict,
                             {ei, p, q, ej},
                             {sub_edge_ids[i], join, sub_edge_ids[j]},
                             {ci, joincol, ci}};
      }
    }
  }
  return std::nullopt;
}

WalkInventory enumerate_star_windows(const Graph& g) {
  WalkInventory inv;
  const auto adj = sorted_incidence(g);
  std::vector<int> walk;
  // Iterative-deepening DFS over 4-edge walks; canonical filters keep one
  // spelling per window (paths: smaller end first; cycles: minimal vertex
  // first, then the smaller neighbor).
  struct Frame {
    int vertex;
    size_t next;
  };
  for (int v0 = 0; v0 < g.order(); ++v0) {
    walk.assign(1, v0);
    std::vector<Frame> stack{{v0, 0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next == adj[f.vertex].size()) {
        stack.pop_back();
        walk.pop_back();
        continue;
      }
      const int w = adj[f.vertex][f.next++].first;
      const int depth = static_cast<int>(stack.size());  // edges so far + 1
      const bool closes = (depth == 4 && w == walk.front());
      if (!closes &&
          std::find(walk.begin(), walk.end(), w) != walk.end()) {
        continue;
      }
      if (depth == 4) {
        if (closes) {
          if (walk[0] < walk[1] && walk[0] < walk[2] && walk[0] < walk[3] &&
              walk[1] < walk[3]) {
            inv.cycles.push_back(walk);
          }
        } else if (walk[0] < w) {
          auto path = walk;
          path.push_back(w);
          inv.paths.push_back(std::move(path));
        }
        continue;
      }
      walk.push_back(w);
      stack.push_back({w, 0});
    }
  }
  return inv;
}

bool placement_ok(const Graph& g, const std::vector<int>& colors,
                  int edge_id) {
  const int c0 = colors[edge_id];
  if (c0 <= 0) return true;
  const auto [a, b] = g.edge(edge_id);
  for (const auto& [v, e] : g.incident(a)) {
    (void)v;
    if (e != edge_id && colors[e] == c0) return false;
  }
  for (const auto& [v, e] : g.incident(b)) {
    (void)v;
    if (e != edge_id && colors[e] == c0) return false;
  }
  // A 2-colored window through this edge alternates c0 with one other color,
  // so it decomposes into chains leaving both endpoints with the forced
  // pattern d, c0, d at distances 1, 2, 3.  Window vertices must be distinct
  // except that the two extremes may coincide (the 4-cycle case).
  struct Chain {
    int verts[3];
    int len;
    int d;
  };
  std::vector<Chain> left, right;
  auto collect = [&](int from, int other, int want, std::vector<Chain>& out) {
    out.clear();
    if (want == 0) {
      out.push_back({{-1, -1, -1}, 0, 0});
      return;
    }
    Chain cur{{-1, -1, -1}, 0, 0};
    auto rec = [&](auto&& self, int at) -> void {
      const int k = cur.len + 1;  // distance of the next edge from edge_id
      for (const auto& [w, e] : g.incident(at)) {
        const int col = colors[e];
        if (col <= 0) continue;
        if (k % 2 == 0) {
          if (col != c0) continue;
        } else if (k == 1) {
          if (col == c0) continue;
        } else if (col != cur.d) {
          continue;
        }
        // Interior vertices stay off the window; the final vertex may equal
        // `other` only when the chain spans all three free edges (then the
        // coincidence is the extreme pair, i.e. a 4-cycle closure).
        if (w == from) continue;
        if (w == other && !(k == want && want == 3)) continue;
        bool seen = false;
        for (int t = 0; t < cur.len; ++t) {
          if (cur.verts[t] == w) seen = true;
        }
        if (seen) continue;
        const int saved_d = cur.d;
        if (k == 1) cur.d = col;
        cur.verts[cur.len++] = w;
        if (k == want) {
          out.push_back(cur);
        } else {
          self(self, w);
        }
        --cur.len;
        cur.d = saved_d;
      }
    };
    rec(rec, from);
  };
  for (int l = 0; l <= 3; ++l) {
    const int r = 3 - l;
    collect(a, b, l, left);
    if (left.empty()) continue;
    collect(b, a, r, right);
    for (const Chain& L : left) {
      for (const Chain& R : right) {
        if (L.d != 0 && R.d != 0 && L.d != R.d) continue;
        bool clash = false;
        for (int i = 0; i < L.len && !clash; ++i) {
          for (int j = 0; j < R.len; ++j) {
            if (L.verts[i] != R.verts[j]) continue;
            // Coinciding extremes close a 4-cycle; anything else is a
            // self-intersecting walk, not a window.
            if (i == L.len - 1 && j == R.len - 1) continue;
            clash = true;
            break;
          }
        }
        if (!clash) return false;
      }
    }
  }
  return true;
}

}  // namespace starcolor

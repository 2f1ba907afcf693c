#include "starcolor/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace starcolor {

const char* errc_name(errc code) {
  switch (code) {
    case errc::loop_edge: return "LOOP_EDGE";
    case errc::duplicate_edge: return "DUPLICATE_EDGE";
    case errc::vertex_out_of_range: return "VERTEX_OUT_OF_RANGE";
    case errc::coloring_size_mismatch: return "COLORING_SIZE_MISMATCH";
    case errc::uncolored_edge: return "UNCOLORED_EDGE";
    case errc::not_a_tree: return "NOT_A_TREE";
    case errc::not_cubic: return "NOT_CUBIC";
    case errc::not_a_necklace: return "NOT_A_NECKLACE";
    case errc::even_h: return "EVEN_H";
    case errc::invalid_spec: return "INVALID_SPEC";
    case errc::is_wheel: return "IS_WHEEL";
    case errc::delta_too_small: return "DELTA_TOO_SMALL";
    case errc::not_complete: return "NOT_COMPLETE";
    case errc::wrong_family: return "WRONG_FAMILY";
    case errc::bad_params: return "BAD_PARAMS";
    case errc::n_is_five: return "N_IS_FIVE";
    case errc::n_out_of_range: return "N_OUT_OF_RANGE";
    case errc::m_too_small: return "M_TOO_SMALL";
    case errc::k_out_of_range: return "K_OUT_OF_RANGE";
    case errc::leaves_out_of_range: return "LEAVES_OUT_OF_RANGE";
    case errc::palettes_overlap: return "PALETTES_OVERLAP";
    case errc::not_a_partition: return "NOT_A_PARTITION";
    case errc::subcoloring_invalid: return "SUBCOLORING_INVALID";
    case errc::construction_failed: return "CONSTRUCTION_FAILED";
    case errc::budget_exhausted: return "BUDGET_EXHAUSTED";
    case errc::bad_argument: return "BAD_ARGUMENT";
    case errc::parse_error: return "PARSE_ERROR";
    case errc::io_error: return "IO_ERROR";
  }
  return "UNKNOWN";
}

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edges)
    : order_(order), adj_(order < 0 ? 0 : order) {
  if (order < 0) throw error(errc::vertex_out_of_range, "negative order");
  std::set<std::pair<int, int>> seen;
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= order || v < 0 || v >= order)
      throw error(errc::vertex_out_of_range,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") outside 0.." + std::to_string(order - 1));
    if (u == v)
      throw error(errc::loop_edge, "loop at vertex " + std::to_string(u));
    auto e = std::minmax(u, v);
    if (!seen.insert(e).second)
      throw error(errc::duplicate_edge, "edge (" + std::to_string(e.first) +
                                            "," + std::to_string(e.second) +
                                            ") repeated");
    int id = static_cast<int>(edges_.size());
    edges_.emplace_back(e.first, e.second);
    adj_[e.first].emplace_back(e.second, id);
    adj_[e.second].emplace_back(e.first, id);
  }
}

int Graph::edge_id(int u, int v) const {
  if (u < 0 || u >= order_ || v < 0 || v >= order_) return -1;
  // Scan the smaller adjacency list.
  const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int other = adj_[u].size() <= adj_[v].size() ? v : u;
  for (auto [w, id] : list)
    if (w == other) return id;
  return -1;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != order_)
    throw error(errc::bad_argument, "label count does not match order");
  labels_ = std::move(labels);
}

Graph build_graph(int order, const std::vector<std::pair<int, int>>& edges) {
  return Graph(order, edges);
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.order())
    throw error(errc::vertex_out_of_range, "bfs source");
  std::vector<int> dist(g.order(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [w, id] : g.incident(u)) {
      (void)id;
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

int distance(const Graph& g, int u, int v) {
  if (v < 0 || v >= g.order())
    throw error(errc::vertex_out_of_range, "distance target");
  return bfs_distances(g, u)[v];
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

bool is_tree(const Graph& g) {
  return g.order() > 0 && g.edge_count() == g.order() - 1 && is_connected(g);
}

int EdgeColoring::color_count() const {
  std::set<int> used;
  for (int c : colors)
    if (c > 0) used.insert(c);
  return static_cast<int>(used.size());
}

int EdgeColoring::max_color() const {
  int m = 0;
  for (int c : colors) m = std::max(m, c);
  return m;
}

bool EdgeColoring::total() const {
  for (int c : colors)
    if (c <= 0) return false;
  return true;
}

std::uint64_t rng::next() {
  // splitmix64 (public-domain reference constants).
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rng::below(std::uint64_t bound) {
  if (bound == 0) throw error(errc::bad_argument, "rng bound must be positive");
  // Rejection sampling on the top bits; unbiased and platform-independent.
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace starcolor

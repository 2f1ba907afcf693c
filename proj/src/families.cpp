#include "starcolor/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace starcolor {

Graph path_graph(int n) {
  if (n < 1) throw error(errc::n_out_of_range, "path needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw error(errc::n_out_of_range, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph power_graph(const Graph& g, int k) {
  if (k < 1) throw error(errc::k_out_of_range, "power needs k >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.order(); ++u) {
    auto dist = bfs_distances(g, u);
    for (int v = u + 1; v < g.order(); ++v)
      if (dist[v] >= 1 && dist[v] <= k) edges.emplace_back(u, v);
  }
  return Graph(g.order(), edges);
}

Graph path_square(int n) {
  if (n < 3) throw error(errc::n_out_of_range, "path square needs n >= 3");
  return power_graph(path_graph(n), 2);
}

Graph cycle_square(int n) {
  if (n < 3) throw error(errc::n_out_of_range, "cycle square needs n >= 3");
  return power_graph(cycle_graph(n), 2);
}

Graph generalized_petersen(int m, int n) {
  if (m < 3) throw error(errc::m_too_small, "petersen needs m >= 3");
  if (n < 1 || n >= m)
    throw error(errc::n_out_of_range, "petersen needs 1 <= n < m");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
  for (int i = 0; i < m; ++i) edges.emplace_back(i, m + i);
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < m; ++i) {
    int a = m + i, b = m + (i + n) % m;
    auto e = std::minmax(a, b);
    if (seen.insert(e).second) edges.emplace_back(e.first, e.second);
  }
  Graph g(2 * m, edges);
  std::vector<std::string> labels;
  labels.reserve(2 * m);
  for (int i = 0; i < m; ++i) labels.push_back("u" + std::to_string(i));
  for (int i = 0; i < m; ++i) labels.push_back("v" + std::to_string(i));
  g.set_labels(std::move(labels));
  return g;
}

Graph petersen_3n(int n) {
  if (n < 1) throw error(errc::n_out_of_range, "petersen_3n needs n >= 1");
  return generalized_petersen(3 * n, n);
}

HalinGraph necklace(int h) {
  if (h < 1) throw error(errc::n_out_of_range, "necklace needs h >= 1");
  int order = 2 * h + 2;
  auto prime = [&](int i) { return h + 1 + i; };  // id of i'
  std::vector<std::pair<int, int>> tree;
  for (int i = 1; i < h; ++i) tree.emplace_back(i, i + 1);
  tree.emplace_back(1, 0);
  for (int i = 1; i <= h; ++i) tree.emplace_back(i, prime(i));
  tree.emplace_back(h, h + 1);

  std::vector<int> cycle;
  cycle.push_back(0);
  for (int i = 1; i <= h; ++i) cycle.push_back(prime(i));
  cycle.push_back(h + 1);

  std::vector<std::pair<int, int>> edges = tree;
  for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
    edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);

  Graph g(order, edges);
  std::vector<std::string> labels(order);
  labels[0] = "0";
  for (int i = 1; i <= h; ++i) labels[i] = std::to_string(i);
  labels[h + 1] = std::to_string(h + 1);
  for (int i = 1; i <= h; ++i) labels[prime(i)] = std::to_string(i) + "'";
  g.set_labels(std::move(labels));
  return HalinGraph(std::move(g), std::move(tree), /*root=*/1,
                    std::move(cycle));
}

HalinGraph complete_halin(const CompleteHalinSpec& spec) {
  const auto& levels = spec.levels;
  if (levels.empty() || levels[0].size() != 1)
    throw error(errc::invalid_spec, "levels[0] must hold the root child count");
  if (levels[0][0] < 3)
    throw error(errc::invalid_spec, "root child count must be >= 3");
  for (size_t l = 1; l < levels.size(); ++l) {
    int expected = std::accumulate(levels[l - 1].begin(), levels[l - 1].end(), 0);
    if (static_cast<int>(levels[l].size()) != expected)
      throw error(errc::invalid_spec,
                  "level " + std::to_string(l) + " must list " +
                      std::to_string(expected) + " child counts");
    for (int c : levels[l])
      if (c < 2)
        throw error(errc::invalid_spec,
                    "non-root internal vertices need >= 2 children");
  }

  // BFS numbering: parents of depth d+1 vertices appear in level d order.
  std::vector<std::pair<int, int>> tree;
  std::vector<int> frontier = {0};  // vertex ids at the current depth
  int next_id = 1;
  for (const auto& level : levels) {
    std::vector<int> next_frontier;
    for (size_t j = 0; j < level.size(); ++j) {
      int parent = frontier[j];
      for (int c = 0; c < level[j]; ++c) {
        tree.emplace_back(parent, next_id);
        next_frontier.push_back(next_id++);
      }
    }
    frontier = std::move(next_frontier);
  }

  std::vector<int> cycle = frontier;  // leaves in planar order
  std::vector<std::pair<int, int>> edges = tree;
  for (size_t i = 0; i < cycle.size(); ++i)
    edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  Graph g(next_id, edges);
  return HalinGraph(std::move(g), std::move(tree), /*root=*/0,
                    std::move(cycle));
}

HalinGraph random_cubic_halin(int leaves, std::uint64_t seed) {
  if (leaves < 3)
    throw error(errc::leaves_out_of_range, "need at least 3 leaves");
  rng gen(seed);
  std::vector<std::pair<int, int>> tree = {{0, 1}, {0, 2}, {0, 3}};
  std::vector<int> cycle = {1, 2, 3};
  int next_id = 4;
  while (static_cast<int>(cycle.size()) < leaves) {
    size_t pos = static_cast<size_t>(gen.below(cycle.size()));
    int v = cycle[pos];
    int a = next_id++, b = next_id++;
    tree.emplace_back(v, a);
    tree.emplace_back(v, b);
    cycle[pos] = a;
    cycle.insert(cycle.begin() + pos + 1, b);
  }
  std::vector<std::pair<int, int>> edges = tree;
  for (size_t i = 0; i < cycle.size(); ++i)
    edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  Graph g(next_id, edges);
  return HalinGraph(std::move(g), std::move(tree), /*root=*/0,
                    std::move(cycle));
}

Graph wheel(int n) {
  if (n < 3) throw error(errc::n_out_of_range, "wheel needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n, 1);
  return Graph(n + 1, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw error(errc::n_out_of_range, "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph net_graph() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
}

Graph fan3_graph() {
  // Hub 2 joined to every rim vertex of the path 0-1-3-4.
  return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}, {0, 2}, {1, 3}});
}

Graph h0_graph() {
  return Graph(12, {{0, 1},
                    {1, 2},
                    {0, 2},
                    {0, 3},
                    {1, 4},
                    {2, 5},
                    {3, 6},
                    {3, 7},
                    {4, 8},
                    {4, 9},
                    {5, 10},
                    {5, 11}});
}

}  // namespace starcolor

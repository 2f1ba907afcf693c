#include "starcolor/halin.hpp"

#include <algorithm>
#include <string>

namespace starcolor {

HalinGraph::HalinGraph(Graph graph, std::vector<std::pair<int, int>> tree_edges,
                       int root, std::vector<int> cycle_order)
    : graph_(std::move(graph)),
      tree_edges_(std::move(tree_edges)),
      root_(root),
      cycle_order_(std::move(cycle_order)) {
  int n = graph_.order();
  tree_edge_mark_.assign(graph_.edge_count(), 0);
  tree_degree_.assign(n, 0);
  cycle_pos_.assign(n, -1);

  if (static_cast<int>(tree_edges_.size()) != n - 1)
    throw error(errc::not_a_tree, "tree edge count must be order-1");
  for (auto& [u, v] : tree_edges_) {
    int id = graph_.edge_id(u, v);
    if (id < 0)
      throw error(errc::not_a_tree, "tree edge (" + std::to_string(u) + "," +
                                        std::to_string(v) +
                                        ") missing from graph");
    if (tree_edge_mark_[id])
      throw error(errc::not_a_tree, "tree edge repeated");
    tree_edge_mark_[id] = 1;
    ++tree_degree_[u];
    ++tree_degree_[v];
  }
  if (!is_tree(tree_as_graph()))
    throw error(errc::not_a_tree, "tree edges do not form a spanning tree");

  int leaves = 0;
  for (int v = 0; v < n; ++v) {
    if (tree_degree_[v] == 1) {
      ++leaves;
    } else if (tree_degree_[v] == 2) {
      throw error(errc::invalid_spec,
                  "internal tree vertex of degree 2 at " + std::to_string(v));
    }
  }
  if (static_cast<int>(cycle_order_.size()) != leaves ||
      static_cast<int>(cycle_order_.size()) < 3)
    throw error(errc::invalid_spec, "cycle must list all leaves (>= 3)");
  for (int i = 0; i < static_cast<int>(cycle_order_.size()); ++i) {
    int v = cycle_order_[i];
    if (v < 0 || v >= n || tree_degree_[v] != 1)
      throw error(errc::invalid_spec,
                  "cycle vertex " + std::to_string(v) + " is not a leaf");
    if (cycle_pos_[v] >= 0)
      throw error(errc::invalid_spec, "cycle repeats a leaf");
    cycle_pos_[v] = i;
  }

  // Non-tree edges must be exactly the consecutive cycle pairs.
  int k = static_cast<int>(cycle_order_.size());
  std::vector<char> cycle_edge_mark(graph_.edge_count(), 0);
  for (int i = 0; i < k; ++i) {
    int a = cycle_order_[i];
    int b = cycle_order_[(i + 1) % k];
    int id = graph_.edge_id(a, b);
    if (id < 0 || tree_edge_mark_[id])
      throw error(errc::invalid_spec, "missing cycle edge (" +
                                          std::to_string(a) + "," +
                                          std::to_string(b) + ")");
    cycle_edge_mark[id] = 1;
  }
  for (int id = 0; id < graph_.edge_count(); ++id)
    if (!tree_edge_mark_[id] && !cycle_edge_mark[id])
      throw error(errc::invalid_spec, "graph has an edge that is neither a "
                                      "tree edge nor a cycle edge");

  if (root_ < 0 || root_ >= n || tree_degree_[root_] < 3)
    throw error(errc::invalid_spec, "root must be an internal tree vertex");
}

std::vector<std::pair<int, int>> HalinGraph::tree_neighbors(int v) const {
  std::vector<std::pair<int, int>> out;
  for (auto [w, id] : graph_.incident(v))
    if (tree_edge_mark_[id]) out.emplace_back(w, id);
  return out;
}

int HalinGraph::cycle_next(int leaf) const {
  int p = cycle_pos_[leaf];
  if (p < 0) throw error(errc::bad_argument, "cycle_next of internal vertex");
  return cycle_order_[(p + 1) % cycle_order_.size()];
}

int HalinGraph::cycle_prev(int leaf) const {
  int p = cycle_pos_[leaf];
  if (p < 0) throw error(errc::bad_argument, "cycle_prev of internal vertex");
  int k = static_cast<int>(cycle_order_.size());
  return cycle_order_[(p + k - 1) % k];
}

bool HalinGraph::cubic() const {
  for (int v = 0; v < graph_.order(); ++v)
    if (tree_degree_[v] != 1 && tree_degree_[v] != 3) return false;
  return true;
}

Graph HalinGraph::tree_as_graph() const {
  return Graph(graph_.order(), tree_edges_);
}

}  // namespace starcolor

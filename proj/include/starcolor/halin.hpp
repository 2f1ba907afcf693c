#pragma once

#include <utility>
#include <vector>

#include "starcolor/graph.hpp"

namespace starcolor {

// A Halin graph: a plane tree with no degree-2 vertices (and at least one
// internal vertex) plus a cycle through its leaves in planar order.  The
// constructor checks all structural invariants:
//   * tree_edges form a spanning tree of the graph,
//   * every internal tree vertex has tree-degree >= 3,
//   * cycle_order is a permutation of the tree's leaves, |cycle| >= 3,
//   * the graph's non-tree edges are exactly the consecutive cycle pairs,
//   * root is an internal vertex.
class HalinGraph {
 public:
  HalinGraph(Graph graph, std::vector<std::pair<int, int>> tree_edges,
             int root, std::vector<int> cycle_order);

  const Graph& graph() const { return graph_; }
  const std::vector<std::pair<int, int>>& tree_edges() const {
    return tree_edges_;
  }
  int root() const { return root_; }
  const std::vector<int>& cycle_order() const { return cycle_order_; }

  int order() const { return graph_.order(); }
  bool is_tree_edge(int edge_id) const { return tree_edge_mark_[edge_id]; }
  bool is_leaf(int v) const { return tree_degree_[v] == 1; }
  int tree_degree(int v) const { return tree_degree_[v]; }

  // (neighbor, edge id) restricted to tree edges.
  std::vector<std::pair<int, int>> tree_neighbors(int v) const;

  // Position of a leaf in cycle_order, -1 for internal vertices.
  int cycle_position(int v) const { return cycle_pos_[v]; }
  int cycle_next(int leaf) const;
  int cycle_prev(int leaf) const;

  // True iff every internal vertex has tree-degree exactly 3.
  bool cubic() const;

  // The characteristic tree as a standalone graph (same vertex ids).
  Graph tree_as_graph() const;

 private:
  Graph graph_;
  std::vector<std::pair<int, int>> tree_edges_;
  int root_;
  std::vector<int> cycle_order_;
  std::vector<char> tree_edge_mark_;  // by edge id
  std::vector<int> tree_degree_;      // by vertex
  std::vector<int> cycle_pos_;        // by vertex, -1 for internal
};

}  // namespace starcolor

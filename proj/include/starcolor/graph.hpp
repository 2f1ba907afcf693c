#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starcolor {

// Error codes shared by the whole library.  CLI maps them to exit code 2.
enum class errc {
  loop_edge,
  duplicate_edge,
  vertex_out_of_range,
  coloring_size_mismatch,
  uncolored_edge,
  not_a_tree,
  not_cubic,
  not_a_necklace,
  even_h,
  invalid_spec,
  is_wheel,
  delta_too_small,
  not_complete,
  wrong_family,
  bad_params,
  n_is_five,
  n_out_of_range,
  m_too_small,
  k_out_of_range,
  leaves_out_of_range,
  palettes_overlap,
  not_a_partition,
  subcoloring_invalid,
  construction_failed,
  budget_exhausted,
  bad_argument,
  parse_error,
  io_error,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what_arg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what_arg),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

// Simple undirected graph.  Vertices are 0..order-1; edges are stored
// min-endpoint-first in insertion order, and the edge id is that index.
// No loops, no parallel edges.
class Graph {
 public:
  Graph() = default;
  Graph(int order, const std::vector<std::pair<int, int>>& edges);

  int order() const { return order_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> edge(int id) const { return edges_[id]; }

  // (neighbor, edge id) pairs in edge-insertion order.
  const std::vector<std::pair<int, int>>& incident(int v) const {
    return adj_[v];
  }

  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // -1 if u and v are not adjacent.
  int edge_id(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_id(u, v) >= 0; }

  // Optional vertex labels (empty, or one per vertex).
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

 private:
  int order_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<std::string> labels_;
};

Graph build_graph(int order, const std::vector<std::pair<int, int>>& edges);

int max_degree(const Graph& g);

// BFS distances from source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

int distance(const Graph& g, int u, int v);

bool is_connected(const Graph& g);

// Acyclic + connected.
bool is_tree(const Graph& g);

// An edge coloring aligned with edge ids.  Color 0 means "uncolored";
// valid colors are positive integers.
struct EdgeColoring {
  std::vector<int> colors;

  EdgeColoring() = default;
  explicit EdgeColoring(std::vector<int> c) : colors(std::move(c)) {}
  static EdgeColoring uncolored(const Graph& g) {
    return EdgeColoring(std::vector<int>(g.edge_count(), 0));
  }

  int color_count() const;  // number of distinct positive colors
  int max_color() const;    // largest color used, 0 if none
  bool total() const;       // no uncolored entries
};

// Deterministic RNG used wherever the library needs randomness: splitmix64
// stream with unbiased bounded sampling.  (std::uniform_int_distribution is
// implementation-defined, so results would not reproduce across toolchains.)
class rng {
 public:
  explicit rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Uniform value in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

}  // namespace starcolor

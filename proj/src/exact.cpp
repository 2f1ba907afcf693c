#include "starcolor/exact.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <string>
#include <thread>
#include <vector>

#include "starcolor/verify.hpp"

namespace starcolor {

namespace {

enum class walk_result { found, exhausted, aborted };

struct SearchCtx {
  const Graph& g;
  int k;
  const std::vector<int>& order;
  std::vector<int>& colors;        // by edge id
  std::uint64_t nodes = 0;
  std::uint64_t budget;
  std::atomic<std::uint64_t>* shared_nodes = nullptr;  // parallel mode
  std::atomic<bool>* stop = nullptr;
};

// Depth-first extension over order[depth..]; max_used is the largest color
// value on earlier edges, so max_used + 1 is the only fresh value a
// candidate may introduce.
walk_result extend(SearchCtx& ctx, std::size_t depth, int max_used) {
  if (depth == ctx.order.size()) return walk_result::found;
  const int e = ctx.order[depth];
  const int top = std::min(ctx.k, max_used + 1);
  for (int c = 1; c <= top; ++c) {
    if (ctx.stop && ctx.stop->load(std::memory_order_relaxed)) {
      return walk_result::aborted;
    }
    ++ctx.nodes;
    if (ctx.shared_nodes) {
      if (ctx.shared_nodes->fetch_add(1, std::memory_order_relaxed) + 1 >
          ctx.budget) {
        return walk_result::aborted;
      }
    } else if (ctx.nodes > ctx.budget) {
      return walk_result::aborted;
    }
    ctx.colors[e] = c;
    if (placement_ok(ctx.g, ctx.colors, e)) {
      walk_result r = extend(ctx, depth + 1, std::max(max_used, c));
      if (r != walk_result::exhausted) return r;
    }
  }
  ctx.colors[e] = 0;
  return walk_result::exhausted;
}

SolveOutcome solve_sequential(const Graph& g, int k,
                              const std::vector<int>& order,
                              std::uint64_t budget) {
  std::vector<int> colors(g.edge_count(), 0);
  SearchCtx ctx{g, k, order, colors, 0, budget, nullptr, nullptr};
  walk_result r = extend(ctx, 0, 0);
  SolveOutcome out;
  out.nodes_explored = ctx.nodes;
  switch (r) {
    case walk_result::found:
      out.status = solve_status::feasible;
      out.coloring = EdgeColoring(colors);
      break;
    case walk_result::exhausted:
      out.status = solve_status::infeasible;
      break;
    case walk_result::aborted:
      out.status = solve_status::budget_exhausted;
      break;
  }
  return out;
}

// A subtree root for the parallel mode: a valid colored prefix of the edge
// order together with its running color maximum.
struct Prefix {
  std::vector<int> colors;  // full-size, zeros past the prefix
  int max_used;
};

SolveOutcome solve_parallel(const Graph& g, int k,
                            const std::vector<int>& order,
                            std::uint64_t budget) {
  // Grow prefix layers until there are enough independent subtrees to feed
  // the hardware; symmetry breaking keeps early layers narrow, so the split
  // happens over the first few branching levels rather than literal first-
  // edge color choices.
  const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
  const std::size_t target = 4 * hw;
  std::uint64_t layer_nodes = 0;
  std::deque<Prefix> layer;
  layer.push_back(Prefix{std::vector<int>(g.edge_count(), 0), 0});
  std::size_t depth = 0;
  while (depth < order.size() && layer.size() < target) {
    const int e = order[depth];
    std::deque<Prefix> next;
    for (Prefix& p : layer) {
      const int top = std::min(k, p.max_used + 1);
      for (int c = 1; c <= top; ++c) {
        ++layer_nodes;
        p.colors[e] = c;
        if (placement_ok(g, p.colors, e)) {
          Prefix q = p;
          q.max_used = std::max(p.max_used, c);
          next.push_back(std::move(q));
        }
      }
      p.colors[e] = 0;
    }
    layer = std::move(next);
    ++depth;
    if (layer.empty()) {
      return SolveOutcome{solve_status::infeasible, std::nullopt,
                          layer_nodes};
    }
  }
  if (depth == order.size()) {
    // Prefix enumeration already produced complete colorings.
    SolveOutcome out{solve_status::feasible,
                     EdgeColoring(layer.front().colors), layer_nodes};
    return out;
  }

  std::atomic<std::uint64_t> shared_nodes{layer_nodes};
  std::atomic<bool> stop{false};
  std::vector<walk_result> results(layer.size(), walk_result::exhausted);
  std::vector<Prefix> tasks(layer.begin(), layer.end());
  std::atomic<std::size_t> next_task{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next_task.fetch_add(1);
      if (i >= tasks.size()) return;
      if (stop.load(std::memory_order_relaxed)) {
        results[i] = walk_result::aborted;
        continue;
      }
      SearchCtx ctx{g,      k,       order, tasks[i].colors,
                    0,      budget,  &shared_nodes, &stop};
      walk_result r = extend(ctx, depth, tasks[i].max_used);
      results[i] = r;
      if (r == walk_result::found) {
        stop.store(true, std::memory_order_relaxed);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(hw, tasks.size()); ++t) {
    pool.emplace_back(worker);
  }
  for (auto& t : pool) t.join();

  SolveOutcome out;
  out.nodes_explored = shared_nodes.load();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (results[i] == walk_result::found) {
      out.status = solve_status::feasible;
      out.coloring = EdgeColoring(tasks[i].colors);
      return out;
    }
  }
  const bool over_budget = shared_nodes.load() > budget;
  for (walk_result r : results) {
    if (r == walk_result::aborted && !over_budget) {
      // A task was stopped by a sibling's success, but no success is
      // recorded: impossible unless the budget tripped.
      out.status = solve_status::budget_exhausted;
      return out;
    }
  }
  out.status = over_budget ? solve_status::budget_exhausted
                           : solve_status::infeasible;
  return out;
}

}  // namespace

const char* solve_status_name(solve_status s) {
  switch (s) {
    case solve_status::feasible: return "feasible";
    case solve_status::infeasible: return "infeasible";
    case solve_status::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

std::vector<int> solver_edge_order(const Graph& g) {
  std::vector<int> order;
  order.reserve(g.edge_count());
  std::vector<char> vseen(g.order(), 0), eseen(g.edge_count(), 0);
  auto sorted_inc = [&](int v) {
    auto inc = g.incident(v);
    std::sort(inc.begin(), inc.end());
    return inc;
  };
  for (;;) {
    int start = -1;
    for (int v = 0; v < g.order(); ++v) {
      if (!vseen[v] && (start < 0 || g.degree(v) > g.degree(start))) {
        start = v;
      }
    }
    if (start < 0) break;
    std::deque<int> queue{start};
    vseen[start] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (auto [w, e] : sorted_inc(v)) {
        if (!eseen[e]) {
          eseen[e] = 1;
          order.push_back(e);
        }
        if (!vseen[w]) {
          vseen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return order;
}

SolveOutcome exists_star_k_coloring(const Graph& g, int k,
                                    std::uint64_t budget, bool parallel) {
  if (k < 1) throw error(errc::k_out_of_range, "palette size must be >= 1");
  if (g.edge_count() == 0) {
    return SolveOutcome{solve_status::feasible, EdgeColoring{}, 0};
  }
  const std::vector<int> order = solver_edge_order(g);
  SolveOutcome out = parallel ? solve_parallel(g, k, order, budget)
                              : solve_sequential(g, k, order, budget);
  if (out.status == solve_status::feasible) {
    if (out.coloring->max_color() > k ||
        check_star(g, *out.coloring).has_value()) {
      throw error(errc::construction_failed,
                  "solver produced an invalid certificate");
    }
  }
  return out;
}

ExactResult star_chromatic_index(const Graph& g, std::optional<int> lower_hint,
                                 std::optional<int> upper_hint,
                                 std::uint64_t budget, bool parallel) {
  if (g.edge_count() == 0) {
    return ExactResult{0, EdgeColoring{}, 0, -1};
  }
  const int lower = lower_hint.value_or(max_degree(g));
  const int upper = upper_hint.value_or(g.edge_count());
  if (lower > upper) {
    throw error(errc::bad_argument,
                "lower hint " + std::to_string(lower) + " exceeds upper hint " +
                    std::to_string(upper));
  }
  std::uint64_t spent = 0;
  for (int k = std::max(1, lower); k <= upper; ++k) {
    const std::uint64_t remaining = budget > spent ? budget - spent : 0;
    SolveOutcome out = exists_star_k_coloring(g, k, remaining, parallel);
    spent += out.nodes_explored;
    if (out.status == solve_status::feasible) {
      ExactResult res;
      res.k = k;
      res.certificate = *out.coloring;
      res.nodes_explored = spent;
      res.infeasible_below = k - 1;
      return res;
    }
    if (out.status == solve_status::budget_exhausted) {
      throw error(errc::budget_exhausted,
                  "node budget " + std::to_string(budget) +
                      " exhausted after " + std::to_string(spent) +
                      " nodes; no star coloring with at most " +
                      std::to_string(k - 1) + " colors, unresolved at k=" +
                      std::to_string(k) + ", trivial upper bound " +
                      std::to_string(upper));
    }
  }
  throw error(errc::construction_failed,
              "no star coloring found up to the upper hint " +
                  std::to_string(upper));
}

}  // namespace starcolor

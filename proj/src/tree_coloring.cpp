#include "starcolor/tree_coloring.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

#include "starcolor/verify.hpp"

namespace starcolor {
namespace {

// Round-robin out-degree of child index i among c siblings: i beats the next
// q cyclic indices, plus its antipode when c is even and i sits in the first
// half.  Antisymmetric: for every pair exactly one direction wins (distance
// d vs c-d), and antipodal pairs are oriented low index -> high.
int tournament_q(int c) { return (c % 2 == 1) ? (c - 1) / 2 : (c - 2) / 2; }

std::vector<int> tournament_wins(int c, int i) {
    std::vector<int> wins;
    int q = tournament_q(c);
    for (int d = 1; d <= q; ++d) wins.push_back((i + d) % c);
    if (c % 2 == 0 && i < c / 2) wins.push_back(i + c / 2);
    return wins;
}

int tournament_outdeg(int c, int i) {
    return tournament_q(c) + ((c % 2 == 0 && i < c / 2) ? 1 : 0);
}

}  // namespace

EdgeColoring tree_star_coloring(const Graph& t) {
    if (!is_tree(t))
        throw error(errc::not_a_tree, "tree_star_coloring: input is not a tree");
    const int n = t.order();
    const int m = t.edge_count();
    EdgeColoring out;
    out.colors.assign(m, 0);
    if (m == 0) return out;

    const int delta = max_degree(t);
    const int k = (3 * delta) / 2;

    int root = -1;
    for (int v = 0; v < n; ++v)
        if (t.degree(v) == 1) { root = v; break; }

    // BFS orientation; children listed in ascending id so every derived
    // quantity (sibling index, tournament, pool order) is deterministic.
    std::vector<int> parent(n, -1), parent_edge(n, -1), order;
    std::vector<std::vector<int>> children(n);
    std::vector<char> seen(n, 0);
    std::queue<int> bfs;
    bfs.push(root);
    seen[root] = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        order.push_back(v);
        std::vector<std::pair<int, int>> nbrs(t.incident(v).begin(), t.incident(v).end());
        std::sort(nbrs.begin(), nbrs.end());
        for (auto [w, e] : nbrs) {
            if (seen[w]) continue;
            seen[w] = 1;
            parent[w] = v;
            parent_edge[w] = e;
            children[v].push_back(w);
            bfs.push(w);
        }
    }

    auto& colors = out.colors;
    // flagged[x]: x's parent edge color was fresh at x's grandparent, so x
    // may offer the grandparent edge color to its own children.
    std::vector<char> flagged(n, 0);

    for (int v : order) {
        if (children[v].empty()) continue;

        std::vector<int> fresh, rest;
        if (v == root) {
            colors[parent_edge[children[v][0]]] = 1;
            flagged[children[v][0]] = 1;
            continue;
        }

        const int u = parent[v];
        std::set<int> used_at_u;
        for (auto [w, e] : t.incident(u)) {
            (void)w;
            used_at_u.insert(colors[e]);
        }
        for (int c = 1; c <= k; ++c)
            if (!used_at_u.count(c)) fresh.push_back(c);

        const auto& sibs = children[u];
        const int cs = static_cast<int>(sibs.size());
        const int my_ix = static_cast<int>(
            std::find(sibs.begin(), sibs.end(), v) - sibs.begin());
        for (int j : tournament_wins(cs, my_ix))
            rest.push_back(colors[parent_edge[sibs[j]]]);
        if (flagged[v] && parent[u] != -1) rest.push_back(colors[parent_edge[u]]);
        std::sort(rest.begin(), rest.end());

        // Children that would otherwise fall short of deg-1 usable colors
        // must receive a fresh color now: that flags them, adding the
        // grandparent slot to their future pool.
        const int cc = static_cast<int>(children[v].size());
        std::vector<int> deficit_children, other_children;
        for (int ix = 0; ix < cc; ++ix) {
            int x = children[v][ix];
            bool deficit =
                t.degree(x) - 1 > (k - t.degree(v)) + tournament_outdeg(cc, ix);
            (deficit ? deficit_children : other_children).push_back(x);
        }

        auto take_smallest = [](std::vector<int>& pool) {
            int c = pool.front();
            pool.erase(pool.begin());
            return c;
        };
        for (int x : deficit_children) {
            if (fresh.empty())
                throw error(errc::construction_failed,
                            "tree_star_coloring: fresh colors exhausted");
            colors[parent_edge[x]] = take_smallest(fresh);
            flagged[x] = 1;
        }
        for (int x : other_children) {
            if (rest.empty() && fresh.empty())
                throw error(errc::construction_failed,
                            "tree_star_coloring: color pool exhausted");
            bool from_fresh =
                rest.empty() || (!fresh.empty() && fresh.front() < rest.front());
            colors[parent_edge[x]] = take_smallest(from_fresh ? fresh : rest);
            flagged[x] = from_fresh;
        }
    }

    auto verdict = check_star(t, out);
    if (verdict.has_value() || out.max_color() > k)
        throw error(errc::construction_failed,
                    "tree_star_coloring: produced coloring failed validation");
    return out;
}

}  // namespace starcolor

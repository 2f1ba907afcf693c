#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "colorer_util.hpp"
#include "starcolor/colorers.hpp"
#include "starcolor/exact.hpp"
#include "starcolor/families.hpp"
#include "starcolor/tree_coloring.hpp"
#include "starcolor/verify.hpp"

namespace starcolor {
namespace {

// Endpoints of a tree diameter, each chosen with lowest-id tie-breaking;
// returns the whole path (unique in a tree).
std::vector<int> longest_tree_path(const Graph& tree) {
    auto farthest = [&](int src) {
        auto d = bfs_distances(tree, src);
        int best = src;
        for (int v = 0; v < tree.order(); ++v)
            if (d[v] > d[best]) best = v;
        return best;
    };
    int a = farthest(0);
    int b = farthest(a);
    // Parent chain of the unique a-b path.
    std::vector<int> parent(tree.order(), -1);
    auto d = bfs_distances(tree, a);
    for (int v = 0; v < tree.order(); ++v)
        for (auto [w, e] : tree.incident(v)) {
            (void)e;
            if (d[w] == d[v] + 1) parent[w] = v;
        }
    std::vector<int> path;
    for (int v = b; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());  // path[0] == a
    return path;
}

bool extend_tail(const Graph& g, std::vector<int>& colors,
                 const std::vector<int>& order, size_t idx) {
    if (idx == order.size()) return true;
    const int e = order[idx];
    for (int c = 1; c <= 6; ++c) {
        colors[e] = c;
        if (placement_ok(g, colors, e) && extend_tail(g, colors, order, idx + 1))
            return true;
    }
    colors[e] = 0;
    return false;
}

EdgeColoring cubic_halin_base(const Graph& g) {
    auto res = star_chromatic_index(g);
    if (res.k > 6)
        throw error(errc::construction_failed,
                    "color_cubic_halin: base instance needs more than 6 colors");
    return res.certificate;
}

}  // namespace

EdgeColoring color_cubic_halin(const HalinGraph& hg) {
    if (!hg.cubic())
        throw error(errc::not_cubic, "color_cubic_halin: graph is not cubic");
    const Graph& g = hg.graph();
    const auto& cyc = hg.cycle_order();
    if (static_cast<int>(cyc.size()) <= 5)
        return detail::finalize_colorer(g, cubic_halin_base(g), 6,
                                        "color_cubic_halin");

    // Reduction step: pick a diameter y_0..y_s of the tree and name the
    // second, third and fourth vertices u, w, x.  Both non-w tree neighbors
    // of u are leaves; w has one more tree neighbor w1 besides u and x.
    Graph tree = hg.tree_as_graph();
    auto path = longest_tree_path(tree);
    if (path.size() < 4)
        throw error(errc::construction_failed,
                    "color_cubic_halin: tree diameter too short");
    const int u = path[1], w = path[2], x = path[3];
    std::vector<int> u_kids;
    int w1 = -1;
    for (auto [nb, e] : hg.tree_neighbors(u)) {
        (void)e;
        if (nb != w) u_kids.push_back(nb);
    }
    for (auto [nb, e] : hg.tree_neighbors(w)) {
        (void)e;
        if (nb != u && nb != x) w1 = nb;
    }
    if (u_kids.size() != 2 || w1 < 0 || !hg.is_leaf(u_kids[0]) ||
        !hg.is_leaf(u_kids[1]))
        throw error(errc::construction_failed,
                    "color_cubic_halin: unexpected diameter neighborhood");

    // The two leaf children of u are cycle-consecutive; outer(c) is the
    // cycle neighbor pointing away from the sibling.
    auto outer = [&](int leaf, int sibling) {
        int nxt = hg.cycle_next(leaf);
        return nxt == sibling ? hg.cycle_prev(leaf) : nxt;
    };
    if (hg.cycle_next(u_kids[0]) != u_kids[1] &&
        hg.cycle_prev(u_kids[0]) != u_kids[1])
        throw error(errc::construction_failed,
                    "color_cubic_halin: u's leaves are not cycle-consecutive");

    const bool w1_internal = !hg.is_leaf(w1);
    int u1 = -1, u2 = -1;
    for (int flip = 0; flip < 2; ++flip) {
        int cand = u_kids[flip], sib = u_kids[1 - flip];
        int oc = outer(cand, sib);
        bool matched = w1_internal
                           ? hg.tree_neighbors(oc).front().first == w1
                           : oc == w1;
        if (matched) {
            u2 = cand;
            u1 = sib;
            break;
        }
    }
    if (u2 < 0)
        throw error(errc::construction_failed,
                    "color_cubic_halin: no side of u faces w's third subtree");
    const int z1 = outer(u1, u2);

    // Figure out what disappears and which two cycle edges w adopts.
    std::vector<int> removed;
    int za = z1, zb = -1;  // w is spliced into the cycle between za and zb
    int v = -1, v1 = -1, v2 = -1;
    if (w1_internal) {
        v = w1;
        std::vector<int> v_kids;
        for (auto [nb, e] : hg.tree_neighbors(v)) {
            (void)e;
            if (nb != w) v_kids.push_back(nb);
        }
        v1 = outer(u2, u1);
        if (v_kids.size() != 2 ||
            (v_kids[0] != v1 && v_kids[1] != v1) || !hg.is_leaf(v_kids[0]) ||
            !hg.is_leaf(v_kids[1]))
            throw error(errc::construction_failed,
                        "color_cubic_halin: w's third subtree is not two leaves");
        v2 = (v_kids[0] == v1) ? v_kids[1] : v_kids[0];
        zb = outer(v2, v1);
        removed = {u, u1, u2, v, v1, v2};
    } else {
        v1 = w1;  // leaf; sits right after u2 on the cycle
        if (outer(u2, u1) != v1)
            throw error(errc::construction_failed,
                        "color_cubic_halin: leaf w1 is not next to u's leaves");
        v2 = outer(v1, u2);
        zb = v2;
        removed = {u, u1, u2, v1};
    }

    // Build the reduced Halin graph on compacted ids.
    const int n = g.order();
    std::vector<int> to_new(n, -1);
    std::vector<char> gone(n, 0);
    for (int r : removed) gone[r] = 1;
    int next_id = 0;
    for (int vv = 0; vv < n; ++vv)
        if (!gone[vv]) to_new[vv] = next_id++;
    std::vector<std::pair<int, int>> new_edges, new_tree;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        if (gone[a] || gone[b]) continue;
        new_edges.push_back({to_new[a], to_new[b]});
        if (hg.is_tree_edge(e)) new_tree.push_back({to_new[a], to_new[b]});
    }
    new_edges.push_back({to_new[w], to_new[za]});
    new_edges.push_back({to_new[w], to_new[zb]});
    std::vector<int> new_cycle;
    for (int leaf : cyc) {
        if (leaf == u1)
            new_cycle.push_back(to_new[w]);
        else if (!gone[leaf])
            new_cycle.push_back(to_new[leaf]);
    }
    HalinGraph reduced(Graph(next_id, new_edges), new_tree, to_new[x],
                       new_cycle);

    EdgeColoring phi = color_cubic_halin(reduced);
    const Graph& rg = reduced.graph();
    auto phi_at = [&](int a, int b) {
        return phi.colors[rg.edge_id(to_new[a], to_new[b])];
    };

    // Pull shared edges back, then apply the forced re-extension equalities.
    EdgeColoring psi = EdgeColoring::uncolored(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        if (gone[a] || gone[b]) continue;
        psi.colors[e] = phi_at(a, b);
    }
    const int cw_za = phi_at(w, za), cw_zb = phi_at(w, zb);
    const int cw_x = phi_at(x, w);
    std::vector<int> tail;
    if (w1_internal) {
        psi.colors[g.edge_id(u2, v1)] = cw_x;
        psi.colors[g.edge_id(w, v)] = cw_za;
        psi.colors[g.edge_id(v1, v2)] = cw_za;
        psi.colors[g.edge_id(z1, u1)] = cw_za;
        psi.colors[g.edge_id(w, u)] = cw_zb;
        psi.colors[g.edge_id(u1, u2)] = cw_zb;
        psi.colors[g.edge_id(v2, zb)] = cw_zb;
        tail = {g.edge_id(v, v2), g.edge_id(u, u1), g.edge_id(u, u2),
                g.edge_id(v, v1)};
    } else {
        psi.colors[g.edge_id(u1, u2)] = cw_x;
        psi.colors[g.edge_id(w, v1)] = cw_za;
        psi.colors[g.edge_id(z1, u1)] = cw_za;
        psi.colors[g.edge_id(u, u1)] = cw_zb;
        psi.colors[g.edge_id(v1, v2)] = cw_zb;
        tail = {g.edge_id(u, w), g.edge_id(u2, v1), g.edge_id(u, u2)};
    }
    if (!extend_tail(g, psi.colors, tail, 0))
        throw error(errc::construction_failed,
                    "color_cubic_halin: tail extension found no colors");
    return detail::finalize_colorer(g, std::move(psi), 6, "color_cubic_halin");
}

EdgeColoring color_necklace_odd(int h) {
    if (h < 1)
        throw error(errc::bad_params, "color_necklace_odd: need h >= 1");
    if (h % 2 == 0)
        throw error(errc::even_h,
                    "color_necklace_odd: even h (use color_cubic_halin)");
    HalinGraph hg = necklace(h);
    const Graph& g = hg.graph();
    EdgeColoring c = EdgeColoring::uncolored(g);
    auto set = [&](int a, int b, int color) { c.colors[g.edge_id(a, b)] = color; };
    auto prime = [&](int i) { return h + 1 + i; };

    if (h == 1) {
        set(0, prime(1), 1);
        set(prime(1), 2, 2);
        set(2, 0, 3);
        set(1, 0, 4);
        set(1, prime(1), 5);
        set(1, 2, 1);
    } else if (h == 3) {
        set(0, prime(1), 3);
        set(prime(1), prime(2), 4);
        set(prime(2), prime(3), 5);
        set(prime(3), 4, 2);
        set(4, 0, 1);
        set(1, 0, 5);
        set(1, 2, 2);
        set(2, 3, 3);
        set(3, 4, 4);
        for (int i = 1; i <= 3; ++i) set(i, prime(i), 1);
    } else {
        // Letters a,b,c,d,f are colors 1,2,3,4,5.  All rungs and the cycle
        // edge {0, h+1} take a; the spine runs b,c,d,f while the opposite
        // cycle arc runs d,f,b,c; the two edges meeting h+1 depend on
        // (h-1) mod 4.
        static const int spine_pat[4] = {2, 3, 4, 5};
        static const int cycle_pat[4] = {4, 5, 2, 3};
        set(0, 1, 5);
        set(0, prime(1), 3);
        set(0, h + 1, 1);
        for (int i = 1; i <= h; ++i) set(i, prime(i), 1);
        for (int j = 1; j + 1 <= h; ++j) {
            set(j, j + 1, spine_pat[(j - 1) % 4]);
            set(prime(j), prime(j + 1), cycle_pat[(j - 1) % 4]);
        }
        if ((h - 1) % 4 == 0) {
            set(h, h + 1, 2);
            set(prime(h), h + 1, 4);
        } else {
            set(h, h + 1, 4);
            set(prime(h), h + 1, 2);
        }
    }
    return detail::finalize_colorer(g, std::move(c), 5, "color_necklace_odd");
}

EdgeColoring color_complete_halin(const HalinGraph& hg) {
    const Graph& g = hg.graph();
    Graph tree = hg.tree_as_graph();
    auto depth = bfs_distances(tree, hg.root());
    int leaf_depth = -1;
    for (int v = 0; v < g.order(); ++v) {
        if (!hg.is_leaf(v)) continue;
        if (leaf_depth == -1) leaf_depth = depth[v];
        if (depth[v] != leaf_depth)
            throw error(errc::not_complete,
                        "color_complete_halin: leaves sit at differing depths");
    }
    if (leaf_depth == 1)
        throw error(errc::is_wheel, "color_complete_halin: graph is a wheel");
    const int delta = max_degree(g);
    if (delta < 6)
        throw error(errc::delta_too_small,
                    "color_complete_halin: needs maximum degree >= 6");
    const int base = (3 * delta) / 2;
    const int c0 = base + 1;

    EdgeColoring c = EdgeColoring::uncolored(g);
    EdgeColoring tc = tree_star_coloring(tree);
    for (int te = 0; te < tree.edge_count(); ++te) {
        auto [a, b] = tree.edge(te);
        c.colors[g.edge_id(a, b)] = tc.colors[te];
    }

    // Leaf groups are the maximal cycle arcs sharing a tree parent; rotate
    // the cycle to start at a group boundary, then every group is one run.
    const auto& cyc = hg.cycle_order();
    const int L = static_cast<int>(cyc.size());
    auto parent_of = [&](int leaf) { return hg.tree_neighbors(leaf).front().first; };
    int start = 0;
    while (start < L &&
           parent_of(cyc[start]) == parent_of(cyc[(start + L - 1) % L]))
        ++start;
    if (start == L)
        throw error(errc::is_wheel,
                    "color_complete_halin: single leaf group (wheel)");
    std::vector<std::vector<int>> groups;
    for (int t = 0; t < L; ++t) {
        int leaf = cyc[(start + t) % L];
        if (groups.empty() || parent_of(groups.back().back()) != parent_of(leaf))
            groups.push_back({});
        groups.back().push_back(leaf);
    }
    std::vector<char> seen_parent(g.order(), 0);
    for (const auto& grp : groups) {
        int p = parent_of(grp.front());
        if (seen_parent[p])
            throw error(errc::invalid_spec,
                        "color_complete_halin: leaf cycle splits a subtree arc");
        seen_parent[p] = 1;
    }

    // Joints between neighboring groups all take the reserve color c0.
    for (int t = 0; t < L; ++t) {
        int a = cyc[t], b = cyc[(t + 1) % L];
        if (parent_of(a) != parent_of(b)) c.colors[g.edge_id(a, b)] = c0;
    }

    // Intra-group edges, greedily colored from the base palette in the
    // published per-degree order; placement_ok is the exact local check.
    auto greedy = [&](int eid) {
        if (c.colors[eid] != 0) return;  // pre-colored or repeated entry
        for (int col = 1; col <= base; ++col) {
            c.colors[eid] = col;
            if (placement_ok(g, c.colors, eid)) return;
        }
        c.colors[eid] = 0;
        throw error(errc::construction_failed,
                    "color_complete_halin: no base color fits a group edge");
    };
    for (const auto& grp : groups) {
        const int j = static_cast<int>(grp.size());
        auto eid = [&](int a1, int b1) {  // 1-based positions in the group
            return g.edge_id(grp[a1 - 1], grp[b1 - 1]);
        };
        std::vector<int> order;
        if (j == 2) {
            order = {eid(1, 2)};
        } else if (j == 3) {
            order = {eid(1, 2), eid(2, 3)};
        } else if (j == 4) {
            order = {eid(1, 2), eid(3, 4), eid(2, 3)};
        } else {
            c.colors[eid(j - 3, j - 2)] = c0;
            order = {eid(1, 2), eid(j - 1, j), eid(2, 3)};
            for (int mm = 3; mm <= j - 2; ++mm) order.push_back(eid(mm, mm + 1));
            order.push_back(eid(j - 2, j - 1));
        }
        for (int e : order) greedy(e);
    }
    return detail::finalize_colorer(g, std::move(c), c0,
                                    "color_complete_halin");
}

}  // namespace starcolor

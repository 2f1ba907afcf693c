#include <map>
#include <utility>
#include <vector>

#include "colorer_util.hpp"
#include "starcolor/colorers.hpp"
#include "starcolor/families.hpp"
#include "starcolor/verify.hpp"

namespace starcolor {
namespace {

// Star 3-coloring of a cycle as a color sequence over edge positions
// (i, i+1 mod n): blocks (1,2,3) then n%3 copies of (1,2,1,3).  Every four
// consecutive entries show all three colors, so no window is 2-colored.
// Derived once with the exact solver and frozen; impossible at n = 5.
std::vector<int> cycle3_sequence(int n) {
    static const int kRainbow[3] = {1, 2, 3};
    static const int kZigzag[4] = {1, 2, 1, 3};
    const int b = n % 3;
    const int a = (n - 4 * b) / 3;
    std::vector<int> seq;
    seq.reserve(n);
    for (int i = 0; i < a; ++i) seq.insert(seq.end(), kRainbow, kRainbow + 3);
    for (int i = 0; i < b; ++i) seq.insert(seq.end(), kZigzag, kZigzag + 4);
    return seq;
}

// Color sequence over the outer-cycle edge positions of C_n^2 whose every
// cyclic window of four consecutive entries is rainbow; that is exactly the
// restricted strong condition, because two outer edges conflict iff their
// positions are at cyclic distance <= 3.  Blocks (1,2,3,4,5) then
// (5 - n%5) % 5 copies of (1,2,3,4); frozen like the 3-color sequence.
// Infeasible only at odd n in {7, 11}, which the callers special-case.
std::vector<int> strong5_sequence(int n) {
    static const int kFive[5] = {1, 2, 3, 4, 5};
    static const int kFour[4] = {1, 2, 3, 4};
    const int a = (5 - n % 5) % 5;
    const int b = (n - 4 * a) / 5;
    if (b < 0)
        throw error(errc::bad_params,
                    "no rainbow-window 5-sequence of length " + std::to_string(n));
    std::vector<int> seq;
    seq.reserve(n);
    for (int i = 0; i < b; ++i) seq.insert(seq.end(), kFive, kFive + 5);
    for (int i = 0; i < a; ++i) seq.insert(seq.end(), kFour, kFour + 4);
    return seq;
}

using EdgeMap = std::map<std::pair<int, int>, int>;

void put(EdgeMap& m, int a, int b, int color) {
    if (a > b) std::swap(a, b);
    m[{a, b}] = color;
}

EdgeColoring from_map(const Graph& g, const EdgeMap& m) {
    EdgeColoring c = EdgeColoring::uncolored(g);
    for (int e = 0; e < g.edge_count(); ++e) c.colors[e] = m.at(g.edge(e));
    return c;
}

// Fixed tables transcribed from the worked examples for C_7^2, C_10^2 and
// C_11^2: outer colors by edge (i, i+1), inner colors along the chord walk.
EdgeMap cycle_square_fixed(int n) {
    EdgeMap m;
    if (n == 7) {
        for (int i = 0; i < 7; ++i) put(m, i, (i + 1) % 7, i + 1);
        const int walk[7] = {0, 2, 4, 6, 1, 3, 5};
        const int inner[7] = {4, 6, 1, 3, 5, 7, 2};
        for (int t = 0; t < 7; ++t)
            put(m, walk[t], walk[(t + 1) % 7], inner[t]);
    } else if (n == 10) {
        const int outer[10] = {1, 2, 3, 1, 2, 3, 1, 2, 3, 2};
        for (int i = 0; i < 10; ++i) put(m, i, (i + 1) % 10, outer[i]);
        const int even_walk[5] = {0, 2, 4, 6, 8};
        const int even_col[5] = {4, 5, 6, 7, 5};
        const int odd_walk[5] = {1, 3, 5, 7, 9};
        const int odd_col[5] = {7, 8, 4, 8, 6};
        for (int t = 0; t < 5; ++t) {
            put(m, even_walk[t], even_walk[(t + 1) % 5], even_col[t]);
            put(m, odd_walk[t], odd_walk[(t + 1) % 5], odd_col[t]);
        }
    } else {  // n == 11
        const int outer[11] = {1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 4};
        for (int i = 0; i < 11; ++i) put(m, i, (i + 1) % 11, outer[i]);
        const int walk[11] = {0, 2, 4, 6, 8, 10, 1, 3, 5, 7, 9};
        const int inner[11] = {5, 4, 6, 4, 7, 6, 7, 8, 5, 8, 9};
        for (int t = 0; t < 11; ++t)
            put(m, walk[t], walk[(t + 1) % 11], inner[t]);
    }
    return m;
}

}  // namespace

EdgeColoring star_color_cycle(int n, int palette_offset) {
    if (n < 3)
        throw error(errc::bad_params, "star_color_cycle: need n >= 3");
    if (n == 5)
        throw error(errc::n_is_five,
                    "C_5 has no star 3-coloring (it needs four colors)");
    Graph g = cycle_graph(n);
    auto seq = cycle3_sequence(n);
    EdgeColoring c = EdgeColoring::uncolored(g);
    for (int i = 0; i < n; ++i)
        c.colors[g.edge_id(i, (i + 1) % n)] = seq[i] + palette_offset;
    return detail::finalize_colorer(g, std::move(c), palette_offset + 3,
                                    "star_color_cycle");
}

EdgeColoring color_path_square(int n) {
    if (n < 3)
        throw error(errc::bad_params, "color_path_square: need n >= 3");
    Graph g = path_square(n);
    if (n == 3) {
        EdgeColoring c(std::vector<int>{1, 2, 3});
        return detail::finalize_colorer(g, std::move(c), 3, "color_path_square");
    }
    if (n == 4) {
        EdgeMap m;
        put(m, 0, 1, 1);
        put(m, 0, 2, 4);
        put(m, 1, 2, 2);
        put(m, 1, 3, 4);
        put(m, 2, 3, 3);
        return detail::finalize_colorer(g, from_map(g, m), 4,
                                        "color_path_square");
    }

    // Partition: H is the matching of path edges with odd left endpoint,
    // colored 5,6 alternating; the rest is a ladder-shaped graph F (rows =
    // vertex parity, columns = position/2) star-colored with the frozen
    // period-4 tables below (derived with the exact solver).
    static const int kTop[4] = {1, 2, 3, 4};     // (2j, 2j+2)
    static const int kBottom[4] = {2, 3, 4, 1};  // (2j+1, 2j+3)
    static const int kRung[4] = {3, 4, 1, 2};    // (2j, 2j+1)
    PartitionSpec spec;
    EdgeColoring f = EdgeColoring::uncolored(g), h = EdgeColoring::uncolored(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        if (b - a == 2) {
            spec.f_edges.push_back(e);
            f.colors[e] = (a % 2 == 0) ? kTop[(a / 2) % 4]
                                       : kBottom[((a - 1) / 2) % 4];
        } else if (a % 2 == 0) {
            spec.f_edges.push_back(e);
            f.colors[e] = kRung[(a / 2) % 4];
        } else {
            spec.h_edges.push_back(e);
            h.colors[e] = 5 + ((a - 1) / 2) % 2;
        }
    }
    EdgeColoring merged = compose_partition(g, spec, f, h);
    merged = detail::finalize_colorer(g, std::move(merged), 6,
                                      "color_path_square");
    if (merged.color_count() != 6)
        throw error(errc::construction_failed,
                    "color_path_square: expected exactly 6 colors");
    return merged;
}

EdgeColoring color_cycle_square(int n) {
    if (n < 5)
        throw error(errc::bad_params, "color_cycle_square: need n >= 5");
    Graph g = cycle_square(n);

    if (n == 5) {
        // C_5^2 = K_5; table produced by the exact solver (9 colors, the
        // only non-rainbow pair being two independent edges).
        EdgeColoring c(std::vector<int>{1, 2, 3, 4, 3, 5, 6, 7, 8, 9});
        return detail::finalize_colorer(g, std::move(c), 9,
                                        "color_cycle_square");
    }
    if (n == 7 || n == 10 || n == 11)
        return detail::finalize_colorer(g, from_map(g, cycle_square_fixed(n)),
                                        9, "color_cycle_square");

    if (n % 2 == 0) {
        // Outer Hamiltonian cycle on {1,2,3}; the chords split into two
        // n/2-cycles, star-colored on disjoint palettes {4,5,6} and {7,8,9}.
        // n = 10 is fixed above because its chord cycles have length five.
        EdgeMap m;
        auto outer = cycle3_sequence(n);
        for (int i = 0; i < n; ++i) put(m, i, (i + 1) % n, outer[i]);
        auto inner = cycle3_sequence(n / 2);
        for (int par = 0; par < 2; ++par)
            for (int t = 0; t < n / 2; ++t)
                put(m, (par + 2 * t) % n, (par + 2 * t + 2) % n,
                    inner[t] + 3 * (par + 1));
        return detail::finalize_colorer(g, from_map(g, m), 9,
                                        "color_cycle_square");
    }

    // Odd n: the chords form one Hamiltonian cycle (F, star 3-colored on
    // {6,7,8}) and the outer cycle is the H part (restricted-strong on
    // {1..5}), merged by the partition rule.  n in {7, 11} is fixed above:
    // no rainbow-window 5-sequence exists at those lengths.
    PartitionSpec spec;
    EdgeColoring f = EdgeColoring::uncolored(g), h = EdgeColoring::uncolored(g);
    auto outer = strong5_sequence(n);
    for (int i = 0; i < n; ++i) {
        int e = g.edge_id(i, (i + 1) % n);
        spec.h_edges.push_back(e);
        h.colors[e] = outer[i];
    }
    auto inner = cycle3_sequence(n);
    for (int t = 0; t < n; ++t) {
        int e = g.edge_id((2 * t) % n, (2 * t + 2) % n);
        spec.f_edges.push_back(e);
        f.colors[e] = inner[t] + 5;
    }
    EdgeColoring merged = compose_partition(g, spec, f, h);
    return detail::finalize_colorer(g, std::move(merged), 8,
                                    "color_cycle_square");
}

}  // namespace starcolor

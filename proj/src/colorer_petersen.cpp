#include <vector>

#include "colorer_util.hpp"
#include "starcolor/colorers.hpp"
#include "starcolor/families.hpp"

namespace starcolor {

PetersenPartition petersen_partition(const Graph& p, int n) {
    const int m = 3 * n;
    if (n < 1 || p.order() != 2 * m)
        throw error(errc::bad_params,
                    "petersen_partition: graph is not P(3n, n) for this n");
    PetersenPartition part;
    for (int i = 0; i < m; ++i) {
        part.outer.push_back(p.edge_id(i, (i + 1) % m));
        part.triangle.push_back(p.edge_id(m + i, m + (i + n) % m));
        part.spoke.push_back(p.edge_id(i, m + i));
        if (part.outer[i] < 0 || part.triangle[i] < 0 || part.spoke[i] < 0)
            throw error(errc::bad_params,
                        "petersen_partition: missing expected edge");
    }
    return part;
}

namespace {

// Fills [lo, hi] with `pat` cycling from lo: position i gets
// pat[(i - lo) % |pat|].
void fill_range(std::vector<int>& out, int lo, int hi,
                std::initializer_list<int> pat) {
    const int len = static_cast<int>(pat.size());
    const int* p = pat.begin();
    for (int i = lo; i <= hi; ++i) out[i] = p[(i - lo) % len];
}

// Outer-cycle colors by edge position, following the published case split
// on (n mod 3, parity of n) with its endpoint overrides.
std::vector<int> outer_colors(int n) {
    const int m = 3 * n;
    std::vector<int> f(m, 0);
    const int r = n % 3;
    const bool odd = n % 2 == 1;
    if (r == 0 && odd) {
        fill_range(f, 0, 2 * n - 4, {3, 2, 1});
        f[2 * n - 3] = 2;
        f[2 * n - 2] = 3;
        f[2 * n - 1] = 2;
        fill_range(f, 2 * n, 3 * n - 1, {5, 4, 2});
    } else if (r == 0) {
        fill_range(f, 0, 2 * n - 1, {1, 3, 2, 3});
        fill_range(f, 2 * n, 3 * n - 1, {5, 4, 2});
    } else if (r == 1 && odd) {
        fill_range(f, 0, n - 2, {2, 1, 3});
        f[n - 1] = 1;
        fill_range(f, n, 2 * n - 3, {2, 1, 3});
        f[2 * n - 2] = 2;
        f[2 * n - 1] = 3;
        fill_range(f, 2 * n, 3 * n - 3, {4, 5, 2});
        f[3 * n - 2] = 4;
        f[3 * n - 1] = 3;
    } else if (r == 1) {
        fill_range(f, 0, 2 * n - 1, {2, 3, 1});
        fill_range(f, 2 * n, 3 * n - 2, {5, 2, 4});
        f[3 * n - 1] = 1;
    } else if (odd) {  // r == 2
        fill_range(f, 0, 2 * n - 1, {3, 1, 2});
        fill_range(f, 2 * n, 3 * n - 1, {4, 2, 5});
    } else {
        fill_range(f, 0, 2 * n - 2, {1, 3, 2});
        f[2 * n - 1] = 3;
        fill_range(f, 2 * n, 3 * n - 4, {5, 2, 4});
        f[3 * n - 3] = 5;
        f[3 * n - 2] = 4;
        f[3 * n - 1] = 2;
    }
    return f;
}

}  // namespace

EdgeColoring color_petersen_3n(int n, spoke_scheme scheme) {
    if (n < 2)
        throw error(errc::bad_params, "color_petersen_3n: need n >= 2");
    Graph g = petersen_3n(n);

    if (n == 2) {
        // P(6, 2): all six spokes share one color; produced by the exact
        // solver and frozen (edge order: outer, spokes, chords).
        EdgeColoring c(std::vector<int>{1, 2, 5, 2, 4, 2, 3, 3, 3, 3, 3, 3, 4,
                                        4, 1, 1, 5, 5});
        return detail::finalize_colorer(g, std::move(c), 5,
                                        "color_petersen_3n");
    }

    const int m = 3 * n;
    auto part = petersen_partition(g, n);
    EdgeColoring c = EdgeColoring::uncolored(g);

    // Triangles: (4,3,2) along increasing subscripts for even i, (5,2,1)
    // for odd i; triangle i owns positions i, i+n, i+2n.
    for (int i = 0; i < n; ++i) {
        const int even_pat[3] = {4, 3, 2};
        const int odd_pat[3] = {5, 2, 1};
        const int* pat = (i % 2 == 0) ? even_pat : odd_pat;
        c.colors[part.triangle[i]] = pat[0];
        c.colors[part.triangle[i + n]] = pat[1];
        c.colors[part.triangle[i + 2 * n]] = pat[2];
    }

    // Spokes: 5,4 alternating over the first two thirds (restarted at i = n
    // for odd n under the literal reading), then 1,3 over the last third.
    for (int i = 0; i < 2 * n; ++i) {
        int phase = (n % 2 == 1 && scheme == spoke_scheme::restart && i >= n)
                        ? (i - n) % 2
                        : i % 2;
        c.colors[part.spoke[i]] = (phase == 0) ? 5 : 4;
    }
    for (int i = 2 * n; i < m; ++i)
        c.colors[part.spoke[i]] = ((i - 2 * n) % 2 == 0) ? 1 : 3;

    auto outer = outer_colors(n);
    for (int i = 0; i < m; ++i) c.colors[part.outer[i]] = outer[i];

    c = detail::finalize_colorer(g, std::move(c), 5, "color_petersen_3n");
    if (c.color_count() != 5)
        throw error(errc::construction_failed,
                    "color_petersen_3n: expected exactly 5 colors");
    return c;
}

}  // namespace starcolor

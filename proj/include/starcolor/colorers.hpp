#pragma once

#include <vector>

#include "starcolor/graph.hpp"
#include "starcolor/halin.hpp"

namespace starcolor {

// Edge-id partition of P(3n, n) into the outer cycle, the inner triangles,
// and the spokes; every vector is indexed by i = 0..3n-1.
struct PetersenPartition {
  std::vector<int> outer;     // id of u_i u_{i+1}
  std::vector<int> triangle;  // id of v_i v_{i+n}
  std::vector<int> spoke;     // id of u_i v_i
};

PetersenPartition petersen_partition(const Graph& p, int n);

// Complementary edge-id sets of a host graph.
struct PartitionSpec {
  std::vector<int> f_edges;
  std::vector<int> h_edges;
};

// Merge a star-valid coloring of the F part with a restricted-strong-valid
// coloring of the H part (disjoint palettes) into one total coloring of the
// host.  Both inputs may be sized over all host edges (ignored entries 0) or
// positionally over their id list.  The merged coloring is returned without
// a final star check: disjoint palettes plus the restricted strong rule on
// the H part rule out every mixed two-colored window, and callers verify
// rather than trust.
EdgeColoring compose_partition(const Graph& host, const PartitionSpec& spec,
                               const EdgeColoring& f_coloring,
                               const EdgeColoring& h_coloring);

// Star 3-coloring of C_n (n >= 3, n != 5) on palette {offset+1..offset+3}.
EdgeColoring star_color_cycle(int n, int palette_offset = 0);

// P_n^2 (n >= 3): 3 colors at n=3, 4 at n=4, exactly 6 for n >= 5.
EdgeColoring color_path_square(int n);

// C_n^2 (n >= 5): 9 colors at n=5 (K_5); fixed tables at n = 7, 10, 11;
// <= 9 for even n; <= 8 for the remaining odd n.
EdgeColoring color_cycle_square(int n);

// Spoke-block reading for P(3n, n) with odd n: restart begins the 5,4
// alternation anew at i = n; continuous runs one alternation over 0..2n-1.
// Only restart validates for odd n (continuous repeats a triangle color on
// the spoke at every even-indexed triangle), so restart is the default;
// for even n the two readings coincide.
enum class spoke_scheme { restart, continuous };

// P(3n, n), n >= 2: exactly 5 colors.
EdgeColoring color_petersen_3n(int n,
                               spoke_scheme scheme = spoke_scheme::restart);

// Cubic Halin graphs: <= 6 colors.  Cycle length <= 5 is solved exactly;
// larger instances reduce along a longest tree path and re-extend.
EdgeColoring color_cubic_halin(const HalinGraph& hg);

// Necklace with odd h: <= 5 colors (h in {1,3} via fixed tables, h >= 5 via
// the periodic scheme).  Even h raises even_h: those are still cubic Halin
// graphs, so callers fall back to color_cubic_halin.
EdgeColoring color_necklace_odd(int h);

// Complete Halin graphs (all leaves at one depth), Delta >= 6, not a wheel:
// <= floor(3*Delta/2) + 1 colors.
EdgeColoring color_complete_halin(const HalinGraph& hg);

}  // namespace starcolor

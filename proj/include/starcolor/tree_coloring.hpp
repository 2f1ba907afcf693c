#pragma once

#include "starcolor/graph.hpp"

namespace starcolor {

// Star edge-coloring of a tree using at most floor(3*Delta/2) colors from
// {1..floor(3*Delta/2)}.  Deterministic; the output is re-validated before
// being returned.
//
// Scheme: root the tree at its lowest-id leaf and color each vertex's child
// edges in BFS order.  A vertex v with parent u draws child colors from
//   - colors absent at u ("fresh"),
//   - colors of sibling edges v is allowed to mirror, granted by an
//     antisymmetric round-robin among u's children (if v may mirror w's
//     color, w may not mirror v's), and
//   - the grandparent edge color, but only when v's own edge color was
//     fresh at its grandparent (otherwise a mirrored color one level up
//     could complete a two-colored 4-path through that edge).
// Children whose future pool would come up short are served fresh colors
// first, which unlocks the grandparent slot for them when their turn comes.
EdgeColoring tree_star_coloring(const Graph& t);

}  // namespace starcolor

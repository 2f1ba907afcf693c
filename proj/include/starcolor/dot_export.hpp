#pragma once

#include <optional>
#include <string>

#include "starcolor/graph.hpp"

namespace starcolor {

// Renders g as Graphviz DOT.  With a coloring, every edge carries a `label`
// attribute holding the integer color and a `color` attribute drawn from a
// fixed 12-entry palette cycled by color index; without one, edges are bare.
// The coloring must be total and aligned with g (COLORING_SIZE_MISMATCH /
// UNCOLORED_EDGE otherwise).  Vertex labels from the graph, when present,
// become node label attributes.
std::string export_dot(const Graph& g,
                       const std::optional<EdgeColoring>& c = std::nullopt);

}  // namespace starcolor

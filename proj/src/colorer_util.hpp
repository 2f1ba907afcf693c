#pragma once

#include <string>

#include "starcolor/graph.hpp"
#include "starcolor/verify.hpp"

namespace starcolor {
namespace detail {

// Shared self-validation: every colorer runs its output through the real
// star check before returning, so an invalid coloring can never escape.
inline EdgeColoring finalize_colorer(const Graph& g, EdgeColoring c,
                                     int max_colors, const char* who) {
    if (auto bad = check_star(g, c)) {
        std::string msg = std::string(who) + ": output failed validation (";
        msg += violation_kind_name(bad->kind);
        msg += " at vertices";
        for (int v : bad->vertices) msg += " " + std::to_string(v);
        msg += ")";
        throw error(errc::construction_failed, msg);
    }
    if (c.max_color() > max_colors)
        throw error(errc::construction_failed,
                    std::string(who) + ": used more than " +
                        std::to_string(max_colors) + " colors");
    return c;
}

}  // namespace detail
}  // namespace starcolor

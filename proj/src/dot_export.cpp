#include "starcolor/dot_export.hpp"

#include <array>
#include <sstream>

namespace starcolor {

namespace {

// Categorical palette; color k paints with entry (k-1) mod 12.
constexpr std::array<const char*, 12> kPalette = {
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4",
    "#f032e6", "#9a6324", "#808000", "#469990", "#800000", "#000075",
};

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string export_dot(const Graph& g, const std::optional<EdgeColoring>& c) {
    if (c) {
        if (c->colors.size() != static_cast<size_t>(g.edge_count()))
            throw error(errc::coloring_size_mismatch,
                        "coloring covers " + std::to_string(c->colors.size()) +
                            " edges, graph has " +
                            std::to_string(g.edge_count()));
        if (!c->total())
            throw error(errc::uncolored_edge,
                        "export needs a total coloring");
    }

    std::ostringstream out;
    out << "graph G {\n";
    out << "  node [shape=circle];\n";
    const auto& labels = g.labels();
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (!labels.empty() && !labels[v].empty())
            out << " [label=" << quote(labels[v]) << "]";
        out << ";\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        out << "  " << a << " -- " << b;
        if (c) {
            int col = c->colors[e];
            out << " [label=" << col << ", color=\""
                << kPalette[(col - 1) % kPalette.size()] << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace starcolor

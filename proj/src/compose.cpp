#include <algorithm>
#include <set>
#include <vector>

#include "starcolor/colorers.hpp"
#include "starcolor/verify.hpp"

namespace starcolor {
namespace {

// Normalizes a part coloring to host size: input is either already
// host-sized or positional over `ids`.
std::vector<int> spread(const Graph& host, const std::vector<int>& ids,
                        const EdgeColoring& c, const char* part) {
    const size_t m = static_cast<size_t>(host.edge_count());
    std::vector<int> out(m, 0);
    if (c.colors.size() == m) {
        for (int id : ids) out[id] = c.colors[id];
    } else if (c.colors.size() == ids.size()) {
        for (size_t i = 0; i < ids.size(); ++i) out[ids[i]] = c.colors[i];
    } else {
        throw error(errc::coloring_size_mismatch,
                    std::string("compose_partition: ") + part +
                        " coloring matches neither the host nor its part");
    }
    for (int id : ids)
        if (out[id] <= 0)
            throw error(errc::subcoloring_invalid,
                        std::string("compose_partition: uncolored edge in ") +
                            part + " part");
    return out;
}

}  // namespace

EdgeColoring compose_partition(const Graph& host, const PartitionSpec& spec,
                               const EdgeColoring& f_coloring,
                               const EdgeColoring& h_coloring) {
    const int m = host.edge_count();
    std::vector<char> mark(m, 0);
    for (int id : spec.f_edges) {
        if (id < 0 || id >= m || mark[id])
            throw error(errc::not_a_partition,
                        "compose_partition: bad or repeated edge id in F");
        mark[id] = 1;
    }
    for (int id : spec.h_edges) {
        if (id < 0 || id >= m || mark[id])
            throw error(errc::not_a_partition,
                        "compose_partition: H overlaps F or repeats an id");
        mark[id] = 2;
    }
    if (std::count(mark.begin(), mark.end(), 0) != 0)
        throw error(errc::not_a_partition,
                    "compose_partition: F and H do not cover the host");

    auto f = spread(host, spec.f_edges, f_coloring, "F");
    auto h = spread(host, spec.h_edges, h_coloring, "H");

    std::set<int> f_palette, h_palette;
    for (int id : spec.f_edges) f_palette.insert(f[id]);
    for (int id : spec.h_edges) h_palette.insert(h[id]);
    for (int c : h_palette)
        if (f_palette.count(c))
            throw error(errc::palettes_overlap,
                        "compose_partition: color " + std::to_string(c) +
                            " appears in both parts");

    // F must be star-valid as a standalone subgraph on the host's vertices.
    std::vector<std::pair<int, int>> f_edge_list;
    EdgeColoring f_part;
    for (int id : spec.f_edges) {
        f_edge_list.push_back(host.edge(id));
        f_part.colors.push_back(f[id]);
    }
    Graph f_graph(host.order(), f_edge_list);
    if (auto bad = check_star(f_graph, f_part))
        throw error(errc::subcoloring_invalid,
                    std::string("compose_partition: F part is not star-valid (") +
                        violation_kind_name(bad->kind) + ")");

    // H must be restricted-strong against the full host.
    if (auto bad = check_restricted_strong(host, spec.h_edges, EdgeColoring(h)))
        throw error(errc::subcoloring_invalid,
                    "compose_partition: H part breaks the restricted strong rule");

    EdgeColoring merged;
    merged.colors.assign(m, 0);
    for (int id : spec.f_edges) merged.colors[id] = f[id];
    for (int id : spec.h_edges) merged.colors[id] = h[id];
    return merged;
}

}  // namespace starcolor

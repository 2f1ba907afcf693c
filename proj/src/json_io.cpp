#include "starcolor/json_io.hpp"

#include <fstream>
#include <utility>

namespace starcolor {

namespace {

const json* find(const json& j, const char* key) {
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw error(errc::parse_error, std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<std::pair<int, int>> read_pair_list(const json& j,
                                                const char* what) {
    if (!j.is_array())
        throw error(errc::parse_error, std::string(what) + " must be an array");
    std::vector<std::pair<int, int>> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2)
            throw error(errc::parse_error,
                        std::string(what) + " entries must be [u, v] pairs");
        out.emplace_back(require_int(item[0], what), require_int(item[1], what));
    }
    return out;
}

json pair_list_to_json(const std::vector<std::pair<int, int>>& pairs) {
    json arr = json::array();
    for (auto [a, b] : pairs) arr.push_back(json::array({a, b}));
    return arr;
}

FamilyMeta family_from_json(const json& j) {
    if (!j.is_object())
        throw error(errc::parse_error, "family must be an object");
    const json* name = find(j, "name");
    if (!name || !name->is_string())
        throw error(errc::parse_error, "family.name must be a string");
    FamilyMeta meta;
    meta.name = name->get<std::string>();
    if (const json* n = find(j, "n")) meta.n = require_int(*n, "family.n");
    if (const json* h = find(j, "h")) meta.h = require_int(*h, "family.h");
    if (const json* t = find(j, "tree_edges"))
        meta.halin_tree = read_pair_list(*t, "family.tree_edges");
    if (const json* r = find(j, "root"))
        meta.halin_root = require_int(*r, "family.root");
    if (const json* c = find(j, "cycle")) {
        if (!c->is_array())
            throw error(errc::parse_error, "family.cycle must be an array");
        std::vector<int> order;
        for (const auto& v : *c) order.push_back(require_int(v, "family.cycle"));
        meta.halin_cycle = std::move(order);
    }
    return meta;
}

json family_to_json(const FamilyMeta& meta) {
    json j;
    j["name"] = meta.name;
    if (meta.n) j["n"] = *meta.n;
    if (meta.h) j["h"] = *meta.h;
    if (meta.halin_tree) j["tree_edges"] = pair_list_to_json(*meta.halin_tree);
    if (meta.halin_root) j["root"] = *meta.halin_root;
    if (meta.halin_cycle) j["cycle"] = json(*meta.halin_cycle);
    return j;
}

}  // namespace

json graph_to_json(const GraphDocument& doc) {
    const Graph& g = doc.graph;
    json j;
    j["order"] = g.order();
    j["edges"] = pair_list_to_json(g.edges());
    if (!g.labels().empty()) {
        json labels = json::object();
        for (int v = 0; v < g.order(); ++v) {
            if (!g.labels()[v].empty())
                labels[std::to_string(v)] = g.labels()[v];
        }
        if (!labels.empty()) j["labels"] = std::move(labels);
    }
    if (doc.family) j["family"] = family_to_json(*doc.family);
    return j;
}

GraphDocument graph_from_json(const json& j) {
    if (!j.is_object())
        throw error(errc::parse_error, "graph document must be an object");
    const json* order = find(j, "order");
    if (!order) throw error(errc::parse_error, "missing \"order\"");
    const json* edges = find(j, "edges");
    if (!edges) throw error(errc::parse_error, "missing \"edges\"");

    GraphDocument doc;
    doc.graph = build_graph(require_int(*order, "order"),
                            read_pair_list(*edges, "edges"));

    if (const json* labels = find(j, "labels")) {
        if (!labels->is_object())
            throw error(errc::parse_error, "labels must be an object");
        std::vector<std::string> table(doc.graph.order());
        for (auto it = labels->begin(); it != labels->end(); ++it) {
            int v;
            try {
                size_t used = 0;
                v = std::stoi(it.key(), &used);
                if (used != it.key().size()) throw std::invalid_argument(it.key());
            } catch (const std::exception&) {
                throw error(errc::parse_error,
                            "label key is not a vertex id: " + it.key());
            }
            if (v < 0 || v >= doc.graph.order())
                throw error(errc::vertex_out_of_range,
                            "label key out of range: " + it.key());
            if (!it.value().is_string())
                throw error(errc::parse_error, "label values must be strings");
            table[v] = it.value().get<std::string>();
        }
        doc.graph.set_labels(std::move(table));
    }

    if (const json* family = find(j, "family"))
        doc.family = family_from_json(*family);
    return doc;
}

json coloring_to_json(const EdgeColoring& c) {
    if (!c.total())
        throw error(errc::uncolored_edge,
                    "refusing to serialize a partial coloring");
    json j;
    j["colors"] = json(c.colors);
    return j;
}

EdgeColoring coloring_from_json(const json& j, const Graph& g) {
    if (!j.is_object())
        throw error(errc::parse_error, "coloring document must be an object");
    const json* colors = find(j, "colors");
    if (!colors || !colors->is_array())
        throw error(errc::parse_error, "missing \"colors\" array");
    if (static_cast<int>(colors->size()) != g.edge_count())
        throw error(errc::coloring_size_mismatch,
                    "expected " + std::to_string(g.edge_count()) +
                        " colors, got " + std::to_string(colors->size()));
    EdgeColoring c;
    c.colors.reserve(colors->size());
    for (const auto& v : *colors) {
        int col = require_int(v, "colors");
        if (col < 1)
            throw error(errc::uncolored_edge,
                        "serialized colorings must be total (entry " +
                            v.dump() + ")");
        c.colors.push_back(col);
    }
    return c;
}

json violation_to_json(const StarViolation& v, const Graph& g) {
    json j;
    j["kind"] = violation_kind_name(v.kind);
    j["vertices"] = json(v.vertices);
    j["edge_ids"] = json(v.edge_ids);
    json edges = json::array();
    for (int e : v.edge_ids) {
        auto [a, b] = g.edge(e);
        edges.push_back(json::array({a, b}));
    }
    j["edges"] = std::move(edges);
    j["colors"] = json(v.colors);
    return j;
}

GraphDocument load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::io_error, "cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw error(errc::parse_error, path + ": " + e.what());
    }
    return graph_from_json(j);
}

void save_graph_file(const std::string& path, const GraphDocument& doc) {
    std::ofstream out(path);
    if (!out) throw error(errc::io_error, "cannot write " + path);
    out << graph_to_json(doc).dump(2) << '\n';
    if (!out) throw error(errc::io_error, "short write to " + path);
}

EdgeColoring load_coloring_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw error(errc::io_error, "cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw error(errc::parse_error, path + ": " + e.what());
    }
    return coloring_from_json(j, g);
}

void save_coloring_file(const std::string& path, const EdgeColoring& c) {
    std::ofstream out(path);
    if (!out) throw error(errc::io_error, "cannot write " + path);
    out << coloring_to_json(c).dump(2) << '\n';
    if (!out) throw error(errc::io_error, "short write to " + path);
}

HalinGraph halin_from_document(const GraphDocument& doc) {
    if (!doc.family || !doc.family->halin_tree || !doc.family->halin_root ||
        !doc.family->halin_cycle)
        throw error(errc::wrong_family,
                    "document carries no Halin structure metadata");
    return HalinGraph(doc.graph, *doc.family->halin_tree,
                      *doc.family->halin_root, *doc.family->halin_cycle);
}

}  // namespace starcolor

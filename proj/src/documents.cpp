#include "starcolor/documents.hpp"

namespace starcolor {

namespace {

GraphDocument tagged(Graph g, FamilyMeta meta) {
    GraphDocument doc;
    doc.graph = std::move(g);
    doc.family = std::move(meta);
    return doc;
}

FamilyMeta meta_n(const char* name, int n) {
    FamilyMeta meta;
    meta.name = name;
    meta.n = n;
    return meta;
}

FamilyMeta with_halin(FamilyMeta meta, const HalinGraph& hg) {
    meta.halin_tree = hg.tree_edges();
    meta.halin_root = hg.root();
    meta.halin_cycle = hg.cycle_order();
    return meta;
}

}  // namespace

GraphDocument path_document(int n) {
    return tagged(path_graph(n), meta_n("path", n));
}

GraphDocument cycle_document(int n) {
    return tagged(cycle_graph(n), meta_n("cycle", n));
}

GraphDocument path_square_document(int n) {
    return tagged(path_square(n), meta_n("path-square", n));
}

GraphDocument cycle_square_document(int n) {
    return tagged(cycle_square(n), meta_n("cycle-square", n));
}

GraphDocument petersen3n_document(int n) {
    Graph g = petersen_3n(n);
    std::vector<std::string> labels(g.order());
    for (int i = 0; i < 3 * n; ++i) {
        labels[i] = "u_" + std::to_string(i);
        labels[3 * n + i] = "v_" + std::to_string(i);
    }
    g.set_labels(std::move(labels));
    return tagged(std::move(g), meta_n("petersen3n", n));
}

GraphDocument necklace_document(int h) {
    HalinGraph hg = necklace(h);
    Graph g = hg.graph();
    std::vector<std::string> labels(g.order());
    for (int i = 0; i <= h + 1; ++i) labels[i] = std::to_string(i);
    for (int i = 1; i <= h; ++i) labels[h + 1 + i] = std::to_string(i) + "'";
    g.set_labels(std::move(labels));
    FamilyMeta meta;
    meta.name = "necklace";
    meta.h = h;
    return tagged(std::move(g), with_halin(std::move(meta), hg));
}

GraphDocument random_cubic_halin_document(int leaves, std::uint64_t seed) {
    HalinGraph hg = random_cubic_halin(leaves, seed);
    FamilyMeta meta;
    meta.name = "random-cubic-halin";
    meta.n = leaves;
    return tagged(hg.graph(), with_halin(std::move(meta), hg));
}

GraphDocument complete_halin_document(const CompleteHalinSpec& spec) {
    HalinGraph hg = complete_halin(spec);
    FamilyMeta meta;
    meta.name = "complete-halin";
    return tagged(hg.graph(), with_halin(std::move(meta), hg));
}

GraphDocument wheel_document(int n) {
    return tagged(wheel(n), meta_n("wheel", n));
}

GraphDocument complete_document(int n) {
    return tagged(complete_graph(n), meta_n("complete", n));
}

GraphDocument net_document() {
    FamilyMeta meta;
    meta.name = "net";
    return tagged(net_graph(), std::move(meta));
}

GraphDocument fan3_document() {
    FamilyMeta meta;
    meta.name = "fan3";
    return tagged(fan3_graph(), std::move(meta));
}

GraphDocument h0_document() {
    FamilyMeta meta;
    meta.name = "h0";
    return tagged(h0_graph(), std::move(meta));
}

}  // namespace starcolor

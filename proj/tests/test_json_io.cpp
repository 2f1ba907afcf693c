#include <doctest.h>

#include <cstdio>
#include <functional>

#include "starcolor/families.hpp"
#include "starcolor/json_io.hpp"
#include "starcolor/verify.hpp"

using namespace starcolor;

namespace {

errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    REQUIRE(false);
    return errc::io_error;
}

}  // namespace

TEST_CASE("graph documents round-trip") {
    GraphDocument doc;
    doc.graph = complete_graph(4);
    FamilyMeta meta;
    meta.name = "complete";
    meta.n = 4;
    doc.family = meta;

    auto back = graph_from_json(graph_to_json(doc));
    CHECK(back.graph.order() == 4);
    CHECK(back.graph.edges() == doc.graph.edges());
    REQUIRE(back.family.has_value());
    CHECK(back.family->name == "complete");
    CHECK(back.family->n == 4);
    CHECK_FALSE(back.family->h.has_value());
    CHECK_FALSE(back.family->halin_tree.has_value());
}

TEST_CASE("field order in the input is free") {
    auto j = json::parse(R"({"edges": [[1, 0], [1, 2]], "order": 3})");
    auto doc = graph_from_json(j);
    CHECK(doc.graph.order() == 3);
    CHECK(doc.graph.edge_count() == 2);
    // Canonical storage: smaller endpoint first.
    CHECK(doc.graph.edge(0) == std::pair<int, int>(0, 1));
    CHECK_FALSE(doc.family.has_value());
}

TEST_CASE("labels: partial maps survive a round-trip") {
    auto j = json::parse(
        R"({"order": 3, "edges": [[0,1],[1,2]], "labels": {"1": "mid"}})");
    auto doc = graph_from_json(j);
    REQUIRE(doc.graph.labels().size() == 3);
    CHECK(doc.graph.labels()[0].empty());
    CHECK(doc.graph.labels()[1] == "mid");

    auto out = graph_to_json(doc);
    REQUIRE(out.contains("labels"));
    CHECK(out["labels"].size() == 1);
    CHECK(out["labels"]["1"] == "mid");

    // A document with no labels at all omits the field.
    GraphDocument bare;
    bare.graph = path_graph(2);
    CHECK_FALSE(graph_to_json(bare).contains("labels"));
}

TEST_CASE("graph parsing failure taxonomy") {
    auto parse = [](const char* text) {
        return [text] { graph_from_json(json::parse(text)); };
    };
    CHECK(code_of(parse(R"([1,2,3])")) == errc::parse_error);
    CHECK(code_of(parse(R"({"edges": []})")) == errc::parse_error);
    CHECK(code_of(parse(R"({"order": 3})")) == errc::parse_error);
    CHECK(code_of(parse(R"({"order": "3", "edges": []})")) == errc::parse_error);
    CHECK(code_of(parse(R"({"order": 3, "edges": [[0]]})")) == errc::parse_error);
    CHECK(code_of(parse(R"({"order": 3, "edges": [[0,0]]})")) == errc::loop_edge);
    CHECK(code_of(parse(R"({"order": 3, "edges": [[0,1],[1,0]]})")) ==
          errc::duplicate_edge);
    CHECK(code_of(parse(R"({"order": 2, "edges": [[0,5]]})")) ==
          errc::vertex_out_of_range);
    CHECK(code_of(parse(R"({"order": 2, "edges": [[0,1]], "labels": {"x": "a"}})")) ==
          errc::parse_error);
    CHECK(code_of(parse(R"({"order": 2, "edges": [[0,1]], "labels": {"7": "a"}})")) ==
          errc::vertex_out_of_range);
    CHECK(code_of(parse(R"({"order": 2, "edges": [[0,1]], "family": {}})")) ==
          errc::parse_error);
}

TEST_CASE("colorings round-trip and reject gaps") {
    Graph g = cycle_graph(4);
    EdgeColoring c(std::vector<int>{1, 2, 1, 2});
    auto back = coloring_from_json(coloring_to_json(c), g);
    CHECK(back.colors == c.colors);

    CHECK(code_of([&] {
              coloring_from_json(json::parse(R"({"colors": [1, 2, 1]})"), g);
          }) == errc::coloring_size_mismatch);
    CHECK(code_of([&] {
              coloring_from_json(json::parse(R"({"colors": [1, 2, 0, 2]})"), g);
          }) == errc::uncolored_edge);
    CHECK(code_of([&] {
              coloring_from_json(json::parse(R"({"colors": "red"})"), g);
          }) == errc::parse_error);
    CHECK(code_of([&] { coloring_to_json(EdgeColoring::uncolored(g)); }) ==
          errc::uncolored_edge);
}

TEST_CASE("halin documents rebuild the cycle structure") {
    auto hg = necklace(2);
    GraphDocument doc;
    doc.graph = hg.graph();
    FamilyMeta meta;
    meta.name = "necklace";
    meta.h = 2;
    meta.halin_tree = hg.tree_edges();
    meta.halin_root = hg.root();
    meta.halin_cycle = hg.cycle_order();
    doc.family = meta;

    auto back = graph_from_json(graph_to_json(doc));
    auto rebuilt = halin_from_document(back);
    CHECK(rebuilt.graph().edges() == hg.graph().edges());
    CHECK(rebuilt.tree_edges() == hg.tree_edges());
    CHECK(rebuilt.root() == hg.root());
    CHECK(rebuilt.cycle_order() == hg.cycle_order());

    GraphDocument plain;
    plain.graph = hg.graph();
    CHECK(code_of([&] { halin_from_document(plain); }) == errc::wrong_family);
}

TEST_CASE("violation witnesses serialize with their walk") {
    Graph g = path_graph(3);
    auto bad = check_star(g, EdgeColoring(std::vector<int>{1, 1}));
    REQUIRE(bad.has_value());
    auto j = violation_to_json(*bad, g);
    CHECK(j["kind"] == "IMPROPER");
    CHECK(j["vertices"].size() == 3);
    CHECK(j["edge_ids"].size() == 2);
    CHECK(j["edges"].size() == 2);
    CHECK(j["colors"] == json(std::vector<int>{1, 1}));
}

TEST_CASE("file wrappers report io and parse errors") {
    std::string dir = "/tmp/starcolor_json_test";
    std::remove((dir + "/g.json").c_str());
    if (std::system(("mkdir -p " + dir).c_str()) != 0) REQUIRE(false);

    GraphDocument doc;
    doc.graph = cycle_graph(5);
    save_graph_file(dir + "/g.json", doc);
    auto back = load_graph_file(dir + "/g.json");
    CHECK(back.graph.edges() == doc.graph.edges());

    EdgeColoring c(std::vector<int>{1, 2, 3, 1, 2});
    save_coloring_file(dir + "/c.json", c);
    CHECK(load_coloring_file(dir + "/c.json", doc.graph).colors == c.colors);

    CHECK(code_of([&] { load_graph_file(dir + "/absent.json"); }) ==
          errc::io_error);
    {
        std::FILE* f = std::fopen((dir + "/junk.json").c_str(), "w");
        REQUIRE(f);
        std::fputs("not json {", f);
        std::fclose(f);
    }
    CHECK(code_of([&] { load_graph_file(dir + "/junk.json"); }) ==
          errc::parse_error);
    CHECK(code_of([&] { save_graph_file("/nonexistent-dir/g.json", doc); }) ==
          errc::io_error);
}

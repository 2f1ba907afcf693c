#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "starcolor/bench.hpp"
#include "starcolor/colorers.hpp"
#include "starcolor/documents.hpp"
#include "starcolor/dot_export.hpp"
#include "starcolor/exact.hpp"
#include "starcolor/families.hpp"
#include "starcolor/graph.hpp"
#include "starcolor/json_io.hpp"
#include "starcolor/tree_coloring.hpp"
#include "starcolor/verify.hpp"

namespace {

using starcolor::EdgeColoring;
using starcolor::errc;
using starcolor::Graph;
using starcolor::GraphDocument;
using starcolor::json;

// ---------------------------------------------------------------- gen ----

struct GenOptions {
    std::string family;
    int n = 0;
    int h = 0;
    int leaves = 0;
    std::uint64_t seed = 1;
    std::string spec_path;
    std::string out_path;
    bool has_n = false;
    bool has_h = false;
    bool has_leaves = false;
};

starcolor::CompleteHalinSpec load_halin_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw starcolor::error(errc::io_error, "cannot open " + path);
    }
    json j = json::parse(in, nullptr, false);
    json levels = json::array();
    if (j.is_object() && j.contains("levels")) {
        levels = j["levels"];
    } else {
        levels = j;
    }
    if (levels.is_discarded() || !levels.is_array()) {
        throw starcolor::error(errc::parse_error,
                               path + ": expected a JSON array of arrays");
    }
    starcolor::CompleteHalinSpec spec;
    for (const json& level : levels) {
        if (!level.is_array()) {
            throw starcolor::error(errc::parse_error,
                                   path + ": each level must be an array");
        }
        std::vector<int> counts;
        for (const json& c : level) {
            if (!c.is_number_integer()) {
                throw starcolor::error(errc::parse_error,
                                       path + ": child counts must be integers");
            }
            counts.push_back(c.get<int>());
        }
        spec.levels.push_back(std::move(counts));
    }
    return spec;
}

int require_param(bool present, int value, const char* flag,
                  const std::string& family) {
    if (!present) {
        throw starcolor::error(errc::bad_params, "gen --family " + family +
                                                     " requires " + flag);
    }
    return value;
}

GraphDocument generate_document(const GenOptions& o) {
    if (o.family == "path") {
        return starcolor::path_document(require_param(o.has_n, o.n, "--n", o.family));
    }
    if (o.family == "cycle") {
        return starcolor::cycle_document(require_param(o.has_n, o.n, "--n", o.family));
    }
    if (o.family == "path-square") {
        return starcolor::path_square_document(
            require_param(o.has_n, o.n, "--n", o.family));
    }
    if (o.family == "cycle-square") {
        return starcolor::cycle_square_document(
            require_param(o.has_n, o.n, "--n", o.family));
    }
    if (o.family == "petersen3n") {
        return starcolor::petersen3n_document(
            require_param(o.has_n, o.n, "--n", o.family));
    }
    if (o.family == "wheel") {
        return starcolor::wheel_document(require_param(o.has_n, o.n, "--n", o.family));
    }
    if (o.family == "complete") {
        return starcolor::complete_document(
            require_param(o.has_n, o.n, "--n", o.family));
    }
    if (o.family == "necklace") {
        return starcolor::necklace_document(
            require_param(o.has_h, o.h, "--h", o.family));
    }
    if (o.family == "random-cubic-halin") {
        return starcolor::random_cubic_halin_document(
            require_param(o.has_leaves, o.leaves, "--leaves", o.family), o.seed);
    }
    if (o.family == "complete-halin") {
        if (o.spec_path.empty()) {
            throw starcolor::error(errc::bad_params,
                                   "gen --family complete-halin requires --spec");
        }
        return starcolor::complete_halin_document(load_halin_spec(o.spec_path));
    }
    if (o.family == "net") return starcolor::net_document();
    if (o.family == "fan3") return starcolor::fan3_document();
    if (o.family == "h0") return starcolor::h0_document();
    throw starcolor::error(errc::bad_params, "unknown family: " + o.family);
}

int run_gen(const GenOptions& o) {
    GraphDocument doc = generate_document(o);
    starcolor::save_graph_file(o.out_path, doc);
    std::cout << "wrote " << o.family << ": order " << doc.graph.order()
              << ", edges " << doc.graph.edge_count() << " -> " << o.out_path
              << "\n";
    return 0;
}

// -------------------------------------------------------------- color ----

// Fixed-table colorers assign colors by canonical edge id.  The input file
// may list the same edges in any order, so colors are remapped through
// endpoint lookup; any edge absent from the canonical build means the graph
// is not the claimed family member.
EdgeColoring remap_from_canonical(const Graph& user, const Graph& canon,
                                  const EdgeColoring& canon_coloring,
                                  const std::string& family) {
    if (user.order() != canon.order() ||
        user.edge_count() != canon.edge_count()) {
        throw starcolor::error(errc::wrong_family,
                               "graph is not a " + family + " instance");
    }
    EdgeColoring out = EdgeColoring::uncolored(user);
    for (int e = 0; e < user.edge_count(); ++e) {
        auto [u, v] = user.edge(e);
        int ce = canon.edge_id(u, v);
        if (ce < 0) {
            throw starcolor::error(errc::wrong_family,
                                   "graph is not a " + family + " instance");
        }
        out.colors[e] = canon_coloring.colors[ce];
    }
    return out;
}

EdgeColoring color_as_necklace(const GraphDocument& doc) {
    int h = 0;
    if (doc.family && doc.family->h) {
        h = *doc.family->h;
    } else {
        if (doc.graph.order() % 2 != 0 || doc.graph.order() < 4) {
            throw starcolor::error(errc::wrong_family,
                                   "graph is not a necklace instance");
        }
        h = doc.graph.order() / 2 - 1;
    }
    starcolor::HalinGraph canon = starcolor::necklace(h);
    EdgeColoring cc = (h % 2 == 1) ? starcolor::color_necklace_odd(h)
                                   : starcolor::color_cubic_halin(canon);
    return remap_from_canonical(doc.graph, canon.graph(), cc, "necklace");
}

EdgeColoring run_algorithm(const std::string& alg, const GraphDocument& doc) {
    const Graph& g = doc.graph;
    if (alg == "tree") {
        return starcolor::tree_star_coloring(g);
    }
    if (alg == "path-square") {
        return remap_from_canonical(g, starcolor::path_square(g.order()),
                                    starcolor::color_path_square(g.order()),
                                    "path-square");
    }
    if (alg == "cycle-square") {
        return remap_from_canonical(g, starcolor::cycle_square(g.order()),
                                    starcolor::color_cycle_square(g.order()),
                                    "cycle-square");
    }
    if (alg == "petersen3n") {
        if (g.order() % 6 != 0 || g.order() < 12) {
            throw starcolor::error(errc::wrong_family,
                                   "graph is not a P(3n, n) instance");
        }
        int n = g.order() / 6;
        return remap_from_canonical(g, starcolor::petersen_3n(n),
                                    starcolor::color_petersen_3n(n),
                                    "petersen3n");
    }
    if (alg == "necklace") {
        return color_as_necklace(doc);
    }
    if (alg == "cubic-halin") {
        return starcolor::color_cubic_halin(starcolor::halin_from_document(doc));
    }
    if (alg == "complete-halin") {
        return starcolor::color_complete_halin(
            starcolor::halin_from_document(doc));
    }
    if (alg != "auto") {
        throw starcolor::error(errc::bad_params, "unknown algorithm: " + alg);
    }

    if (!doc.family) {
        throw starcolor::error(
            errc::wrong_family,
            "auto dispatch needs family metadata; pass --algorithm explicitly");
    }
    const std::string& fam = doc.family->name;
    if (fam == "path") {
        return starcolor::tree_star_coloring(g);
    }
    if (fam == "cycle") {
        return remap_from_canonical(g, starcolor::cycle_graph(g.order()),
                                    starcolor::star_color_cycle(g.order()),
                                    "cycle");
    }
    if (fam == "path-square") return run_algorithm("path-square", doc);
    if (fam == "cycle-square") return run_algorithm("cycle-square", doc);
    if (fam == "petersen3n") return run_algorithm("petersen3n", doc);
    if (fam == "necklace") return color_as_necklace(doc);
    if (fam == "random-cubic-halin") return run_algorithm("cubic-halin", doc);
    if (fam == "complete-halin") return run_algorithm("complete-halin", doc);
    throw starcolor::error(errc::wrong_family,
                           "no constructive scheme for family " + fam);
}

struct ColorOptions {
    std::string algorithm = "auto";
    std::string in_path;
    std::string out_path;
    std::string fallback;
    std::uint64_t budget = starcolor::default_node_budget;
};

int run_color(const ColorOptions& o) {
    GraphDocument doc = starcolor::load_graph_file(o.in_path);
    std::string used = o.algorithm;
    EdgeColoring c;
    try {
        c = run_algorithm(o.algorithm, doc);
    } catch (const starcolor::error& e) {
        if (o.fallback != "exact") throw;
        c = starcolor::star_chromatic_index(doc.graph, {}, {}, o.budget)
                .certificate;
        used = "exact";
    }
    starcolor::save_coloring_file(o.out_path, c);
    std::cout << "star coloring with " << c.color_count() << " colors ("
              << used << ") -> " << o.out_path << "\n";
    return 0;
}

// ------------------------------------------------------------- verify ----

std::vector<int> load_sub_edge_ids(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) {
        throw starcolor::error(errc::io_error, "cannot open " + path);
    }
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_array()) {
        throw starcolor::error(errc::parse_error,
                               path + ": expected a JSON array of edges");
    }
    std::vector<int> ids;
    for (const json& item : j) {
        if (item.is_number_integer()) {
            int id = item.get<int>();
            if (id < 0 || id >= g.edge_count()) {
                throw starcolor::error(errc::bad_argument,
                                       "edge id out of range: " + item.dump());
            }
            ids.push_back(id);
            continue;
        }
        if (item.is_array() && item.size() == 2 && item[0].is_number_integer() &&
            item[1].is_number_integer()) {
            int id = g.edge_id(item[0].get<int>(), item[1].get<int>());
            if (id < 0) {
                throw starcolor::error(errc::bad_argument,
                                       "not a host edge: " + item.dump());
            }
            ids.push_back(id);
            continue;
        }
        throw starcolor::error(errc::parse_error,
                               path + ": edges must be ids or [u, v] pairs");
    }
    return ids;
}

struct VerifyOptions {
    std::string graph_path;
    std::string coloring_path;
    std::string mode = "star";
    std::string sub_path;
};

int run_verify(const VerifyOptions& o) {
    GraphDocument doc = starcolor::load_graph_file(o.graph_path);
    EdgeColoring c = starcolor::load_coloring_file(o.coloring_path, doc.graph);

    std::optional<starcolor::StarViolation> bad;
    int colors = c.color_count();
    if (o.mode == "star") {
        bad = starcolor::check_star(doc.graph, c);
    } else if (o.mode == "proper") {
        bad = starcolor::check_proper(doc.graph, c);
    } else if (o.mode == "strong") {
        if (o.sub_path.empty()) {
            throw starcolor::error(errc::bad_params,
                                   "verify --mode strong requires --sub");
        }
        std::vector<int> ids = load_sub_edge_ids(o.sub_path, doc.graph);
        bad = starcolor::check_restricted_strong(doc.graph, ids, c);
        std::vector<int> sub_colors;
        for (int id : ids) sub_colors.push_back(c.colors[id]);
        colors = EdgeColoring(std::move(sub_colors)).color_count();
    } else {
        throw starcolor::error(errc::bad_params, "unknown mode: " + o.mode);
    }

    if (bad) {
        std::cout << starcolor::violation_to_json(*bad, doc.graph).dump(2)
                  << "\n";
        return 1;
    }
    json ok;
    ok["ok"] = true;
    ok["colors"] = colors;
    std::cout << ok.dump() << "\n";
    return 0;
}

// -------------------------------------------------------------- exact ----

struct ExactOptions {
    std::string graph_path;
    int max_k = 0;
    bool has_max_k = false;
    std::uint64_t budget = starcolor::default_node_budget;
    bool parallel = false;
};

int run_exact(const ExactOptions& o) {
    GraphDocument doc = starcolor::load_graph_file(o.graph_path);
    json out;
    if (o.has_max_k) {
        starcolor::SolveOutcome r = starcolor::exists_star_k_coloring(
            doc.graph, o.max_k, o.budget, o.parallel);
        if (r.status == starcolor::solve_status::budget_exhausted) {
            throw starcolor::error(errc::budget_exhausted,
                                   "undecided after " +
                                       std::to_string(r.nodes_explored) +
                                       " nodes");
        }
        out["k"] = o.max_k;
        out["feasible"] = r.status == starcolor::solve_status::feasible;
        if (r.coloring) {
            out["certificate"] = r.coloring->colors;
        } else {
            out["certificate"] = nullptr;
        }
        out["nodes"] = r.nodes_explored;
    } else {
        starcolor::ExactResult r =
            starcolor::star_chromatic_index(doc.graph, {}, {}, o.budget,
                                            o.parallel);
        out["k"] = r.k;
        out["certificate"] = r.certificate.colors;
        out["nodes"] = r.nodes_explored;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

// -------------------------------------------------------------- bench ----

struct BenchOptions {
    std::string suite = "paper";
    std::string out_dir;
    std::uint64_t budget = starcolor::default_node_budget;
};

int run_bench(const BenchOptions& o) {
    if (o.suite != "paper") {
        throw starcolor::error(errc::bad_params, "unknown suite: " + o.suite);
    }
    starcolor::BenchReport report = starcolor::run_paper_suite(o.budget);
    starcolor::write_bench_outputs(report, o.out_dir);
    int counts[4] = {0, 0, 0, 0};
    for (const starcolor::BenchEntry& e : report.entries) {
        ++counts[static_cast<int>(e.status)];
    }
    std::cout << report.entries.size() << " entries: " << counts[0]
              << " match, " << counts[1] << " within-bound, " << counts[2]
              << " discrepancy, " << counts[3] << " timeout\n"
              << "report: " << o.out_dir << "/report.md\n";
    return starcolor::bench_exit_code(report);
}

// ------------------------------------------------------------- export ----

struct ExportOptions {
    std::string format = "dot";
    std::string graph_path;
    std::string coloring_path;
    std::string out_path;
};

int run_export(const ExportOptions& o) {
    if (o.format != "dot") {
        throw starcolor::error(errc::bad_params, "unknown format: " + o.format);
    }
    GraphDocument doc = starcolor::load_graph_file(o.graph_path);
    std::optional<EdgeColoring> c;
    if (!o.coloring_path.empty()) {
        c = starcolor::load_coloring_file(o.coloring_path, doc.graph);
    }
    std::string dot = starcolor::export_dot(doc.graph, c);
    if (o.out_path.empty()) {
        std::cout << dot;
    } else {
        std::ofstream out(o.out_path);
        if (!out || !(out << dot)) {
            throw starcolor::error(errc::io_error, "cannot write " + o.out_path);
        }
        std::cout << "wrote " << o.out_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"star edge-coloring toolkit"};
    app.require_subcommand(1);

    GenOptions gen_opts;
    CLI::App* gen = app.add_subcommand("gen", "generate a family instance");
    // --h (necklace beads) needs the single-letter name, so help keeps only
    // its long spelling here.
    gen->set_help_flag("--help", "print this help message and exit");
    gen->add_option("--family", gen_opts.family, "family name")->required();
    CLI::Option* gen_n = gen->add_option("--n", gen_opts.n, "size parameter");
    CLI::Option* gen_h = gen->add_option("--h", gen_opts.h, "necklace beads");
    CLI::Option* gen_leaves =
        gen->add_option("--leaves", gen_opts.leaves, "leaf count");
    gen->add_option("--seed", gen_opts.seed, "random seed (default 1)");
    gen->add_option("--spec", gen_opts.spec_path,
                    "complete-halin level spec (JSON nested arrays)");
    gen->add_option("--out", gen_opts.out_path, "output graph file")->required();

    ColorOptions color_opts;
    CLI::App* color = app.add_subcommand("color", "run a constructive colorer");
    color->add_option("--algorithm", color_opts.algorithm,
                      "auto|cubic-halin|necklace|complete-halin|tree|"
                      "path-square|cycle-square|petersen3n");
    color->add_option("--in", color_opts.in_path, "input graph file")
        ->required();
    color->add_option("--out", color_opts.out_path, "output coloring file")
        ->required();
    color->add_option("--fallback", color_opts.fallback,
                      "\"exact\" to solve exactly when no scheme applies");
    color->add_option("--budget", color_opts.budget,
                      "node budget for the exact fallback");

    VerifyOptions verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "check a coloring");
    verify->add_option("--graph", verify_opts.graph_path, "graph file")
        ->required();
    verify->add_option("--coloring", verify_opts.coloring_path, "coloring file")
        ->required();
    verify->add_option("--mode", verify_opts.mode, "star|proper|strong");
    verify->add_option("--sub", verify_opts.sub_path,
                       "edge list defining the strong-mode subgraph");

    ExactOptions exact_opts;
    CLI::App* exact = app.add_subcommand("exact", "exact star chromatic index");
    exact->add_option("--graph", exact_opts.graph_path, "graph file")
        ->required();
    CLI::Option* max_k =
        exact->add_option("--max-k", exact_opts.max_k, "decide k-feasibility");
    exact->add_option("--budget", exact_opts.budget, "search node budget");
    exact->add_flag("--parallel", exact_opts.parallel, "split the search");

    BenchOptions bench_opts;
    CLI::App* bench = app.add_subcommand("bench", "reproduce the claim table");
    bench->add_option("--suite", bench_opts.suite, "suite name (paper)");
    bench->add_option("--out", bench_opts.out_dir, "report directory")
        ->required();
    bench->add_option("--budget", bench_opts.budget,
                      "node budget per exact search");

    ExportOptions export_opts;
    CLI::App* exp = app.add_subcommand("export", "export to DOT");
    exp->add_option("--format", export_opts.format, "output format (dot)");
    exp->add_option("--graph", export_opts.graph_path, "graph file")
        ->required();
    exp->add_option("--coloring", export_opts.coloring_path,
                    "optional coloring file");
    exp->add_option("--out", export_opts.out_path,
                    "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            gen_opts.has_n = gen_n->count() > 0;
            gen_opts.has_h = gen_h->count() > 0;
            gen_opts.has_leaves = gen_leaves->count() > 0;
            return run_gen(gen_opts);
        }
        if (color->parsed()) return run_color(color_opts);
        if (verify->parsed()) return run_verify(verify_opts);
        if (exact->parsed()) {
            exact_opts.has_max_k = max_k->count() > 0;
            return run_exact(exact_opts);
        }
        if (bench->parsed()) return run_bench(bench_opts);
        if (exp->parsed()) return run_export(export_opts);
    } catch (const starcolor::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == errc::budget_exhausted ? 4 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starcolor/exact.hpp"
#include "starcolor/json_io.hpp"

namespace starcolor {

enum class claim_kind { equals, at_most, at_least };
enum class bench_status { match, within_bound, discrepancy, timeout };

const char* claim_kind_symbol(claim_kind k);    // "=", "<=", ">="
const char* bench_status_name(bench_status s);  // "match", "within-bound", ...

// One benchmark row: a claimed value or bound, the value this build computes
// for it, and the mechanical comparison of the two.  The witness document is
// what the repro command reads; repro is a single CLI invocation relative to
// the report directory.
struct BenchEntry {
  std::string section;
  std::string instance;
  claim_kind kind = claim_kind::equals;
  int claimed = 0;
  std::string source;             // one-line description of the claim
  std::optional<int> computed;    // empty on timeout or invalid result
  std::string note;               // replaces the bare number when non-empty
  bench_status status = bench_status::discrepancy;
  std::string repro;
  std::string witness_stem;       // file stem under witnesses/
  GraphDocument witness_graph;
  std::optional<EdgeColoring> witness_coloring;
};

struct BenchReport {
  std::uint64_t budget = 0;
  std::vector<BenchEntry> entries;
  std::string markdown;  // byte-identical for identical budgets
  json machine;          // same content, machine-readable
};

// Runs the whole claim table.  `budget` bounds every exact search (node
// count), so results and both report forms are deterministic.
BenchReport run_paper_suite(std::uint64_t budget = default_node_budget);

// 0 when every entry matched or stayed within its bound, 3 on any
// discrepancy, 4 on any timeout (timeout wins).
int bench_exit_code(const BenchReport& report);

// Writes report.md, report.json, and witnesses/<stem>.graph.json (plus
// .coloring.json where a coloring exists) into out_dir, creating it if
// needed.  Returns the paths written, report files first.
std::vector<std::string> write_bench_outputs(const BenchReport& report,
                                             const std::string& out_dir);

}  // namespace starcolor

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "middlevels/lift.hpp"
#include "middlevels/search.hpp"

namespace middlevels {

struct RunReport {
  int k = 0;
  int n = 0;
  std::uint64_t vertices_in_R = 0;
  std::uint64_t vertices_in_M = 0;
  Heuristic heuristic = Heuristic::sss;
  std::size_t flush_threshold = 0;
  double elapsed_seconds = 0;  // search only, millisecond resolution
  SearchStats stats;
  Outcome outcome = Outcome::exhausted;
  bool verified = false;  // R path and lifted M cycle both pass the checkers
  LiftStats lift;
};

RunReport make_report(int k, Heuristic h);

// Search, then verify, lift and verify again. `path` and `cycle` receive the
// artifacts when non-null; the cycle is only produced on a verified path.
RunReport run_pipeline(int k, Heuristic h, const SearchConfig& cfg, std::vector<RVertex>* path = nullptr,
                       MCycle* cycle = nullptr, bool lift = true);

// key=value lines, one record per report, records separated by a blank line.
void write_records(std::ostream& os, const RunReport& r);
void write_summary(std::ostream& os, const RunReport& r);

// Table with one row per k and a seconds column per heuristic.
struct BenchRow {
  int k = 0;
  std::vector<RunReport> runs;  // in heuristic order
};
void write_bench_table(std::ostream& os, std::span<const BenchRow> rows, std::span<const Heuristic> heuristics);

std::string format_thousands(std::uint64_t v);

}  // namespace middlevels

// middlevels: find and verify Hamilton cycles in the middle two levels of the
// Boolean lattice via the reduced necklace graph.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "middlevels/binomial.hpp"
#include "middlevels/lift.hpp"
#include "middlevels/necklace.hpp"
#include "middlevels/path_io.hpp"
#include "middlevels/report.hpp"
#include "middlevels/search.hpp"
#include "middlevels/verify.hpp"

using namespace middlevels;

namespace {

enum Exit : int {
  kOk = 0,
  kMismatch = 1,
  kHeuristicFailure = 2,
  kBudget = 3,
  kVerifyFailure = 4,
  kLiftFailure = 5,
  kMalformed = 64,
};

struct Options {
  int k = 0;
  std::string heuristic = "sss";
  std::size_t flush_threshold = 0;
  std::uint64_t budget = 0;
  std::string out;
  std::string in;
  std::string report;
  std::string format = "table";
  std::string kind;
  int enumerate_cap = 12;
  int k_min = 1;
  int k_max = 1;
  std::vector<std::string> heuristics{"sss"};
  bool parallel = false;
  bool descending = false;
};

SearchConfig make_config(const Options& o) {
  SearchConfig cfg;
  cfg.flush_threshold = o.flush_threshold;
  cfg.max_steps = o.budget;
  cfg.neighbor_order = o.descending ? NeighborOrder::descending : NeighborOrder::ascending;
  return cfg;
}

VertexFile load(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw FormatError("cannot open " + path);
  return read_vertex_file(is);
}

void emit_report(const Options& o, const RunReport& r) {
  std::ostringstream text;
  if (o.format == "records") {
    write_records(text, r);
  } else {
    write_summary(text, r);
  }
  if (o.report.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream(o.report) << text.str();
  }
}

int cmd_count(const Options& o) {
  const auto k = static_cast<unsigned>(o.k);
  const std::uint64_t r_formula = catalan(k);
  const std::uint64_t m_formula = middle_levels_order(k);
  int rc = kOk;
  std::string enumerated = "skipped";
  if (o.k <= o.enumerate_cap) {
    const VertexTable table(o.k);
    enumerated = std::to_string(table.size());
    if (table.size() != r_formula) rc = kMismatch;
  }
  if (o.format == "records") {
    std::cout << "k=" << o.k << "\nn=" << 2 * o.k + 1 << "\nvertices_in_R=" << r_formula
              << "\nvertices_in_M=" << m_formula << "\nenumerated_R=" << enumerated
              << "\nstatus=" << (rc == kOk ? "ok" : "mismatch") << "\n\n";
  } else {
    std::cout << "k=" << o.k << " n=" << 2 * o.k + 1 << " R: " << format_thousands(r_formula)
              << "; M: " << format_thousands(m_formula) << " (enumerated R: " << enumerated << ")\n";
  }
  if (rc != kOk) std::cerr << "enumeration disagrees with C(2k+1,k)/(2k+1)\n";
  return rc;
}

int cmd_search(const Options& o) {
  const Heuristic h = parse_heuristic(o.heuristic);
  std::vector<RVertex> path;
  const RunReport r = run_pipeline(o.k, h, make_config(o), &path, nullptr, /*lift=*/false);
  emit_report(o, r);
  if (r.outcome == Outcome::budget) return kBudget;
  if (r.outcome == Outcome::exhausted) return kHeuristicFailure;
  if (!r.verified) {
    std::cerr << "search returned a path that fails verification\n";
    return kVerifyFailure;
  }
  if (!o.out.empty()) {
    std::ofstream os(o.out);
    write_rpath(os, o.k, path);
  }
  return kOk;
}

int cmd_lift(const Options& o) {
  const VertexFile file = load(o.in);
  if (file.kind != FileKind::rpath) throw FormatError("expected an rpath file");
  if (file.k != o.k) throw FormatError("file is for k=" + std::to_string(file.k));
  const auto path = as_rpath(file);
  if (const Verdict v = verify_r_path(path, o.k); !v) {
    std::cerr << "rpath " << to_string(v.reason) << " at index " << v.index << ": " << v.detail << '\n';
    return kVerifyFailure;
  }
  MCycle cycle;
  LiftStats stats;
  try {
    cycle = lift_to_m_cycle(link_to_n_cycle(path, o.k), &stats);
  } catch (const LiftError& e) {
    std::cerr << "lift failed: " << e.what() << '\n';
    return kLiftFailure;
  }
  if (const Verdict v = verify_m_cycle(cycle.seq, o.k); !v) {
    std::cerr << "mcycle " << to_string(v.reason) << " at index " << v.index << ": " << v.detail << '\n';
    return kVerifyFailure;
  }
  std::cerr << "lifted: " << cycle.seq.size() << " vertices, delta=" << stats.delta
            << ", backtracks=" << stats.backtracks << '\n';
  if (!o.out.empty()) {
    std::ofstream os(o.out);
    write_vertex_file(os, FileKind::mcycle, o.k, cycle.seq);
  } else {
    write_vertex_file(std::cout, FileKind::mcycle, o.k, cycle.seq);
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  const VertexFile file = load(o.in);
  const FileKind want = o.kind == "rpath" ? FileKind::rpath : FileKind::mcycle;
  if (file.kind != want) throw FormatError("file kind is " + std::string(to_string(file.kind)));
  if (file.k != o.k) throw FormatError("file is for k=" + std::to_string(file.k));
  const Verdict v = want == FileKind::rpath ? verify_r_path(as_rpath(file), o.k) : verify_m_cycle(file.vertices, o.k);
  if (!v) {
    std::cerr << to_string(file.kind) << ' ' << to_string(v.reason) << " at index " << v.index << ": " << v.detail
              << '\n';
    return kVerifyFailure;
  }
  std::cout << "pass: " << to_string(file.kind) << " k=" << o.k << " count=" << file.vertices.size() << '\n';
  return kOk;
}

int cmd_bench(const Options& o) {
  if (o.k_min > o.k_max) throw CLI::ValidationError("--k-min must not exceed --k-max");
  std::vector<Heuristic> hs;
  for (const auto& name : o.heuristics) hs.push_back(parse_heuristic(name));
  const SearchConfig cfg = make_config(o);

  auto run_row = [&](int k) {
    BenchRow row{k, {}};
    for (Heuristic h : hs) row.runs.push_back(run_pipeline(k, h, cfg));
    return row;
  };
  std::vector<BenchRow> rows;
  if (o.parallel) {
    std::vector<std::future<BenchRow>> jobs;
    for (int k = o.k_min; k <= o.k_max; ++k) jobs.push_back(std::async(std::launch::async, run_row, k));
    for (auto& j : jobs) rows.push_back(j.get());
  } else {
    for (int k = o.k_min; k <= o.k_max; ++k) rows.push_back(run_row(k));
  }

  bool ok = true;
  for (const auto& row : rows) {
    for (const auto& r : row.runs) ok = ok && r.verified;
  }
  if (o.format == "records") {
    for (const auto& row : rows) {
      for (const auto& r : row.runs) write_records(std::cout, r);
    }
  } else {
    write_bench_table(std::cout, rows, hs);
  }
  return ok ? kOk : kHeuristicFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton cycles in the middle levels graph via complementary necklace pairs"};
  app.require_subcommand(1);
  Options o;
  const auto k_range = CLI::Range(1, 31);
  const auto formats = CLI::IsMember({"table", "records"});

  auto* count = app.add_subcommand("count", "Print |R_n| and |M_n|, cross-checked by enumeration");
  count->add_option("--k", o.k, "Level k (n = 2k+1)")->required()->check(k_range);
  count->add_option("--enumerate-cap", o.enumerate_cap, "Largest k that is also enumerated");
  count->add_option("--format", o.format)->check(formats);

  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--flush-threshold", o.flush_threshold, "Deferred rotations before a flush (0: ceil sqrt|V|)");
    sub->add_option("--budget", o.budget, "Max extensions + rotations (0: 50|V|)");
    sub->add_flag("--descending", o.descending, "Try off-path neighbors in descending order");
    sub->add_option("--format", o.format)->check(formats);
  };

  auto* search = app.add_subcommand("search", "Search R_n for a Hamilton path between the distinguished vertices");
  search->add_option("--k", o.k)->required()->check(CLI::Range(1, 20));
  search->add_option("--heuristic", o.heuristic)->check(CLI::IsMember({"posa", "ss", "sss"}));
  search->add_option("--out", o.out, "R path output file");
  search->add_option("--report", o.report, "Write the run report here instead of stdout");
  add_search_flags(search);

  auto* lift = app.add_subcommand("lift", "Lift a verified R_n path to a Hamilton cycle of M_n");
  lift->add_option("--k", o.k)->required()->check(k_range);
  lift->add_option("--in,--r-path", o.in)->required();
  lift->add_option("--out", o.out, "M cycle output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check an rpath or mcycle file");
  verify->add_option("kind", o.kind)->required()->check(CLI::IsMember({"rpath", "mcycle"}));
  verify->add_option("--k", o.k)->required()->check(k_range);
  verify->add_option("--file,file", o.in)->required();

  auto* bench = app.add_subcommand("bench", "Search, lift and verify a range of k, reporting times");
  bench->add_option("--k-min", o.k_min)->required()->check(CLI::Range(1, 20));
  bench->add_option("--k-max", o.k_max)->required()->check(CLI::Range(1, 20));
  bench->add_option("--heuristics", o.heuristics)->delimiter(',')->check(CLI::IsMember({"posa", "ss", "sss"}));
  bench->add_flag("--parallel", o.parallel, "Run rows concurrently");
  add_search_flags(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    if (*count) return cmd_count(o);
    if (*search) return cmd_search(o);
    if (*lift) return cmd_lift(o);
    if (*verify) return cmd_verify(o);
    if (*bench) return cmd_bench(o);
  } catch (const FormatError& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kMalformed;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kMalformed;
  }
  return kOk;
}

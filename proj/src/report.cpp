#include "middlevels/report.hpp"

#include <cctype>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "middlevels/binomial.hpp"
#include "middlevels/verify.hpp"

namespace middlevels {

std::string format_thousands(std::uint64_t v) {
  std::string digits = std::to_string(v);
  std::string out;
  const std::size_t lead = digits.size() % 3;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (i + 3 - lead) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

RunReport make_report(int k, Heuristic h) {
  RunReport r;
  r.k = k;
  r.n = 2 * k + 1;
  r.vertices_in_R = catalan(static_cast<unsigned>(k));
  r.vertices_in_M = middle_levels_order(static_cast<unsigned>(k));
  r.heuristic = h;
  return r;
}

RunReport run_pipeline(int k, Heuristic h, const SearchConfig& cfg, std::vector<RVertex>* path, MCycle* cycle,
                       bool lift) {
  RunReport report = make_report(k, h);
  const ReducedGraph graph(k);

  const auto t0 = std::chrono::steady_clock::now();
  RSearchResult res = search_reduced(graph, h, cfg);
  const auto t1 = std::chrono::steady_clock::now();
  report.elapsed_seconds =
      static_cast<double>(std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()) / 1000.0;
  report.stats = res.stats;
  report.flush_threshold = res.stats.flush_threshold;
  report.outcome = res.outcome;

  if (res.outcome == Outcome::success) {
    bool ok = static_cast<bool>(verify_r_path(res.path, k));
    if (ok && lift) {
      MCycle m = lift_to_m_cycle(link_to_n_cycle(res.path, k), &report.lift);
      ok = static_cast<bool>(verify_m_cycle(m.seq, k));
      if (cycle) *cycle = std::move(m);
    }
    report.verified = ok;
  }
  if (path) *path = std::move(res.path);
  return report;
}

void write_records(std::ostream& os, const RunReport& r) {
  os << "k=" << r.k << '\n'
     << "n=" << r.n << '\n'
     << "vertices_in_R=" << r.vertices_in_R << '\n'
     << "vertices_in_M=" << r.vertices_in_M << '\n'
     << "heuristic=" << to_string(r.heuristic) << '\n'
     << "flush_threshold=" << r.flush_threshold << '\n'
     << "elapsed_seconds=" << std::fixed << std::setprecision(3) << r.elapsed_seconds << std::defaultfloat << '\n'
     << "extensions=" << r.stats.extensions << '\n'
     << "rotations=" << r.stats.rotations << '\n'
     << "flushes=" << r.stats.flushes << '\n'
     << "lookaheads=" << r.stats.lookaheads << '\n'
     << "lookahead_nodes=" << r.stats.lookahead_nodes << '\n'
     << "max_lookahead_depth=" << r.stats.max_lookahead_depth << '\n'
     << "order_writes=" << r.stats.order_writes << '\n'
     << "longest_path=" << r.stats.longest << '\n'
     << "lift_delta=" << r.lift.delta << '\n'
     << "lift_backtracks=" << r.lift.backtracks << '\n'
     << "outcome=" << to_string(r.outcome) << '\n'
     << "verified=" << (r.verified ? "true" : "false") << '\n'
     << '\n';
}

void write_summary(std::ostream& os, const RunReport& r) {
  os << "k=" << r.k << " n=" << r.n << " |R|=" << format_thousands(r.vertices_in_R)
     << " |M|=" << format_thousands(r.vertices_in_M) << " heuristic=" << to_string(r.heuristic)
     << " flush_threshold=" << r.flush_threshold << " outcome=" << to_string(r.outcome)
     << " verified=" << (r.verified ? "yes" : "no") << " seconds=" << std::fixed << std::setprecision(3)
     << r.elapsed_seconds << std::defaultfloat << " extensions=" << r.stats.extensions
     << " rotations=" << r.stats.rotations << " flushes=" << r.stats.flushes
     << " lookaheads=" << r.stats.lookaheads << " order_writes=" << r.stats.order_writes << '\n';
}

void write_bench_table(std::ostream& os, std::span<const BenchRow> rows, std::span<const Heuristic> heuristics) {
  os << std::setw(4) << "k" << std::setw(5) << "n" << std::setw(14) << "|R_n|" << std::setw(16) << "|M_n|";
  for (Heuristic h : heuristics) {
    std::string name(to_string(h));
    for (char& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    os << std::setw(11) << (name + " s") << std::setw(15) << (name + " writes") << std::setw(12)
       << (name + " rots");
  }
  os << "  status\n";
  for (const BenchRow& row : rows) {
    const RunReport& base = row.runs.front();
    os << std::setw(4) << base.k << std::setw(5) << base.n << std::setw(14) << format_thousands(base.vertices_in_R)
       << std::setw(16) << format_thousands(base.vertices_in_M);
    bool all_ok = true;
    for (const RunReport& r : row.runs) {
      std::ostringstream secs;
      secs << std::fixed << std::setprecision(3) << r.elapsed_seconds;
      os << std::setw(11) << secs.str() << std::setw(15) << r.stats.order_writes << std::setw(12)
         << r.stats.rotations;
      all_ok = all_ok && r.verified;
    }
    os << "  " << (all_ok ? "verified" : "FAILED") << '\n';
  }
}

}  // namespace middlevels

#include "middlevels/search.hpp"

#include <stdexcept>

namespace middlevels {

std::string_view to_string(Heuristic h) {
  switch (h) {
    case Heuristic::posa: return "posa";
    case Heuristic::ss: return "ss";
    case Heuristic::sss: return "sss";
  }
  return "?";
}

Heuristic parse_heuristic(std::string_view name) {
  if (name == "posa") return Heuristic::posa;
  if (name == "ss" || name == "SS") return Heuristic::ss;
  if (name == "sss" || name == "SSS") return Heuristic::sss;
  throw std::invalid_argument("unknown heuristic: " + std::string(name));
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::success: return "success";
    case Outcome::exhausted: return "exhausted";
    case Outcome::budget: return "budget";
  }
  return "?";
}

std::size_t default_flush_threshold(std::size_t vertex_count) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(vertex_count)));
  while (r * r < vertex_count) ++r;
  while (r > 1 && (r - 1) * (r - 1) >= vertex_count) --r;
  return std::max<std::size_t>(r, 1);
}

std::uint64_t default_max_steps(std::size_t vertex_count) {
  return std::max<std::uint64_t>(50 * static_cast<std::uint64_t>(vertex_count), 1);
}

RSearchResult search_reduced(const ReducedGraph& g, Heuristic h, const SearchConfig& cfg) {
  const auto [first, last] = distinguished(g.k());
  const VertexId s = g.id(first);
  const VertexId t = g.id(last);
  // s == t only for R_3, whose single vertex is its own Hamilton path.
  const SearchResult raw = run_search(g, s, t, h, cfg);
  RSearchResult out;
  out.outcome = raw.outcome;
  out.stats = raw.stats;
  out.heuristic = h;
  out.path.reserve(raw.path.size());
  for (VertexId v : raw.path) out.path.push_back(g.vertex(v));
  return out;
}

RSearchResult sss_search(int k, const SearchConfig& cfg) {
  return search_reduced(ReducedGraph(k), Heuristic::sss, cfg);
}

RSearchResult ss_search(int k, const SearchConfig& cfg) {
  return search_reduced(ReducedGraph(k), Heuristic::ss, cfg);
}

RSearchResult posa_search(int k, const SearchConfig& cfg) {
  return search_reduced(ReducedGraph(k), Heuristic::posa, cfg);
}

}  // namespace middlevels

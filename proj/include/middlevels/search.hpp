#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "middlevels/path_state.hpp"
#include "middlevels/quotient_graph.hpp"

namespace middlevels {

enum class Heuristic { posa, ss, sss };
std::string_view to_string(Heuristic h);
Heuristic parse_heuristic(std::string_view name);

// Order in which off-path neighbors are tried for extension.
enum class NeighborOrder { ascending, descending };

struct SearchConfig {
  std::size_t flush_threshold = 0;  // 0: ceil(sqrt(|V|))
  std::uint64_t max_steps = 0;      // 0: 50 |V|
  NeighborOrder neighbor_order = NeighborOrder::ascending;
  bool target_avoidance = true;
};

std::size_t default_flush_threshold(std::size_t vertex_count);
std::uint64_t default_max_steps(std::size_t vertex_count);

enum class Outcome { success, exhausted, budget };
std::string_view to_string(Outcome o);

struct SearchStats {
  std::uint64_t extensions = 0;
  std::uint64_t rotations = 0;
  std::uint64_t flushes = 0;
  std::uint64_t lookaheads = 0;
  std::uint64_t lookahead_nodes = 0;
  std::uint64_t max_lookahead_depth = 0;
  std::uint64_t order_writes = 0;
  // Sum of path lengths at flush time; equals order_writes for SSS.
  std::uint64_t flush_copy_volume = 0;
  std::size_t longest = 0;
  std::size_t flush_threshold = 0;
};

struct SearchResult {
  Outcome outcome = Outcome::exhausted;
  std::vector<VertexId> path;  // Hamilton path on success, longest path otherwise
  SearchStats stats;
};

// One BFS over rotation-reachable endpoints. Returns the rotation positions
// to apply in order, or nullopt when every reachable endpoint is closed.
struct LookaheadOutcome {
  std::optional<std::vector<std::size_t>> rotations;
  std::uint64_t nodes = 0;
  std::uint64_t depth = 0;
};

namespace detail {

// Shared across lookaheads so that dedup marks need no clearing.
struct LookaheadScratch {
  std::vector<std::uint32_t> seen_stamp;
  std::uint32_t stamp = 0;
  struct Node {
    VertexId endpoint;
    std::uint32_t parent;
    std::uint32_t len_at;
    std::uint32_t at;
  };
  std::vector<Node> nodes;
  std::vector<RotationRecord> chain;
  std::vector<VertexId> nb;
  std::vector<VertexId> nb2;

  void begin(std::size_t vertex_count) {
    if (seen_stamp.size() != vertex_count || stamp == UINT32_MAX) {
      seen_stamp.assign(vertex_count, 0);
      stamp = 0;
    }
    ++stamp;
    nodes.clear();
  }
  bool mark(VertexId v) {
    if (seen_stamp[v] == stamp) return false;
    seen_stamp[v] = stamp;
    return true;
  }
};

inline bool may_enter(const PathState& path, VertexId w, VertexId self, VertexId target, bool avoid) {
  if (w == self || path.contains(w)) return false;
  return !(avoid && w == target && path.len() + 1 < path.vertex_count());
}

template <typename Graph>
LookaheadOutcome bfs_lookahead(const Graph& g, const PathState& path, VertexId target, bool avoid,
                               LookaheadScratch& s) {
  LookaheadOutcome res;
  s.begin(path.vertex_count());
  const std::size_t len = path.len();
  if (len < 2) return res;
  const VertexId root = path.endpoint();
  s.mark(root);
  s.nodes.push_back({root, UINT32_MAX, 0, 0});

  for (std::size_t head = 0; head < s.nodes.size(); ++head) {
    const auto node = s.nodes[head];
    // Rotation chain from the root path to this node's path.
    s.chain.clear();
    for (auto i = static_cast<std::uint32_t>(head); s.nodes[i].parent != UINT32_MAX; i = s.nodes[i].parent) {
      s.chain.push_back({s.nodes[i].len_at, s.nodes[i].at});
    }
    std::reverse(s.chain.begin(), s.chain.end());
    res.nodes = head + 1;

    g.neighbors(node.endpoint, s.nb);
    if (head > 0) {
      bool open = false;
      for (VertexId w : s.nb) open = open || may_enter(path, w, node.endpoint, target, avoid);
      if (open) {
        std::vector<std::size_t> seq;
        seq.reserve(s.chain.size());
        for (const auto& r : s.chain) seq.push_back(r.at);
        res.depth = seq.size();
        res.rotations = std::move(seq);
        return res;
      }
    }

    const auto node_pos = [&](VertexId w) {
      std::size_t p = path.virtual_pos(w);
      for (const auto& r : s.chain) p = pos_after(p, r.at, r.len_at);
      return p;
    };
    const auto node_vertex = [&](std::size_t i) {
      for (auto it = s.chain.rbegin(); it != s.chain.rend(); ++it) i = vertex_at_after(i, it->at, it->len_at);
      return path.virtual_vertex(i);
    };

    VertexId prev = kOffPath;
    for (VertexId w : s.nb) {
      if (w == prev || w == node.endpoint || !path.contains(w)) continue;
      prev = w;
      const std::size_t j = node_pos(w);
      if (j + 2 >= len) continue;  // predecessor of the endpoint: vacuous
      const VertexId next_end = node_vertex(j + 1);
      if (!s.mark(next_end)) continue;
      s.nodes.push_back({next_end, static_cast<std::uint32_t>(head), static_cast<std::uint32_t>(len),
                         static_cast<std::uint32_t>(j)});
    }
  }
  return res;
}

}  // namespace detail

template <typename Graph>
LookaheadOutcome bfs_lookahead(const Graph& g, const PathState& path, VertexId target, bool avoid = true) {
  detail::LookaheadScratch scratch;
  return detail::bfs_lookahead(g, path, target, avoid, scratch);
}

// Runs PosaSearch, SS or SSS from s toward t on any graph exposing
// size(), neighbors(v, out) and adjacent(u, v).
template <typename Graph>
SearchResult run_search(const Graph& g, VertexId s, VertexId t, Heuristic h, const SearchConfig& cfg) {
  const std::size_t V = g.size();
  SearchResult res;
  res.stats.flush_threshold =
      h == Heuristic::sss ? (cfg.flush_threshold ? cfg.flush_threshold : default_flush_threshold(V)) : 1;
  const std::uint64_t budget = cfg.max_steps ? cfg.max_steps : default_max_steps(V);
  if (V == 0 || s >= V || t >= V) throw std::invalid_argument("search endpoints out of range");
  if (s == t && V > 1) throw std::invalid_argument("start equals target on a graph with more than one vertex");

  PathState path(V);
  path.extend(s);
  std::uint64_t steps = 0;
  std::vector<VertexId> nb;
  detail::LookaheadScratch scratch;

  auto finish = [&](Outcome o) {
    path.flush();
    res.outcome = o;
    res.path = path.virtual_path();
    res.stats.order_writes = path.order_writes();
    res.stats.flushes = path.flush_count();
    res.stats.longest = std::max(res.stats.longest, path.len());
    return res;
  };
  auto rotate = [&](std::size_t j) {
    if (h == Heuristic::sss) {
      path.record_rotation(j);
      if (path.deferred().size() >= res.stats.flush_threshold) {
        res.stats.flush_copy_volume += path.len();
        path.flush();
      }
    } else {
      path.apply_rotation_eager(j);
    }
    ++res.stats.rotations;
    ++steps;
  };

  for (;;) {
    // Extend greedily, keeping the target for last.
    for (;;) {
      if (path.len() == V) break;
      const VertexId end = path.endpoint();
      g.neighbors(end, nb);
      if (cfg.neighbor_order == NeighborOrder::descending) std::reverse(nb.begin(), nb.end());
      auto it = std::find_if(nb.begin(), nb.end(), [&](VertexId w) {
        return detail::may_enter(path, w, end, t, cfg.target_avoidance);
      });
      if (it == nb.end()) break;
      if (steps >= budget) return finish(Outcome::budget);
      path.extend(*it);
      ++res.stats.extensions;
      ++steps;
    }
    res.stats.longest = std::max(res.stats.longest, path.len());
    if (path.len() == V) return finish(path.endpoint() == t ? Outcome::success : Outcome::exhausted);

    if (h == Heuristic::posa) {
      const VertexId end = path.endpoint();
      g.neighbors(end, nb);
      std::vector<std::size_t> choices;
      for (VertexId w : nb) {
        if (w == end || !path.contains(w)) continue;
        const std::size_t j = path.virtual_pos(w);
        if (j + 2 < path.len() && std::find(choices.begin(), choices.end(), j) == choices.end()) {
          choices.push_back(j);
        }
      }
      if (choices.empty()) return finish(Outcome::exhausted);
      if (steps >= budget) return finish(Outcome::budget);
      rotate(choices[res.stats.rotations % choices.size()]);
      continue;
    }

    auto look = detail::bfs_lookahead(g, path, t, cfg.target_avoidance, scratch);
    ++res.stats.lookaheads;
    res.stats.lookahead_nodes += look.nodes;
    res.stats.max_lookahead_depth = std::max(res.stats.max_lookahead_depth, look.depth);
    if (!look.rotations) return finish(Outcome::exhausted);
    for (std::size_t j : *look.rotations) {
      if (steps >= budget) return finish(Outcome::budget);
      rotate(j);
    }
  }
}

// Searches R_{2k+1} for a Hamilton path between the distinguished vertices.
struct RSearchResult {
  Outcome outcome = Outcome::exhausted;
  std::vector<RVertex> path;
  SearchStats stats;
  Heuristic heuristic = Heuristic::sss;
};

RSearchResult search_reduced(const ReducedGraph& g, Heuristic h, const SearchConfig& cfg = {});
RSearchResult sss_search(int k, const SearchConfig& cfg = {});
RSearchResult ss_search(int k, const SearchConfig& cfg = {});
RSearchResult posa_search(int k, const SearchConfig& cfg = {});

}  // namespace middlevels

#include "middlevels/quotient_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace middlevels {

ReducedGraph::ReducedGraph(int k) : table_(std::make_shared<const VertexTable>(k)) {}

ReducedGraph::ReducedGraph(std::shared_ptr<const VertexTable> table) : table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("null vertex table");
}

NeighborList ReducedGraph::neighbors(const RVertex& v) const {
  if (v.k != k() || weight(v.rep) != v.k || !is_canonical(v.rep)) {
    throw InvalidWeight("neighbors() needs a canonical weight-k vertex");
  }
  NeighborList out;
  out.reserve(static_cast<std::size_t>(v.k) + 1);
  for_each_neighbor_word(v.rep.bits, v.rep.n, [&](std::uint64_t w) {
    out.push_back({BitString{w, v.rep.n}, v.k});
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ReducedGraph::loop_multiplicity(const RVertex& v) const {
  const auto nb = neighbors(v);
  return static_cast<std::size_t>(std::count(nb.begin(), nb.end(), v));
}

void ReducedGraph::neighbors(VertexId v, std::vector<VertexId>& out) const {
  out.clear();
  for_each_neighbor_word(table_->word(v), n(), [&](std::uint64_t w) {
    out.push_back(static_cast<VertexId>(table_->find(w)));
  });
  std::sort(out.begin(), out.end());
}

bool ReducedGraph::adjacent(VertexId u, VertexId v) const {
  const std::uint64_t target = table_->word(v);
  bool found = false;
  for_each_neighbor_word(table_->word(u), n(), [&](std::uint64_t w) { found = found || w == target; });
  return found;
}

std::pair<RVertex, RVertex> distinguished(int k) {
  if (k < 1 || 2 * k + 1 > kMaxLength) throw std::invalid_argument("k out of range");
  const int n = 2 * k + 1;
  // 0^k 1^{k+1}
  const BitString first{low_mask(k + 1), n};
  // 0 (01)^k
  std::uint64_t last = 0;
  for (int i = 0; i < k; ++i) last = (last << 2) | 1U;
  return {rho_rep(first, k), rho_rep(BitString{last, n}, k)};
}

void ExplicitGraph::add_edge(VertexId u, VertexId v) {
  adj_.at(u).push_back(v);
  adj_.at(v).push_back(u);
  std::sort(adj_[u].begin(), adj_[u].end());
  std::sort(adj_[v].begin(), adj_[v].end());
}

bool ExplicitGraph::adjacent(VertexId u, VertexId v) const {
  return std::binary_search(adj_.at(u).begin(), adj_.at(u).end(), v);
}

}  // namespace middlevels

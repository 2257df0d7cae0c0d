#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "middlevels/necklace.hpp"

namespace middlevels {

using VertexId = std::uint32_t;

// Sorted multiset of k+1 vertices; loops appear as the vertex itself.
using NeighborList = std::vector<RVertex>;

// The reduced graph R_{2k+1} of complementary necklace pairs. Adjacency is
// recomputed on every call and never stored.
class ReducedGraph {
 public:
  explicit ReducedGraph(int k);
  explicit ReducedGraph(std::shared_ptr<const VertexTable> table);

  int k() const { return table_->k(); }
  int n() const { return table_->n(); }
  std::size_t size() const { return table_->size(); }
  const VertexTable& table() const { return *table_; }

  NeighborList neighbors(const RVertex& v) const;
  std::size_t loop_multiplicity(const RVertex& v) const;

  // Index form used by the search: fills `out` with the k+1 neighbor ids in
  // ascending order, loops included.
  void neighbors(VertexId v, std::vector<VertexId>& out) const;
  bool adjacent(VertexId u, VertexId v) const;

  VertexId id(const RVertex& v) const { return static_cast<VertexId>(table_->index_of(v)); }
  RVertex vertex(VertexId v) const { return (*table_)[v]; }

 private:
  std::shared_ptr<const VertexTable> table_;
};

// Canonical weight-k words of the neighbors of `rep`, unsorted; one entry per
// zero bit of `rep`.
template <typename F>
void for_each_neighbor_word(std::uint64_t rep, int n, F&& f) {
  const std::uint64_t mask = low_mask(n);
  for (int p = 0; p < n; ++p) {
    const std::uint64_t bit = std::uint64_t{1} << p;
    if (rep & bit) continue;
    f(canonical(complement(BitString{rep | bit, n})).bits & mask);
  }
}

// r_first = rho(nu(0^k 1^{k+1})), r_last = rho(nu(0 (01)^k)).
std::pair<RVertex, RVertex> distinguished(int k);

// Adjacency-list graph for tests and small worked configurations.
class ExplicitGraph {
 public:
  explicit ExplicitGraph(std::size_t n) : adj_(n) {}

  std::size_t size() const { return adj_.size(); }
  void add_edge(VertexId u, VertexId v);
  void neighbors(VertexId v, std::vector<VertexId>& out) const { out = adj_[v]; }
  bool adjacent(VertexId u, VertexId v) const;

 private:
  std::vector<std::vector<VertexId>> adj_;
};

}  // namespace middlevels

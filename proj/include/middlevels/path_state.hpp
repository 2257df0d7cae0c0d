#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "middlevels/quotient_graph.hpp"

namespace middlevels {

using Position = std::uint32_t;
constexpr Position kOffPath = std::numeric_limits<Position>::max();

class PathError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Rotation positions are 0-indexed: rotating at j keeps positions 0..j and
// reverses j+1..len-1, so the old successor of j becomes the endpoint.
constexpr std::size_t pos_after(std::size_t p, std::size_t j, std::size_t len) {
  return p <= j ? p : len - p + j;
}

// Old position of the vertex found at position i after rotating at j.
constexpr std::size_t vertex_at_after(std::size_t i, std::size_t j, std::size_t len) {
  return i <= j ? i : len - i + j;
}

struct RotationRecord {
  std::uint32_t len_at = 0;
  std::uint32_t at = 0;

  friend bool operator==(const RotationRecord&, const RotationRecord&) = default;
};

enum class Direction : std::uint8_t { forward, reversed };

// {s, n, d}: `n` consecutive stored positions starting at `s`, read forward or
// backward.
struct Block {
  std::uint32_t s = 0;
  std::uint32_t n = 0;
  Direction d = Direction::forward;

  friend bool operator==(const Block&, const Block&) = default;
};

// Snapshots of the block list while the records are folded in, one per
// "add", "split" and "rotate" stage of each record.
struct BlockTrace {
  struct Stage {
    std::size_t record = 0;
    enum class Kind { add, split, rotate } kind = Kind::add;
    std::vector<Block> blocks;
  };
  std::vector<Stage> stages;
};

// Folds one record into `blocks`, which cover positions [0, covered).
void fold_record(std::vector<Block>& blocks, std::size_t& covered, RotationRecord rec, BlockTrace* trace = nullptr,
                 std::size_t record_index = 0);

// Folds `records` (oldest first) into a block list covering 0..len-1.
std::vector<Block> build_blocks(std::span<const RotationRecord> records, std::size_t len,
                                BlockTrace* trace = nullptr);

// Position bookkeeping by literal replay of the records, oldest first for
// positions and newest first for vertices. PathState answers the same
// queries from its block index.
std::size_t replay_pos(std::span<const RotationRecord> records, std::size_t stored);
std::size_t replay_stored(std::span<const RotationRecord> records, std::size_t virtual_index);

// A simple path over vertex ids with lazily applied rotations.
class PathState {
 public:
  explicit PathState(std::size_t vertex_count);

  std::size_t len() const { return len_; }
  std::size_t vertex_count() const { return pos_.size(); }
  bool empty() const { return len_ == 0; }
  bool contains(VertexId v) const { return pos_[v] != kOffPath; }

  std::span<const VertexId> stored_order() const { return {order_.data(), len_}; }
  Position stored_pos(VertexId v) const { return pos_[v]; }
  std::span<const RotationRecord> deferred() const { return deferred_; }

  Position virtual_pos(VertexId v) const;
  VertexId virtual_vertex(std::size_t i) const;
  VertexId endpoint() const { return virtual_vertex(len_ - 1); }
  // Logical path after all deferred rotations, without flushing.
  std::vector<VertexId> virtual_path() const;

  // Unchecked primitives; the graph-aware overloads below validate first.
  void extend(VertexId v);
  void apply_rotation_eager(std::size_t j);
  void record_rotation(std::size_t j);
  void flush();

  template <typename Graph>
  void extend(const Graph& g, VertexId v) {
    if (v >= vertex_count()) throw PathError("vertex id out of range");
    if (contains(v)) throw PathError("vertex already on path");
    if (len_ > 0 && !g.adjacent(endpoint(), v)) throw PathError("vertex not adjacent to endpoint");
    extend(v);
  }

  template <typename Graph>
  void apply_rotation_eager(const Graph& g, std::size_t j) {
    if (!deferred_.empty()) throw PathError("eager rotation with pending deferred rotations");
    check_rotation(g, j);
    apply_rotation_eager(j);
  }

  template <typename Graph>
  void record_rotation(const Graph& g, std::size_t j) {
    check_rotation(g, j);
    record_rotation(j);
  }

  // Writes to the order table caused by rotations (eager reversal or flush
  // copy); appends by extension are not counted.
  std::uint64_t order_writes() const { return order_writes_; }
  std::uint64_t flush_count() const { return flushes_; }

 private:
  template <typename Graph>
  void check_rotation(const Graph& g, std::size_t j) const {
    if (len_ < 2 || j + 1 >= len_) throw PathError("rotation position out of range");
    const VertexId end = endpoint();
    const VertexId at = virtual_vertex(j);
    if (at == end || !g.adjacent(end, at)) throw PathError("rotation point not adjacent to endpoint");
  }

  void rebuild_index() const;

  std::vector<VertexId> order_;
  std::vector<Position> pos_;
  std::size_t len_ = 0;
  std::vector<RotationRecord> deferred_;
  // Blocks of the deferred records folded so far, covering [0, covered_),
  // with the virtual start of each block and block ids sorted by `s`.
  std::vector<Block> blocks_;
  std::size_t covered_ = 0;
  // Rebuilt lazily on the first query after a record.
  mutable std::vector<std::uint32_t> virtual_start_;
  mutable std::vector<std::uint32_t> by_stored_;
  mutable bool index_stale_ = false;
  std::uint64_t order_writes_ = 0;
  std::uint64_t flushes_ = 0;
};

}  // namespace middlevels

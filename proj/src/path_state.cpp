#include "middlevels/path_state.hpp"

#include <algorithm>

namespace middlevels {

void fold_record(std::vector<Block>& blocks, std::size_t& covered, RotationRecord rec, BlockTrace* trace,
                 std::size_t record_index) {
  using Kind = BlockTrace::Stage::Kind;
  auto snapshot = [&](Kind kind) {
    if (trace) trace->stages.push_back({record_index, kind, blocks});
  };
  if (rec.len_at < covered || std::size_t{rec.at} + 1 >= rec.len_at) {
    throw PathError("inconsistent rotation record");
  }
  // Vertices appended by extension since the previous record.
  if (rec.len_at > covered) {
    blocks.push_back({static_cast<std::uint32_t>(covered), static_cast<std::uint32_t>(rec.len_at - covered),
                      Direction::forward});
    covered = rec.len_at;
  }
  snapshot(Kind::add);

  // The new endpoint sits at position at+1; cut so that a block starts there.
  const std::size_t cut = std::size_t{rec.at} + 1;
  std::size_t offset = 0;
  std::size_t b = 0;
  while (offset + blocks[b].n <= cut) offset += blocks[b++].n;
  if (offset < cut) {
    const Block whole = blocks[b];
    const auto head = static_cast<std::uint32_t>(cut - offset);
    Block first{}, second{};
    if (whole.d == Direction::forward) {
      first = {whole.s, head, Direction::forward};
      second = {whole.s + head, whole.n - head, Direction::forward};
    } else {
      first = {whole.s + whole.n - head, head, Direction::reversed};
      second = {whole.s, whole.n - head, Direction::reversed};
    }
    blocks[b] = first;
    blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(b) + 1, second);
    ++b;
  }
  snapshot(Kind::split);

  std::reverse(blocks.begin() + static_cast<std::ptrdiff_t>(b), blocks.end());
  for (auto it = blocks.begin() + static_cast<std::ptrdiff_t>(b); it != blocks.end(); ++it) {
    it->d = it->d == Direction::forward ? Direction::reversed : Direction::forward;
  }
  snapshot(Kind::rotate);
}

std::vector<Block> build_blocks(std::span<const RotationRecord> records, std::size_t len, BlockTrace* trace) {
  std::vector<Block> blocks;
  std::size_t covered = 0;
  for (std::size_t r = 0; r < records.size(); ++r) {
    if (records[r].len_at > len) throw PathError("rotation record beyond path length");
    fold_record(blocks, covered, records[r], trace, r);
  }
  if (len > covered) {
    blocks.push_back(
        {static_cast<std::uint32_t>(covered), static_cast<std::uint32_t>(len - covered), Direction::forward});
  }
  return blocks;
}

std::size_t replay_pos(std::span<const RotationRecord> records, std::size_t p) {
  for (const RotationRecord& r : records) {
    if (p < r.len_at) p = pos_after(p, r.at, r.len_at);
  }
  return p;
}

std::size_t replay_stored(std::span<const RotationRecord> records, std::size_t i) {
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    if (i < it->len_at) i = vertex_at_after(i, it->at, it->len_at);
  }
  return i;
}

PathState::PathState(std::size_t vertex_count) : order_(vertex_count), pos_(vertex_count, kOffPath) {
  if (vertex_count >= kOffPath) throw PathError("too many vertices for 32-bit positions");
}

Position PathState::virtual_pos(VertexId v) const {
  const Position p = pos_[v];
  // Positions past the last record were appended after it and have not moved.
  if (p == kOffPath || p >= covered_) return p;
  if (index_stale_) rebuild_index();
  auto it = std::upper_bound(by_stored_.begin(), by_stored_.end(), p,
                             [&](Position x, std::uint32_t b) { return x < blocks_[b].s; });
  const std::uint32_t b = *(it - 1);
  const Block& blk = blocks_[b];
  const std::uint32_t off = p - blk.s;
  return virtual_start_[b] + (blk.d == Direction::forward ? off : blk.n - 1 - off);
}

VertexId PathState::virtual_vertex(std::size_t i) const {
  if (i >= len_) throw PathError("position beyond path end");
  if (i >= covered_) return order_[i];
  if (index_stale_) rebuild_index();
  auto it = std::upper_bound(virtual_start_.begin(), virtual_start_.end(), i);
  const auto b = static_cast<std::size_t>(it - virtual_start_.begin()) - 1;
  const Block& blk = blocks_[b];
  const auto off = static_cast<std::uint32_t>(i - virtual_start_[b]);
  return order_[blk.d == Direction::forward ? blk.s + off : blk.s + blk.n - 1 - off];
}

void PathState::rebuild_index() const {
  virtual_start_.resize(blocks_.size());
  by_stored_.resize(blocks_.size());
  std::uint32_t start = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    virtual_start_[b] = start;
    start += blocks_[b].n;
    by_stored_[b] = static_cast<std::uint32_t>(b);
  }
  std::sort(by_stored_.begin(), by_stored_.end(),
            [&](std::uint32_t a, std::uint32_t b) { return blocks_[a].s < blocks_[b].s; });
  index_stale_ = false;
}

std::vector<VertexId> PathState::virtual_path() const {
  std::vector<VertexId> out(len_);
  for (std::size_t i = 0; i < len_; ++i) out[i] = virtual_vertex(i);
  return out;
}

void PathState::extend(VertexId v) {
  if (len_ >= order_.size()) throw PathError("path already spans every vertex");
  order_[len_] = v;
  pos_[v] = static_cast<Position>(len_);
  ++len_;
}

void PathState::apply_rotation_eager(std::size_t j) {
  if (!deferred_.empty()) throw PathError("eager rotation with pending deferred rotations");
  if (j + 1 >= len_) throw PathError("rotation position out of range");
  std::reverse(order_.begin() + static_cast<std::ptrdiff_t>(j) + 1,
               order_.begin() + static_cast<std::ptrdiff_t>(len_));
  for (std::size_t i = j + 1; i < len_; ++i) pos_[order_[i]] = static_cast<Position>(i);
  order_writes_ += len_ - j - 1;
}

void PathState::record_rotation(std::size_t j) {
  if (j + 1 >= len_) throw PathError("rotation position out of range");
  const RotationRecord rec{static_cast<std::uint32_t>(len_), static_cast<std::uint32_t>(j)};
  fold_record(blocks_, covered_, rec);
  deferred_.push_back(rec);
  index_stale_ = true;
}

void PathState::flush() {
  if (deferred_.empty()) return;
  std::vector<Block> blocks = std::move(blocks_);
  if (len_ > covered_) {
    blocks.push_back(
        {static_cast<std::uint32_t>(covered_), static_cast<std::uint32_t>(len_ - covered_), Direction::forward});
  }
  // The position table doubles as the copy destination; it is rebuilt from
  // the new order afterwards.
  std::size_t out = 0;
  for (const Block& b : blocks) {
    if (b.d == Direction::forward) {
      for (std::uint32_t t = 0; t < b.n; ++t) pos_[out++] = order_[b.s + t];
    } else {
      for (std::uint32_t t = b.n; t-- > 0;) pos_[out++] = order_[b.s + t];
    }
  }
  order_writes_ += len_;
  order_.swap(pos_);
  std::fill(pos_.begin(), pos_.end(), kOffPath);
  for (std::size_t i = 0; i < len_; ++i) pos_[order_[i]] = static_cast<Position>(i);
  deferred_.clear();
  blocks_.clear();
  covered_ = 0;
  rebuild_index();
  ++flushes_;
}

}  // namespace middlevels

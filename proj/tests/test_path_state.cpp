#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "middlevels/path_state.hpp"
#include "oracle.hpp"

using namespace middlevels;

namespace {

ExplicitGraph complete_graph(std::size_t n) {
  ExplicitGraph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

ExplicitGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  ExplicitGraph g(n);
  std::bernoulli_distribution coin(p);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// The 40-vertex path and the three saved rotations of the worked flush
// example: {35,15}, {36,9}, {40,32}.
PathState worked_example() {
  PathState p(40);
  for (VertexId v = 0; v < 35; ++v) p.extend(v);
  p.record_rotation(15);
  p.extend(35);
  p.record_rotation(9);
  for (VertexId v = 36; v < 40; ++v) p.extend(v);
  p.record_rotation(32);
  return p;
}

std::vector<VertexId> worked_example_final() {
  std::vector<VertexId> out;
  for (VertexId v = 0; v <= 9; ++v) out.push_back(v);
  out.push_back(35);
  for (VertexId v = 16; v <= 34; ++v) out.push_back(v);
  for (VertexId v : {15, 14, 13, 39, 38, 37, 36, 10, 11, 12}) out.push_back(v);
  return out;
}

constexpr auto F = Direction::forward;
constexpr auto Rv = Direction::reversed;

}  // namespace

TEST_CASE("position maps") {
  CHECK(pos_after(15, 15, 35) == 15);
  CHECK(pos_after(34, 15, 35) == 16);
  CHECK(pos_after(16, 15, 35) == 34);
  CHECK(vertex_at_after(16, 15, 35) == 34);
  CHECK(vertex_at_after(10, 15, 35) == 10);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t len = 2 + rng() % 500;
    const std::size_t j = rng() % (len - 1);
    const std::size_t i = rng() % len;
    CHECK(pos_after(vertex_at_after(i, j, len), j, len) == i);
  }
}

TEST_CASE("eager rotation") {
  const auto g = complete_graph(6);
  PathState p(6);
  for (VertexId v = 0; v < 6; ++v) p.extend(g, v);
  p.apply_rotation_eager(g, 2);
  CHECK(p.virtual_path() == std::vector<VertexId>{0, 1, 2, 5, 4, 3});
  CHECK(p.virtual_pos(5) == 3);
  CHECK(p.endpoint() == 3);
  p.apply_rotation_eager(g, 2);
  CHECK(p.virtual_path() == std::vector<VertexId>{0, 1, 2, 3, 4, 5});
  CHECK(p.order_writes() == 6);
  CHECK_THROWS_AS(p.apply_rotation_eager(g, 5), PathError);
  CHECK_THROWS_AS(p.apply_rotation_eager(g, 6), PathError);

  // s..v w..x y u with an extra edge x-u: rotating at x makes y the endpoint.
  ExplicitGraph fig(5);
  for (VertexId v = 0; v + 1 < 5; ++v) fig.add_edge(v, v + 1);
  fig.add_edge(4, 1);
  PathState q(5);
  for (VertexId v = 0; v < 5; ++v) q.extend(fig, v);
  CHECK_THROWS_AS(q.apply_rotation_eager(fig, 0), PathError);
  q.apply_rotation_eager(fig, 1);
  CHECK(q.virtual_path() == std::vector<VertexId>{0, 1, 4, 3, 2});
  CHECK(q.endpoint() == 2);

  PathState r(6);
  for (VertexId v = 0; v < 4; ++v) r.extend(v);
  r.record_rotation(1);
  CHECK_THROWS_AS(r.apply_rotation_eager(1), PathError);
}

TEST_CASE("extend") {
  ExplicitGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  PathState p(4);
  p.extend(g, 0);
  CHECK(p.len() == 1);
  CHECK(p.endpoint() == 0);
  p.extend(g, 1);
  p.extend(g, 2);
  CHECK(p.len() == 3);
  CHECK(p.virtual_pos(2) == 2);
  CHECK_THROWS_AS(p.extend(g, 1), PathError);  // on path
  CHECK_THROWS_AS(p.extend(g, 3), PathError);  // not adjacent to 2
  CHECK(p.virtual_pos(3) == kOffPath);
  CHECK_FALSE(p.contains(3));
}

TEST_CASE("worked flush example: block stages") {
  const std::vector<RotationRecord> records{{35, 15}, {36, 9}, {40, 32}};
  BlockTrace trace;
  const auto blocks = build_blocks(records, 40, &trace);
  using Kind = BlockTrace::Stage::Kind;
  auto stage = [&](std::size_t r, Kind kind) {
    for (const auto& s : trace.stages) {
      if (s.record == r && s.kind == kind) return s.blocks;
    }
    FAIL("missing stage");
    return std::vector<Block>{};
  };

  CHECK(stage(0, Kind::add) == std::vector<Block>{{0, 35, F}});
  CHECK(stage(0, Kind::split) == std::vector<Block>{{0, 16, F}, {16, 19, F}});
  CHECK(stage(0, Kind::rotate) == std::vector<Block>{{0, 16, F}, {16, 19, Rv}});

  CHECK(stage(1, Kind::add) == std::vector<Block>{{0, 16, F}, {16, 19, Rv}, {35, 1, F}});
  CHECK(stage(1, Kind::split) == std::vector<Block>{{0, 10, F}, {10, 6, F}, {16, 19, Rv}, {35, 1, F}});
  CHECK(stage(1, Kind::rotate) == std::vector<Block>{{0, 10, F}, {35, 1, Rv}, {16, 19, F}, {10, 6, Rv}});

  CHECK(stage(2, Kind::add) ==
        std::vector<Block>{{0, 10, F}, {35, 1, Rv}, {16, 19, F}, {10, 6, Rv}, {36, 4, F}});
  CHECK(stage(2, Kind::split) ==
        std::vector<Block>{{0, 10, F}, {35, 1, Rv}, {16, 19, F}, {13, 3, Rv}, {10, 3, Rv}, {36, 4, F}});
  CHECK(stage(2, Kind::rotate) ==
        std::vector<Block>{{0, 10, F}, {35, 1, Rv}, {16, 19, F}, {13, 3, Rv}, {36, 4, Rv}, {10, 3, F}});
  CHECK(blocks == stage(2, Kind::rotate));
}

TEST_CASE("worked flush example: virtual reads and final order") {
  PathState p = worked_example();
  CHECK(p.deferred().size() == 3);
  CHECK(p.deferred()[1] == RotationRecord{36, 9});
  CHECK(p.virtual_pos(35) == 10);
  CHECK(p.virtual_vertex(10) == 35);
  CHECK(p.virtual_vertex(39) == 12);
  CHECK(p.virtual_path() == worked_example_final());
  for (std::size_t i = 0; i < 40; ++i) {
    CHECK(replay_stored(p.deferred(), i) == p.virtual_vertex(i));
  }

  p.flush();
  CHECK(p.deferred().empty());
  CHECK(std::vector<VertexId>(p.stored_order().begin(), p.stored_order().end()) == worked_example_final());
  CHECK(p.order_writes() == 40);
  for (VertexId v = 0; v < 40; ++v) CHECK(p.stored_order()[p.stored_pos(v)] == v);

  const auto before = std::vector<VertexId>(p.stored_order().begin(), p.stored_order().end());
  p.flush();  // nothing deferred
  CHECK(std::vector<VertexId>(p.stored_order().begin(), p.stored_order().end()) == before);
  CHECK(p.flush_count() == 1);
}

TEST_CASE("record_rotation validates against the virtual path") {
  const auto g = complete_graph(8);
  PathState p(8);
  for (VertexId v = 0; v < 6; ++v) p.extend(g, v);
  p.record_rotation(g, 2);
  CHECK(p.endpoint() == 3);
  CHECK(p.deferred().back() == RotationRecord{6, 2});
  CHECK_THROWS_AS(p.record_rotation(g, 5), PathError);

  ExplicitGraph line(4);
  for (VertexId v = 0; v + 1 < 4; ++v) line.add_edge(v, v + 1);
  PathState q(4);
  for (VertexId v = 0; v < 4; ++v) q.extend(line, v);
  CHECK_THROWS_AS(q.record_rotation(line, 0), PathError);
}

TEST_CASE("deferred rotations match eager rotations on random graphs") {
  std::mt19937_64 rng(2024);
  std::vector<VertexId> nb;
  for (int script = 0; script < 500; ++script) {
    const std::size_t n = 2 + rng() % 80;
    const auto g = random_graph(n, 0.15 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng);
    PathState lazy(n);
    PathState eager(n);
    std::vector<std::uint32_t> reference;
    const auto start = static_cast<VertexId>(rng() % n);
    lazy.extend(g, start);
    eager.extend(g, start);
    reference.push_back(start);
    const std::size_t flush_every = 1 + rng() % 8;

    for (int step = 0; step < 60; ++step) {
      const VertexId end = reference.back();
      g.neighbors(end, nb);
      std::vector<VertexId> fresh, rot;
      for (VertexId w : nb) {
        if (!lazy.contains(w)) {
          fresh.push_back(w);
        } else if (w != end) {
          rot.push_back(w);
        }
      }
      const bool try_rotate = !rot.empty() && (fresh.empty() || rng() % 2 == 0);
      if (try_rotate) {
        const VertexId w = rot[rng() % rot.size()];
        const std::size_t j = lazy.virtual_pos(w);
        if (j + 1 >= reference.size()) continue;
        lazy.record_rotation(g, j);
        eager.apply_rotation_eager(g, j);
        oracle::rotate_path(reference, j);
        if (lazy.deferred().size() >= flush_every) lazy.flush();
      } else if (!fresh.empty()) {
        const VertexId w = fresh[rng() % fresh.size()];
        lazy.extend(g, w);
        eager.extend(g, w);
        reference.push_back(w);
      } else {
        break;
      }
      REQUIRE(lazy.virtual_path() == reference);
      REQUIRE(eager.virtual_path() == reference);
      for (std::size_t i = 0; i < reference.size(); ++i) {
        REQUIRE(lazy.virtual_pos(reference[i]) == i);
        REQUIRE(lazy.stored_order()[replay_stored(lazy.deferred(), i)] == reference[i]);
        REQUIRE(replay_pos(lazy.deferred(), lazy.stored_pos(reference[i])) == i);
      }
    }
    lazy.flush();
    REQUIRE(std::vector<VertexId>(lazy.stored_order().begin(), lazy.stored_order().end()) == reference);
  }
}

TEST_CASE("flush writes each on-path slot once") {
  std::mt19937_64 rng(99);
  const auto g = complete_graph(150);
  PathState p(150);
  for (VertexId v = 0; v < 150; ++v) p.extend(g, v);
  std::multiset<VertexId> before(p.stored_order().begin(), p.stored_order().end());
  for (int i = 0; i < 40; ++i) p.record_rotation(g, rng() % 148);
  CHECK(p.order_writes() == 0);
  p.flush();
  CHECK(p.order_writes() == 150);
  CHECK(std::multiset<VertexId>(p.stored_order().begin(), p.stored_order().end()) == before);
  CHECK(p.len() == 150);
}

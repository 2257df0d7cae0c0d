#include "middlevels/verify.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>
#include <vector>

#include "middlevels/binomial.hpp"

namespace middlevels {

namespace {

// Rotations are recomputed here from scratch instead of reusing canonical().
bool same_necklace(std::uint64_t a, std::uint64_t b, int n) {
  const std::uint64_t mask = low_mask(n);
  std::uint64_t cur = a;
  for (int i = 0; i < n; ++i) {
    if (cur == b) return true;
    cur = ((cur >> 1) | ((cur & 1U) << (n - 1))) & mask;
  }
  return false;
}

bool least_rotation(std::uint64_t a, int n) {
  const std::uint64_t mask = low_mask(n);
  std::uint64_t cur = a;
  for (int i = 1; i < n; ++i) {
    cur = ((cur >> 1) | ((cur & 1U) << (n - 1))) & mask;
    if (cur < a) return false;
  }
  return true;
}

Verdict fail(FailReason r, std::size_t i, std::string detail) { return {r, i, std::move(detail)}; }

}  // namespace

std::string_view to_string(FailReason r) {
  switch (r) {
    case FailReason::none: return "pass";
    case FailReason::wrong_length: return "wrong-length";
    case FailReason::duplicate: return "duplicate";
    case FailReason::bad_endpoint: return "bad-endpoint";
    case FailReason::non_edge: return "non-edge";
    case FailReason::weight_violation: return "weight-violation";
    case FailReason::bad_width: return "bad-width";
    case FailReason::not_canonical: return "not-canonical";
  }
  return "?";
}

bool necklace_adjacent(BitString x, BitString y) {
  if (x.n != y.n) return false;
  for (int p = 0; p < x.n; ++p) {
    if (same_necklace(x.bits ^ (std::uint64_t{1} << p), y.bits, x.n)) return true;
  }
  return false;
}

Verdict verify_r_path(std::span<const RVertex> path, int k) {
  const int n = 2 * k + 1;
  const BigInt expected = big_binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) / n;
  if (BigInt(path.size()) != expected) {
    return fail(FailReason::wrong_length, path.size(),
                "expected " + expected.str() + " vertices, got " + std::to_string(path.size()));
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    const BitString x = path[i].rep;
    if (x.n != n || path[i].k != k || (x.bits & ~low_mask(n)) != 0) {
      return fail(FailReason::bad_width, i, "entry is not a " + std::to_string(n) + "-bit string");
    }
    if (std::popcount(x.bits) != k) return fail(FailReason::weight_violation, i, "weight is not k");
    if (!least_rotation(x.bits, n)) return fail(FailReason::not_canonical, i, "not a least rotation");
  }

  std::vector<std::uint64_t> sorted;
  sorted.reserve(path.size());
  for (const auto& v : path) sorted.push_back(v.rep.bits);
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i].rep.bits == *it) {
        // report the second occurrence
        for (std::size_t j = i + 1; j < path.size(); ++j) {
          if (path[j].rep.bits == *it) return fail(FailReason::duplicate, j, "vertex repeated");
        }
      }
    }
  }

  // Endpoints: weight-k necklaces of 0^k 1^{k+1} (complemented) and 0 (01)^k.
  const std::uint64_t first = low_mask(k);
  std::uint64_t last = 0;
  for (int i = 0; i < k; ++i) last = (last << 2) | 1U;
  if (!same_necklace(path.front().rep.bits, first, n)) {
    return fail(FailReason::bad_endpoint, 0, "path does not start at the 0^{k+1}1^k class");
  }
  if (!same_necklace(path.back().rep.bits, last, n)) {
    return fail(FailReason::bad_endpoint, path.size() - 1, "path does not end at the 0(01)^k class");
  }

  // R_n adjacency: a flip of the weight-k member lands in the complement of
  // the other class's weight-k member.
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const BitString other{~path[i + 1].rep.bits & low_mask(n), n};
    if (!necklace_adjacent(path[i].rep, other)) {
      return fail(FailReason::non_edge, i, "entries " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                               " are not adjacent");
    }
  }
  return {};
}

Verdict verify_m_cycle(std::span<const BitString> cycle, int k) {
  const int n = 2 * k + 1;
  const BigInt expected = 2 * big_binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
  if (BigInt(cycle.size()) != expected) {
    return fail(FailReason::wrong_length, cycle.size(),
                "expected " + expected.str() + " vertices, got " + std::to_string(cycle.size()));
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const BitString x = cycle[i];
    if (x.n != n || (x.bits & ~low_mask(n)) != 0) return fail(FailReason::bad_width, i, "wrong bit width");
    const int w = std::popcount(x.bits);
    if (w != k && w != k + 1) return fail(FailReason::weight_violation, i, "weight outside {k, k+1}");
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const std::size_t j = (i + 1) % cycle.size();
    if (std::popcount(cycle[i].bits ^ cycle[j].bits) != 1) {
      return fail(FailReason::non_edge, i,
                  "entries " + std::to_string(i) + " and " + std::to_string(j) + " differ in other than one bit");
    }
  }
  std::vector<std::uint64_t> sorted;
  sorted.reserve(cycle.size());
  for (const auto& x : cycle) sorted.push_back(x.bits);
  std::sort(sorted.begin(), sorted.end());
  const auto distinct = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  if (BigInt(distinct) != expected) {
    std::size_t at = 0;
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (!seen.insert(cycle[i].bits).second) {
        at = i;
        break;
      }
    }
    return fail(FailReason::duplicate, at, "only " + std::to_string(distinct) + " distinct vertices");
  }
  return {};
}

}  // namespace middlevels

#include "middlevels/necklace.hpp"

#include <algorithm>
#include <bit>
#include <new>

#include "middlevels/binomial.hpp"

namespace middlevels {

namespace {

inline std::uint64_t rotl1(std::uint64_t x, int n, std::uint64_t mask) {
  return ((x << 1) | (x >> (n - 1))) & mask;
}

void check_length(int n) {
  if (n < 1 || n > kMaxLength) {
    throw std::invalid_argument("bit string length must be in [1, 63], got " + std::to_string(n));
  }
}

// Gosper's hack: next larger word with the same popcount.
inline std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

int weight(BitString x) { return std::popcount(x.bits & low_mask(x.n)); }

BitString rotate(BitString x, std::uint64_t i) {
  if (x.n <= 1) return x;
  const int s = static_cast<int>(i % static_cast<std::uint64_t>(x.n));
  if (s == 0) return x;
  const std::uint64_t mask = low_mask(x.n);
  return {((x.bits << s) | (x.bits >> (x.n - s))) & mask, x.n};
}

BitString complement(BitString x) { return {~x.bits & low_mask(x.n), x.n}; }

BitString canonical(BitString x) {
  if (x.n <= 1) return x;
  const std::uint64_t mask = low_mask(x.n);
  std::uint64_t best = x.bits;
  std::uint64_t cur = x.bits;
  for (int i = 1; i < x.n; ++i) {
    cur = rotl1(cur, x.n, mask);
    best = std::min(best, cur);
  }
  return {best, x.n};
}

bool is_canonical(BitString x) {
  if (x.n <= 1) return true;
  const std::uint64_t mask = low_mask(x.n);
  std::uint64_t cur = x.bits;
  for (int i = 1; i < x.n; ++i) {
    cur = rotl1(cur, x.n, mask);
    if (cur < x.bits) return false;
  }
  return true;
}

BitString parse_bits(std::string_view text) {
  check_length(static_cast<int>(text.size()));
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("not a binary digit: '" + std::string(1, c) + "'");
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return {bits, static_cast<int>(text.size())};
}

std::string to_string(BitString x) {
  std::string out(static_cast<std::size_t>(x.n), '0');
  for (int i = 0; i < x.n; ++i) {
    if ((x.bits >> (x.n - 1 - i)) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

RVertex rho_rep(BitString x, int k) {
  if (x.n != 2 * k + 1) {
    throw InvalidWeight("string length " + std::to_string(x.n) + " does not match k=" + std::to_string(k));
  }
  const int w = weight(x);
  if (w == k) return {canonical(x), k};
  if (w == k + 1) return {canonical(complement(x)), k};
  throw InvalidWeight("weight " + std::to_string(w) + " outside {" + std::to_string(k) + ", " +
                      std::to_string(k + 1) + "}");
}

VertexTable::VertexTable(int k) : k_(k) {
  if (k < 1 || 2 * k + 1 > kMaxLength) {
    throw std::invalid_argument("k must be in [1, 31], got " + std::to_string(k));
  }
  const int len = n();
  const std::uint64_t expected = catalan(k);
  try {
    reps_.reserve(expected);
  } catch (const std::bad_alloc&) {
    throw std::length_error("cannot allocate vertex table for k=" + std::to_string(k));
  }
  // Every canonical weight-k word starts with a 0, so the scan can stop at
  // the first word with the top bit set.
  const std::uint64_t top = std::uint64_t{1} << (len - 1);
  for (std::uint64_t x = (std::uint64_t{1} << k) - 1; x < top; x = next_combination(x)) {
    if (is_canonical({x, len})) reps_.push_back(x);
  }
}

std::size_t VertexTable::find(std::uint64_t word) const {
  // Branchless lower bound; the search runs for every neighbor the heuristic
  // inspects.
  const std::uint64_t* base = reps_.data();
  std::size_t count = reps_.size();
  if (count == 0) return 0;
  while (count > 1) {
    const std::size_t half = count / 2;
    base = base[half] < word ? base + half : base;
    count -= half;
  }
  const std::size_t i = static_cast<std::size_t>(base - reps_.data()) + (*base < word);
  if (i == reps_.size() || reps_[i] != word) return reps_.size();
  return i;
}

std::size_t VertexTable::index_of(const RVertex& v) const {
  if (v.k != k_ || v.rep.n != n()) throw NotFound("vertex belongs to a different level");
  const std::size_t i = find(v.rep.bits);
  if (i == reps_.size()) throw NotFound("not a canonical weight-k representative: " + to_string(v.rep));
  return i;
}

std::vector<RVertex> enumerate_vertices(int k) {
  VertexTable table(k);
  std::vector<RVertex> out;
  out.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) out.push_back(table[i]);
  return out;
}

}  // namespace middlevels

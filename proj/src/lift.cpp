#include "middlevels/lift.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "middlevels/verify.hpp"

namespace middlevels {

namespace {

// Offset f with rotate(rep, f) == w, or -1 when w lies in another necklace.
int rotation_offset(BitString rep, std::uint64_t w) {
  for (int f = 0; f < rep.n; ++f) {
    if (rotate(rep, static_cast<std::uint64_t>(f)).bits == w) return f;
  }
  return -1;
}

}  // namespace

NCycle link_to_n_cycle(std::span<const RVertex> path, int k) {
  if (const Verdict v = verify_r_path(path, k); !v) {
    throw LiftError("R path rejected (" + std::string(to_string(v.reason)) + " at " + std::to_string(v.index) +
                    "): " + v.detail);
  }
  const std::size_t m = path.size();
  std::vector<BitString> lifted(m);
  for (std::size_t i = 0; i < m; ++i) {
    // Weights alternate k, k+1, k, ... along the lifted path.
    lifted[i] = i % 2 == 0 ? path[i].rep : canonical(complement(path[i].rep));
    if (i > 0 && !necklace_adjacent(lifted[i - 1], lifted[i])) {
      throw LiftError("lifted necklaces " + std::to_string(i - 1) + " and " + std::to_string(i) + " not adjacent");
    }
  }
  for (std::size_t i : {std::size_t{0}, m - 1}) {
    if (!necklace_adjacent(lifted[i], complement(lifted[i]))) {
      throw LiftError("no loop at path position " + std::to_string(i));
    }
  }

  NCycle out{k, {}};
  out.seq.reserve(2 * m);
  out.seq.insert(out.seq.end(), lifted.begin(), lifted.end());
  for (std::size_t i = m; i-- > 0;) out.seq.push_back(canonical(complement(lifted[i])));
  return out;
}

MCycle lift_to_m_cycle(const NCycle& cycle, LiftStats* stats) {
  const int k = cycle.k;
  const int n = 2 * k + 1;
  const auto& c = cycle.seq;
  const std::size_t L = c.size();
  if (L < 2 || L % 2 != 0) throw LiftError("necklace cycle must have even length >= 2");
  for (const BitString& x : c) {
    const int w = weight(x);
    if (x.n != n || (w != k && w != k + 1) || !is_canonical(x)) {
      throw LiftError("necklace cycle entry is not a canonical middle-levels necklace");
    }
  }

  // Depth-first over transitions. A failed (transition, offset) state is
  // remembered: everything after it depends only on that pair.
  std::vector<int> offset(L, 0);
  std::vector<int> next_flip(L, 0);
  std::vector<bool> failed(L * static_cast<std::size_t>(n), false);
  std::uint64_t backtracks = 0;
  int delta = -1;
  std::size_t i = 0;
  while (delta < 0) {
    bool advanced = false;
    const std::uint64_t u = rotate(c[i], static_cast<std::uint64_t>(offset[i])).bits;
    const BitString& target = c[(i + 1) % L];
    while (next_flip[i] < n) {
      const int p = next_flip[i]++;
      const std::uint64_t w = u ^ (std::uint64_t{1} << (n - 1 - p));
      const int f = rotation_offset(target, w);
      if (f < 0) continue;
      if (i + 1 == L) {
        if (std::gcd(f, n) == 1) {
          delta = f;
          break;
        }
        ++backtracks;  // closes, but not into a single cycle
        continue;
      }
      if (failed[(i + 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(f)]) continue;
      offset[i + 1] = f;
      next_flip[i + 1] = 0;
      advanced = true;
      break;
    }
    if (delta >= 0) break;
    if (advanced) {
      ++i;
      continue;
    }
    failed[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(offset[i])] = true;
    if (i == 0) throw LiftError("no representative choice closes a single Hamilton cycle");
    --i;
    ++backtracks;
  }

  std::vector<std::uint64_t> pass(L);
  for (std::size_t j = 0; j < L; ++j) pass[j] = rotate(c[j], static_cast<std::uint64_t>(offset[j])).bits;

  MCycle out{k, {}};
  out.seq.reserve(L * static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const auto shift = static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(delta);
    for (std::uint64_t x : pass) out.seq.push_back(rotate(BitString{x, n}, shift));
  }

  // Start at 0^{k+1}1^k, heading to the neighbor whose flip position is lowest.
  const BitString start{low_mask(k), n};
  auto it = std::find(out.seq.begin(), out.seq.end(), start);
  if (it == out.seq.end()) throw LiftError("lifted cycle misses 0^{k+1}1^k");
  std::rotate(out.seq.begin(), it, out.seq.end());
  const auto flip_pos = [&](BitString x) { return n - 1 - std::countr_zero(x.bits ^ start.bits); };
  if (out.seq.size() > 2 && flip_pos(out.seq.back()) < flip_pos(out.seq[1])) {
    std::reverse(out.seq.begin() + 1, out.seq.end());
  }

  if (stats) *stats = {delta, backtracks};
  return out;
}

double Fraction::value() const { return static_cast<double>(num) / static_cast<double>(den); }

std::string Fraction::decimal(int places) const {
  BigInt whole = num / den;
  BigInt rem = num % den;
  std::string out = whole.str() + ".";
  for (int i = 0; i < places; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  return out;
}

Fraction cycle_length_bound(unsigned j) {
  const BigInt den = BigInt(1) << (2 * (j + 1));
  BigInt num = den - big_binomial(2 * (j + 1), j + 1);
  const BigInt g = boost::multiprecision::gcd(num, den);
  return {num / g, den / g};
}

}  // namespace middlevels

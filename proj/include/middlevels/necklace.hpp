#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace middlevels {

// An n-bit binary word. Character x_1 of the string x_1 x_2 ... x_n is the
// most significant of the low n bits, so numeric order on `bits` is the
// lexicographic order on strings.
struct BitString {
  std::uint64_t bits = 0;
  int n = 0;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;
};

constexpr int kMaxLength = 63;

inline std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

int weight(BitString x);

// sigma^i: cyclic left shift of the string, x_1 moves to the end.
BitString rotate(BitString x, std::uint64_t i);
BitString complement(BitString x);
// Least rotation under numeric order.
BitString canonical(BitString x);
bool is_canonical(BitString x);

// Parses / renders n binary characters, most significant (x_1) first.
BitString parse_bits(std::string_view text);
std::string to_string(BitString x);

// Canonical representative of a complementary necklace pair: the least
// rotation of the weight-k member.
struct RVertex {
  BitString rep;
  int k = 0;

  friend bool operator==(const RVertex&, const RVertex&) = default;
  friend auto operator<=>(const RVertex&, const RVertex&) = default;
};

class InvalidWeight : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

RVertex rho_rep(BitString x, int k);

class NotFound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Sorted table of all R_{2k+1} vertices; dense index = position in the table.
class VertexTable {
 public:
  explicit VertexTable(int k);

  int k() const { return k_; }
  int n() const { return 2 * k_ + 1; }
  std::size_t size() const { return reps_.size(); }

  // Raw canonical words, strictly increasing.
  std::span<const std::uint64_t> words() const { return reps_; }

  RVertex operator[](std::size_t i) const { return {BitString{reps_[i], n()}, k_}; }
  std::uint64_t word(std::size_t i) const { return reps_[i]; }

  std::size_t index_of(const RVertex& v) const;
  // Same lookup on a raw weight-k canonical word; returns size() if absent.
  std::size_t find(std::uint64_t word) const;

 private:
  int k_;
  std::vector<std::uint64_t> reps_;
};

std::vector<RVertex> enumerate_vertices(int k);

}  // namespace middlevels

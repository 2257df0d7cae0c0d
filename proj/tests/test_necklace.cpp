#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "middlevels/binomial.hpp"
#include "middlevels/necklace.hpp"
#include "oracle.hpp"

using namespace middlevels;

namespace {
BitString B(const char* s) { return parse_bits(s); }
}  // namespace

TEST_CASE("rotate follows sigma") {
  CHECK(rotate(B("11010"), 1) == B("10101"));
  CHECK(oracle::rotate("11010", 1) == "10101");
  CHECK(rotate(B("00000"), 3) == B("00000"));
  CHECK(rotate(B("11010"), 7) == rotate(B("11010"), 2));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 61);
    const BitString x{rng() & low_mask(n), n};
    CHECK(rotate(x, static_cast<std::uint64_t>(n)) == x);
    const auto i = rng() % 200;
    CHECK(to_string(rotate(x, i)) == oracle::rotate(to_string(x), i));
  }
}

TEST_CASE("complement") {
  CHECK(complement(B("00011")) == B("11100"));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 63);
    const BitString x{rng() & low_mask(n), n};
    CHECK(complement(complement(x)) == x);
    CHECK(weight(complement(x)) == n - weight(x));
  }
}

TEST_CASE("canonical is the least rotation") {
  CHECK(canonical(B("11010")) == B("01011"));
  CHECK(canonical(B("00011")) == B("00011"));
  CHECK(canonical(B("00000")) == B("00000"));

  // Exhaustive rotation invariance for every n <= 13, checked against the
  // string oracle.
  for (int n = 1; n <= 13; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const BitString x{bits, n};
      const BitString c = canonical(x);
      REQUIRE(to_string(c) == oracle::min_rotation(to_string(x)));
      REQUIRE(is_canonical(x) == (c == x));
      for (int i = 1; i < n; ++i) REQUIRE(canonical(rotate(x, static_cast<std::uint64_t>(i))) == c);
    }
  }
}

TEST_CASE("rho_rep picks the weight-k member of the pair") {
  CHECK(rho_rep(B("00111"), 2).rep == B("00011"));
  CHECK(rho_rep(B("00011"), 2).rep == B("00011"));
  CHECK_THROWS_AS(rho_rep(B("01111"), 2), InvalidWeight);
  CHECK_THROWS_AS(rho_rep(B("00001"), 2), InvalidWeight);
  CHECK_THROWS_AS(rho_rep(B("0001"), 2), InvalidWeight);

  // Constant on the whole 2n-element class.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 15);
    const int n = 2 * k + 1;
    const int w = k + static_cast<int>(rng() % 2);
    std::string s(static_cast<std::size_t>(n - w), '0');
    s += std::string(static_cast<std::size_t>(w), '1');
    std::shuffle(s.begin(), s.end(), rng);
    const BitString x = parse_bits(s);
    const RVertex r = rho_rep(x, k);
    CHECK(weight(r.rep) == k);
    CHECK(rho_rep(complement(x), k) == r);
    for (int i = 0; i < n; ++i) {
      CHECK(rho_rep(complement(rotate(x, static_cast<std::uint64_t>(i))), k) == r);
    }
  }
}

TEST_CASE("enumerate_vertices matches brute force and Catalan numbers") {
  const auto v2 = enumerate_vertices(2);
  REQUIRE(v2.size() == 2);
  CHECK(v2[0].rep == B("00011"));
  CHECK(v2[1].rep == B("00101"));

  for (int k = 1; k <= 6; ++k) {
    const auto table = enumerate_vertices(k);
    const auto brute = oracle::reduced_vertices(k);
    REQUIRE(table.size() == brute.size());
    for (std::size_t i = 0; i < table.size(); ++i) CHECK(to_string(table[i].rep) == brute[i]);
  }

  for (int k = 1; k <= 10; ++k) {
    const VertexTable table(k);
    CHECK(table.size() == catalan(static_cast<unsigned>(k)));
    // Aperiodicity: every representative has n distinct rotations.
    for (std::size_t i = 0; i < table.size(); ++i) {
      std::set<std::uint64_t> rots;
      for (int r = 0; r < table.n(); ++r) rots.insert(rotate(table[i].rep, static_cast<std::uint64_t>(r)).bits);
      REQUIRE(static_cast<int>(rots.size()) == table.n());
    }
    CHECK(std::is_sorted(table.words().begin(), table.words().end()));
    CHECK(std::adjacent_find(table.words().begin(), table.words().end()) == table.words().end());
  }
  CHECK(VertexTable(8).size() == 1430);
}

TEST_CASE("index_of inverts table access") {
  const VertexTable t2(2);
  CHECK(t2.index_of({B("00011"), 2}) == 0);
  CHECK(t2.index_of({B("00101"), 2}) == 1);
  CHECK_THROWS_AS(t2.index_of({B("01010"), 2}), NotFound);   // not canonical
  CHECK_THROWS_AS(t2.index_of({B("00111"), 2}), NotFound);   // wrong weight
  CHECK_THROWS_AS(t2.index_of({B("0011"), 2}), NotFound);    // wrong width

  const VertexTable t8(8);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t i = rng() % t8.size();
    CHECK(t8.index_of(t8[i]) == i);
  }
}

TEST_CASE("binomials are exact") {
  CHECK(binomial(35, 17) == 4537567650ULL);
  CHECK(catalan(17) == 129644790ULL);
  CHECK(middle_levels_order(17) == 9075135300ULL);
  CHECK(big_binomial(63, 31).str() == "916312070471295267");
  CHECK_THROWS_AS(binomial(100, 50), std::overflow_error);
  for (unsigned k = 1; k <= 20; ++k) CHECK(catalan(k) == binomial(2 * k, k) / (k + 1));
}

TEST_CASE("bit string text form") {
  CHECK(to_string(B("0010101")) == "0010101");
  CHECK_THROWS(parse_bits("01a1"));
  CHECK_THROWS(parse_bits(""));
}

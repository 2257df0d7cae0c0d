#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "middlevels/binomial.hpp"
#include "middlevels/necklace.hpp"

namespace middlevels {

class LiftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cyclic sequence of necklaces of N_{2k+1}, each given by its least rotation,
// alternating weights k and k+1.
struct NCycle {
  int k = 0;
  std::vector<BitString> seq;
};

// Cyclic sequence of vertices of M_{2k+1}.
struct MCycle {
  int k = 0;
  std::vector<BitString> seq;
};

struct LiftStats {
  int delta = 0;                // net rotation after one pass over the necklace cycle
  std::uint64_t backtracks = 0;
};

// Doubles a verified R_n Hamilton path into a Hamilton cycle of N_n: the
// weight-alternating lift of the path, then its complement in reverse, closed
// by the loops at both distinguished vertices.
NCycle link_to_n_cycle(std::span<const RVertex> path, int k);

// Walks the necklace cycle in M_n choosing, at each transition, the flip at
// the lowest string position (x_1 = position 0) that enters the next
// necklace, backtracking last-to-first until the net rotation delta is
// coprime to n. The n shifted copies of that walk form the Hamilton cycle,
// normalized to start at 0^{k+1}1^k.
MCycle lift_to_m_cycle(const NCycle& cycle, LiftStats* stats = nullptr);

// Exact 1 - C(2j+2, j+1) / 4^{j+1}, the guaranteed cycle fraction when
// M_{2i+1} is Hamiltonian for all i <= j.
struct Fraction {
  BigInt num;
  BigInt den;

  double value() const;
  std::string decimal(int places) const;  // truncated, not rounded
};
Fraction cycle_length_bound(unsigned j);

}  // namespace middlevels

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "middlevels/necklace.hpp"

namespace middlevels {

// Independent checkers. They rely on bit operations and exact binomials
// only, never on the quotient-graph adjacency used by the search.

enum class FailReason { none, wrong_length, duplicate, bad_endpoint, non_edge, weight_violation, bad_width, not_canonical };
std::string_view to_string(FailReason r);

struct Verdict {
  FailReason reason = FailReason::none;
  std::size_t index = 0;  // first offending entry, where meaningful
  std::string detail;

  bool ok() const { return reason == FailReason::none; }
  explicit operator bool() const { return ok(); }
};

// True when some single-bit flip of x is a rotation of y.
bool necklace_adjacent(BitString x, BitString y);

Verdict verify_r_path(std::span<const RVertex> path, int k);
Verdict verify_m_cycle(std::span<const BitString> cycle, int k);

}  // namespace middlevels

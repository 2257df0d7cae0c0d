#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace middlevels {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_binomial(unsigned n, unsigned r);

// Machine-word binomial; throws std::overflow_error if the result does not
// fit in 64 bits.
std::uint64_t binomial(unsigned n, unsigned r);

// C(2k+1, k) / (2k+1) = C(2k, k) / (k+1)
std::uint64_t catalan(unsigned k);

// |V(M_{2k+1})| = 2 C(2k+1, k)
std::uint64_t middle_levels_order(unsigned k);

}  // namespace middlevels

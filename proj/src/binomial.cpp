#include "middlevels/binomial.hpp"

#include <limits>
#include <stdexcept>

namespace middlevels {

BigInt big_binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt c = 1;
  for (unsigned i = 0; i < r; ++i) {
    c *= n - i;
    c /= i + 1;
  }
  return c;
}

std::uint64_t binomial(unsigned n, unsigned r) {
  const BigInt c = big_binomial(n, r);
  if (c > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t catalan(unsigned k) {
  const BigInt c = big_binomial(2 * k + 1, k) / (2 * k + 1);
  return static_cast<std::uint64_t>(c);
}

std::uint64_t middle_levels_order(unsigned k) {
  const BigInt c = 2 * big_binomial(2 * k + 1, k);
  if (c > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("middle levels order exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace middlevels

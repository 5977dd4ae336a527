#pragma once

// Closed-form bounds on the maximum progression length in A(n), in terms of
// the largest prime factor p and the radical P:
//   lower: max(ceil((p - 1) / 2), n / P)   (constructive)
//   upper: max(p - 1, n / P)               (structural)

#include <algorithm>
#include <cassert>
#include <cstdint>

#include "rrsap/arith.hpp"

namespace rrsap {

inline std::int64_t lower_bound(const factorization& f) {
  const std::int64_t p = largest_prime_factor(f);
  const std::int64_t rad = radical(f);
  assert(f.n % rad == 0);
  return std::max(p / 2, f.n / rad);  // p/2 == ceil((p-1)/2)
}

inline std::int64_t upper_bound(const factorization& f) {
  const std::int64_t p = largest_prime_factor(f);
  const std::int64_t rad = radical(f);
  assert(f.n % rad == 0);
  return std::max(p - 1, f.n / rad);
}

inline std::int64_t lower_bound(std::int64_t n) { return lower_bound(factorize(n)); }
inline std::int64_t upper_bound(std::int64_t n) { return upper_bound(factorize(n)); }

}  // namespace rrsap

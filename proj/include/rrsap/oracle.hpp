#pragma once

// Brute-force reference for the maximum progression length. This is the
// independent cross-check for exact_f: it enumerates every (first,
// difference) pair, tests membership with gcd directly, and shares no
// search code (and no residue-system machinery) with the solver.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rrsap/arith.hpp"
#include "rrsap/witness.hpp"

namespace rrsap {

inline ap_witness brute_force_f(std::int64_t n, std::int64_t oracle_limit = limits::oracle_n) {
  if (n < 2) throw std::domain_error("brute_force_f: n must be >= 2, got " + std::to_string(n));
  if (n > oracle_limit)
    throw std::domain_error("brute_force_f: n = " + std::to_string(n) +
                            " exceeds the oracle limit " + std::to_string(oracle_limit));
  std::int64_t best_len = 1;
  std::int64_t best_first = 1;
  std::int64_t best_diff = 1;
  for (std::int64_t q = 1; q <= n - 1; ++q) {
    for (std::int64_t first = 1; first < n; ++first) {
      std::int64_t len = 0;
      for (std::int64_t t = first; t < n && std::gcd(t, n) == 1; t += q) ++len;
      if (len > best_len) {
        best_len = len;
        best_first = first;
        best_diff = q;
      }
    }
  }
  return make_witness(n, best_first, best_diff, best_len);
}

}  // namespace rrsap

#pragma once

// Exact computation of the maximum progression length via a pruned scan
// over candidate differences.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rrsap/arith.hpp"
#include "rrsap/bounds_core.hpp"
#include "rrsap/constructions.hpp"
#include "rrsap/residue_system.hpp"
#include "rrsap/witness.hpp"

namespace rrsap {

// Maximal run in A(n) with difference exactly q; ties broken by smallest
// first term. Walks each residue chain once, so O(phi(n)) per call.
inline ap_witness longest_run_with_difference(const residue_system& rs, std::int64_t q) {
  const std::int64_t n = rs.modulus();
  if (q < 1 || q > n - 1)
    throw std::domain_error("longest_run_with_difference: q = " + std::to_string(q) +
                            " outside [1, " + std::to_string(n - 1) + "]");
  std::int64_t best_len = 0;
  std::int64_t best_first = 1;
  for (std::int64_t a : rs.elements()) {
    if (a > q && rs.contains(a - q)) continue;  // not a chain start
    std::int64_t len = 0;
    for (std::int64_t t = a; t < n && rs.contains(t); t += q) ++len;
    if (len > best_len) {
      best_len = len;
      best_first = a;
    }
  }
  assert(best_len >= 1 && "1 is always in A(n)");
  return make_witness(n, best_first, q, best_len);
}

namespace detail {

// Product of the prime factors of n with p - 1 <= best. A run whose
// difference misses such a prime p covers every residue class mod p within
// any p consecutive terms, so it hits a multiple of p by term p and stays
// at length <= p - 1 <= best. Candidate differences must therefore be
// multiples of this product. Returns 0 when that already exceeds n - 2.
inline std::int64_t required_difference_step(const factorization& f, std::int64_t best) {
  std::int64_t step = 1;
  for (const auto& pp : f.factors) {
    if (pp.prime - 1 > best) break;
    if (step > (f.n - 2) / pp.prime) return 0;
    step *= pp.prime;
  }
  return step;
}

}  // namespace detail

// Exact maximum progression length with a certifying witness.
//
// Seeds the best-so-far from the constructive witness, then scans candidate
// differences in ascending order. A difference q is skipped when the
// geometric cap floor((n-2)/q) + 1 cannot beat the current best, or when q
// is not a multiple of every prime factor of n at most best+1 (see
// required_difference_step). The scan stops once no remaining difference
// can win, or the structural upper bound max(p-1, n/P) is reached. All
// skips are provably fruitless, so the result does not depend on them.
inline ap_witness exact_f(const residue_system& rs, const factorization& f) {
  const std::int64_t n = rs.modulus();
  assert(n == f.n);
  ap_witness best = witness_general(f);
  const std::int64_t cap = upper_bound(f);
  if (best.length >= cap) return best;

  std::int64_t step = detail::required_difference_step(f, best.length);
  if (step == 0) return best;
  std::int64_t q = step;
  while (q <= n - 2 && (n - 2) / q + 1 > best.length) {
    const ap_witness w = longest_run_with_difference(rs, q);
    if (w.length > best.length) {
      best = w;
      if (best.length >= cap) return best;
      step = detail::required_difference_step(f, best.length);
      if (step == 0) break;
      q = (q / step + 1) * step;
    } else {
      q += step;
    }
  }
  return best;
}

inline ap_witness exact_f(std::int64_t n, std::int64_t solver_limit = limits::solver_n) {
  if (n < 2) throw std::domain_error("exact_f: n must be >= 2, got " + std::to_string(n));
  if (n > solver_limit)
    throw resource_error("exact_f: n = " + std::to_string(n) + " exceeds the solver limit " +
                         std::to_string(solver_limit));
  const factorization f = factorize(n);
  const residue_system rs(f);
  return exact_f(rs, f);
}

}  // namespace rrsap

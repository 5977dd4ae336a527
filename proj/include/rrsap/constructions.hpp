#pragma once

// Constructive lower-bound witnesses, one per factorization shape:
// prime powers, squarefree composites, and the general case combining both.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrsap/arith.hpp"
#include "rrsap/witness.hpp"

namespace rrsap {

// For n = p^r: 1, 1+p, ..., 1+(p^(r-1)-1)p are all coprime to n, giving
// length n/p. For r = 1 the full run 1..p-1 does better.
inline ap_witness witness_prime_power(std::int64_t p, int exponent,
                                      std::int64_t solver_limit = limits::solver_n) {
  if (!is_prime(p))
    throw std::domain_error("witness_prime_power: " + std::to_string(p) + " is not prime");
  if (exponent < 1)
    throw std::domain_error("witness_prime_power: exponent must be >= 1");
  std::int64_t n = 1;
  for (int i = 0; i < exponent; ++i) {
    if (n > solver_limit / p)
      throw resource_error("witness_prime_power: " + std::to_string(p) + "^" +
                           std::to_string(exponent) + " exceeds the solver limit " +
                           std::to_string(solver_limit));
    n *= p;
  }
  if (exponent == 1) return make_witness(n, 1, 1, p - 1);
  return make_witness(n, 1, p, n / p);
}

// For squarefree n with largest prime factor p_d and q = n / p_d, the terms
// 1 + m*q for 0 <= m < p_d avoid every prime of n except that exactly one of
// them is divisible by p_d (they form a complete residue system mod p_d).
// Splitting around that term leaves a progression of length >= (p_d - 1) / 2;
// on a tie the left segment is returned.
inline ap_witness witness_squarefree(const factorization& f) {
  if (f.factors.size() < 2)
    throw std::domain_error("witness_squarefree: n = " + std::to_string(f.n) +
                            " needs at least two prime factors");
  if (!is_squarefree(f))
    throw std::domain_error("witness_squarefree: n = " + std::to_string(f.n) +
                            " is not squarefree");
  const std::int64_t pd = largest_prime_factor(f);
  const std::int64_t q = f.n / pd;
  // 1 + m*q = 0 (mod pd)  =>  m = -q^{-1} (mod pd)
  const std::int64_t excluded = (pd - mod_inverse(q, pd)) % pd;
  assert((1 + excluded * q) % pd == 0);
  assert(excluded >= 1 && "the first term is 1, never divisible by pd");
  const std::int64_t left = excluded;
  const std::int64_t right = pd - 1 - excluded;
  if (left >= right) return make_witness(f.n, 1, q, left);
  return make_witness(f.n, 1 + (excluded + 1) * q, q, right);
}

inline ap_witness witness_general(const factorization& f);

inline ap_witness witness_general(std::int64_t n) { return witness_general(factorize(n)); }

// Longer of: (a) 1 + m * rad(n), length n / rad(n); (b) the squarefree
// witness of rad(n), which lies in A(n) unchanged because membership below
// rad(n) only depends on the shared prime factors. Ties go to (a). Prime
// powers delegate to the dedicated construction.
inline ap_witness witness_general(const factorization& f) {
  if (f.factors.size() == 1)
    return witness_prime_power(f.factors[0].prime, f.factors[0].exponent,
                               std::max(f.n, limits::solver_n));
  const std::int64_t rad = radical(f);
  const ap_witness stride = make_witness(f.n, 1, rad, f.n / rad);

  factorization rad_fact;
  rad_fact.n = rad;
  rad_fact.factors = f.factors;
  for (auto& pp : rad_fact.factors) pp.exponent = 1;
  const ap_witness base = witness_squarefree(rad_fact);
  const ap_witness lifted = make_witness(f.n, base.first, base.difference, base.length);

  return stride.length >= lifted.length ? stride : lifted;
}

// True iff 1 + m*q for 0 <= m < p covers every residue class modulo p.
// Under gcd(q, p) = 1 this always holds; exposed as a testable primitive.
inline bool complete_residue_check(std::int64_t q, std::int64_t p) {
  if (p < 2 || q < 1 || std::gcd(q, p) != 1)
    throw std::domain_error("complete_residue_check: requires p >= 2, q >= 1, gcd(q, p) = 1");
  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  std::int64_t covered = 0;
  std::int64_t r = 1 % p;
  const std::int64_t step = q % p;
  for (std::int64_t m = 0; m < p; ++m) {
    if (!seen[static_cast<std::size_t>(r)]) {
      seen[static_cast<std::size_t>(r)] = true;
      ++covered;
    }
    r += step;
    if (r >= p) r -= p;
  }
  return covered == p;
}

}  // namespace rrsap

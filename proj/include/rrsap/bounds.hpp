#pragma once

// Bound reports for single n and bulk verification over ranges.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrsap/arith.hpp"
#include "rrsap/bounds_core.hpp"
#include "rrsap/parallel.hpp"
#include "rrsap/residue_system.hpp"
#include "rrsap/search.hpp"
#include "rrsap/witness.hpp"

namespace rrsap {

struct bounds_report {
  std::int64_t n = 0;
  std::int64_t largest_prime = 0;
  std::int64_t radical = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::optional<std::int64_t> exact;
  std::optional<ap_witness> witness;
};

inline bounds_report compute_bounds(const factorization& f) {
  bounds_report r;
  r.n = f.n;
  r.largest_prime = largest_prime_factor(f);
  r.radical = rrsap::radical(f);
  r.lower = lower_bound(f);
  r.upper = upper_bound(f);
  return r;
}

inline bounds_report compute_bounds(const residue_system& rs, const factorization& f,
                                    bool with_exact) {
  bounds_report r = compute_bounds(f);
  if (with_exact) {
    const ap_witness w = exact_f(rs, f);
    r.exact = w.length;
    r.witness = w;
    if (!(r.lower <= w.length && w.length <= r.upper))
      throw internal_error("bounds_report: bound sandwich violated at n = " +
                           std::to_string(f.n) + ": lower " + std::to_string(r.lower) +
                           ", exact " + std::to_string(w.length) + ", upper " +
                           std::to_string(r.upper));
  }
  return r;
}

inline bounds_report compute_bounds(std::int64_t n, bool with_exact,
                                    std::int64_t solver_limit = limits::solver_n) {
  if (n < 2) throw std::domain_error("bounds: n must be >= 2, got " + std::to_string(n));
  if (with_exact && n > solver_limit)
    throw resource_error("bounds: n = " + std::to_string(n) + " exceeds the solver limit " +
                         std::to_string(solver_limit));
  const factorization f = factorize(n);
  if (!with_exact) return compute_bounds(f);
  const residue_system rs(f);
  return compute_bounds(rs, f, true);
}

struct range_verification {
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::int64_t checked = 0;
  std::int64_t lower_tight = 0;
  std::int64_t upper_tight = 0;
  std::vector<std::int64_t> violations;  // must come back empty
};

// Exact bound check for every n in [from, to]. Fans out across threads;
// per-chunk summaries are merged in chunk order, so the report is
// scheduling-independent.
inline range_verification verify_range(std::int64_t from, std::int64_t to, int threads = 0,
                                       std::int64_t solver_limit = limits::solver_n) {
  if (from < 2 || from > to)
    throw std::domain_error("verify_range: need 2 <= from <= to, got [" + std::to_string(from) +
                            ", " + std::to_string(to) + "]");
  if (to > solver_limit)
    throw resource_error("verify_range: upper end " + std::to_string(to) +
                         " exceeds the solver limit " + std::to_string(solver_limit));

  const spf_sieve sieve(to);
  constexpr std::int64_t chunk = 512;
  std::vector<range_verification> parts(static_cast<std::size_t>(chunk_count(from, to, chunk)));
  parallel_chunks(from, to, chunk, threads, [&](std::int64_t c, std::int64_t lo, std::int64_t hi) {
    range_verification& part = parts[static_cast<std::size_t>(c)];
    for (std::int64_t n = lo; n <= hi; ++n) {
      const factorization f = sieve.factorize(n);
      const residue_system rs(f);
      const std::int64_t lower = lower_bound(f);
      const std::int64_t upper = upper_bound(f);
      const ap_witness w = exact_f(rs, f);
      ++part.checked;
      if (w.length == lower) ++part.lower_tight;
      if (w.length == upper) ++part.upper_tight;
      if (!(lower <= w.length && w.length <= upper)) part.violations.push_back(n);
    }
  });

  range_verification total;
  total.from = from;
  total.to = to;
  for (const auto& part : parts) {
    total.checked += part.checked;
    total.lower_tight += part.lower_tight;
    total.upper_tight += part.upper_tight;
    total.violations.insert(total.violations.end(), part.violations.begin(),
                            part.violations.end());
  }
  return total;
}

}  // namespace rrsap

#pragma once

// Progression-length thresholds: past n_k = k * P_{2k} every A(n) contains a
// progression of length k. The guaranteed threshold is closed-form; the
// minimal threshold is an empirical extension found by exhaustive scan up to
// the guarantee (sound because the guarantee covers everything beyond).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrsap/arith.hpp"
#include "rrsap/parallel.hpp"
#include "rrsap/search.hpp"

namespace rrsap {

struct threshold_record {
  std::int64_t k = 0;
  bigint primorial;   // P_{2k}
  bigint guaranteed;  // k * P_{2k}
  std::optional<std::int64_t> minimal;
  std::optional<std::int64_t> last_failing;  // absent when no n fails
};

inline threshold_record guaranteed_threshold(std::int64_t k) {
  if (k < 1) throw std::domain_error("threshold: k must be >= 1, got " + std::to_string(k));
  threshold_record rec;
  rec.k = k;
  rec.primorial = primorial_up_to(2 * k).value;
  rec.guaranteed = k * rec.primorial;
  return rec;
}

inline threshold_record minimal_threshold(std::int64_t k, int threads = 0,
                                          std::int64_t solver_limit = limits::solver_n) {
  threshold_record rec = guaranteed_threshold(k);
  if (rec.guaranteed > solver_limit)
    throw resource_error("minimal_threshold: guaranteed threshold " +
                         rec.guaranteed.str() + " for k = " + std::to_string(k) +
                         " exceeds the solver limit " + std::to_string(solver_limit));
  const std::int64_t bound = rec.guaranteed.convert_to<std::int64_t>();

  const spf_sieve sieve(std::max<std::int64_t>(bound, 2));
  constexpr std::int64_t chunk = 512;
  std::vector<std::int64_t> worst(static_cast<std::size_t>(chunk_count(2, bound, chunk)), 0);
  parallel_chunks(2, bound, chunk, threads, [&](std::int64_t c, std::int64_t lo, std::int64_t hi) {
    for (std::int64_t n = lo; n <= hi; ++n) {
      const factorization f = sieve.factorize(n);
      const residue_system rs(f);
      if (exact_f(rs, f).length < k) worst[static_cast<std::size_t>(c)] = n;
    }
  });

  std::int64_t last = 0;
  for (std::int64_t w : worst)
    if (w > last) last = w;

  if (last == 0) {
    rec.minimal = 2;
  } else {
    rec.last_failing = last;
    rec.minimal = last + 1;
    if (last >= bound)
      throw internal_error("minimal_threshold: n = " + std::to_string(last) +
                           " fails at its own guaranteed threshold; solver bug");
  }
  return rec;
}

}  // namespace rrsap

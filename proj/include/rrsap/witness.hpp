#pragma once

// A concrete arithmetic progression inside the reduced residue system,
// certifying a lower bound on the maximum progression length.

#include <cassert>
#include <cstdint>
#include <numeric>

#include "rrsap/arith.hpp"

namespace rrsap {

// Terms are first + m * difference for 0 <= m < length, all below n and
// coprime to n. A single term counts as length 1; its difference carries no
// information and is normalized to 1.
struct ap_witness {
  std::int64_t n = 0;
  std::int64_t first = 0;
  std::int64_t difference = 1;
  std::int64_t length = 0;

  bool operator==(const ap_witness&) const = default;
};

inline ap_witness make_witness(std::int64_t n, std::int64_t first, std::int64_t difference,
                               std::int64_t length) {
  assert(n >= 2 && first >= 1 && length >= 1);
  if (length == 1) difference = 1;
  assert(difference >= 1);
  assert(first + (length - 1) * difference < n);
  return ap_witness{n, first, difference, length};
}

// Shared validator, definitional on purpose: recomputes every coprimality
// from scratch with gcd so it stays independent of how a witness was found.
inline bool is_valid_witness(const ap_witness& w) {
  if (w.n < 2 || w.first < 1 || w.difference < 1 || w.length < 1) return false;
  if (w.length == 1 && w.difference != 1) return false;
  if (w.first + (w.length - 1) * w.difference >= w.n) return false;
  for (std::int64_t m = 0; m < w.length; ++m)
    if (std::gcd(w.first + m * w.difference, w.n) != 1) return false;
  return true;
}

}  // namespace rrsap

#pragma once

// The least reduced residue system modulo n: all positive a < n with
// gcd(a, n) = 1, held as a membership mask plus the sorted element list.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrsap/arith.hpp"

namespace rrsap {

class residue_system {
 public:
  explicit residue_system(const factorization& f) : n_(f.n) {
    if (n_ < 2) throw std::domain_error("residue_system: n must be >= 2");
    mask_.assign(static_cast<std::size_t>(n_), true);
    mask_[0] = false;
    for (const auto& pp : f.factors)
      for (std::int64_t j = pp.prime; j < n_; j += pp.prime)
        mask_[static_cast<std::size_t>(j)] = false;
    elements_.reserve(static_cast<std::size_t>(totient(f)));
    for (std::int64_t a = 1; a < n_; ++a)
      if (mask_[static_cast<std::size_t>(a)]) elements_.push_back(a);
    assert(static_cast<std::int64_t>(elements_.size()) == totient(f));
  }

  explicit residue_system(std::int64_t n) : residue_system(checked_factorize(n)) {}

  std::int64_t modulus() const { return n_; }

  bool contains(std::int64_t a) const {
    return a > 0 && a < n_ && mask_[static_cast<std::size_t>(a)];
  }

  const std::vector<std::int64_t>& elements() const { return elements_; }

  std::int64_t count() const { return static_cast<std::int64_t>(elements_.size()); }

 private:
  static factorization checked_factorize(std::int64_t n) {
    if (n < 2) throw std::domain_error("residue_system: n must be >= 2, got " + std::to_string(n));
    return factorize(n);
  }

  std::int64_t n_;
  std::vector<bool> mask_;
  std::vector<std::int64_t> elements_;
};

}  // namespace rrsap

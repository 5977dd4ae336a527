#pragma once

// Integer arithmetic substrate: primality, factorization, radical, largest
// prime factor, primorials, and a smallest-prime-factor sieve for bulk work.

#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rrsap {

using bigint = boost::multiprecision::cpp_int;

class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace limits {
// Defaults only; every operation takes its limit as a parameter.
inline constexpr std::int64_t oracle_n = 2000;
inline constexpr std::int64_t solver_n = 10'000'000;
inline constexpr std::int64_t factor_n = 1'000'000'000'000;   // trial division cap
inline constexpr std::int64_t sieve_budget = 100'000'000;     // spf entries (4 B each)
inline constexpr std::int64_t primorial_bound = 100'000'000;  // largest primorial cutoff
}  // namespace limits

struct prime_power {
  std::int64_t prime;
  int exponent;
  bool operator==(const prime_power&) const = default;
};

// Prime-power decomposition of n, primes strictly increasing.
struct factorization {
  std::int64_t n = 0;
  std::vector<prime_power> factors;
};

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= n; d += 6)
    if (n % d == 0 || n % (d + 2) == 0) return false;
  return true;
}

inline factorization factorize(std::int64_t n, std::int64_t limit = limits::factor_n) {
  if (n < 2) throw std::domain_error("factorize: n must be >= 2, got " + std::to_string(n));
  if (n > limit)
    throw std::domain_error("factorize: n = " + std::to_string(n) +
                            " exceeds the factorization limit " + std::to_string(limit));
  factorization out;
  out.n = n;
  std::int64_t m = n;
  for (std::int64_t d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
    if (m % d != 0) continue;
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    out.factors.push_back({d, e});
  }
  if (m > 1) out.factors.push_back({m, 1});
  return out;
}

inline std::int64_t largest_prime_factor(const factorization& f) {
  assert(!f.factors.empty());
  return f.factors.back().prime;
}

// Product of the distinct prime factors; always divides n.
inline std::int64_t radical(const factorization& f) {
  std::int64_t r = 1;
  for (const auto& pp : f.factors) r *= pp.prime;
  return r;
}

inline bool is_squarefree(const factorization& f) {
  for (const auto& pp : f.factors)
    if (pp.exponent > 1) return false;
  return true;
}

inline std::int64_t totient(const factorization& f) {
  std::int64_t t = f.n;
  for (const auto& pp : f.factors) t -= t / pp.prime;
  return t;
}

// Smallest-prime-factor table for every 2 <= m <= limit. Immutable once
// built; safe to share across threads. Construction is single-threaded.
class spf_sieve {
 public:
  explicit spf_sieve(std::int64_t limit, std::int64_t budget = limits::sieve_budget)
      : limit_(limit) {
    if (limit < 2) throw std::domain_error("spf_sieve: limit must be >= 2");
    if (limit > budget)
      throw resource_error("spf_sieve: limit " + std::to_string(limit) +
                           " exceeds the memory budget of " + std::to_string(budget) +
                           " entries");
    spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t i = 2; i <= limit; ++i) {
      if (spf_[static_cast<std::size_t>(i)] != 0) continue;
      for (std::int64_t j = i; j <= limit; j += i) {
        auto& s = spf_[static_cast<std::size_t>(j)];
        if (s == 0) s = static_cast<std::int32_t>(i);
      }
    }
  }

  std::int64_t limit() const { return limit_; }

  std::int64_t smallest_factor(std::int64_t m) const {
    if (m < 2 || m > limit_)
      throw std::domain_error("spf_sieve: query " + std::to_string(m) +
                              " outside [2, " + std::to_string(limit_) + "]");
    return spf_[static_cast<std::size_t>(m)];
  }

  factorization factorize(std::int64_t n) const {
    if (n < 2 || n > limit_)
      throw std::domain_error("spf_sieve: cannot factorize " + std::to_string(n) +
                              " outside [2, " + std::to_string(limit_) + "]");
    factorization out;
    out.n = n;
    std::int64_t m = n;
    while (m > 1) {
      std::int64_t p = spf_[static_cast<std::size_t>(m)];
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      out.factors.push_back({p, e});
    }
    return out;
  }

 private:
  std::int64_t limit_;
  std::vector<std::int32_t> spf_;
};

// Product of all primes <= bound, exact (arbitrary precision).
struct primorial {
  std::int64_t bound;
  bigint value;
};

inline primorial primorial_up_to(std::int64_t x, std::int64_t bound_limit = limits::primorial_bound) {
  if (x < 2) throw std::domain_error("primorial_up_to: bound must be >= 2, got " + std::to_string(x));
  if (x > bound_limit)
    throw resource_error("primorial_up_to: bound " + std::to_string(x) +
                         " exceeds the supported cutoff " + std::to_string(bound_limit));
  std::vector<bool> composite(static_cast<std::size_t>(x) + 1, false);
  bigint value = 1;
  for (std::int64_t i = 2; i <= x; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    value *= i;
    for (std::int64_t j = i * i; j <= x; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return {x, value};
}

// Inverse of a modulo m (m >= 2, gcd(a, m) = 1), via extended Euclid.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  assert(m >= 2);
  std::int64_t r0 = m, r1 = ((a % m) + m) % m;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  assert(r0 == 1 && "mod_inverse requires gcd(a, m) = 1");
  return ((t0 % m) + m) % m;
}

}  // namespace rrsap

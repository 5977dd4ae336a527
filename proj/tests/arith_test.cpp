#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "rrsap/arith.hpp"

using namespace rrsap;

namespace {

std::vector<std::pair<std::int64_t, int>> as_pairs(const factorization& f) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (const auto& pp : f.factors) out.emplace_back(pp.prime, pp.exponent);
  return out;
}

}  // namespace

TEST_CASE("factorize known decompositions") {
  CHECK(as_pairs(factorize(12)) == std::vector<std::pair<std::int64_t, int>>{{2, 2}, {3, 1}});
  CHECK(as_pairs(factorize(13)) == std::vector<std::pair<std::int64_t, int>>{{13, 1}});
  CHECK(as_pairs(factorize(360)) ==
        std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("factorize rejects out-of-range input") {
  CHECK_THROWS_AS(factorize(1), std::domain_error);
  CHECK_THROWS_AS(factorize(0), std::domain_error);
  CHECK_THROWS_AS(factorize(-7), std::domain_error);
  CHECK_THROWS_AS(factorize(100, 50), std::domain_error);
}

TEST_CASE("factorization reconstructs n and keeps primes increasing") {
  for (std::int64_t n = 2; n <= 10'000; ++n) {
    const factorization f = factorize(n);
    std::int64_t product = 1;
    std::int64_t prev_prime = 1;
    for (const auto& pp : f.factors) {
      CHECK(pp.prime > prev_prime);
      CHECK(pp.exponent >= 1);
      CHECK(is_prime(pp.prime));
      prev_prime = pp.prime;
      for (int e = 0; e < pp.exponent; ++e) product *= pp.prime;
    }
    REQUIRE(product == n);
  }
}

TEST_CASE("largest prime factor") {
  CHECK(largest_prime_factor(factorize(12)) == 3);
  CHECK(largest_prime_factor(factorize(97)) == 97);
  CHECK(largest_prime_factor(factorize(16)) == 2);
}

TEST_CASE("radical") {
  CHECK(radical(factorize(12)) == 6);
  CHECK(radical(factorize(16)) == 2);
  CHECK(radical(factorize(30)) == 30);
}

TEST_CASE("radical divides n, equals n exactly for squarefree n") {
  for (std::int64_t n = 2; n <= 10'000; ++n) {
    const factorization f = factorize(n);
    const std::int64_t rad = radical(f);
    REQUIRE(n % rad == 0);
    CHECK((rad == n) == is_squarefree(f));
  }
}

TEST_CASE("totient spot values") {
  CHECK(totient(factorize(12)) == 4);
  CHECK(totient(factorize(13)) == 12);
  CHECK(totient(factorize(16)) == 8);
  CHECK(totient(factorize(45)) == 24);
  CHECK(totient(factorize(100)) == 40);
}

TEST_CASE("primorial values") {
  CHECK(primorial_up_to(2).value == 2);
  CHECK(primorial_up_to(6).value == 30);
  CHECK(primorial_up_to(10).value == 210);
  CHECK_THROWS_AS(primorial_up_to(1), std::domain_error);
  CHECK_THROWS_AS(primorial_up_to(100, 50), resource_error);
}

TEST_CASE("primorial is the squarefree product of exactly the primes up to the bound") {
  const primorial p30 = primorial_up_to(30);
  for (std::int64_t p = 2; p <= 100; ++p) {
    if (!is_prime(p)) continue;
    if (p <= 30) {
      CHECK(p30.value % p == 0);
      CHECK(p30.value % (p * p) != 0);
    } else {
      CHECK(p30.value % p != 0);
    }
  }
}

TEST_CASE("spf sieve answers smallest factors") {
  const spf_sieve small(10);
  CHECK(small.smallest_factor(9) == 3);
  CHECK(small.smallest_factor(7) == 7);
  const spf_sieve mid(100);
  CHECK(mid.smallest_factor(91) == 7);
  CHECK_THROWS_AS(small.smallest_factor(1), std::domain_error);
  CHECK_THROWS_AS(small.smallest_factor(11), std::domain_error);
}

TEST_CASE("spf sieve rejects bad limits") {
  CHECK_THROWS_AS(spf_sieve(1), std::domain_error);
  CHECK_THROWS_AS(spf_sieve(1000, 100), resource_error);
}

TEST_CASE("sieve factorization agrees with trial division") {
  const spf_sieve sieve(100'000);
  for (std::int64_t n = 2; n <= 100'000; ++n) {
    const factorization a = sieve.factorize(n);
    const factorization b = factorize(n);
    REQUIRE(a.factors == b.factors);
  }
}

TEST_CASE("is_prime agrees with factorization shape") {
  for (std::int64_t n = 2; n <= 10'000; ++n) {
    const factorization f = factorize(n);
    const bool prime_shape = f.factors.size() == 1 && f.factors[0].exponent == 1;
    CHECK(is_prime(n) == prime_shape);
  }
}

TEST_CASE("mod_inverse inverts") {
  for (std::int64_t m : {2, 3, 5, 7, 97, 101, 4999}) {
    for (std::int64_t a = 1; a < std::min<std::int64_t>(m, 200); ++a) {
      if (std::gcd(a, m) != 1) continue;
      const std::int64_t inv = mod_inverse(a, m);
      REQUIRE(a * inv % m == 1);
      CHECK(inv >= 0);
      CHECK(inv < m);
    }
  }
}

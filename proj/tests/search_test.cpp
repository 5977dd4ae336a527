#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rrsap/oracle.hpp"
#include "rrsap/search.hpp"

using namespace rrsap;

namespace {

// n -> f(n) for the small moduli whose systems are easy to check by hand.
constexpr std::pair<std::int64_t, std::int64_t> kKnownF[] = {
    {2, 1},  {3, 2},   {4, 2},  {5, 4},  {6, 2},  {7, 6},  {8, 4},  {9, 3},
    {10, 2}, {11, 10}, {12, 2}, {13, 12}, {14, 4}, {15, 3}, {16, 8}, {45, 4},
    {100, 10}, {210, 6}, {2310, 10}};

}  // namespace

TEST_CASE("longest run with a fixed difference") {
  const residue_system a14(14);
  CHECK(longest_run_with_difference(a14, 4) == ap_witness{14, 1, 4, 4});  // 1,5,9,13
  const residue_system a12(12);
  CHECK(longest_run_with_difference(a12, 6) == ap_witness{12, 1, 6, 2});  // 1,7
  const residue_system a15(15);
  CHECK(longest_run_with_difference(a15, 3) == ap_witness{15, 1, 3, 3});  // 1,4,7
  CHECK_THROWS_AS(longest_run_with_difference(a12, 0), std::domain_error);
  CHECK_THROWS_AS(longest_run_with_difference(a12, 12), std::domain_error);
}

TEST_CASE("longest run ties resolve to the smallest first term") {
  // A(12) with difference 6 has the equal runs {1,7} and {5,11}.
  CHECK(longest_run_with_difference(residue_system(12), 6).first == 1);
  // A(8) with difference 4: {1,5} and {3,7}.
  CHECK(longest_run_with_difference(residue_system(8), 4).first == 1);
}

TEST_CASE("longest run never misses an exhaustive scan result") {
  for (std::int64_t n = 2; n <= 120; ++n) {
    const residue_system rs(n);
    for (std::int64_t q = 1; q <= n - 1; ++q) {
      const ap_witness w = longest_run_with_difference(rs, q);
      REQUIRE(is_valid_witness(w));
      // exhaustive rescan with no chain shortcuts
      std::int64_t best = 0;
      for (std::int64_t first = 1; first < n; ++first) {
        std::int64_t len = 0;
        for (std::int64_t t = first; t < n && rs.contains(t); t += q) ++len;
        best = std::max(best, len);
      }
      REQUIRE(w.length == best);
    }
  }
}

TEST_CASE("exact_f reproduces the known values") {
  for (const auto& [n, f] : kKnownF) {
    CAPTURE(n);
    CHECK(exact_f(n).length == f);
  }
}

TEST_CASE("exact_f returns the expected witnesses") {
  CHECK(exact_f(13) == ap_witness{13, 1, 1, 12});
  CHECK(exact_f(16) == ap_witness{16, 1, 2, 8});
  CHECK(exact_f(12) == ap_witness{12, 1, 6, 2});
  CHECK(exact_f(2) == ap_witness{2, 1, 1, 1});
  CHECK(exact_f(45).length == 4);  // beats the constructive seed of length 3
}

TEST_CASE("exact_f input validation") {
  CHECK_THROWS_AS(exact_f(1), std::domain_error);
  CHECK_THROWS_AS(exact_f(0), std::domain_error);
  CHECK_THROWS_AS(exact_f(1000, 999), resource_error);
}

TEST_CASE("brute force oracle basics") {
  CHECK(brute_force_f(5).length == 4);
  CHECK(brute_force_f(6).length == 2);
  CHECK(brute_force_f(13).length == 12);
  CHECK(brute_force_f(2) == ap_witness{2, 1, 1, 1});
  CHECK_THROWS_AS(brute_force_f(1), std::domain_error);
  CHECK_THROWS_AS(brute_force_f(3000), std::domain_error);
  CHECK_THROWS_AS(brute_force_f(10, 5), std::domain_error);
}

TEST_CASE("solver and oracle agree on [2, 500]") {
  for (std::int64_t n = 2; n <= 500; ++n) {
    const ap_witness fast = exact_f(n);
    const ap_witness slow = brute_force_f(n);
    CAPTURE(n);
    REQUIRE(fast.length == slow.length);
    REQUIRE(is_valid_witness(fast));
    REQUIRE(is_valid_witness(slow));
  }
}

TEST_CASE("solver and oracle agree on random larger moduli") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::int64_t> pick(501, 2000);
  for (int i = 0; i < 25; ++i) {
    const std::int64_t n = pick(rng);
    CAPTURE(n);
    REQUIRE(exact_f(n).length == brute_force_f(n).length);
  }
}

TEST_CASE("solver witnesses stay valid and deterministic across a wide range") {
  for (std::int64_t n = 2; n <= 2000; ++n) {
    const ap_witness w = exact_f(n);
    REQUIRE(is_valid_witness(w));
    REQUIRE(exact_f(n) == w);
  }
}

TEST_CASE("primes are exact: f(p) = p - 1") {
  for (std::int64_t p = 2; p <= 2000; ++p) {
    if (!is_prime(p)) continue;
    REQUIRE(exact_f(p).length == p - 1);
  }
}

TEST_CASE("prime powers are exact: f(p^r) = p^(r-1)") {
  for (std::int64_t p = 2; p <= 100; ++p) {
    if (!is_prime(p)) continue;
    for (std::int64_t n = p * p, len = p; n <= 10'000; n *= p, len *= p) {
      CAPTURE(n);
      REQUIRE(exact_f(n).length == len);
    }
  }
}

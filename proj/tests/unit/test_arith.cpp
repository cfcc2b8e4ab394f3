#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "smarand/arith.hpp"
#include "smarand/errors.hpp"
#include "smarand/factorize.hpp"
#include "smarand/sieve.hpp"

using namespace smarand;

TEST_CASE("spf sieve examples") {
  const SpfSieve ten = build_spf_sieve(10);
  CHECK(ten.spf(4) == 2);
  CHECK(ten.spf(9) == 3);
  CHECK(ten.spf(7) == 7);
  CHECK(build_spf_sieve(2).spf(2) == 2);
  CHECK(build_spf_sieve(30).spf(30) == 2);
}

TEST_CASE("spf sieve rejects bad limits") {
  CHECK_THROWS_AS(build_spf_sieve(1), std::invalid_argument);
  CHECK_THROWS_AS(build_spf_sieve(0), std::invalid_argument);
  CHECK_THROWS_AS(build_spf_sieve(kMaxSieveLimit + 1), std::invalid_argument);
}

TEST_CASE("spf sieve invariants hold and are thread-count independent") {
  constexpr std::uint64_t limit = 1'000'003;
  const SpfSieve single = build_spf_sieve(limit, 1);
  const SpfSieve multi = build_spf_sieve(limit, 8);
  REQUIRE(single.table().size() == multi.table().size());
  CHECK(std::equal(single.table().begin(), single.table().end(), multi.table().begin()));

  for (std::uint64_t n = 2; n <= 20'000; ++n) {
    const std::uint64_t p = single.spf(n);
    REQUIRE(n % p == 0);
    REQUIRE(oracle::is_prime(p));
    REQUIRE((p == n) == oracle::is_prime(n));
    REQUIRE(p == oracle::trial_factor(n).front().first);
  }
}

TEST_CASE("factorize examples") {
  const Factorization f = factorize(120);
  CHECK(f.factors == std::vector<PrimePower>{{2, 3}, {3, 1}, {5, 1}});
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(1).largest_prime() == 1);

  const std::uint64_t mersenne61 = (std::uint64_t{1} << 61) - 1;
  CHECK(factorize(mersenne61).factors == std::vector<PrimePower>{{mersenne61, 1}});
  CHECK(is_prime(mersenne61));
}

TEST_CASE("factorize splits 64-bit semiprimes and prime powers") {
  const std::uint64_t p = 4294967291ULL;  // largest prime below 2^32
  const std::uint64_t q = 4294967279ULL;
  CHECK(factorize(p * q).factors == std::vector<PrimePower>{{q, 1}, {p, 1}});
  CHECK(factorize(std::uint64_t{3486784401}).factors == std::vector<PrimePower>{{3, 20}});
  CHECK(factorize(~std::uint64_t{0}).factors ==
        std::vector<PrimePower>{{3, 1}, {5, 1}, {17, 1}, {257, 1}, {641, 1}, {65537, 1}, {6700417, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize reconstructs every n up to 10^6") {
  const SpfSieve sieve = build_spf_sieve(1'000'000);
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
    const Factorization f = factorize(n, &sieve);
    std::uint64_t product = 1;
    std::uint64_t last = 0;
    for (const auto& [p, a] : f.factors) {
      REQUIRE(p > last);
      REQUIRE(is_prime(p));
      for (unsigned i = 0; i < a; ++i) product *= p;
      last = p;
    }
    REQUIRE(product == n);
  }
}

TEST_CASE("factorize agrees with and without a sieve") {
  const SpfSieve sieve = build_spf_sieve(100'000);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = rng() % 100'000 + 1;
    REQUIRE(factorize(n).factors == factorize(n, &sieve).factors);
  }
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = (rng() >> 4) + 1;
    const Factorization f = factorize(n);
    unsigned __int128 product = 1;
    for (const auto& [p, a] : f.factors)
      for (unsigned j = 0; j < a; ++j) product *= p;
    REQUIRE(static_cast<std::uint64_t>(product) == n);
  }
}

TEST_CASE("is_prime matches trial division") {
  for (std::uint64_t n = 0; n < 20'000; ++n) REQUIRE(is_prime(n) == oracle::is_prime(n));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("legendre valuation examples") {
  CHECK(legendre_valuation(2, 4) == 3);
  CHECK(legendre_valuation(3, 9) == 4);
  CHECK(legendre_valuation(7, 0) == 0);
  CHECK_THROWS_AS(legendre_valuation(4, 10), std::invalid_argument);
  CHECK_THROWS_AS(legendre_valuation(1, 10), std::invalid_argument);
}

TEST_CASE("legendre valuation against materialized factorials") {
  for (std::uint64_t p : {2, 3, 5, 7, 97}) {
    for (std::uint64_t m = 0; m <= 400; ++m) REQUIRE(legendre_valuation(p, m) == oracle::factorial_valuation(p, m));
  }
}

TEST_CASE("legendre valuation: incremental count and digit-sum identity, p <= 100, m <= 10^4") {
  for (std::uint64_t p = 2; p <= 100; ++p) {
    if (!oracle::is_prime(p)) continue;
    std::uint64_t running = 0;  // v_p(m!) accumulated as sum of v_p(j)
    for (std::uint64_t m = 1; m <= 10'000; ++m) {
      for (std::uint64_t j = m; j % p == 0; j /= p) ++running;
      std::uint64_t digit_sum = 0;
      for (std::uint64_t t = m; t > 0; t /= p) digit_sum += t % p;
      const std::uint64_t v = legendre_valuation(p, m);
      REQUIRE(v == running);
      REQUIRE(v == (m - digit_sum) / (p - 1));
    }
  }
}

TEST_CASE("ExponentK normalizes and rejects k <= 1") {
  const ExponentK k(4, 2);
  CHECK(k.num() == 2);
  CHECK(k.den() == 1);
  CHECK(ExponentK(6, 4) == ExponentK(3, 2));
  CHECK(ExponentK(3, 2) < ExponentK(2));
  CHECK_THROWS_AS(ExponentK(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ExponentK(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(ExponentK(2, 0), std::invalid_argument);
}

TEST_CASE("exact_compare_factorial_power examples") {
  CHECK(exact_compare_factorial_power(4, 4, ExponentK(2)) == std::strong_ordering::greater);
  CHECK(exact_compare_factorial_power(1, 1, ExponentK(2)) == std::strong_ordering::equal);
  CHECK(exact_compare_factorial_power(1, 1, ExponentK(7, 3)) == std::strong_ordering::equal);
  CHECK(exact_compare_factorial_power(3, 3, ExponentK(2)) == std::strong_ordering::less);
  // 3! = 6 = 6^1 exactly; (3!)^2 = 36 = 6^2
  CHECK(exact_compare_factorial_power(3, 6, ExponentK(2)) == std::strong_ordering::less);
  CHECK(exact_compare_factorial_power(3, 36, ExponentK(3, 2)) == std::strong_ordering::less);
  CHECK(exact_compare_factorial_power(4, 24, ExponentK(3, 2)) == std::strong_ordering::less);
  CHECK(exact_compare_factorial_power(5, 120, ExponentK(3, 2)) == std::strong_ordering::less);
  // 4! = 24 and 24^(3/2) > 24, but (4!)^2 = 576 = 24^2
  CHECK(exact_compare_factorial_power(4, 24, ExponentK(2)) == std::strong_ordering::less);
  CHECK(exact_compare_factorial_power(6, 720, ExponentK(2)) == std::strong_ordering::less);
}

TEST_CASE("exact_compare_factorial_power agrees with big integers for s <= 20, n <= 10^4") {
  const ExponentK ks[] = {ExponentK(3, 2), ExponentK(2), ExponentK(5, 2), ExponentK(3)};
  for (const ExponentK& k : ks) {
    for (std::uint64_t s = 1; s <= 20; ++s) {
      for (std::uint64_t n = 1; n <= 10'000; ++n) {
        const int expected = oracle::compare_factorial_power(s, n, k.num(), k.den());
        const auto got = exact_compare_factorial_power(s, n, k);
        REQUIRE((got < 0) == (expected < 0));
        REQUIRE((got == 0) == (expected == 0));
      }
    }
  }
}

TEST_CASE("exact_compare_factorial_power on big n") {
  const mpz_class big_n("1000000000000000000000000");
  CHECK(exact_compare_factorial_power(101, big_n, ExponentK(2)) == std::strong_ordering::greater);
  CHECK(exact_compare_factorial_power(20, big_n, ExponentK(2)) == std::strong_ordering::less);
  // 2^24 * 5^24 against s! near the crossover: 10^48 lies between 40! and 41!
  CHECK(exact_compare_factorial_power(40, big_n, ExponentK(2)) == std::strong_ordering::less);
  CHECK(exact_compare_factorial_power(41, big_n, ExponentK(2)) == std::strong_ordering::greater);
}

TEST_CASE("log_factorial examples") {
  const LogFactorialBracket one = log_factorial(1);
  CHECK(one.lower() == 0.0);
  CHECK(one.upper() == 0.0);

  const LogFactorialBracket two = log_factorial(2);
  CHECK(two.lower() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(two.lower() > 0.3863);
  CHECK(two.upper() < 1.0794);

  // sum_{j=2}^{100} log j, accumulated at 256 bits
  mpfr_t sum, t;
  mpfr_inits2(256, sum, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(sum, 1);
  for (unsigned j = 2; j <= 100; ++j) {
    mpfr_set_ui(t, j, MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDN);
    mpfr_add(sum, sum, t, MPFR_RNDN);
  }
  const LogFactorialBracket hundred = log_factorial(100);
  CHECK(mpfr_lessequal_p(hundred.value.lower().get(), sum));
  CHECK(mpfr_greaterequal_p(hundred.value.upper().get(), sum));
  mpfr_clears(sum, t, static_cast<mpfr_ptr>(nullptr));
}

TEST_CASE("log_factorial meets the width target and encloses lngamma") {
  mpfr_t ref, t;
  mpfr_inits2(512, ref, t, static_cast<mpfr_ptr>(nullptr));
  for (std::uint64_t n : std::initializer_list<std::uint64_t>{1, 2, 3, 10, 63, 64, 65, 66, 100, 1000, 12345, 1'000'000, 4'000'000'000}) {
    const LogFactorialBracket b = log_factorial(n);
    CHECK(b.value.relative_width_at_most(kLogFactorialRelativeBits));
    mpfr_set_uj(t, n + 1, MPFR_RNDN);
    mpfr_lngamma(ref, t, MPFR_RNDN);
    CHECK(mpfr_lessequal_p(b.value.lower().get(), ref));
    CHECK(mpfr_greaterequal_p(b.value.upper().get(), ref));
  }
  mpfr_clears(ref, t, static_cast<mpfr_ptr>(nullptr));
}

TEST_CASE("log_factorial stays within the n log n - n + 1 bracket") {
  for (std::uint64_t n = 1; n <= 3000; ++n) REQUIRE(log_factorial_within_bracket(n));
  for (std::uint64_t n : {100'000ULL, 10'000'000ULL, 1ULL << 40}) CHECK(log_factorial_within_bracket(n));
}

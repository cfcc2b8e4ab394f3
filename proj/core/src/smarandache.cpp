#include "smarand/smarandache.hpp"

#include <algorithm>
#include <new>
#include <stdexcept>
#include <string>

#include "smarand/arith.hpp"
#include "smarand/errors.hpp"

namespace smarand {

namespace {

std::uint64_t prime_power_unchecked(std::uint64_t p, std::uint64_t a) {
  if (a == 1) return p;
  std::uint64_t hi = 0;
  if (__builtin_mul_overflow(a, p, &hi)) {
    throw std::invalid_argument("smarandache_prime_power: a * p overflows 64 bits");
  }
  // Search j in [1, a] for the least j with v_p((j p)!) >= a.
  std::uint64_t lo = 1;
  hi = a;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (legendre_valuation_unchecked(p, mid * p) >= a) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo * p;
}

}  // namespace

std::uint64_t smarandache_prime_power(std::uint64_t p, std::uint64_t a) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (a == 0) throw std::invalid_argument("smarandache_prime_power requires a >= 1");
  return prime_power_unchecked(p, a);
}

std::uint64_t smarandache(const Factorization& f) {
  std::uint64_t s = 1;
  for (const auto& [p, a] : f.factors) s = std::max(s, prime_power_unchecked(p, a));
  return s;
}

std::uint64_t smarandache(std::uint64_t n, const SpfSieve* sieve) {
  if (n == 0) throw std::invalid_argument("smarandache requires n >= 1");
  return smarandache(factorize(n, sieve));
}

std::uint64_t smarandache(const mpz_class& n) {
  if (n < 1) throw std::invalid_argument("smarandache requires n >= 1");
  if (mpz_fits_ulong_p(n.get_mpz_t())) return smarandache(static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t())));

  constexpr std::uint64_t kTrialBound = 1'000'000;
  mpz_class m = n;
  std::uint64_t s = 1;
  for (std::uint64_t p = 2; p <= kTrialBound && !mpz_fits_ulong_p(m.get_mpz_t()); p += (p == 2 ? 1 : 2)) {
    unsigned a = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++a;
    }
    // Composite p never divides here: its prime factors were removed earlier.
    if (a > 0) s = std::max(s, prime_power_unchecked(p, a));
  }
  if (!mpz_fits_ulong_p(m.get_mpz_t())) {
    throw std::domain_error("smarandache: cofactor exceeds 64 bits after trial division");
  }
  // Every prime tried so far was removed completely, so the cofactor shares no factor with them.
  const Factorization rest = factorize(mpz_get_ui(m.get_mpz_t()));
  return std::max(s, smarandache(rest));
}

std::uint64_t largest_prime_factor(std::uint64_t n, const SpfSieve* sieve) {
  if (n == 0) throw std::invalid_argument("largest_prime_factor requires n >= 1");
  return factorize(n, sieve).largest_prime();
}

SmarandacheTable build_table(std::uint64_t limit, unsigned threads) {
  if (limit == 0) throw std::invalid_argument("build_table requires limit >= 1");
  if (limit > kMaxSieveLimit) throw std::invalid_argument("build_table limit exceeds " + std::to_string(kMaxSieveLimit));

  SmarandacheTable table;
  table.limit_ = limit;
  try {
    table.s_of_.assign(limit + 1, 0);
    table.p_of_.assign(limit + 1, 0);
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate Smarandache tables up to " + std::to_string(limit));
  }
  table.s_of_[1] = 1;
  table.p_of_[1] = 1;
  if (limit == 1) return table;

  const SpfSieve sieve = build_spf_sieve(limit, threads);
  auto& s_of = table.s_of_;
  auto& p_of = table.p_of_;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    const std::uint32_t p = sieve.spf(n);
    std::uint64_t m = n / p;
    std::uint64_t a = 1;
    while (m % p == 0) {
      m /= p;
      ++a;
    }
    const auto spp = static_cast<std::uint32_t>(prime_power_unchecked(p, a));
    s_of[n] = std::max(s_of[m], spp);
    p_of[n] = m == 1 ? p : p_of[m];
  }
  return table;
}

}  // namespace smarand

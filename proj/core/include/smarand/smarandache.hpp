#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "smarand/factorize.hpp"
#include "smarand/sieve.hpp"

namespace smarand {

// Least m with p^a | m!. Always a multiple of p, found by binary search over m in [p, a*p].
// Throws std::invalid_argument when p is not prime or a == 0.
std::uint64_t smarandache_prime_power(std::uint64_t p, std::uint64_t a);

// S(n): least positive j with n | j!. S(1) = 1.
std::uint64_t smarandache(std::uint64_t n, const SpfSieve* sieve = nullptr);
std::uint64_t smarandache(const Factorization& f);

// S(n) for n beyond 64 bits. Small primes are stripped by trial division; the
// cofactor must fit in 64 bits, else std::domain_error.
std::uint64_t smarandache(const mpz_class& n);

// P(n), with P(1) = 1.
std::uint64_t largest_prime_factor(std::uint64_t n, const SpfSieve* sieve = nullptr);

// Flat tables of S(n) and P(n) for 1 <= n <= limit. Values fit in 32 bits because S(n) <= n.
class SmarandacheTable {
 public:
  SmarandacheTable() = default;

  std::uint64_t limit() const { return limit_; }
  // Require 1 <= n <= limit().
  std::uint32_t s(std::uint64_t n) const { return s_of_[n]; }
  std::uint32_t p(std::uint64_t n) const { return p_of_[n]; }
  // Indexed by n; entry 0 is unused.
  std::span<const std::uint32_t> s_values() const { return s_of_; }
  std::span<const std::uint32_t> p_values() const { return p_of_; }

 private:
  friend SmarandacheTable build_table(std::uint64_t limit, unsigned threads);

  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> s_of_;
  std::vector<std::uint32_t> p_of_;
};

// Builds both tables by smallest-prime-factor chaining: with p = spf(n), n = p^a * m and
// gcd(m, p) = 1, S(n) = max(S(m), S(p^a)) and P(n) = max(P(m), p).
// Throws std::invalid_argument for limit == 0 or limit > kMaxSieveLimit.
SmarandacheTable build_table(std::uint64_t limit, unsigned threads = 1);

}  // namespace smarand

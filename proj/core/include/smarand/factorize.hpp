#pragma once

#include <cstdint>
#include <vector>

#include "smarand/sieve.hpp"

namespace smarand {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n = prod prime^exponent with primes strictly increasing; n == 1 has no factors.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;

  // P(n), with P(1) = 1.
  std::uint64_t largest_prime() const { return factors.empty() ? 1 : factors.back().prime; }
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Uses the sieve when n <= sieve->limit(); otherwise trial division followed by
// Pollard-Brent splitting. The result is re-multiplied and primality-checked before return.
Factorization factorize(std::uint64_t n, const SpfSieve* sieve = nullptr);

}  // namespace smarand

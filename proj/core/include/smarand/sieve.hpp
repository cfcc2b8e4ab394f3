#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace smarand {

inline constexpr std::uint64_t kMaxSieveLimit = 1'000'000'000;

// Smallest-prime-factor table for 2 <= n <= limit. Immutable once built.
class SpfSieve {
 public:
  SpfSieve() = default;

  std::uint64_t limit() const { return limit_; }
  // Requires 2 <= n <= limit().
  std::uint32_t spf(std::uint64_t n) const { return spf_[n]; }
  bool is_prime(std::uint64_t n) const { return n >= 2 && n <= limit_ && spf_[n] == n; }
  // Indexed by n; entries 0 and 1 are zero.
  std::span<const std::uint32_t> table() const { return spf_; }

 private:
  friend SpfSieve build_spf_sieve(std::uint64_t limit, unsigned threads);

  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> spf_;
};

// Segmented Eratosthenes. The table is bit-identical for every thread count.
// Throws std::invalid_argument when limit < 2 or limit > kMaxSieveLimit, ResourceError on allocation failure.
SpfSieve build_spf_sieve(std::uint64_t limit, unsigned threads = 1);

// Primes p <= limit in increasing order (plain Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

}  // namespace smarand

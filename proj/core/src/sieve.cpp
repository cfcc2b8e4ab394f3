#include "smarand/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <new>
#include <stdexcept>
#include <string>
#include <thread>

#include "smarand/errors.hpp"

namespace smarand {

namespace {

constexpr std::uint64_t kSegmentSize = 1u << 18;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void sieve_segment(std::vector<std::uint32_t>& spf, const std::vector<std::uint32_t>& base,
                   std::uint64_t lo, std::uint64_t hi) {
  for (const std::uint64_t p : base) {
    if (p * p > hi) break;
    std::uint64_t j = std::max(p * p, (lo + p - 1) / p * p);
    for (; j <= hi; j += p) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(p);
    }
  }
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) {
    if (spf[n] == 0) spf[n] = static_cast<std::uint32_t>(n);
  }
}

}  // namespace

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

SpfSieve build_spf_sieve(std::uint64_t limit, unsigned threads) {
  if (limit < 2) throw std::invalid_argument("sieve limit must be at least 2");
  if (limit > kMaxSieveLimit) {
    throw std::invalid_argument("sieve limit " + std::to_string(limit) + " exceeds " +
                                std::to_string(kMaxSieveLimit));
  }

  SpfSieve sieve;
  sieve.limit_ = limit;
  try {
    sieve.spf_.assign(limit + 1, 0);
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate smallest-prime-factor table up to " + std::to_string(limit));
  }

  const auto base = primes_up_to(static_cast<std::uint32_t>(isqrt(limit)));
  const std::uint64_t segments = (limit + kSegmentSize) / kSegmentSize;
  auto run = [&](std::uint64_t seg) {
    const std::uint64_t lo = seg * kSegmentSize;
    const std::uint64_t hi = std::min(limit, lo + kSegmentSize - 1);
    sieve_segment(sieve.spf_, base, lo, hi);
  };

  threads = std::max(1u, threads);
  if (threads == 1 || segments == 1) {
    for (std::uint64_t seg = 0; seg < segments; ++seg) run(seg);
  } else {
    // Segments write disjoint slices, so the result does not depend on scheduling.
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::uint64_t seg = next++; seg < segments; seg = next++) run(seg);
      });
    }
  }
  return sieve;
}

}  // namespace smarand

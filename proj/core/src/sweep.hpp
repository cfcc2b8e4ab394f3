#pragma once

// Chunked range sweep shared by the census counters. Chunk boundaries are fixed
// and results are merged in chunk order, so output is independent of thread count.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace smarand::detail {

struct ClassTally {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> witnesses;
  bool truncated = false;
};

inline constexpr std::uint64_t kSweepChunk = 1u << 16;

// classify(n) returns -1 (not counted) or a class index in [0, Classes).
template <std::size_t Classes, class Classify>
std::array<ClassTally, Classes> sweep(std::uint64_t first, std::uint64_t last, unsigned threads,
                                      bool collect, std::size_t cap, Classify classify) {
  std::array<ClassTally, Classes> merged{};
  if (first > last) return merged;

  const std::uint64_t chunks = (last - first) / kSweepChunk + 1;
  std::vector<std::array<ClassTally, Classes>> partial(chunks);

  auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t lo = first + c * kSweepChunk;
    const std::uint64_t hi = std::min(last, lo + kSweepChunk - 1);
    auto& out = partial[c];
    for (std::uint64_t n = lo; n <= hi; ++n) {
      const int cls = classify(n);
      if (cls < 0) continue;
      auto& t = out[static_cast<std::size_t>(cls)];
      ++t.count;
      if (collect) {
        if (t.witnesses.size() < cap) {
          t.witnesses.push_back(n);
        } else {
          t.truncated = true;
        }
      }
    }
  };

  threads = std::max(1u, threads);
  if (threads == 1 || chunks == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
          try {
            for (std::uint64_t c = next++; c < chunks; c = next++) run_chunk(c);
          } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
            next = chunks;
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  for (auto& chunk : partial) {
    for (std::size_t i = 0; i < Classes; ++i) {
      auto& dst = merged[i];
      auto& src = chunk[i];
      dst.count += src.count;
      if (!collect) continue;
      for (const std::uint64_t n : src.witnesses) {
        if (dst.witnesses.size() < cap) {
          dst.witnesses.push_back(n);
        } else {
          dst.truncated = true;
        }
      }
      dst.truncated = dst.truncated || src.truncated;
    }
  }
  return merged;
}

}  // namespace smarand::detail

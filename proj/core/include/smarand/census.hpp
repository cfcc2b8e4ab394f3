#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smarand/arith.hpp"
#include "smarand/smarandache.hpp"

namespace smarand {

enum class CensusKind { N, Nk, Nk1, Nk2, M, Psi };

std::string_view kind_name(CensusKind kind);

struct CensusOptions {
  // Parallelism of the counting sweep. Results never depend on it.
  unsigned threads = 1;
  bool collect_witnesses = false;
  std::size_t witness_cap = 100'000;
};

struct CensusReport {
  CensusKind kind = CensusKind::N;
  std::uint64_t x = 0;
  std::optional<ExponentK> k;
  std::optional<std::uint64_t> y;
  // First n examined. M(x) is taken over [3, x] since log log n <= 0 for n < 3.
  std::uint64_t range_start = 1;
  std::uint64_t count = 0;
  double density = 0.0;
  // Counted n in increasing order, at most witness_cap of them.
  std::vector<std::uint64_t> witnesses;
  bool witnesses_truncated = false;
};

// N_k(x) together with its split by whether S(n) != P(n) or S(n) == P(n).
struct NkCensus {
  CensusReport total;
  CensusReport s_neq_p;
  CensusReport s_eq_p;
};

// N(x) = #{n <= x : S(n) != P(n)}.
CensusReport count_S_neq_P(std::uint64_t x, const SmarandacheTable& table, const CensusOptions& opts = {});

// N_k(x) = #{n <= x : S(n)! <= n^k}, decided exactly.
NkCensus count_Nk(std::uint64_t x, const ExponentK& k, const SmarandacheTable& table,
                  const CensusOptions& opts = {});

// True when log S! <= n^(1 / log log n). Requires n >= 3.
// Throws IndeterminateError naming n when the precision cap is reached.
bool within_m_bound(std::uint64_t s, std::uint64_t n);

// M(x) = #{3 <= n <= x : S(n)! <= exp(n^(1 / log log n))}. Requires x >= 3.
CensusReport count_M(std::uint64_t x, const SmarandacheTable& table, const CensusOptions& opts = {});

// Psi(x, y) = #{n <= x : P(n) <= y}, with n = 1 always counted.
CensusReport psi_smooth_count(std::uint64_t x, std::uint64_t y, const SmarandacheTable& table,
                              const CensusOptions& opts = {});

// Psi(x, y) without a table, by enumerating products of primes <= y. Practical for small y.
std::uint64_t psi_by_enumeration(std::uint64_t x, std::uint64_t y);

// {n : S(n) = P(n) <= 5}, found among the divisors of 5! = 120.
std::vector<std::uint64_t> case_i_set();

// Least T with (T!)^den > x^num. Every n <= x with S(n)! <= n^k has S(n) < T.
std::uint64_t factorial_threshold(std::uint64_t x, const ExponentK& k);

// Same counts as count_Nk, from the divisors of (T-1)! not exceeding x.
// Throws ResourceError when the enumeration would be too large.
NkCensus count_Nk_by_divisors(std::uint64_t x, const ExponentK& k, const CensusOptions& opts = {});

// kind,x,k_num,k_den,y,count,density
std::string census_csv_header();
std::string to_csv_row(const CensusReport& report);

}  // namespace smarand

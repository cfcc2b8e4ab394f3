#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "smarand/arith.hpp"
#include "smarand/census.hpp"
#include "smarand/smarandache.hpp"

namespace smarand {

// x exp(-sqrt(2 log x log log x)), i.e. the Ivic count with its O-term dropped. Requires x > e^e.
double ivic_bound_core(double x);

// x exp(-log x / (2 log y)), implied constant 1. Requires 2 <= y <= x.
double tenenbaum_bound_core(double x, double y);

// -log(count / x) / sqrt(2 log x log log x); +infinity when count == 0.
double shape_ratio(std::uint64_t count, std::uint64_t x);

struct BoundDiagnostic {
  std::uint64_t x = 0;
  std::optional<ExponentK> k;
  std::uint64_t exact_count = 0;
  double bound_core = 0.0;
  double shape_ratio = 0.0;
  // exact_count / bound_core
  double bound_ratio = 0.0;
};

// Exact N_k(x) against the Ivic-shaped core. With table == nullptr the count
// comes from the divisor enumeration. Requires x > 16.
BoundDiagnostic theorem1_diagnostic(std::uint64_t x, const ExponentK& k, const SmarandacheTable* table = nullptr);

// Exact M(x) against x / sqrt(log x); bound_ratio = M(x) sqrt(log x) / x. Requires x >= 16.
BoundDiagnostic theorem2_diagnostic(std::uint64_t x, const SmarandacheTable& table, const CensusOptions& opts = {});

// Certifies e (P/e)^P <= P! and P <= 1 + P log(P/e). Requires P >= 7.
bool verify_eq5_chain(std::uint64_t p);

// floor(k log x) and ceil(x^(1 / log log x)), both certified. The latter requires x >= 16.
std::uint64_t floor_k_log_x(std::uint64_t x, const ExponentK& k);
std::uint64_t ceil_m_smoothness(std::uint64_t x);

// Case (ii) checks on N_{k,2}(x): every witness with P(n) >= 7 obeys P(n) <= k log x and
// the Eq5 chain, and N_{k,2}(x) <= 12 + Psi(x, floor(k log x)).
struct CaseTwoCheck {
  std::uint64_t witnesses_checked = 0;
  std::uint64_t witness_failures = 0;
  std::uint64_t nk2 = 0;
  std::uint64_t psi_bound = 0;  // 12 + Psi(x, floor(k log x))
  bool count_bound_holds = false;
};
CaseTwoCheck check_case_two(const NkCensus& census, const ExponentK& k);

// The analogous checks for M(x): witnesses with P(n) >= 7 obey P(n) <= x^(1 / log log x), and
// M(x) <= 12 + Psi(x, ceil(x^(1 / log log x))).
struct MBoundCheck {
  std::uint64_t witnesses_checked = 0;
  std::uint64_t witness_failures = 0;
  std::uint64_t m = 0;
  std::uint64_t psi_bound = 0;
  bool count_bound_holds = false;
};
MBoundCheck check_m_bound(const CensusReport& m_census, const SmarandacheTable& table);

// Largest observed Psi(x, y) / tenenbaum_bound_core(x, y) over the grid; reported, never assumed.
struct PsiConstant {
  double constant = 0.0;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
};
PsiConstant psi_empirical_constant(const SmarandacheTable& table, std::span<const std::uint64_t> xs,
                                   std::span<const std::uint64_t> ys);

// x,k_num,k_den,exact_count,bound_core,shape_ratio
std::string diagnostic_csv_header();
std::string to_csv_row(const BoundDiagnostic& d);

}  // namespace smarand

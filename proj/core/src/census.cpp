#include "smarand/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "smarand/errors.hpp"
#include "smarand/interval.hpp"
#include "sweep.hpp"

namespace smarand {

namespace {

constexpr std::uint64_t kMaxDivisorVisits = 100'000'000;
constexpr std::uint64_t kMaxThresholdForDivisors = 10'000'000;

void require_table(std::uint64_t x, const SmarandacheTable& table) {
  if (x == 0) throw std::invalid_argument("census requires x >= 1");
  if (table.limit() < x) {
    throw std::invalid_argument("table limit " + std::to_string(table.limit()) + " is below x = " +
                                std::to_string(x));
  }
}

CensusReport make_report(CensusKind kind, std::uint64_t x, detail::ClassTally tally) {
  CensusReport r;
  r.kind = kind;
  r.x = x;
  r.count = tally.count;
  r.density = static_cast<double>(tally.count) / static_cast<double>(x);
  r.witnesses = std::move(tally.witnesses);
  r.witnesses_truncated = tally.truncated;
  return r;
}

detail::ClassTally merge_sorted(const detail::ClassTally& a, const detail::ClassTally& b, std::size_t cap) {
  detail::ClassTally out;
  out.count = a.count + b.count;
  std::merge(a.witnesses.begin(), a.witnesses.end(), b.witnesses.begin(), b.witnesses.end(),
             std::back_inserter(out.witnesses));
  // Each side holds its own smallest `cap`, so the merged prefix is exact.
  out.truncated = a.truncated || b.truncated || out.witnesses.size() > cap;
  if (out.witnesses.size() > cap) out.witnesses.resize(cap);
  return out;
}

NkCensus assemble_nk(std::uint64_t x, const ExponentK& k, std::array<detail::ClassTally, 2> tallies,
                     std::size_t cap) {
  NkCensus out;
  out.total = make_report(CensusKind::Nk, x, merge_sorted(tallies[0], tallies[1], cap));
  out.s_neq_p = make_report(CensusKind::Nk1, x, std::move(tallies[0]));
  out.s_eq_p = make_report(CensusKind::Nk2, x, std::move(tallies[1]));
  for (auto* r : {&out.total, &out.s_neq_p, &out.s_eq_p}) r->k = k;
  return out;
}

}  // namespace

std::string_view kind_name(CensusKind kind) {
  switch (kind) {
    case CensusKind::N: return "N";
    case CensusKind::Nk: return "N_k";
    case CensusKind::Nk1: return "N_k1";
    case CensusKind::Nk2: return "N_k2";
    case CensusKind::M: return "M";
    case CensusKind::Psi: return "Psi";
  }
  return "?";
}

CensusReport count_S_neq_P(std::uint64_t x, const SmarandacheTable& table, const CensusOptions& opts) {
  require_table(x, table);
  const auto s = table.s_values();
  const auto p = table.p_values();
  auto tallies = detail::sweep<1>(1, x, opts.threads, opts.collect_witnesses, opts.witness_cap,
                                  [&](std::uint64_t n) { return s[n] != p[n] ? 0 : -1; });
  return make_report(CensusKind::N, x, std::move(tallies[0]));
}

NkCensus count_Nk(std::uint64_t x, const ExponentK& k, const SmarandacheTable& table, const CensusOptions& opts) {
  require_table(x, table);
  const std::uint64_t threshold = factorial_threshold(x, k);
  const auto s = table.s_values();
  const auto p = table.p_values();
  auto tallies = detail::sweep<2>(1, x, opts.threads, opts.collect_witnesses, opts.witness_cap,
                                  [&](std::uint64_t n) {
                                    // S(n) >= T gives S(n)! >= T! > x^k >= n^k.
                                    if (s[n] >= threshold) return -1;
                                    if (exact_compare_factorial_power(s[n], n, k) > 0) return -1;
                                    return s[n] != p[n] ? 0 : 1;
                                  });
  return assemble_nk(x, k, std::move(tallies), opts.witness_cap);
}

bool within_m_bound(std::uint64_t s, std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("the M(x) bound needs n >= 3");
  if (s == 0) throw std::invalid_argument("within_m_bound requires s >= 1");

  const double lhs = std::lgamma(static_cast<double>(s) + 1.0);
  const double log_n = std::log(static_cast<double>(n));
  const double rhs = std::exp(log_n / std::log(log_n));
  if (lhs <= rhs * (1.0 - 1e-9)) return true;
  if (lhs >= rhs * (1.0 + 1e-9)) return false;

  const unsigned cap = precision_cap_bits();
  for (mpfr_prec_t prec = 64; prec <= static_cast<mpfr_prec_t>(cap); prec *= 2) {
    const Interval lf = log_factorial_at(s, prec);
    const Interval ln = log(Interval::from_uint(n, prec));
    const Interval bound = exp(ln / log(ln));
    if (lf.certainly_less_equal(bound)) return true;
    if (lf.certainly_greater(bound)) return false;
  }
  throw IndeterminateError("M(x) comparison undecided at n = " + std::to_string(n) + " within " +
                           std::to_string(cap) + " bits");
}

CensusReport count_M(std::uint64_t x, const SmarandacheTable& table, const CensusOptions& opts) {
  if (x < 3) throw std::invalid_argument("count_M requires x >= 3");
  require_table(x, table);
  const auto s = table.s_values();
  auto tallies = detail::sweep<1>(3, x, opts.threads, opts.collect_witnesses, opts.witness_cap,
                                  [&](std::uint64_t n) { return within_m_bound(s[n], n) ? 0 : -1; });
  CensusReport r = make_report(CensusKind::M, x, std::move(tallies[0]));
  r.range_start = 3;
  return r;
}

CensusReport psi_smooth_count(std::uint64_t x, std::uint64_t y, const SmarandacheTable& table,
                              const CensusOptions& opts) {
  require_table(x, table);
  if (y == 0) throw std::invalid_argument("psi_smooth_count requires y >= 1");
  const auto p = table.p_values();
  CensusReport r;
  if (!opts.collect_witnesses) {
    // Plain scan; P(1) = 1 <= y keeps n = 1 in the count.
    // Table entries are 32-bit; comparing at that width lets the scan vectorize.
    const auto y32 = static_cast<std::uint32_t>(std::min<std::uint64_t>(y, UINT32_MAX));
    std::uint32_t smooth = 0;  // x <= kMaxSieveLimit < 2^32
    for (const std::uint32_t v : p.subspan(1, x)) smooth += v <= y32 ? 1u : 0u;
    detail::ClassTally t;
    t.count = static_cast<std::uint64_t>(smooth);
    r = make_report(CensusKind::Psi, x, std::move(t));
  } else {
    auto tallies = detail::sweep<1>(1, x, opts.threads, true, opts.witness_cap,
                                    [&](std::uint64_t n) { return p[n] <= y ? 0 : -1; });
    r = make_report(CensusKind::Psi, x, std::move(tallies[0]));
  }
  r.y = y;
  return r;
}

namespace {

std::uint64_t count_smooth(std::uint64_t remaining, std::size_t idx, const std::vector<std::uint32_t>& primes) {
  std::uint64_t total = 1;
  for (std::size_t i = idx; i < primes.size() && primes[i] <= remaining; ++i) {
    total += count_smooth(remaining / primes[i], i, primes);
  }
  return total;
}

}  // namespace

std::uint64_t psi_by_enumeration(std::uint64_t x, std::uint64_t y) {
  if (x == 0 || y == 0) throw std::invalid_argument("psi_by_enumeration requires x, y >= 1");
  if (y >= x) return x;
  if (y > kMaxSieveLimit) throw ResourceError("psi_by_enumeration: y too large");
  return count_smooth(x, 0, primes_up_to(static_cast<std::uint32_t>(y)));
}

std::vector<std::uint64_t> case_i_set() {
  constexpr std::uint64_t kFactorialOfFive = 120;
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= kFactorialOfFive; ++d) {
    if (kFactorialOfFive % d != 0) continue;
    const std::uint64_t s = smarandache(d);
    if (s == largest_prime_factor(d) && s <= 5) out.push_back(d);
  }
  return out;
}

std::uint64_t factorial_threshold(std::uint64_t x, const ExponentK& k) {
  if (x == 0) throw std::invalid_argument("factorial_threshold requires x >= 1");
  mpz_class power;
  mpz_set_ui(power.get_mpz_t(), x);
  mpz_pow_ui(power.get_mpz_t(), power.get_mpz_t(), k.num());

  std::uint64_t t = 1;
  mpz_class factorial = 1;
  mpz_class lifted = 1;
  while (lifted <= power) {
    ++t;
    mpz_mul_ui(factorial.get_mpz_t(), factorial.get_mpz_t(), t);
    mpz_pow_ui(lifted.get_mpz_t(), factorial.get_mpz_t(), k.den());
  }
  return t;
}

namespace {

struct DivisorWalk {
  std::uint64_t x;
  const ExponentK& k;
  std::vector<std::uint64_t> primes;
  // spp[i][a] = S(primes[i]^a), spp[i][0] = 1
  std::vector<std::vector<std::uint64_t>> spp;
  std::uint64_t visits = 0;
  std::uint64_t counts[2] = {0, 0};
  bool collect;
  std::vector<std::uint64_t> witnesses[2];

  void walk(std::size_t i, std::uint64_t d, std::uint64_t s, std::uint64_t p) {
    if (++visits > kMaxDivisorVisits) {
      throw ResourceError("divisor enumeration exceeded " + std::to_string(kMaxDivisorVisits) + " nodes");
    }
    if (i == primes.size()) {
      if (exact_compare_factorial_power(s, d, k) > 0) return;
      const int cls = s != p ? 0 : 1;
      ++counts[cls];
      if (collect) witnesses[cls].push_back(d);
      return;
    }
    const std::uint64_t q = primes[i];
    std::uint64_t cur = d;
    for (std::size_t a = 0; a < spp[i].size(); ++a) {
      walk(i + 1, cur, std::max(s, spp[i][a]), a == 0 ? p : q);
      if (a + 1 == spp[i].size() || cur > x / q) break;
      cur *= q;
    }
  }
};

}  // namespace

NkCensus count_Nk_by_divisors(std::uint64_t x, const ExponentK& k, const CensusOptions& opts) {
  if (x == 0) throw std::invalid_argument("count_Nk_by_divisors requires x >= 1");
  // Cheap screen before the exact threshold: T - 1 >= kMax whenever log kMax! < k log x.
  if (std::lgamma(static_cast<double>(kMaxThresholdForDivisors) + 1.0) <
      k.value() * std::log(static_cast<double>(x))) {
    throw ResourceError("factorial threshold too large for divisor enumeration");
  }
  const std::uint64_t threshold = factorial_threshold(x, k);
  if (threshold > kMaxThresholdForDivisors) {
    throw ResourceError("factorial threshold " + std::to_string(threshold) + " too large for divisor enumeration");
  }

  DivisorWalk w{x, k, {}, {}, 0, {0, 0}, opts.collect_witnesses, {}};
  const std::uint64_t top = threshold - 1;  // counted n divide top!
  for (const std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(top))) {
    const std::uint64_t e = legendre_valuation_unchecked(p, top);
    std::vector<std::uint64_t> row{1};
    // Only exponents with p^a <= x can occur.
    std::uint64_t pa = 1;
    for (std::uint64_t a = 1; a <= e && pa <= x / p; ++a) {
      pa *= p;
      row.push_back(smarandache_prime_power(p, a));
    }
    if (row.size() > 1) {
      w.primes.push_back(p);
      w.spp.push_back(std::move(row));
    }
  }
  w.walk(0, 1, 1, 1);

  std::array<detail::ClassTally, 2> tallies;
  for (int c = 0; c < 2; ++c) {
    tallies[c].count = w.counts[c];
    auto& wit = w.witnesses[c];
    std::sort(wit.begin(), wit.end());
    if (wit.size() > opts.witness_cap) {
      wit.resize(opts.witness_cap);
      tallies[c].truncated = true;
    }
    tallies[c].witnesses = std::move(wit);
  }
  return assemble_nk(x, k, std::move(tallies), opts.witness_cap);
}

std::string census_csv_header() { return "kind,x,k_num,k_den,y,count,density"; }

std::string to_csv_row(const CensusReport& r) {
  std::string row{kind_name(r.kind)};
  row += ',' + std::to_string(r.x) + ',';
  if (r.k) row += std::to_string(r.k->num());
  row += ',';
  if (r.k) row += std::to_string(r.k->den());
  row += ',';
  if (r.y) row += std::to_string(*r.y);
  char density[40];
  std::snprintf(density, sizeof density, "%.14e", r.density);
  row += ',' + std::to_string(r.count) + ',' + density;
  return row;
}

}  // namespace smarand

#include "smarand/asymptotics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "smarand/errors.hpp"
#include "smarand/interval.hpp"

namespace smarand {

namespace {

constexpr double kEToTheE = 15.154262241479259;  // e^e

// Escalation ladder for real-valued verdicts: 53 bits, then 113, then doubling to the cap.
template <class Decide>
auto escalate(const std::string& what, Decide decide) {
  const auto cap = static_cast<mpfr_prec_t>(precision_cap_bits());
  for (mpfr_prec_t prec = 53; prec <= cap; prec = prec == 53 ? 113 : prec * 2) {
    if (auto verdict = decide(prec)) return *verdict;
  }
  throw IndeterminateError(what + " undecided within " + std::to_string(cap) + " bits");
}

// floor of the enclosed value, if the enclosure pins it down.
std::optional<std::uint64_t> enclosed_floor(const Interval& v) {
  BigFloat lo(v.precision());
  BigFloat hi(v.precision());
  mpfr_floor(lo.get(), v.lower().get());
  mpfr_floor(hi.get(), v.upper().get());
  if (!mpfr_equal_p(lo.get(), hi.get()) || mpfr_sgn(lo.get()) < 0) return std::nullopt;
  return static_cast<std::uint64_t>(mpfr_get_uj(lo.get(), MPFR_RNDN));
}

Interval m_smoothness_bound(std::uint64_t x, mpfr_prec_t prec) {
  const Interval ln = log(Interval::from_uint(x, prec));
  return exp(ln / log(ln));
}

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.14e", v);
  return buf;
}

}  // namespace

double ivic_bound_core(double x) {
  if (!(x > kEToTheE)) throw std::invalid_argument("ivic_bound_core requires x > e^e");
  const double lx = std::log(x);
  return x * std::exp(-std::sqrt(2.0 * lx * std::log(lx)));
}

double tenenbaum_bound_core(double x, double y) {
  if (!(y >= 2.0) || !(y <= x)) throw std::invalid_argument("tenenbaum_bound_core requires 2 <= y <= x");
  return x * std::exp(-std::log(x) / (2.0 * std::log(y)));
}

double shape_ratio(std::uint64_t count, std::uint64_t x) {
  if (static_cast<double>(x) <= kEToTheE) throw std::invalid_argument("shape_ratio requires x > e^e");
  if (count == 0) return std::numeric_limits<double>::infinity();
  const double lx = std::log(static_cast<double>(x));
  return -std::log(static_cast<double>(count) / static_cast<double>(x)) / std::sqrt(2.0 * lx * std::log(lx));
}

BoundDiagnostic theorem1_diagnostic(std::uint64_t x, const ExponentK& k, const SmarandacheTable* table) {
  if (x <= 16) throw std::invalid_argument("theorem1_diagnostic requires x > 16");
  const NkCensus census = table != nullptr ? count_Nk(x, k, *table) : count_Nk_by_divisors(x, k);
  BoundDiagnostic d;
  d.x = x;
  d.k = k;
  d.exact_count = census.total.count;
  d.bound_core = ivic_bound_core(static_cast<double>(x));
  d.shape_ratio = shape_ratio(d.exact_count, x);
  d.bound_ratio = static_cast<double>(d.exact_count) / d.bound_core;
  return d;
}

BoundDiagnostic theorem2_diagnostic(std::uint64_t x, const SmarandacheTable& table, const CensusOptions& opts) {
  if (x < 16) throw std::invalid_argument("theorem2_diagnostic requires x >= 16");
  const CensusReport m = count_M(x, table, opts);
  BoundDiagnostic d;
  d.x = x;
  d.exact_count = m.count;
  d.bound_core = static_cast<double>(x) / std::sqrt(std::log(static_cast<double>(x)));
  d.shape_ratio = shape_ratio(m.count, x);
  d.bound_ratio = static_cast<double>(m.count) / d.bound_core;
  return d;
}

bool verify_eq5_chain(std::uint64_t p) {
  if (p < 7) throw std::invalid_argument("verify_eq5_chain requires P >= 7");
  return escalate("Eq5 chain at P = " + std::to_string(p), [p](mpfr_prec_t prec) -> std::optional<bool> {
    const Interval pp = Interval::from_uint(p, prec);
    const Interval one = Interval::exact(1, prec);
    // log(e (P/e)^P) = 1 + P (log P - 1) = 1 + P log(P/e)
    const Interval middle = one + pp * (log(pp) - one);
    const Interval log_fact = log_factorial_at(p, prec);
    const bool left_ok = pp.certainly_less_equal(middle);
    const bool right_ok = middle.certainly_less_equal(log_fact);
    if (left_ok && right_ok) return true;
    if (pp.certainly_greater(middle) || middle.certainly_greater(log_fact)) return false;
    return std::nullopt;
  });
}

std::uint64_t floor_k_log_x(std::uint64_t x, const ExponentK& k) {
  if (x == 0) throw std::invalid_argument("floor_k_log_x requires x >= 1");
  return escalate("floor(k log x) at x = " + std::to_string(x), [&](mpfr_prec_t prec) {
    const Interval kk = Interval::from_uint(k.num(), prec) / Interval::from_uint(k.den(), prec);
    return enclosed_floor(kk * log(Interval::from_uint(x, prec)));
  });
}

std::uint64_t ceil_m_smoothness(std::uint64_t x) {
  if (x < 16) throw std::invalid_argument("ceil_m_smoothness requires x >= 16");
  return escalate("ceil(x^(1/log log x)) at x = " + std::to_string(x),
                  [x](mpfr_prec_t prec) -> std::optional<std::uint64_t> {
                    const Interval b = m_smoothness_bound(x, prec);
                    const auto f = enclosed_floor(b);
                    // The value must sit strictly above its floor for ceil = floor + 1.
                    if (!f || mpfr_cmp_ui(b.lower().get(), static_cast<unsigned long>(*f)) <= 0) return std::nullopt;
                    return *f + 1;
                  });
}

CaseTwoCheck check_case_two(const NkCensus& census, const ExponentK& k) {
  const CensusReport& eq = census.s_eq_p;
  if (eq.witnesses_truncated || eq.witnesses.size() != eq.count) {
    throw std::invalid_argument("check_case_two needs the complete N_k2 witness list");
  }
  CaseTwoCheck out;
  out.nk2 = eq.count;
  const std::uint64_t y = floor_k_log_x(eq.x, k);
  for (const std::uint64_t n : eq.witnesses) {
    const std::uint64_t p = largest_prime_factor(n);
    if (p < 7) continue;
    ++out.witnesses_checked;
    // P integral, so P <= k log x iff P <= floor(k log x).
    if (p > y || !verify_eq5_chain(p)) ++out.witness_failures;
  }
  out.psi_bound = 12 + psi_by_enumeration(eq.x, std::max<std::uint64_t>(y, 1));
  out.count_bound_holds = out.nk2 <= out.psi_bound;
  return out;
}

MBoundCheck check_m_bound(const CensusReport& m_census, const SmarandacheTable& table) {
  if (m_census.kind != CensusKind::M) throw std::invalid_argument("check_m_bound needs an M(x) census");
  if (m_census.witnesses_truncated || m_census.witnesses.size() != m_census.count) {
    throw std::invalid_argument("check_m_bound needs the complete M(x) witness list");
  }
  const std::uint64_t x = m_census.x;
  const std::uint64_t ceil_bound = ceil_m_smoothness(x);
  MBoundCheck out;
  out.m = m_census.count;
  for (const std::uint64_t n : m_census.witnesses) {
    const std::uint64_t p = table.p(n);
    if (p < 7) continue;
    ++out.witnesses_checked;
    // The bound is not an integer, so P <= bound iff P < ceil(bound).
    if (p >= ceil_bound) ++out.witness_failures;
  }
  out.psi_bound = 12 + psi_smooth_count(x, std::min(ceil_bound, x), table).count;
  out.count_bound_holds = out.m <= out.psi_bound;
  return out;
}

PsiConstant psi_empirical_constant(const SmarandacheTable& table, std::span<const std::uint64_t> xs,
                                   std::span<const std::uint64_t> ys) {
  PsiConstant best;
  for (const std::uint64_t x : xs) {
    for (const std::uint64_t y : ys) {
      if (y < 2 || y > x) continue;
      const double c = static_cast<double>(psi_smooth_count(x, y, table).count) /
                       tenenbaum_bound_core(static_cast<double>(x), static_cast<double>(y));
      if (c > best.constant) best = {c, x, y};
    }
  }
  return best;
}

std::string diagnostic_csv_header() { return "x,k_num,k_den,exact_count,bound_core,shape_ratio"; }

std::string to_csv_row(const BoundDiagnostic& d) {
  std::string row = std::to_string(d.x) + ',';
  if (d.k) row += std::to_string(d.k->num());
  row += ',';
  if (d.k) row += std::to_string(d.k->den());
  row += ',' + std::to_string(d.exact_count) + ',' + format_real(d.bound_core) + ',' + format_real(d.shape_ratio);
  return row;
}

}  // namespace smarand

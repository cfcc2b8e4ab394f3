#include "smarand/irrationality.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "smarand/arith.hpp"
#include "smarand/errors.hpp"

namespace smarand {

RationalBracket e_rational_bracket(unsigned precision_bits) {
  // Tail sum_{j>J} 1/j! < 2/(J+1)!, so stop once (J+1)! >= 2^(precision_bits+1).
  mpz_class target = 1;
  target <<= precision_bits + 1;
  mpz_class partial = 1;  // partial / J! = sum_{j<=J} 1/j!
  mpz_class factorial = 1;
  unsigned j = 0;
  while (factorial * (j + 1) < target) {
    ++j;
    partial = partial * j + 1;
    factorial *= j;
  }
  RationalBracket b;
  b.terms = j;
  b.lower = mpq_class(partial, factorial);
  b.lower.canonicalize();
  const mpz_class next_factorial = factorial * (j + 1);
  b.upper = mpq_class(partial * (j + 1) + 2, next_factorial);
  b.upper.canonicalize();
  return b;
}

RealEnclosure e_enclosure(unsigned precision_bits) {
  if (precision_bits < 16) throw std::invalid_argument("e_enclosure requires precision_bits >= 16");
  // Tail <= 2^-(p+1) and two outward roundings of at most 2^-(p+2) each.
  const RationalBracket b = e_rational_bracket(precision_bits + 1);
  return Interval::from_bounds(b.lower, b.upper, precision_bits + 4);
}

namespace {

mpz_class floor_q(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Certified continued-fraction prefix: stops at the first partial quotient the bracket cannot decide.
std::optional<std::vector<Convergent>> convergents_from(const RationalBracket& b, std::uint64_t max_den) {
  mpq_class lo = b.lower;
  mpq_class hi = b.upper;
  // Seeds h_{-1}/k_{-1} = 1/0 and h_{-2}/k_{-2} = 0/1.
  mpz_class h = 1, h_prev = 0;
  mpz_class k = 0, k_prev = 1;
  std::vector<Convergent> out;
  for (;;) {
    const mpz_class a = floor_q(lo);
    if (a != floor_q(hi)) return std::nullopt;
    const mpz_class h_next = a * h + h_prev;
    const mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) return out;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    if (k > 1) out.push_back({h.get_ui(), k.get_ui()});
    const mpq_class lo_frac = lo - a;
    const mpq_class hi_frac = hi - a;
    if (lo_frac == 0) return std::nullopt;
    lo = 1 / hi_frac;
    hi = 1 / lo_frac;
  }
}

}  // namespace

std::vector<Convergent> e_convergents(std::uint64_t max_denominator) {
  if (max_denominator < 2) throw std::invalid_argument("e_convergents requires max_denominator >= 2");
  const auto cap = precision_cap_bits();
  const unsigned start = 2 * static_cast<unsigned>(std::log2(static_cast<double>(max_denominator)) + 1) + 32;
  for (unsigned bits = start; bits <= cap; bits *= 2) {
    const RationalBracket b = e_rational_bracket(bits);
    auto found = convergents_from(b, max_denominator);
    if (!found) continue;
    for (const Convergent& c : *found) {
      const mpz_class n = c.n;
      const mpq_class approx(mpz_class(c.m), n);
      const mpq_class limit(mpz_class(1), n * n);
      if (abs(b.lower - approx) >= limit || abs(b.upper - approx) >= limit) {
        throw std::logic_error("convergent " + std::to_string(c.m) + "/" + std::to_string(c.n) +
                               " fails |e - m/n| < 1/n^2");
      }
    }
    return *found;
  }
  throw IndeterminateError("e_convergents: partial quotients undecided within " + std::to_string(cap) + " bits");
}

mpz_class nearest_numerator(const mpz_class& n) {
  const auto cap = precision_cap_bits();
  for (unsigned bits = static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2)) + 64; bits <= cap; bits *= 2) {
    const RationalBracket b = e_rational_bracket(bits);
    const mpq_class half(1, 2);
    const mpz_class lo = floor_q(b.lower * n + half);
    if (lo == floor_q(b.upper * n + half)) return lo;
  }
  throw IndeterminateError("nearest_numerator undecided within " + std::to_string(cap) + " bits");
}

std::string_view side_name(StrongerSide side) {
  switch (side) {
    case StrongerSide::Sondow: return "sondow";
    case StrongerSide::Dirichlet: return "dirichlet";
    case StrongerSide::Equal: return "equal";
  }
  return "?";
}

StrongerSide stronger_side(std::strong_ordering sondow_vs_dirichlet) {
  if (sondow_vs_dirichlet < 0) return StrongerSide::Dirichlet;
  if (sondow_vs_dirichlet > 0) return StrongerSide::Sondow;
  return StrongerSide::Equal;
}

std::strong_ordering compare_bounds(const mpz_class& n, Epsilon epsilon) {
  if (n <= 1) throw std::invalid_argument("compare_bounds requires n > 1");
  if (epsilon.den == 0) throw std::invalid_argument("epsilon denominator must be positive");
  const std::uint64_t s = smarandache(n);
  const ExponentK power(2 * epsilon.den + epsilon.num, epsilon.den);
  // 1/(S+1)! against 1/n^(2+eps) is the reverse of (S+1)! against n^(2+eps).
  return 0 <=> exact_compare_factorial_power(s + 1, n, power);
}

std::strong_ordering compare_bounds(std::uint64_t n, Epsilon epsilon, const SmarandacheTable* table) {
  if (n <= 1) throw std::invalid_argument("compare_bounds requires n > 1");
  if (epsilon.den == 0) throw std::invalid_argument("epsilon denominator must be positive");
  const std::uint64_t s = table != nullptr && n <= table->limit() ? table->s(n) : smarandache(n);
  const ExponentK power(2 * epsilon.den + epsilon.num, epsilon.den);
  return 0 <=> exact_compare_factorial_power(s + 1, n, power);
}

namespace {

Interval dirichlet_enclosure(const mpz_class& n, Epsilon eps, mpfr_prec_t prec) {
  if (eps.num == 0) {
    const mpz_class n2 = n * n;
    return Interval::from_mpq(mpq_class(mpz_class(1), n2), prec);
  }
  const Interval exponent =
      Interval::exact(2, prec) + Interval::from_uint(eps.num, prec) / Interval::from_uint(eps.den, prec);
  return exp(Interval::exact(0, prec) - exponent * log(Interval::from_mpz(n, prec)));
}

}  // namespace

ApproxRecord check_sondow_inequality(const mpz_class& m, const mpz_class& n, Epsilon epsilon) {
  if (n <= 1) throw std::invalid_argument("check_sondow_inequality requires n > 1");
  if (epsilon.den == 0) throw std::invalid_argument("epsilon denominator must be positive");

  ApproxRecord r;
  r.m = m;
  r.n = n;
  r.epsilon = epsilon;
  r.s_of_n = smarandache(n);
  mpq_class approx(m, n);
  approx.canonicalize();

  const auto cap = precision_cap_bits();
  for (unsigned bits = 64; bits <= cap; bits *= 2) {
    const auto prec = static_cast<mpfr_prec_t>(bits);
    const RationalBracket b = e_rational_bracket(bits);
    mpq_class d_lo = b.lower - approx;
    mpq_class d_hi = b.upper - approx;
    if (sgn(d_lo) < 0 && sgn(d_hi) > 0) continue;  // bracket straddles m/n
    if (sgn(d_hi) <= 0) {
      mpq_class t = -d_hi;
      d_hi = -d_lo;
      d_lo = t;
    }
    if (sgn(d_lo) == 0) continue;
    const Interval gap = Interval::from_bounds(d_lo, d_hi, prec);
    // Compare in log space so (S+1)! is never materialized.
    const Interval log_gap = log(gap);
    const Interval log_sondow = Interval::exact(0, prec) - log_factorial_at(r.s_of_n + 1, prec);
    if (log_gap.certainly_greater(log_sondow)) {
      r.gap = gap;
      r.sondow_bound = exp(log_sondow);
      r.dirichlet_bound = dirichlet_enclosure(n, epsilon, prec);
      r.stronger = stronger_side(compare_bounds(n, epsilon));
      return r;
    }
    if (log_gap.certainly_less_equal(log_sondow)) {
      throw std::logic_error("|e - m/n| > 1/(S(n)+1)! violated at m = " + m.get_str() + ", n = " + n.get_str() +
                             "; this indicates a bug in S(n), the factorial, or the enclosure of e");
    }
  }
  throw IndeterminateError("Sondow inequality undecided for m = " + m.get_str() + ", n = " + n.get_str());
}

std::string approx_csv_header() {
  return "m,n,gap_lo,gap_hi,sondow_bound,dirichlet_bound,epsilon_num,epsilon_den,stronger_side";
}

std::string to_csv_row(const ApproxRecord& r) {
  constexpr int kDigits = 17;
  std::string row = r.m.get_str() + ',' + r.n.get_str() + ',';
  row += r.gap.lower().to_string(kDigits, MPFR_RNDD) + ',' + r.gap.upper().to_string(kDigits, MPFR_RNDU) + ',';
  row += r.sondow_bound.upper().to_string(kDigits, MPFR_RNDU) + ',';
  row += r.dirichlet_bound.upper().to_string(kDigits, MPFR_RNDU) + ',';
  row += std::to_string(r.epsilon.num) + ',' + std::to_string(r.epsilon.den) + ',';
  row += side_name(r.stronger);
  return row;
}

}  // namespace smarand

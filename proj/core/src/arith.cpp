#include "smarand/arith.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "smarand/errors.hpp"
#include "smarand/factorize.hpp"

namespace smarand {

ExponentK::ExponentK(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("exponent denominator must be positive");
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  if (num_ <= den_) {
    throw std::invalid_argument("exponent k = " + std::to_string(num) + "/" + std::to_string(den) +
                                " must exceed 1");
  }
}

std::string ExponentK::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const ExponentK& a, const ExponentK& b) {
  const auto lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
  const auto rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::uint64_t legendre_valuation_unchecked(std::uint64_t p, std::uint64_t m) {
  std::uint64_t v = 0;
  while (m >= p) {
    m /= p;
    v += m;
  }
  return v;
}

std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t m) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return legendre_valuation_unchecked(p, m);
}

namespace {

// Margin, in bits, inside which the floating estimate is not trusted.
constexpr double kBitMargin = 2.0;

std::strong_ordering materialized_compare(std::uint64_t s, const mpz_class& n, const ExponentK& k) {
  mpz_class lhs;
  mpz_fac_ui(lhs.get_mpz_t(), s);
  mpz_pow_ui(lhs.get_mpz_t(), lhs.get_mpz_t(), k.den());
  mpz_class rhs;
  mpz_pow_ui(rhs.get_mpz_t(), n.get_mpz_t(), k.num());
  const int c = cmp(lhs, rhs);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering prefiltered_compare(std::uint64_t s, double log2_n, const mpz_class& n, const ExponentK& k) {
  const double lhs_bits = static_cast<double>(k.den()) * std::lgamma(static_cast<double>(s) + 1.0) / std::log(2.0);
  const double rhs_bits = static_cast<double>(k.num()) * log2_n;
  // lgamma and log2 are accurate to a few ulps; the relative slack dwarfs that.
  const double slack = kBitMargin + 1e-9 * std::max(lhs_bits, rhs_bits);
  if (lhs_bits > rhs_bits + slack) return std::strong_ordering::greater;
  if (rhs_bits > lhs_bits + slack) return std::strong_ordering::less;
  return materialized_compare(s, n, k);
}

}  // namespace

std::strong_ordering exact_compare_factorial_power(std::uint64_t s, std::uint64_t n, const ExponentK& k) {
  if (s == 0 || n == 0) throw std::invalid_argument("exact_compare_factorial_power requires s, n >= 1");
  mpz_class big_n;
  mpz_set_ui(big_n.get_mpz_t(), n);
  return prefiltered_compare(s, std::log2(static_cast<double>(n)), big_n, k);
}

std::strong_ordering exact_compare_factorial_power(std::uint64_t s, const mpz_class& n, const ExponentK& k) {
  if (s == 0 || n < 1) throw std::invalid_argument("exact_compare_factorial_power requires s, n >= 1");
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return prefiltered_compare(s, std::log2(mant) + static_cast<double>(exp2), n, k);
}

namespace {

constexpr std::uint64_t kDirectSumLimit = 64;

Interval direct_sum(std::uint64_t n, mpfr_prec_t precision) {
  Interval sum(precision);
  BigFloat j(precision);
  BigFloat t(precision);
  for (std::uint64_t i = 2; i <= n; ++i) {
    mpfr_set_uj(j.get(), i, MPFR_RNDN);  // exact: i < 2^precision
    mpfr_log(t.get(), j.get(), MPFR_RNDD);
    mpfr_add(sum.lower().get(), sum.lower().get(), t.get(), MPFR_RNDD);
    mpfr_log(t.get(), j.get(), MPFR_RNDU);
    mpfr_add(sum.upper().get(), sum.upper().get(), t.get(), MPFR_RNDU);
  }
  return sum;
}

// log n! = n log n - n + (1/2) log(2 pi n) + sum_{i=1}^{4} B_{2i} / (2i (2i-1) n^{2i-1}) + R,
// where R lies between 0 and the first omitted term B_10 / (90 n^9) = 1 / (1188 n^9).
Interval stirling(std::uint64_t n, mpfr_prec_t precision) {
  const Interval nn = Interval::from_uint(n, precision);
  const Interval log_n = log(nn);
  const Interval half = Interval::from_mpq(mpq_class(1, 2), precision);
  const Interval two_pi_n = Interval::exact(2, precision) * Interval::pi(precision) * nn;
  const Interval base = nn * log_n - nn + half * log(two_pi_n);

  mpz_class z;
  mpz_set_ui(z.get_mpz_t(), n);
  const mpz_class n2 = z * z;
  const mpz_class n3 = n2 * z;
  const mpz_class n5 = n3 * n2;
  const mpz_class n7 = n5 * n2;
  const mpz_class n9 = n7 * n2;
  mpq_class series = mpq_class(1, 12 * z) - mpq_class(1, 360 * n3) + mpq_class(1, 1260 * n5) -
                     mpq_class(1, 1680 * n7);
  series.canonicalize();
  mpq_class remainder(1, 1188 * n9);
  remainder.canonicalize();
  const mpq_class upper = series + remainder;
  return base + Interval::from_bounds(series, upper, precision);
}

}  // namespace

Interval log_factorial_at(std::uint64_t n, mpfr_prec_t precision) {
  if (n == 0) throw std::invalid_argument("log_factorial requires n >= 1");
  return n <= kDirectSumLimit ? direct_sum(n, precision) : stirling(n, precision);
}

LogFactorialBracket log_factorial(std::uint64_t n) {
  const unsigned cap = precision_cap_bits();
  for (mpfr_prec_t prec = 64; prec <= static_cast<mpfr_prec_t>(cap); prec *= 2) {
    Interval value = log_factorial_at(n, prec);
    if (value.relative_width_at_most(kLogFactorialRelativeBits)) return {n, std::move(value)};
  }
  throw IndeterminateError("log_factorial(" + std::to_string(n) + ") did not reach 2^-40 relative width");
}

bool log_factorial_within_bracket(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("log_factorial_within_bracket requires n >= 1");
  const unsigned cap = precision_cap_bits();
  for (mpfr_prec_t prec = 64; prec <= static_cast<mpfr_prec_t>(cap); prec *= 2) {
    const Interval value = log_factorial_at(n, prec);
    const Interval nn = Interval::from_uint(n, prec);
    const Interval log_n = log(nn);
    const Interval low = nn * log_n - nn + Interval::exact(1, prec);
    const Interval high = low + log_n;
    if (value.certainly_greater_equal(low) && value.certainly_less_equal(high)) return true;
    if (value.certainly_less(low) || value.certainly_greater(high)) return false;
  }
  throw IndeterminateError("log-factorial bracket undecided at n = " + std::to_string(n));
}

}  // namespace smarand

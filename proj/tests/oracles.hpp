#pragma once

// Brute-force reference computations for the test suites. Nothing here calls into
// smarand's algorithms; each oracle takes a different route to the same quantity.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

namespace oracle {

// S(n) by scanning j = 1, 2, ... and dividing out gcd(residual, j) until nothing is left.
inline std::uint64_t smarandache(std::uint64_t n) {
  std::uint64_t residual = n;
  std::uint64_t j = 1;
  for (;; ++j) {
    residual /= std::gcd(residual, j);
    if (residual == 1) return j;
  }
}

inline std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned a = 0;
    while (n % d == 0) {
      n /= d;
      ++a;
    }
    if (a > 0) out.emplace_back(d, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::uint64_t largest_prime(std::uint64_t n) {
  const auto f = trial_factor(n);
  return f.empty() ? 1 : f.back().first;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Exponent of p in the fully materialized m!.
inline std::uint64_t factorial_valuation(std::uint64_t p, std::uint64_t m) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), m);
  mpz_class pp = p;
  return mpz_remove(f.get_mpz_t(), f.get_mpz_t(), pp.get_mpz_t());
}

// Least m with p^a | m!, by linear scan.
inline std::uint64_t prime_power_scan(std::uint64_t p, std::uint64_t a) {
  for (std::uint64_t m = 1;; ++m)
    if (factorial_valuation(p, m) >= a) return m;
}

// sign of (s!)^q - n^p
inline int compare_factorial_power(std::uint64_t s, std::uint64_t n, std::uint64_t p, std::uint64_t q) {
  mpz_class lhs, rhs;
  mpz_fac_ui(lhs.get_mpz_t(), s);
  mpz_pow_ui(lhs.get_mpz_t(), lhs.get_mpz_t(), q);
  mpz_ui_pow_ui(rhs.get_mpz_t(), n, p);
  return cmp(lhs, rhs);
}

inline std::vector<std::uint64_t> nk_witnesses(std::uint64_t x, std::uint64_t p, std::uint64_t q) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= x; ++n)
    if (compare_factorial_power(smarandache(n), n, p, q) <= 0) out.push_back(n);
  return out;
}

// Psi(x, y) for every x in [1, limit] at fixed y, from trial-division P(n).
inline std::vector<std::uint64_t> psi_prefix(const std::vector<std::uint64_t>& largest, std::uint64_t y) {
  std::vector<std::uint64_t> out(largest.size(), 0);
  for (std::size_t n = 1; n < largest.size(); ++n) out[n] = out[n - 1] + (largest[n] <= y ? 1 : 0);
  return out;
}

// log S! <= n^(1/log log n), evaluated with mpfr_lngamma at 256 bits (round to nearest).
inline bool m_predicate(std::uint64_t s, std::uint64_t n) {
  mpfr_t lhs, rhs, t;
  mpfr_inits2(256, lhs, rhs, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(t, s + 1, MPFR_RNDN);
  mpfr_lngamma(lhs, t, MPFR_RNDN);
  mpfr_set_ui(t, n, MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDN);
  mpfr_log(rhs, t, MPFR_RNDN);
  mpfr_div(rhs, t, rhs, MPFR_RNDN);
  mpfr_exp(rhs, rhs, MPFR_RNDN);
  const bool out = mpfr_lessequal_p(lhs, rhs);
  mpfr_clears(lhs, rhs, t, static_cast<mpfr_ptr>(nullptr));
  return out;
}

// sum_{k=a}^{b-1} 1/(a (a+1) ... k) as p/q by binary splitting; e = 1 + P(1, N)/Q(1, N).
inline void e_split(unsigned long a, unsigned long b, mpz_class& p, mpz_class& q) {
  if (b - a == 1) {
    p = 1;
    q = a;
    return;
  }
  const unsigned long mid = (a + b) / 2;
  mpz_class p1, q1, p2, q2;
  e_split(a, mid, p1, q1);
  e_split(mid, b, p2, q2);
  p = p1 * q2 + p2;
  q = q1 * q2;
}

// e to within 1/N! by binary splitting.
inline mpq_class e_binary_splitting(unsigned long terms) {
  mpz_class p, q;
  e_split(1, terms, p, q);
  mpq_class e(p + q, q);
  e.canonicalize();
  return e;
}

// Continued-fraction convergents of a rational, truncated at denominator max_den.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> convergents(mpq_class v, std::uint64_t max_den) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  mpz_class h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  for (int i = 0; i < 200; ++i) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    const mpz_class h = a * h1 + h2;
    const mpz_class k = a * k1 + k2;
    if (k > max_den) break;
    if (k > 1) out.emplace_back(h.get_ui(), k.get_ui());
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    v -= a;
    if (v == 0) break;
    v = 1 / v;
  }
  return out;
}

}  // namespace oracle

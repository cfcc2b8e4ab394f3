#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "smarand/interval.hpp"

namespace smarand {

// Rational exponent k = num/den > 1 in lowest terms.
class ExponentK {
 public:
  // Reduces num/den; throws std::invalid_argument unless num/den > 1.
  ExponentK(std::uint64_t num, std::uint64_t den = 1);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const ExponentK&, const ExponentK&) = default;
  // Exact comparison by cross-multiplication.
  friend std::strong_ordering operator<=>(const ExponentK& a, const ExponentK& b);

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

// v_p(m!) by Legendre's formula. Throws std::invalid_argument when p is not prime.
std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t m);

// Unchecked variant for callers that already know p is prime.
std::uint64_t legendre_valuation_unchecked(std::uint64_t p, std::uint64_t m);

// Orders (s!)^den against n^num exactly, i.e. s! against n^k.
// Big integers are only materialized when the two sides' bit lengths are within 2 of each other.
std::strong_ordering exact_compare_factorial_power(std::uint64_t s, std::uint64_t n, const ExponentK& k);
std::strong_ordering exact_compare_factorial_power(std::uint64_t s, const mpz_class& n, const ExponentK& k);

// Certified enclosure of log n!, relative width at most 2^-40.
struct LogFactorialBracket {
  std::uint64_t n = 1;
  Interval value{64};

  double lower() const { return value.lower().to_double(MPFR_RNDD); }
  double upper() const { return value.upper().to_double(MPFR_RNDU); }
};

inline constexpr int kLogFactorialRelativeBits = 40;

// n <= 64 sums logs with directed rounding; larger n use the Stirling series
// through the n^-7 term with the first omitted term as a one-sided remainder.
// Throws IndeterminateError if the width target is not met below the precision cap.
LogFactorialBracket log_factorial(std::uint64_t n);
// Same enclosure at a fixed working precision, without the width requirement.
Interval log_factorial_at(std::uint64_t n, mpfr_prec_t precision);

// Checks n log n - n + 1 <= log n! <= n log n - n + 1 + log n with certified rounding,
// escalating precision until decided. Returns false only on a certified violation.
bool log_factorial_within_bracket(std::uint64_t n);

}  // namespace smarand

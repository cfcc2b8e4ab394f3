#pragma once

// <cstdint> must precede <mpfr.h> to enable the intmax_t entry points (mpfr_set_uj, ...).
#include <cstdint>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace smarand {

// Hard cap for precision escalation; SMARAND_PRECISION_CAP_BITS overrides it.
inline constexpr unsigned kDefaultPrecisionCapBits = 4096;
unsigned precision_cap_bits();

// Owning RAII handle around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(value_, rnd); }
  // Scientific notation with `digits` significant digits, rounded in direction `rnd`.
  std::string to_string(int digits, mpfr_rnd_t rnd) const;

 private:
  mpfr_t value_;
};

// A closed real interval [lower, upper] with endpoints rounded outward.
// Every operation below returns an enclosure of the exact result set.
class Interval {
 public:
  explicit Interval(mpfr_prec_t precision);

  static Interval exact(std::int64_t v, mpfr_prec_t precision);
  static Interval from_uint(std::uint64_t v, mpfr_prec_t precision);
  static Interval from_mpz(const mpz_class& v, mpfr_prec_t precision);
  static Interval from_mpq(const mpq_class& v, mpfr_prec_t precision);
  static Interval from_bounds(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t precision);
  static Interval pi(mpfr_prec_t precision);

  const BigFloat& lower() const { return lower_; }
  const BigFloat& upper() const { return upper_; }
  BigFloat& lower() { return lower_; }
  BigFloat& upper() { return upper_; }
  mpfr_prec_t precision() const { return lower_.precision(); }

  bool contains(double v) const;
  bool contains(const mpq_class& v) const;
  // upper - lower, rounded up.
  BigFloat width() const;
  // max(1, |lower|) * 2^-bits >= width
  bool relative_width_at_most(int bits) const;

  // Certified orderings: true only when every point of *this relates to every point of other.
  bool certainly_less(const Interval& other) const;
  bool certainly_less_equal(const Interval& other) const;
  bool certainly_greater(const Interval& other) const { return other.certainly_less(*this); }
  bool certainly_greater_equal(const Interval& other) const { return other.certainly_less_equal(*this); }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  // Requires 0 not in b.
  friend Interval operator/(const Interval& a, const Interval& b);

 private:
  BigFloat lower_;
  BigFloat upper_;
};

// Requires x.lower() > 0.
Interval log(const Interval& x);
Interval exp(const Interval& x);
// Requires x.lower() >= 0.
Interval sqrt(const Interval& x);

using RealEnclosure = Interval;

}  // namespace smarand

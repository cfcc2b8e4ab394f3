#include "smarand/interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace smarand {

unsigned precision_cap_bits() {
  if (const char* env = std::getenv("SMARAND_PRECISION_CAP_BITS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 64 && v <= (1UL << 24)) {
      return static_cast<unsigned>(v);
    }
  }
  return kDefaultPrecisionCapBits;
}

BigFloat::BigFloat(mpfr_prec_t precision) { mpfr_init2(value_, precision); }

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() {
  mpfr_clear(value_);
}

std::string BigFloat::to_string(int digits, mpfr_rnd_t rnd) const {
  char* raw = nullptr;
  const std::string fmt = "%." + std::to_string(digits - 1) + "R*e";
  if (mpfr_asprintf(&raw, fmt.c_str(), rnd, value_) < 0) {
    throw std::bad_alloc();
  }
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

namespace {

mpfr_prec_t wider(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Interval::Interval(mpfr_prec_t precision) : lower_(precision), upper_(precision) {
  mpfr_set_zero(lower_.get(), 1);
  mpfr_set_zero(upper_.get(), 1);
}

Interval Interval::exact(std::int64_t v, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_si(r.lower_.get(), v, MPFR_RNDD);
  mpfr_set_si(r.upper_.get(), v, MPFR_RNDU);
  return r;
}

Interval Interval::from_uint(std::uint64_t v, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_uj(r.lower_.get(), v, MPFR_RNDD);
  mpfr_set_uj(r.upper_.get(), v, MPFR_RNDU);
  return r;
}

Interval Interval::from_mpz(const mpz_class& v, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_z(r.lower_.get(), v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.upper_.get(), v.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_mpq(const mpq_class& v, mpfr_prec_t precision) {
  return from_bounds(v, v, precision);
}

Interval Interval::from_bounds(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t precision) {
  if (lo > hi) throw std::invalid_argument("interval bounds out of order");
  Interval r(precision);
  mpfr_set_q(r.lower_.get(), lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.upper_.get(), hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_const_pi(r.lower_.get(), MPFR_RNDD);
  mpfr_const_pi(r.upper_.get(), MPFR_RNDU);
  return r;
}

bool Interval::contains(double v) const {
  return mpfr_cmp_d(lower_.get(), v) <= 0 && mpfr_cmp_d(upper_.get(), v) >= 0;
}

bool Interval::contains(const mpq_class& v) const {
  return mpfr_cmp_q(lower_.get(), v.get_mpq_t()) <= 0 && mpfr_cmp_q(upper_.get(), v.get_mpq_t()) >= 0;
}

BigFloat Interval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), upper_.get(), lower_.get(), MPFR_RNDU);
  return w;
}

bool Interval::relative_width_at_most(int bits) const {
  BigFloat scale(precision());
  mpfr_abs(scale.get(), lower_.get(), MPFR_RNDN);
  if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, MPFR_RNDN);
  // The bound is rounded down so the test never passes spuriously.
  mpfr_div_2si(scale.get(), scale.get(), bits, MPFR_RNDD);
  return mpfr_lessequal_p(width().get(), scale.get());
}

bool Interval::certainly_less(const Interval& other) const {
  return mpfr_less_p(upper_.get(), other.lower_.get());
}

bool Interval::certainly_less_equal(const Interval& other) const {
  return mpfr_lessequal_p(upper_.get(), other.lower_.get());
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(wider(a, b));
  mpfr_add(r.lower_.get(), a.lower_.get(), b.lower_.get(), MPFR_RNDD);
  mpfr_add(r.upper_.get(), a.upper_.get(), b.upper_.get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(wider(a, b));
  mpfr_sub(r.lower_.get(), a.lower_.get(), b.upper_.get(), MPFR_RNDD);
  mpfr_sub(r.upper_.get(), a.upper_.get(), b.lower_.get(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = wider(a, b);
  Interval r(prec);
  BigFloat t(prec);
  mpfr_srcptr al = a.lower_.get();
  mpfr_srcptr au = a.upper_.get();
  mpfr_srcptr bl = b.lower_.get();
  mpfr_srcptr bu = b.upper_.get();

  mpfr_mul(r.lower_.get(), al, bl, MPFR_RNDD);
  for (auto [x, y] : {std::pair{al, bu}, std::pair{au, bl}, std::pair{au, bu}}) {
    mpfr_mul(t.get(), x, y, MPFR_RNDD);
    mpfr_min(r.lower_.get(), r.lower_.get(), t.get(), MPFR_RNDD);
  }
  mpfr_mul(r.upper_.get(), al, bl, MPFR_RNDU);
  for (auto [x, y] : {std::pair{al, bu}, std::pair{au, bl}, std::pair{au, bu}}) {
    mpfr_mul(t.get(), x, y, MPFR_RNDU);
    mpfr_max(r.upper_.get(), r.upper_.get(), t.get(), MPFR_RNDU);
  }
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lower_.get()) <= 0 && mpfr_sgn(b.upper_.get()) >= 0) {
    throw std::domain_error("interval division by an interval containing zero");
  }
  const mpfr_prec_t prec = wider(a, b);
  Interval inv(prec);
  mpfr_ui_div(inv.lower_.get(), 1, b.upper_.get(), MPFR_RNDD);
  mpfr_ui_div(inv.upper_.get(), 1, b.lower_.get(), MPFR_RNDU);
  return a * inv;
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lower().get()) <= 0) throw std::domain_error("interval log of a non-positive interval");
  Interval r(x.precision());
  mpfr_log(r.lower().get(), x.lower().get(), MPFR_RNDD);
  mpfr_log(r.upper().get(), x.upper().get(), MPFR_RNDU);
  return r;
}

Interval exp(const Interval& x) {
  Interval r(x.precision());
  mpfr_exp(r.lower().get(), x.lower().get(), MPFR_RNDD);
  mpfr_exp(r.upper().get(), x.upper().get(), MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.lower().get()) < 0) throw std::domain_error("interval sqrt of a negative interval");
  Interval r(x.precision());
  mpfr_sqrt(r.lower().get(), x.lower().get(), MPFR_RNDD);
  mpfr_sqrt(r.upper().get(), x.upper().get(), MPFR_RNDU);
  return r;
}

}  // namespace smarand

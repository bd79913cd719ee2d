#include "crossfam/interval.hpp"

#include <utility>

namespace crossfam {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  *value_ = *other.value_;
  owns_ = other.owns_;
  other.owns_ = false;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    if (!owns_) {
      mpfr_init2(value_, other.precision());
      owns_ = true;
    } else {
      mpfr_set_prec(value_, other.precision());
    }
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) {
    if (owns_) mpfr_clear(value_);
    *value_ = *other.value_;
    owns_ = other.owns_;
    other.owns_ = false;
  }
  return *this;
}

BigFloat::~BigFloat() {
  if (owns_) mpfr_clear(value_);
}

Rational BigFloat::to_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

Interval::Interval(mpfr_prec_t precision) : lo_(precision), hi_(precision) {}

Interval Interval::exact(const Rational& value, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_q(r.lo_.get(), value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), value.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::sqrt_of(const Rational& value, mpfr_prec_t precision) {
  if (sgn(value) < 0) throw Error(ErrorCode::DegenerateInput, "sqrt of negative rational");
  Interval r = exact(value, precision);
  mpfr_sqrt(r.lo_.get(), r.lo_.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.get(), r.hi_.get(), MPFR_RNDU);
  return r;
}

Interval& Interval::operator+=(const Interval& other) {
  mpfr_add(lo_.get(), lo_.get(), other.lo_.get(), MPFR_RNDD);
  mpfr_add(hi_.get(), hi_.get(), other.hi_.get(), MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& other) {
  // [a,b] - [c,d] = [a-d, b-c]; compute into temporaries to allow aliasing.
  BigFloat new_lo(lo_.precision());
  BigFloat new_hi(hi_.precision());
  mpfr_sub(new_lo.get(), lo_.get(), other.hi_.get(), MPFR_RNDD);
  mpfr_sub(new_hi.get(), hi_.get(), other.lo_.get(), MPFR_RNDU);
  lo_ = std::move(new_lo);
  hi_ = std::move(new_hi);
  return *this;
}

bool certainly_less(const Interval& a, const Interval& b) {
  return mpfr_less_p(a.hi_.get(), b.lo_.get()) != 0;
}

bool separated(const Interval& a, const Interval& b) {
  return certainly_less(a, b) || certainly_less(b, a);
}

Interval distance_interval(const Point& a, const Point& b, mpfr_prec_t precision) {
  return Interval::sqrt_of(squared_distance(a, b), precision);
}

}  // namespace crossfam

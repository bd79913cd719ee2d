#pragma once

// Certified interval arithmetic over MPFR with outward rounding. Used to
// compare sums of square roots of rationals (Euclidean lengths) without an
// exact symbolic procedure.

#include <mpfr.h>

#include "crossfam/geom.hpp"

namespace crossfam {

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

  Rational to_rational() const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

 private:
  mpfr_t value_;
  bool owns_ = true;
};

/// A closed interval [lo, hi] guaranteed to contain the real value.
class Interval {
 public:
  explicit Interval(mpfr_prec_t precision);
  static Interval exact(const Rational& value, mpfr_prec_t precision);
  /// Enclosure of sqrt(value), value >= 0.
  static Interval sqrt_of(const Rational& value, mpfr_prec_t precision);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  Interval& operator+=(const Interval& other);
  Interval& operator-=(const Interval& other);
  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }

  /// Certified a < b.
  friend bool certainly_less(const Interval& a, const Interval& b);
  /// True iff the enclosures are disjoint.
  friend bool separated(const Interval& a, const Interval& b);

 private:
  BigFloat lo_;
  BigFloat hi_;
};

/// Enclosure of the Euclidean distance between two points.
Interval distance_interval(const Point& a, const Point& b, mpfr_prec_t precision);

/// Precision ladder for certification loops: start, doubling, ceiling.
struct PrecisionPolicy {
  mpfr_prec_t start = 128;
  mpfr_prec_t ceiling = 4096;
};

}  // namespace crossfam

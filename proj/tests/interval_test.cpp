#include <gtest/gtest.h>

#include <cmath>

#include "crossfam/interval.hpp"

using namespace crossfam;

namespace {

bool contains(const Interval& iv, const Rational& q) {
  return iv.lo().to_rational() <= q && q <= iv.hi().to_rational();
}

}  // namespace

TEST(Interval, ExactRationalIsEnclosed) {
  Rational third(1, 3);
  Interval iv = Interval::exact(third, 128);
  EXPECT_TRUE(contains(iv, third));
  EXPECT_LT(iv.lo().to_rational(), iv.hi().to_rational());
}

TEST(Interval, SqrtEnclosure) {
  Interval r2 = Interval::sqrt_of(Rational(2), 200);
  Rational lo = r2.lo().to_rational(), hi = r2.hi().to_rational();
  EXPECT_LT(lo * lo, Rational(2));
  EXPECT_GT(hi * hi, Rational(2));
  Interval r4 = Interval::sqrt_of(Rational(4), 64);
  EXPECT_TRUE(contains(r4, Rational(2)));
}

TEST(Interval, SumsOfRootsSeparate) {
  // sqrt(2) + sqrt(3) vs sqrt(10): 3.1462... vs 3.1622...
  Interval a = Interval::sqrt_of(Rational(2), 128) + Interval::sqrt_of(Rational(3), 128);
  Interval b = Interval::sqrt_of(Rational(10), 128);
  EXPECT_TRUE(certainly_less(a, b));
  EXPECT_FALSE(certainly_less(b, a));
  EXPECT_TRUE(separated(a, b));
}

TEST(Interval, EqualValuesNeverSeparate) {
  // sqrt(8) = 2 sqrt(2), computed two ways.
  Interval a = Interval::sqrt_of(Rational(8), 256);
  Interval b = Interval::sqrt_of(Rational(2), 256) + Interval::sqrt_of(Rational(2), 256);
  EXPECT_FALSE(separated(a, b));
  EXPECT_FALSE(certainly_less(a, b));
}

TEST(Interval, SubtractionWidens) {
  Interval a = Interval::sqrt_of(Rational(5), 128);
  Interval d = a - a;
  EXPECT_TRUE(contains(d, Rational(0)));
  EXPECT_LE(d.lo().to_double(), 0.0);
  EXPECT_GE(d.hi().to_double(), 0.0);
}

TEST(Interval, DistanceMatchesDouble) {
  Point p(Rational(1, 3), Rational(2, 7)), q(Rational(-5, 11), Rational(9, 4));
  Interval d = distance_interval(p, q, 128);
  double expected = std::hypot(1.0 / 3 + 5.0 / 11, 2.0 / 7 - 9.0 / 4);
  EXPECT_NEAR(d.lo().to_double(), expected, 1e-12);
  EXPECT_NEAR(d.hi().to_double(), expected, 1e-12);
}

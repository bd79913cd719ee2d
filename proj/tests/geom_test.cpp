#include <gtest/gtest.h>

#include <random>

#include "crossfam/geom.hpp"

using namespace crossfam;

namespace {

Point P(long x, long y) { return Point(x, y); }

Elbow E(Point v, Point h) { return Elbow{std::move(v), std::move(h)}; }

// Float version of the strict crossing test for randomized cross-checks.
bool naive_cross(double ax, double ay, double bx, double by, double cx, double cy, double dx, double dy) {
  auto o = [](double px, double py, double qx, double qy, double rx, double ry) {
    double v = (qx - px) * (ry - py) - (qy - py) * (rx - px);
    return (v > 0) - (v < 0);
  };
  return o(ax, ay, bx, by, cx, cy) * o(ax, ay, bx, by, dx, dy) < 0 &&
         o(cx, cy, dx, dy, ax, ay) * o(cx, cy, dx, dy, bx, by) < 0;
}

}  // namespace

TEST(Orientation, UnitTurns) {
  EXPECT_EQ(orientation(P(0, 0), P(1, 0), P(0, 1)), Orientation::CCW);
  EXPECT_EQ(orientation(P(0, 0), P(1, 1), P(2, 2)), Orientation::Collinear);
  EXPECT_EQ(orientation(P(0, 0), P(0, 1), P(1, 0)), Orientation::CW);
}

TEST(Orientation, ExactOnTinyRationals) {
  Point a(Rational(0), Rational(0));
  Point b(Rational(1, 1000000007), Rational(1, 1000000009));
  Point c(Rational(2, 1000000007), Rational(2, 1000000009));
  EXPECT_EQ(orientation(a, b, c), Orientation::Collinear);
  Point d(Rational(2, 1000000007), Rational(2, 1000000009) + Rational(1, 1) / mpz_class("1000000000000000000000"));
  EXPECT_EQ(orientation(a, b, d), Orientation::CCW);
}

TEST(SegmentsCross, Basic) {
  EXPECT_TRUE(segments_cross({P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)}));
  EXPECT_FALSE(segments_cross({P(0, 0), P(1, 1)}, {P(2, 0), P(3, 1)}));
  EXPECT_FALSE(segments_cross({P(0, 0), P(1, 1)}, {P(1, 1), P(2, 0)}));
}

TEST(SegmentsCross, TouchingAndOverlap) {
  // T-junction: the open segments share no point.
  EXPECT_FALSE(segments_cross({P(0, 0), P(2, 0)}, {P(1, 0), P(1, 5)}));
  EXPECT_TRUE(segments_cross({P(0, 0), P(3, 0)}, {P(1, 0), P(5, 0)}));
  EXPECT_FALSE(segments_cross({P(0, 0), P(1, 0)}, {P(1, 0), P(5, 0)}));
  EXPECT_THROW(segments_cross({P(0, 0), P(0, 0)}, {P(1, 0), P(5, 0)}), Error);
}

TEST(SegmentsCross, AgreesWithFloatOnGenericInput) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-50, 50);
  int agree = 0;
  for (int t = 0; t < 2000; ++t) {
    long v[8];
    for (long& x : v) x = d(rng);
    Point a = P(v[0], v[1]), b = P(v[2], v[3]), c = P(v[4], v[5]), e = P(v[6], v[7]);
    if (a == b || c == e) continue;
    if (orientation(a, b, c) == Orientation::Collinear || orientation(a, b, e) == Orientation::Collinear ||
        orientation(c, e, a) == Orientation::Collinear || orientation(c, e, b) == Orientation::Collinear)
      continue;
    ASSERT_EQ(segments_cross({a, b}, {c, e}),
              naive_cross(v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]));
    ++agree;
  }
  EXPECT_GT(agree, 1500);
}

TEST(ElbowsCross, Examples) {
  EXPECT_TRUE(elbows_cross(E(P(-1, -1), P(10, 10)), E(P(-2, -2), P(9, 9))));
  EXPECT_FALSE(elbows_cross(E(P(0, 0), P(10, 5)), E(P(-1, 1), P(9, 6))));
  Elbow e = E(P(0, 0), P(3, 4));
  try {
    elbows_cross(e, e);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::SharedVertex);
  }
}

TEST(ElbowsCross, MatchesLegSegments) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(0, 40);
  for (int t = 0; t < 1000; ++t) {
    Point a = P(d(rng), d(rng)), b = P(d(rng), d(rng)), c = P(d(rng), d(rng)), e = P(d(rng), d(rng));
    std::vector<Rational> xs{a.x, b.x, c.x, e.x}, ys{a.y, b.y, c.y, e.y};
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end() || std::adjacent_find(ys.begin(), ys.end()) != ys.end())
      continue;
    Elbow e1 = E(a, b), e2 = E(c, e);
    bool expected = false;
    for (const Segment& s : {e1.vertical_leg(), e1.horizontal_leg()})
      for (const Segment& u : {e2.vertical_leg(), e2.horizontal_leg()}) expected = expected || segments_cross(s, u);
    ASSERT_EQ(elbows_cross(e1, e2), expected);
  }
}

TEST(GeneralPosition, Examples) {
  std::vector<Point> line{P(0, 0), P(1, 0), P(2, 0)};
  std::vector<Point> tri{P(0, 0), P(1, 2), P(2, 1)};
  std::vector<Point> shared_x{P(0, 0), P(0, 1), P(1, 2)};
  EXPECT_FALSE(check_general_position(line, GeneralPosition::Strict));
  EXPECT_TRUE(check_general_position(tri, GeneralPosition::Strict));
  EXPECT_TRUE(check_general_position(tri, GeneralPosition::Orthogonal));
  EXPECT_FALSE(check_general_position(shared_x, GeneralPosition::Orthogonal));
  EXPECT_TRUE(check_general_position(shared_x, GeneralPosition::Strict));
  std::vector<Point> dup{P(0, 0), P(0, 0)};
  EXPECT_FALSE(check_general_position(dup, GeneralPosition::Strict));
}

TEST(ConvexPosition, PolygonsAndHulls) {
  std::vector<Point> square{P(0, 0), P(2, 0), P(2, 2), P(0, 2)};
  EXPECT_TRUE(is_convex_polygon(square));
  std::vector<Point> bowtie{P(0, 0), P(2, 2), P(2, 0), P(0, 2)};
  EXPECT_FALSE(is_convex_polygon(bowtie));
  EXPECT_TRUE(in_convex_position(bowtie));
  std::vector<Point> inner{P(0, 0), P(4, 0), P(0, 4), P(1, 1)};
  EXPECT_FALSE(in_convex_position(inner));
}

TEST(Rationals, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("-1.25"), Rational(-5, 4));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(format_rational(Rational(6, 4)), "3/2");
  EXPECT_EQ(format_rational(Rational(-4, 2)), "-2");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational(""), Error);
  Rational big = Rational(mpz_class("123456789012345678901234567890"), mpz_class("987654321"));
  big.canonicalize();
  EXPECT_EQ(parse_rational(format_rational(big)), big);
}

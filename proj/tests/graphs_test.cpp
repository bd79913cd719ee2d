#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "crossfam/constructions.hpp"
#include "crossfam/graphs.hpp"

using namespace crossfam;

namespace {

Point P(long x, long y) { return Point(x, y); }

PointSet regular(std::size_t n) {
  // Rational points on the unit circle in counterclockwise order.
  PointSet ps;
  for (std::size_t k = 0; k < n; ++k) {
    double theta = -M_PI + (2.0 * k + 1) * M_PI / n;
    ps.points.push_back(circle_point(dyadic(std::tan(theta / 2), 30)));
  }
  return ps;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::DegenerateInput;
}

}  // namespace

TEST(GraphsCross, Triangles) {
  // Parallel-sided triangles, each containing exactly one vertex of the other.
  GeomGraph t1 = GeomGraph::triangle(P(0, 0), P(4, 0), P(2, -3));
  GeomGraph t2 = GeomGraph::triangle(P(3, -1), P(7, -1), P(5, -4));
  EXPECT_TRUE(graphs_cross(t1, t2));
  GeomGraph far = GeomGraph::triangle(P(10, 10), P(12, 10), P(11, 12));
  EXPECT_FALSE(graphs_cross(t1, far));
  GeomGraph shared = GeomGraph::triangle(P(0, 0), P(-4, 0), P(-2, 3));
  EXPECT_EQ(code_of([&] { graphs_cross(t1, shared); }), ErrorCode::SharedVertex);
  GeomGraph elbow = GeomGraph::elbow(P(20, 20), P(25, 27));
  EXPECT_EQ(code_of([&] { graphs_cross(t1, elbow); }), ErrorCode::KindMismatch);
}

TEST(GraphsCross, ConstructorValidation) {
  EXPECT_EQ(code_of([] { GeomGraph::triangle(P(0, 0), P(1, 0), P(0, 0)); }), ErrorCode::DegenerateInput);
  EXPECT_EQ(code_of([] { GeomGraph::elbow(P(0, 0), P(0, 5)); }), ErrorCode::DegenerateInput);
  EXPECT_EQ(code_of([] { GeomGraph(GraphKind::KCycle, {P(0, 0), P(1, 1)}); }), ErrorCode::InvalidSize);
}

TEST(Families, CrossingExamples) {
  Family single{FamilyKind::Crossing, {GeomGraph::matching_edge(P(0, 0), P(1, 1))}};
  EXPECT_TRUE(is_crossing_family(single));
  Family side{FamilyKind::Crossing,
              {GeomGraph::matching_edge(P(0, 0), P(0, 1)), GeomGraph::matching_edge(P(1, 0), P(1, 1))}};
  EXPECT_FALSE(is_crossing_family(side));
  PointSet ps = random_points(8, 5, GeneralPosition::Orthogonal);
  Instance inst = elbow_family(ps);
  ASSERT_EQ(inst.families.size(), 1u);
  EXPECT_EQ(inst.families[0].members.size(), 2u);
  EXPECT_TRUE(is_crossing_family(inst.families[0]));
}

TEST(Families, IntersectingExamples) {
  Family shared_edge{FamilyKind::Intersecting,
                     {GeomGraph::triangle(P(0, 0), P(4, 0), P(2, 3)), GeomGraph::triangle(P(0, 0), P(4, 0), P(2, -3))}};
  EXPECT_FALSE(is_intersecting_family(shared_edge));
  Instance it = intersecting_triangles(random_points(12, 3, GeneralPosition::Strict));
  EXPECT_EQ(it.families[0].members.size(), 3u);
  EXPECT_TRUE(is_intersecting_family(it.families[0]));
  Instance ci = convex_intersecting_family(convex_groups(2));
  EXPECT_EQ(ci.families[0].members.size(), 4u);
  EXPECT_TRUE(is_intersecting_family(ci.families[0]));
  EXPECT_EQ(code_of([&] { is_crossing_family(ci.families[0]); }), ErrorCode::KindMismatch);
}

TEST(Crossings, PentagramAndConvex) {
  PointSet pent = regular(5);
  HamiltonianCycle star{{0, 2, 4, 1, 3}};
  EXPECT_EQ(count_crossings(pent, star), 5u);
  EXPECT_EQ(count_avoiding_pairs(pent, star), 0u);
  HamiltonianCycle hull{{0, 1, 2, 3, 4}};
  EXPECT_EQ(count_crossings(pent, hull), 0u);
  EXPECT_EQ(count_avoiding_pairs(pent, hull), 5u);

  PointSet quad{{P(0, 0), P(2, 0), P(2, 2), P(0, 2)}, {}};
  EXPECT_EQ(count_avoiding_pairs(quad, HamiltonianCycle{{0, 1, 2, 3}}), 2u);
  EXPECT_EQ(count_crossings(quad, HamiltonianCycle{{0, 2, 1, 3}}), 1u);

  Instance even = ham_cycle_max_even(2);
  EXPECT_EQ(count_crossings(even.points, even.cycles[0]), 1u);
}

TEST(Crossings, Bound) {
  EXPECT_EQ(max_crossings_bound(7), 14);
  EXPECT_EQ(max_crossings_bound(6), 7);
  EXPECT_EQ(max_crossings_bound(3), 0);
  EXPECT_EQ(max_crossings_bound(4), 1);
  EXPECT_EQ(max_crossings_bound(5), 5);
  EXPECT_EQ(code_of([] { max_crossings_bound(2); }), ErrorCode::InvalidSize);
}

TEST(Crossings, PairClassesPartitionAllEdgePairs) {
  std::mt19937_64 rng(3);
  for (std::size_t n : {5u, 6u, 9u, 12u}) {
    PointSet ps = random_points(n, n, GeneralPosition::Strict);
    SegmentCrossingTable table(ps.points);
    for (int t = 0; t < 20; ++t) {
      HamiltonianCycle c;
      c.order.resize(n);
      std::iota(c.order.begin(), c.order.end(), 0);
      std::shuffle(c.order.begin(), c.order.end(), rng);
      EdgePairClasses k = classify_edge_pairs(ps, c);
      EXPECT_EQ(k.incident, n);
      EXPECT_EQ(k.crossing + k.avoiding, n * (n - 3) / 2);
      EXPECT_EQ(table.cycle_crossings(c.order), k.crossing);
      std::uint64_t per_edge = 0;
      for (std::size_t e = 0; e < n; ++e) per_edge += edge_crossing_count(ps, c, e);
      EXPECT_EQ(per_edge, 2 * k.crossing);
    }
  }
}

TEST(Crossings, CycleValidation) {
  PointSet ps = regular(5);
  EXPECT_EQ(code_of([&] { count_crossings(ps, HamiltonianCycle{{0, 1, 2, 3}}); }), ErrorCode::InvalidSize);
  EXPECT_EQ(code_of([&] { count_crossings(ps, HamiltonianCycle{{0, 1, 2, 3, 3}}); }), ErrorCode::InvalidSize);
  EXPECT_EQ(code_of([&] { count_crossings(ps, HamiltonianCycle{{0, 1, 2, 3, 7}}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { edge_crossing_count(ps, HamiltonianCycle{{0, 1, 2, 3, 4}}, 5); }),
            ErrorCode::IndexOutOfRange);
}

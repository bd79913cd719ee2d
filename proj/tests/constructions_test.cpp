#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "crossfam/claims.hpp"
#include "crossfam/constructions.hpp"

using namespace crossfam;

namespace {

Point P(long x, long y) { return Point(x, y); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::DegenerateInput;
}

void expect_claims_pass(const Instance& inst) {
  for (const ClaimCheck& c : verify_instance(inst)) {
    EXPECT_TRUE(c.passed) << inst.name << ": " << c.claim.verifier << " claimed " << c.claim.value << " computed "
                          << c.computed << " " << c.detail;
  }
}

bool has(const std::vector<EdgeLabel>& v, EdgeLabel x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TEST(Elbows, FamilySizeIsQuarterOfN) {
  for (std::size_t n : {4u, 8u, 12u, 16u, 23u, 40u}) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      Instance inst = elbow_family(random_points(n, seed, GeneralPosition::Orthogonal));
      ASSERT_EQ(inst.families[0].members.size(), n / 4) << "n=" << n << " seed=" << seed;
      EXPECT_TRUE(is_crossing_family(inst.families[0]));
      for (const GeomGraph& g : inst.families[0].members) EXPECT_EQ(g.kind(), GraphKind::Elbow);
    }
  }
}

TEST(Elbows, GridPerturbed) {
  PointSet ps;
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 4; ++j) {
      long s = 4 * i + j;
      ps.points.emplace_back(Rational(10 * i + j) + Rational(s * s, 1009), Rational(10 * j + i) + Rational(s * s * s, 10007));
    }
  ASSERT_TRUE(check_general_position(ps.points, GeneralPosition::Orthogonal));
  Instance inst = elbow_family(ps);
  EXPECT_EQ(inst.families[0].members.size(), 4u);
  EXPECT_TRUE(is_crossing_family(inst.families[0]));
}

TEST(Elbows, RejectsSharedCoordinates) {
  PointSet ps{{P(0, 0), P(0, 5), P(3, 1), P(4, 7)}, {}};
  EXPECT_EQ(code_of([&] { elbow_family(ps); }), ErrorCode::GeneralPositionViolation);
}

TEST(Elbows, HardPointSet) {
  Instance m1 = elbow_hard_pointset(1);
  EXPECT_EQ(m1.points.size(), 3u);
  Instance m2 = elbow_hard_pointset(2);
  EXPECT_EQ(m2.points.size(), 6u);
  EXPECT_EQ(m2.families[0].members.size(), 30u);
  EXPECT_TRUE(check_general_position(m2.points.points, GeneralPosition::Orthogonal));
  // Groups ordered in both coordinates.
  for (std::size_t g = 0; g + 1 < 3; ++g) {
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t t = 0; t < 2; ++t) {
        EXPECT_LT(m2.points[2 * g + s].x, m2.points[2 * g + 2 + t].x);
        EXPECT_LT(m2.points[2 * g + s].y, m2.points[2 * g + 2 + t].y);
      }
    }
  }
  expect_claims_pass(m1);
  expect_claims_pass(m2);
}

TEST(Triangles, GridFamilies) {
  Instance g1 = crossing_triangles_grid(1);
  EXPECT_EQ(g1.families[0].members.size(), 1u);
  Instance g2 = crossing_triangles_grid(2);
  const Family& f = g2.families[0];
  ASSERT_EQ(f.members.size(), 8u);
  int pairs = 0;
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = a + 1; b < 8; ++b) {
      EXPECT_TRUE(graphs_cross(f.members[a], f.members[b]));
      ++pairs;
    }
  EXPECT_EQ(pairs, 28);
  Instance g3 = crossing_triangles_grid(3);
  EXPECT_TRUE(is_crossing_family(g3.families[0]));
  ConstructionLimits caps;
  caps.grid_max_triangles = 26;
  EXPECT_EQ(code_of([&] { crossing_triangles_grid(3, caps); }), ErrorCode::ResourceLimit);
}

TEST(Triangles, PairLabels) {
  // Labels need a unique topmost vertex; the grid's triangles have a
  // horizontal top side, so they are turned upside down first.
  Instance g2 = crossing_triangles_grid(2);
  std::vector<GeomGraph> T;  // index 4(i-1) + 2(j-1) + (k-1)
  for (const GeomGraph& g : g2.families[0].members) {
    const auto& v = g.vertices();
    T.push_back(GeomGraph::triangle(P(0, 0) - v[0], P(0, 0) - v[1], P(0, 0) - v[2]));
  }
  EXPECT_FALSE(label_triangle_pair(T[0], T[4]).empty());
  std::vector<EdgeLabel> same_ij = label_triangle_pair(T[0], T[1]);
  EXPECT_FALSE(same_ij.empty());
  EXPECT_FALSE(has(same_ij, EdgeLabel::Bottom));
  for (std::size_t a = 0; a < T.size(); ++a)
    for (std::size_t b = a + 1; b < T.size(); ++b) {
      for (EdgeLabel x : label_triangle_pair(T[a], T[b]))
        EXPECT_TRUE(graphs_cross(remove_labeled_edge(T[a], x), remove_labeled_edge(T[b], x)));
    }
  GeomGraph far1 = GeomGraph::triangle(P(0, 3), P(-2, 0), P(2, 0));
  GeomGraph far2 = GeomGraph::triangle(P(10, 3), P(8, 0), P(12, 0));
  EXPECT_TRUE(label_triangle_pair(far1, far2).empty());
  GeomGraph flat = GeomGraph::triangle(P(0, 3), P(4, 3), P(2, 0));
  EXPECT_EQ(code_of([&] { label_triangle_pair(flat, far2); }), ErrorCode::DegenerateLabeling);
}

TEST(Triangles, RemovalPaths) {
  GeomGraph t = GeomGraph::triangle(P(0, 0), P(4, 0), P(2, 3));
  GeomGraph p = remove_labeled_edge(t, EdgeLabel::Bottom);
  EXPECT_EQ(p.kind(), GraphKind::KPath);
  ASSERT_EQ(p.vertices().size(), 3u);
  EXPECT_EQ(p.vertices()[1], P(2, 3));
  GeomGraph q = remove_edge(t, 0);
  EXPECT_EQ(q.vertices()[1], P(2, 3));
  EXPECT_EQ(remove_edge(t, 1).vertices()[1], P(0, 0));
}

TEST(Hamiltonian, OddConstruction) {
  const std::uint64_t expected[] = {5, 14, 27, 44, 65};
  for (int m = 2; m <= 6; ++m) {
    Instance inst = ham_cycle_max_odd(m);
    EXPECT_EQ(inst.points.size(), static_cast<std::size_t>(2 * m + 1));
    EXPECT_TRUE(in_convex_position(inst.points.points));
    EXPECT_EQ(count_crossings(inst.points, inst.cycles[0]), expected[m - 2]);
    expect_claims_pass(inst);
  }
}

TEST(Hamiltonian, EvenConstruction) {
  const std::uint64_t expected[] = {1, 7, 17, 31, 49};
  for (int m = 2; m <= 6; ++m) {
    std::vector<EvenLevel> levels = ham_cycle_even_levels(m);
    ASSERT_EQ(levels.size(), static_cast<std::size_t>(m - 1));
    for (const EvenLevel& lv : levels) {
      PointSet ps{lv.points, {}};
      const std::size_t n = ps.size();
      EXPECT_TRUE(in_convex_position(ps.points));
      EXPECT_EQ(count_crossings(ps, lv.cycle), static_cast<std::uint64_t>(max_crossings_bound(n)));
      EXPECT_EQ(edge_crossing_count(ps, lv.cycle, lv.distinguished_edge), n - 3);
    }
    Instance inst = ham_cycle_max_even(m);
    EXPECT_EQ(count_crossings(inst.points, inst.cycles[0]), expected[m - 2]);
    expect_claims_pass(inst);
  }
}

TEST(Hamiltonian, Blades) {
  for (int m = 2; m <= 3; ++m) {
    Instance inst = blades_pointset(m);
    EXPECT_EQ(inst.points.size(), static_cast<std::size_t>(3 * m));
    EXPECT_TRUE(check_general_position(inst.points.points, GeneralPosition::Strict));
    expect_claims_pass(inst);
  }
  Instance big = blades_pointset(6);
  EXPECT_EQ(big.claims.size(), 1u);
  expect_claims_pass(big);
}

TEST(Villanger, LongestMatchingIsIdentity) {
  for (int m = 2; m <= 4; ++m) {
    Instance inst = villanger_pointset(m);
    ASSERT_EQ(inst.points.size(), static_cast<std::size_t>(2 * m));
    EXPECT_EQ(inst.points.labels[0], "a1");
    EXPECT_EQ(inst.points.labels[static_cast<std::size_t>(m)], "b1");
    std::vector<std::size_t> id(static_cast<std::size_t>(m));
    std::iota(id.begin(), id.end(), 0);
    Interval best = matching_length(inst, id, 256);
    std::vector<std::size_t> sigma = id;
    int others = 0;
    while (std::next_permutation(sigma.begin(), sigma.end())) {
      EXPECT_TRUE(certainly_less(matching_length(inst, sigma, 256), best));
      ++others;
    }
    int fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    EXPECT_EQ(others, fact - 1);
    expect_claims_pass(inst);
  }
}

TEST(Villanger, Transpositions) {
  Instance inst = villanger_pointset(3);
  TranspositionResult r = transposition_reduces(inst, {1, 0, 2}, 0, 1);
  EXPECT_TRUE(r.reversed);
  EXPECT_NE(r.type, TranspositionType::NotReducing);
  EXPECT_GT(r.length_after, r.length_before);

  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      TranspositionResult t = transposition_reduces(inst, {0, 1, 2}, i, j);
      EXPECT_FALSE(t.reversed);
      EXPECT_NE(t.type, TranspositionType::NotReducing);
      EXPECT_LT(t.length_after, t.length_before);
    }
  EXPECT_EQ(code_of([&] { transposition_reduces(inst, {0, 1, 2}, 1, 1); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { transposition_reduces(inst, {0, 0, 2}, 0, 1); }), ErrorCode::IndexOutOfRange);
}

TEST(Villanger, PlacementStepsShorten) {
  for (int m = 3; m <= 4; ++m) {
    Instance inst = villanger_pointset(m);
    std::vector<std::size_t> sigma(static_cast<std::size_t>(m));
    std::iota(sigma.begin(), sigma.end(), 0);
    while (std::next_permutation(sigma.begin(), sigma.end())) {
      std::vector<std::size_t> cur(sigma.size());
      std::iota(cur.begin(), cur.end(), 0);
      for (auto [i, j] : placement_sequence(sigma)) {
        TranspositionResult t = transposition_reduces(inst, cur, i, j);
        EXPECT_NE(t.type, TranspositionType::NotReducing);
        EXPECT_FALSE(t.reversed);
        std::vector<std::size_t> next = cur;
        std::swap(next[i], next[j]);
        EXPECT_TRUE(certainly_less(matching_length(inst, next, 256), matching_length(inst, cur, 256)));
        cur = next;
      }
      EXPECT_EQ(cur, sigma);
    }
  }
}

TEST(Villanger, Limits) {
  VillangerOptions opt;
  opt.limits.villanger_max_m = 3;
  EXPECT_EQ(code_of([&] { villanger_pointset(4, opt); }), ErrorCode::ResourceLimit);
  EXPECT_EQ(code_of([] { villanger_pointset(0); }), ErrorCode::InvalidSize);
}

TEST(ConvexCycles, RadialParts) {
  Instance single = convex_cycles_family(radial_separated_sets(4, 1), 4);
  EXPECT_EQ(single.families[0].members.size(), 1u);
  for (int k : {4, 5, 6}) {
    for (int size : {2, 3, 4}) {
      Instance inst = convex_cycles_family(radial_separated_sets(k, size), k);
      ASSERT_EQ(inst.families[0].members.size(), static_cast<std::size_t>(size));
      EXPECT_TRUE(is_crossing_family(inst.families[0]));
      for (const GeomGraph& c : inst.families[0].members) {
        EXPECT_EQ(c.vertices().size(), static_cast<std::size_t>(k));
        EXPECT_TRUE(is_convex_polygon(c.vertices()));
      }
    }
  }
}

TEST(ConvexCycles, Validation) {
  SeparatedSets sets = radial_separated_sets(4, 2);
  SeparatedSets uneven = sets;
  uneven.parts[1].pop_back();
  EXPECT_EQ(code_of([&] { convex_cycles_family(uneven, 4); }), ErrorCode::InvalidSize);
  SeparatedSets swapped = sets;
  std::swap(swapped.parts[0][0], swapped.parts[2][0]);
  EXPECT_EQ(code_of([&] { convex_cycles_family(swapped, 4); }), ErrorCode::SeparationViolation);
  EXPECT_EQ(code_of([&] { convex_cycles_family(sets, 5); }), ErrorCode::InvalidSize);
}

TEST(Intersecting, RandomSetsGiveAntichainFamilies) {
  const std::size_t expected[] = {1, 3, 7, 12};
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      Instance inst = intersecting_triangles(random_points(6 * m, seed, GeneralPosition::Strict));
      ASSERT_EQ(inst.families[0].members.size(), expected[m - 1]);
      EXPECT_TRUE(is_intersecting_family(inst.families[0]));
      ASSERT_EQ(inst.guides.size(), 3u);
    }
  }
  EXPECT_EQ(code_of([] { intersecting_triangles(random_points(13, 1, GeneralPosition::Strict)); }),
            ErrorCode::InvalidSize);
}

TEST(Intersecting, ThreeRay) {
  const std::size_t expected[] = {1, 3, 7, 12};
  for (int n = 1; n <= 4; ++n) {
    Instance inst = three_ray_pointset(n);
    EXPECT_EQ(inst.families[0].members.size(), expected[n - 1]);
    EXPECT_TRUE(is_intersecting_family(inst.families[0]));
    EXPECT_EQ(inst.families[1].members.size(), static_cast<std::size_t>(n * n * n));
  }
  expect_claims_pass(three_ray_pointset(2));
  expect_claims_pass(three_ray_pointset(3));
}

TEST(Intersecting, ConvexPosition) {
  for (int n = 1; n <= 5; ++n) {
    Instance inst = convex_intersecting_family(convex_groups(n));
    EXPECT_EQ(inst.families[0].members.size(), static_cast<std::size_t>(n * n));
    EXPECT_TRUE(is_intersecting_family(inst.families[0]));
  }
  PointSet bad = convex_groups(2);
  bad.points[0] = P(0, 0);
  EXPECT_EQ(code_of([&] { convex_intersecting_family(bad); }), ErrorCode::NotConvexPosition);
}

TEST(Common, Helpers) {
  EXPECT_EQ(antichain_bound(1), 1);
  EXPECT_EQ(antichain_bound(2), 3);
  EXPECT_EQ(antichain_bound(3), 7);
  EXPECT_EQ(antichain_bound(4), 12);
  EXPECT_EQ(antichain_bound(5), 19);
  Point c = circle_point(Rational(1, 2));
  EXPECT_EQ(c.x * c.x + c.y * c.y, 1);
  EXPECT_EQ(dyadic(0.75, 4), Rational(3, 4));
  PointSet a = random_points(20, 42, GeneralPosition::Strict), b = random_points(20, 42, GeneralPosition::Strict);
  EXPECT_EQ(a.points, b.points);
}

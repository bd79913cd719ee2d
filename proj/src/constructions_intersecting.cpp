#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "crossfam/constructions.hpp"

namespace crossfam {

namespace {

Rational abs_q(const Rational& v) { return sgn(v) < 0 ? Rational(-v) : v; }

// Indices sorted by distance to `line` (closest first); equal distances are
// general-position violations.
std::vector<std::size_t> order_by_distance(const std::vector<Point>& pts, std::vector<std::size_t> ids,
                                           const Line& line) {
  std::sort(ids.begin(), ids.end(),
            [&](std::size_t i, std::size_t j) { return abs_q(line.eval(pts[i])) < abs_q(line.eval(pts[j])); });
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (abs_q(line.eval(pts[ids[i - 1]])) == abs_q(line.eval(pts[ids[i]])))
      throw Error(ErrorCode::GeneralPositionViolation, "two points at the same distance from a line");
  }
  return ids;
}

std::vector<std::array<int, 3>> level_triples(int m) {
  const int level = (3 * (m + 1) + 1) / 2;
  std::vector<std::array<int, 3>> out;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      int k = level - i - j;
      if (k >= 1 && k <= m) out.push_back({i, j, k});
    }
  return out;
}

Point regular_direction(int i, int k) {
  double theta = -std::numbers::pi + (2.0 * i + 1.0) * std::numbers::pi / k;
  return circle_point(dyadic(std::tan(theta / 2), 24));
}

}  // namespace

SeparatedSets radial_separated_sets(int k, int size) {
  if (k < 3 || size < 1) throw Error(ErrorCode::InvalidSize, "need k >= 3 parts of size >= 1");
  SeparatedSets sets;
  const Rational h(1, 8L * k);
  for (int i = 0; i < k; ++i) {
    Point u = regular_direction(i, k);
    Point w(u.y, -u.x);
    std::vector<Point> part;
    for (int j = 0; j < size; ++j) {
      Rational radial = 1 + j * h;
      Rational lateral = h * h * j * j;
      part.push_back(radial * u + lateral * w);
    }
    sets.parts.push_back(std::move(part));
    sets.lines.push_back(Line::through_direction((1 - h) * u, w));
  }
  return sets;
}

Instance convex_cycles_family(const SeparatedSets& sets, int k, const ConstructionLimits& limits) {
  if (k < 4) throw Error(ErrorCode::InvalidSize, "convex_cycles_family needs k >= 4");
  const std::size_t K = static_cast<std::size_t>(k);
  if (sets.parts.size() != K || sets.lines.size() != K)
    throw Error(ErrorCode::InvalidSize, "need exactly k parts and k lines");
  const std::size_t N = sets.parts[0].size();
  for (const auto& part : sets.parts)
    if (part.size() != N || N == 0) throw Error(ErrorCode::InvalidSize, "parts must be nonempty and equal in size");

  for (std::size_t i = 0; i < K; ++i) {
    const Line& line = sets.lines[i];
    int own = line.side(sets.parts[i][0]);
    if (own == 0) throw Error(ErrorCode::SeparationViolation, "point on separating line " + std::to_string(i + 1));
    for (std::size_t j = 0; j < K; ++j) {
      for (const Point& p : sets.parts[j]) {
        int s = line.side(p);
        if ((j == i && s != own) || (j != i && s != -own))
          throw Error(ErrorCode::SeparationViolation, "line " + std::to_string(i + 1) + " does not separate part " +
                                                          std::to_string(i + 1));
      }
    }
  }

  double total = std::pow(static_cast<double>(N), static_cast<double>(K));
  if (total > static_cast<double>(limits.convex_max_transversals))
    throw Error(ErrorCode::ResourceLimit, "too many transversals to check exhaustively");
  std::vector<std::size_t> pick(K, 0);
  std::vector<Point> poly(K);
  while (true) {
    for (std::size_t i = 0; i < K; ++i) poly[i] = sets.parts[i][pick[i]];
    if (!is_convex_polygon(poly)) throw Error(ErrorCode::TransversalNotConvex, "a transversal is not convex");
    std::size_t d = 0;
    while (d < K && ++pick[d] == N) pick[d++] = 0;
    if (d == K) break;
  }

  Instance inst;
  inst.name = "convex-cycles";
  std::vector<std::vector<Point>> ordered(K);
  for (std::size_t i = 0; i < K; ++i) {
    std::vector<std::size_t> ids(N);
    std::iota(ids.begin(), ids.end(), 0);
    ids = order_by_distance(sets.parts[i], ids, sets.lines[i]);
    for (std::size_t r = 0; r < N; ++r) {
      ordered[i].push_back(sets.parts[i][ids[r]]);
      inst.points.points.push_back(sets.parts[i][ids[r]]);
      inst.points.labels.push_back("p" + std::to_string(i + 1) + "." + std::to_string(r + 1));
    }
  }
  Family family{FamilyKind::Crossing, {}};
  for (std::size_t c = 0; c < N; ++c) {
    std::vector<Point> cyc;
    cyc.push_back(ordered[0][N - 1 - c]);
    for (std::size_t i = 1; i < K; ++i) cyc.push_back(ordered[i][c]);
    family.members.push_back(GeomGraph::cycle(std::move(cyc)));
  }
  inst.families.push_back(std::move(family));
  inst.guides = sets.lines;
  inst.parameters = {{"k", std::to_string(k)}, {"part_size", std::to_string(N)}};
  inst.claims.push_back({"mutually crossing convex k-cycles", "crossing_family_size", 0, std::nullopt, std::nullopt,
                         Relation::Equal, static_cast<std::int64_t>(N)});
  return inst;
}

Instance intersecting_triangles(const PointSet& input, const EquipartitionOptions& options) {
  const std::size_t n = input.size();
  if (n < 6 || n % 6 != 0) throw Error(ErrorCode::InvalidSize, "intersecting_triangles needs 6m points");
  const std::size_t m = n / 6;
  WedgePartition wp;
  try {
    wp = six_wedge_partition(input.points, options);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::GeneralPositionViolation) throw;
    throw Error(ErrorCode::PartitionFailure, e.what());
  }
  for (std::size_t w = 0; w < 6; ++w)
    if (wp.wedges[w].size() != m)
      throw Error(ErrorCode::PartitionFailure, "wedge " + std::to_string(w + 1) + " does not hold exactly m points");

  std::vector<std::size_t> a = order_by_distance(input.points, wp.wedges[0], wp.lines[1]);
  std::vector<std::size_t> b = order_by_distance(input.points, wp.wedges[2], wp.lines[0]);
  std::vector<std::size_t> c = order_by_distance(input.points, wp.wedges[4], wp.lines[2]);

  Instance inst;
  inst.name = "intersecting-triangles";
  inst.points = input;
  if (inst.points.labels.empty()) {
    inst.points.labels.assign(n, "");
    for (std::size_t w = 1; w < 6; w += 2)
      for (std::size_t r = 0; r < m; ++r)
        inst.points.labels[wp.wedges[w][r]] = "w" + std::to_string(w + 1) + "." + std::to_string(r + 1);
    for (std::size_t r = 0; r < m; ++r) {
      inst.points.labels[a[r]] = "a" + std::to_string(r + 1);
      inst.points.labels[b[r]] = "b" + std::to_string(r + 1);
      inst.points.labels[c[r]] = "c" + std::to_string(r + 1);
    }
  }
  Family family{FamilyKind::Intersecting, {}};
  for (const auto& t : level_triples(static_cast<int>(m)))
    family.members.push_back(GeomGraph::triangle(input[a[t[0] - 1]], input[b[t[1] - 1]], input[c[t[2] - 1]]));
  inst.families.push_back(std::move(family));
  inst.guides.assign(wp.lines.begin(), wp.lines.end());
  inst.parameters = {{"n", std::to_string(n)}, {"m", std::to_string(m)},
                     {"apex", "(" + format_rational(wp.apex.x) + ", " + format_rational(wp.apex.y) + ")"}};
  inst.claims.push_back({"edge-disjoint intersecting triangles", "intersecting_family_size", 0, std::nullopt,
                         std::nullopt, Relation::Equal, antichain_bound(static_cast<std::int64_t>(m))});
  return inst;
}

Instance three_ray_pointset(int n, const ConstructionLimits& limits) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "three_ray_pointset needs n >= 1");
  const std::size_t total = static_cast<std::size_t>(n) * n * n;
  if (total > limits.transversal_max_triangles)
    throw Error(ErrorCode::ResourceLimit, "n^3 transversal triangles exceed the cap");
  const Point dirs[3] = {Point(Rational(0), Rational(1)), Point(Rational(-7, 8), Rational(-1, 2)),
                         Point(Rational(7, 8), Rational(-1, 2))};
  const Rational bend(1, 16L * n * n);
  Instance inst;
  inst.name = "three-ray";
  std::vector<std::vector<Point>> groups(3);
  for (int g = 0; g < 3; ++g) {
    const Point& u = dirs[g];
    Point w(u.y, -u.x);
    for (int i = 1; i <= n; ++i) {
      Point p = Rational(i) * u + Rational(bend * i * i) * w;
      groups[static_cast<std::size_t>(g)].push_back(p);
      inst.points.points.push_back(p);
      inst.points.labels.push_back(std::string(1, static_cast<char>('a' + g)) + std::to_string(i));
    }
  }
  if (!check_general_position(inst.points.points, GeneralPosition::Strict))
    throw Error(ErrorCode::GeneralPositionViolation, "three-ray points are not in general position");

  Family antichain{FamilyKind::Intersecting, {}};
  for (const auto& t : level_triples(n))
    antichain.members.push_back(GeomGraph::triangle(groups[0][t[0] - 1], groups[1][t[1] - 1], groups[2][t[2] - 1]));
  Family pool{FamilyKind::Intersecting, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) pool.members.push_back(GeomGraph::triangle(groups[0][i], groups[1][j], groups[2][k]));
  inst.families.push_back(std::move(antichain));
  inst.families.push_back(std::move(pool));
  inst.parameters = {{"n", std::to_string(n)}};
  const std::int64_t bound = antichain_bound(n);
  inst.claims.push_back({"edge-disjoint intersecting transversal triangles", "intersecting_family_size", 0,
                         std::nullopt, std::nullopt, Relation::Equal, bound});
  if (total <= 64) {
    inst.claims.push_back({"largest intersecting family among all transversal triangles",
                           "max_intersecting_subfamily", 1, std::nullopt, std::nullopt, Relation::Equal, bound});
  }
  return inst;
}

PointSet convex_groups(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "convex_groups needs n >= 1");
  PointSet ps;
  const int total = 3 * n;
  for (int i = 0; i < total; ++i) {
    ps.points.push_back(regular_direction(i, total));
    ps.labels.push_back(std::string(1, static_cast<char>('a' + i / n)) + std::to_string(i % n + 1));
  }
  return ps;
}

Instance convex_intersecting_family(const PointSet& input) {
  const std::size_t total = input.size();
  if (total < 3 || total % 3 != 0) throw Error(ErrorCode::InvalidSize, "convex_intersecting_family needs 3n points");
  if (!is_convex_polygon(input.points))
    throw Error(ErrorCode::NotConvexPosition, "points are not in convex position in the given circular order");
  const std::size_t n = total / 3;
  Instance inst;
  inst.name = "convex-intersecting";
  inst.points = input;
  Family family{FamilyKind::Intersecting, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      family.members.push_back(GeomGraph::triangle(input[i], input[n + j], input[2 * n + (j + i) % n]));
  inst.families.push_back(std::move(family));
  inst.parameters = {{"n", std::to_string(n)}};
  inst.claims.push_back({"edge-disjoint intersecting triangles", "intersecting_family_size", 0, std::nullopt,
                         std::nullopt, Relation::Equal, static_cast<std::int64_t>(n * n)});
  return inst;
}

}  // namespace crossfam

#include <algorithm>
#include <numeric>

#include "crossfam/constructions.hpp"

namespace crossfam {

std::vector<GeomGraph> all_elbows(const std::vector<Point>& points) {
  std::vector<GeomGraph> elbows;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Point& p = points[i];
      const Point& q = points[j];
      if (p.x == q.x || p.y == q.y) continue;
      elbows.push_back(GeomGraph::elbow(p, q));
      elbows.push_back(GeomGraph::elbow(q, p));
    }
  }
  return elbows;
}

Instance elbow_family(const PointSet& input) {
  const std::size_t n = input.size();
  if (n < 4) throw Error(ErrorCode::InvalidSize, "elbow_family needs at least 4 points");
  if (!check_general_position(input.points, GeneralPosition::Orthogonal))
    throw Error(ErrorCode::GeneralPositionViolation, "points are not in orthogonal general position");
  const std::size_t m = n / 4;

  std::vector<std::size_t> by_y(n);
  std::iota(by_y.begin(), by_y.end(), 0);
  std::sort(by_y.begin(), by_y.end(), [&](std::size_t i, std::size_t j) { return input[i].y < input[j].y; });
  std::vector<bool> above(n, false);
  for (std::size_t r = 2 * m; r < n; ++r) above[by_y[r]] = true;

  std::vector<std::size_t> by_x_desc(n);
  std::iota(by_x_desc.begin(), by_x_desc.end(), 0);
  std::sort(by_x_desc.begin(), by_x_desc.end(),
            [&](std::size_t i, std::size_t j) { return input[j].x < input[i].x; });

  std::vector<std::size_t> right_above, right_below;
  std::size_t stop = n;
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t idx = by_x_desc[r];
    (above[idx] ? right_above : right_below).push_back(idx);
    if (right_above.size() == m || right_below.size() == m) {
      stop = r;
      break;
    }
  }
  const bool mirrored = right_above.size() != m;
  std::vector<std::size_t> b = mirrored ? right_below : right_above;

  // Region A: opposite side of L, strictly left of the sweep line; rightmost first.
  std::vector<std::size_t> a;
  for (std::size_t r = stop + 1; r < n && a.size() < m; ++r) {
    std::size_t idx = by_x_desc[r];
    if (above[idx] == mirrored) a.push_back(idx);
  }
  if (a.size() < m) throw Error(ErrorCode::DegenerateInput, "sweep region holds fewer than n/4 points");

  // Region B top-to-bottom (bottom-to-top in the mirrored case).
  std::sort(b.begin(), b.end(), [&](std::size_t i, std::size_t j) {
    return mirrored ? input[i].y < input[j].y : input[j].y < input[i].y;
  });

  Instance inst;
  inst.name = "elbow-family";
  inst.points = input;
  Family family{FamilyKind::Crossing, {}};
  for (std::size_t i = 0; i < m; ++i) family.members.push_back(GeomGraph::elbow(input[a[i]], input[b[i]]));
  inst.families.push_back(std::move(family));
  inst.parameters = {{"n", std::to_string(n)}, {"mirrored", mirrored ? "true" : "false"}};
  inst.claims.push_back({"mutually crossing vertex-disjoint elbows", "crossing_family_size", 0, std::nullopt,
                         std::nullopt, Relation::Equal, static_cast<std::int64_t>(m)});
  return inst;
}

Instance elbow_hard_pointset(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidSize, "elbow_hard_pointset needs m >= 1");
  const long group_gap = 2L * m + 2;
  for (long bend = 4; bend < 64; ++bend) {
    PointSet ps;
    for (int g = 0; g < 3; ++g) {
      for (int t = 1; t <= m; ++t) {
        Rational x(group_gap * g + t);
        Rational y = Rational(group_gap * g + (m + 1 - t)) + Rational(static_cast<long>(t) * t) / (bend * m * m) +
                     Rational(g * g) / 8;
        ps.points.emplace_back(x, y);
        ps.labels.push_back(std::string(1, static_cast<char>('a' + g)) + std::to_string(t));
      }
    }
    if (!check_general_position(ps.points, GeneralPosition::Orthogonal)) continue;

    Instance inst;
    inst.name = "elbow-hard";
    inst.points = ps;
    inst.parameters = {{"m", std::to_string(m)}};
    Family pool{FamilyKind::Crossing, all_elbows(ps.points)};
    const std::size_t pool_size = pool.members.size();
    inst.families.push_back(std::move(pool));
    if (pool_size <= ConstructionLimits{}.claim_max_clique_graphs) {
      inst.claims.push_back({"largest crossing family among all elbows", "max_crossing_subfamily", 0, std::nullopt,
                             std::nullopt, Relation::AtMost, m});
    }
    return inst;
  }
  throw Error(ErrorCode::GeneralPositionViolation, "could not place three convex groups in general position");
}

}  // namespace crossfam

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "crossfam/constructions.hpp"

namespace crossfam {

namespace {

std::string crossing_formula_text(std::size_t n) {
  return n % 2 == 1 ? "crossings equal n(n-3)/2" : "crossings equal n(n-4)/2+1";
}

// Circular neighbour of point `i` in the given direction, with the parameter
// of a new point strictly between them on the circle.
Rational parameter_next_to(const std::vector<Rational>& ts, std::size_t i, bool forward) {
  std::vector<Rational> sorted = ts;
  std::sort(sorted.begin(), sorted.end());
  auto it = std::lower_bound(sorted.begin(), sorted.end(), ts[i]);
  std::size_t pos = static_cast<std::size_t>(it - sorted.begin());
  if (forward) {
    if (pos + 1 == sorted.size()) return sorted.back() + 1;
    return (sorted[pos] + sorted[pos + 1]) / 2;
  }
  if (pos == 0) return sorted.front() - 1;
  return (sorted[pos] + sorted[pos - 1]) / 2;
}

// True iff `w` lies on the counterclockwise arc from `a` to `b`.
bool on_ccw_arc(const std::vector<Rational>& ts, std::size_t a, std::size_t b, std::size_t w) {
  const Rational& ta = ts[a];
  const Rational& tb = ts[b];
  const Rational& tw = ts[w];
  if (ta < tb) return ta < tw && tw < tb;
  return tw > ta || tw < tb;
}

bool incident_edges_split(const std::vector<Point>& pts, const HamiltonianCycle& cycle, std::size_t e) {
  const std::size_t n = cycle.size();
  const Point& p = pts[cycle.order[e]];
  const Point& q = pts[cycle.order[(e + 1) % n]];
  const Point& before = pts[cycle.order[(e + n - 1) % n]];
  const Point& after = pts[cycle.order[(e + 2) % n]];
  Orientation s1 = orientation(p, q, before);
  Orientation s2 = orientation(p, q, after);
  return s1 != Orientation::Collinear && s2 != Orientation::Collinear && s1 != s2;
}

}  // namespace

Instance ham_cycle_max_odd(int m) {
  if (m < 2) throw Error(ErrorCode::InvalidSize, "ham_cycle_max_odd needs m >= 2");
  const int n = 2 * m + 1;
  Instance inst;
  inst.name = "ham-odd";
  for (int k = 0; k < n; ++k) {
    double theta = -std::numbers::pi + (2.0 * k + 1.0) * std::numbers::pi / n;
    inst.points.points.push_back(circle_point(dyadic(std::tan(theta / 2), 24)));
    inst.points.labels.push_back(std::to_string(k));
  }
  HamiltonianCycle cycle;
  for (int s = 0; s < n; ++s) cycle.order.push_back(static_cast<std::size_t>((s * m) % n));
  inst.cycles.push_back(std::move(cycle));
  inst.parameters = {{"m", std::to_string(m)}, {"n", std::to_string(n)}};
  inst.claims.push_back({crossing_formula_text(n), "cycle_crossings", std::nullopt, 0, std::nullopt, Relation::Equal,
                         max_crossings_bound(n)});
  return inst;
}

std::vector<EvenLevel> ham_cycle_even_levels(int m) {
  if (m < 2) throw Error(ErrorCode::InvalidSize, "ham_cycle_max_even needs m >= 2");
  std::vector<Rational> ts = {Rational(-1), Rational(-1, 3), Rational(1, 3), Rational(1)};
  std::vector<std::size_t> order = {0, 2, 1, 3};
  std::size_t e = 0;  // distinguished edge (order[e], order[e+1])

  std::vector<EvenLevel> levels;
  auto snapshot = [&]() {
    EvenLevel level;
    for (const Rational& t : ts) level.points.push_back(circle_point(t));
    level.cycle.order = order;
    level.distinguished_edge = e;
    const std::size_t n = order.size();
    PointSet ps{level.points, {}};
    if (edge_crossing_count(ps, level.cycle, e) != n - 3 || !incident_edges_split(level.points, level.cycle, e))
      throw Error(ErrorCode::DegenerateInput, "distinguished edge lost its invariant at n=" + std::to_string(n));
    levels.push_back(std::move(level));
  };
  snapshot();

  for (int step = 2; step < m; ++step) {
    const std::size_t n = order.size();
    const std::size_t a = order[e];
    const std::size_t b = order[(e + 1) % n];
    const std::size_t w = order[(e + 2) % n];
    // U is the arc between a and b that contains w; p goes next to b inside
    // U, q next to a inside the complementary arc V.
    const bool u_is_ccw = on_ccw_arc(ts, a, b, w);
    Rational tp = parameter_next_to(ts, b, !u_is_ccw);
    Rational tq = parameter_next_to(ts, a, !u_is_ccw);
    const std::size_t p = ts.size();
    ts.push_back(tp);
    const std::size_t q = ts.size();
    ts.push_back(tq);
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(e + 1), {p, q});
    e = e + 1;
    snapshot();
  }
  return levels;
}

Instance ham_cycle_max_even(int m) {
  std::vector<EvenLevel> levels = ham_cycle_even_levels(m);
  EvenLevel& last = levels.back();
  const std::size_t n = last.points.size();
  Instance inst;
  inst.name = "ham-even";
  inst.points.points = last.points;
  for (std::size_t i = 0; i < n; ++i) inst.points.labels.push_back(std::to_string(i));
  inst.cycles.push_back(last.cycle);
  inst.parameters = {{"m", std::to_string(m)}, {"n", std::to_string(n)}};
  inst.claims.push_back({crossing_formula_text(n), "cycle_crossings", std::nullopt, 0, std::nullopt, Relation::Equal,
                         max_crossings_bound(static_cast<std::int64_t>(n))});
  inst.claims.push_back({"distinguished edge crosses n-3 edges", "edge_crossings", std::nullopt, 0,
                         last.distinguished_edge, Relation::Equal, static_cast<std::int64_t>(n) - 3});
  return inst;
}

namespace {

// Blade g: m points on a slightly bent radial arc at angle 90 + 120 g degrees.
std::vector<Point> blade(int g, int m, const Rational& bend) {
  static const Point dirs[3] = {Point(Rational(0), Rational(1)), Point(Rational(-7, 8), Rational(-1, 2)),
                                Point(Rational(7, 8), Rational(-1, 2))};
  const Point& u = dirs[g];
  const Point w(u.y, -u.x);  // clockwise normal
  std::vector<Point> pts;
  for (int t = 1; t <= m; ++t) {
    Rational s = Rational(t) / (m + 1);
    pts.push_back(Rational(1 + s) * u + Rational(bend * s * (1 - s)) * w);
  }
  return pts;
}

std::vector<std::size_t> zigzag(const std::vector<std::size_t>& ids) {
  const std::size_t m = ids.size();
  const std::size_t h = (m + 1) / 2;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h; ++i) {
    out.push_back(ids[i]);
    if (h + i < m) out.push_back(ids[h + i]);
  }
  return out;
}

}  // namespace

Instance blades_pointset(int m, const ConstructionLimits& limits) {
  if (m < 2) throw Error(ErrorCode::InvalidSize, "blades_pointset needs m >= 2");
  const Rational bend(1, 4);
  PointSet ps;
  std::vector<std::vector<std::size_t>> groups(3);
  for (int g = 0; g < 3; ++g) {
    for (const Point& p : blade(g, m, bend)) {
      groups[static_cast<std::size_t>(g)].push_back(ps.points.size());
      ps.labels.push_back(std::string(1, static_cast<char>('a' + g)) + std::to_string(groups[g].size()));
      ps.points.push_back(p);
    }
  }
  if (!check_general_position(ps.points, GeneralPosition::Strict))
    throw Error(ErrorCode::GeneralPositionViolation, "blade points are not in general position");

  // Candidate: staircase through A and B, one edge to C, zigzag through C,
  // one edge back to A. All orientation variants are tried; the best wins.
  const std::vector<std::size_t>& A = groups[0];
  const std::vector<std::size_t>& B = groups[1];
  const std::vector<std::size_t>& C = groups[2];
  std::vector<std::size_t> best;
  std::uint64_t best_count = 0;
  SegmentCrossingTable table(ps.points);
  for (int variant = 0; variant < 16; ++variant) {
    std::vector<std::size_t> a = A, b = B, c = zigzag(C);
    if (variant & 1) std::reverse(a.begin(), a.end());
    if (variant & 2) std::reverse(b.begin(), b.end());
    if (variant & 4) std::reverse(c.begin(), c.end());
    std::vector<std::size_t> ab;
    if (variant & 8) {
      ab = zigzag(a);
      std::vector<std::size_t> zb = zigzag(b);
      for (std::size_t i = 0; i < zb.size(); ++i) ab.push_back(zb[i]);
    } else {
      for (std::size_t i = 0; i < a.size(); ++i) {
        ab.push_back(a[i]);
        ab.push_back(b[i]);
      }
    }
    std::vector<std::size_t> order = ab;
    order.insert(order.end(), c.begin(), c.end());
    std::uint64_t count = table.cycle_crossings(order);
    if (best.empty() || count > best_count) {
      best = order;
      best_count = count;
    }
  }

  // 2-opt ascent: reverse any stretch that strictly adds crossings.
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t i = 1; i + 1 < best.size() && !improved; ++i) {
      for (std::size_t j = i + 1; j < best.size() && !improved; ++j) {
        std::vector<std::size_t> next = best;
        std::reverse(next.begin() + static_cast<std::ptrdiff_t>(i), next.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        std::uint64_t count = table.cycle_crossings(next);
        if (count > best_count) {
          best = std::move(next);
          best_count = count;
          improved = true;
        }
      }
    }
  }

  Instance inst;
  inst.name = "blades";
  inst.points = std::move(ps);
  inst.cycles.push_back(HamiltonianCycle{best});
  inst.parameters = {{"m", std::to_string(m)}, {"n", std::to_string(3 * m)}};
  inst.claims.push_back({"candidate cycle crossings", "cycle_crossings", std::nullopt, 0, std::nullopt,
                         Relation::Equal, static_cast<std::int64_t>(best_count)});
  if (static_cast<std::size_t>(3 * m) <= limits.claim_max_cycle_points) {
    inst.claims.push_back({"every Hamiltonian cycle has at most floor(5m^2/2) crossings", "max_cycle_crossings",
                           std::nullopt, std::nullopt, std::nullopt, Relation::AtMost, (5L * m * m) / 2});
  }
  return inst;
}

}  // namespace crossfam

#include "crossfam/equipartition.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace crossfam {

namespace {

void normalize(Line& line) {
  mpz_class den = lcm(line.a.get_den(), lcm(line.b.get_den(), line.c.get_den()));
  mpz_class a = Rational(line.a * den).get_num();
  mpz_class b = Rational(line.b * den).get_num();
  mpz_class c = Rational(line.c * den).get_num();
  mpz_class g = gcd(a, gcd(b, c));
  if (g == 0) throw Error(ErrorCode::DegenerateInput, "line with zero coefficients");
  a /= g;
  b /= g;
  c /= g;
  int lead = sgn(a) != 0 ? sgn(a) : sgn(b);
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  line.a = Rational(a);
  line.b = Rational(b);
  line.c = Rational(c);
}

Point negate(const Point& p) { return Point(-p.x, -p.y); }

// Upper half-plane representative of a direction (y > 0, or y = 0 and x > 0).
Point projective(const Point& v) {
  int sy = sgn(v.y);
  if (sy > 0 || (sy == 0 && sgn(v.x) > 0)) return v;
  return negate(v);
}

struct Split {
  Point beta2;
  Point beta3;
};

// Fixes the first line through `apex` with direction `d`, then picks the two
// other lines greedily (earliest feasible gaps in angular order). Greedy is
// exact for a fixed apex and first direction: counts are monotone in the gap.
std::optional<Split> split_with_frame(const std::vector<Point>& points, const Point& apex, const Point& d,
                                      std::size_t k) {
  struct Dir {
    Point v;
    bool upper;
  };
  std::vector<Dir> dirs;
  dirs.reserve(points.size());
  for (const Point& q : points) {
    Point w = q - apex;
    int s = sgn(cross(d, w));
    if (s == 0) return std::nullopt;
    if (s > 0)
      dirs.push_back({w, true});
    else
      dirs.push_back({negate(w), false});
  }
  std::sort(dirs.begin(), dirs.end(), [](const Dir& u, const Dir& v) { return sgn(cross(u.v, v.v)) > 0; });
  const std::size_t n = dirs.size();
  for (std::size_t i = 1; i < n; ++i)
    if (sgn(cross(dirs[i - 1].v, dirs[i].v)) == 0) return std::nullopt;

  std::vector<std::size_t> up(n + 1, 0), low(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    up[i + 1] = up[i] + (dirs[i].upper ? 1 : 0);
    low[i + 1] = low[i] + (dirs[i].upper ? 0 : 1);
  }
  std::size_t g2 = 0;
  for (std::size_t g = 1; g < n; ++g) {
    if (up[g] >= k && low[g] >= k) {
      g2 = g;
      break;
    }
  }
  if (g2 == 0) return std::nullopt;
  std::size_t g3 = 0;
  for (std::size_t g = g2 + 1; g < n; ++g) {
    if (up[g] - up[g2] >= k && low[g] - low[g2] >= k) {
      g3 = g;
      break;
    }
  }
  if (g3 == 0) return std::nullopt;
  if (up[n] - up[g3] < k || low[n] - low[g3] < k) return std::nullopt;
  return Split{dirs[g2 - 1].v + dirs[g2].v, dirs[g3 - 1].v + dirs[g3].v};
}

WedgePartition assemble(const std::vector<Point>& points, const Point& apex, const Point& d, const Split& split) {
  std::array<Point, 6> r = {d, split.beta2, split.beta3, negate(d), negate(split.beta2), negate(split.beta3)};
  const Point e(1, 0);
  std::size_t start = 6;
  for (std::size_t s = 0; s < 6; ++s) {
    const Point& lo = r[s];
    const Point& hi = r[(s + 1) % 6];
    int c_lo = sgn(cross(lo, e));
    bool on_lo = c_lo == 0 && sgn(dot(lo, e)) > 0;
    if ((c_lo > 0 || on_lo) && sgn(cross(e, hi)) > 0) {
      start = s;
      break;
    }
  }
  if (start == 6) throw Error(ErrorCode::SearchExhausted, "could not locate the +x wedge");

  WedgePartition wp;
  wp.apex = apex;
  for (std::size_t i = 0; i < 6; ++i) wp.rays[i] = r[(start + i) % 6];
  wp.lines[0] = Line::through_direction(apex, wp.rays[1]);
  wp.lines[1] = Line::through_direction(apex, wp.rays[2]);
  wp.lines[2] = Line::through_direction(apex, wp.rays[0]);
  for (std::size_t i = 0; i < 6; ++i) {
    Point rep = apex + (wp.rays[i] + wp.rays[(i + 1) % 6]);
    for (std::size_t l = 0; l < 3; ++l) wp.sign_pattern[i][l] = wp.lines[l].side(rep);
  }
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    int w = wedge_membership(points[idx], wp);
    wp.wedges[static_cast<std::size_t>(w - 1)].push_back(idx);
  }
  return wp;
}

// Directions strictly between consecutive pair directions, in angular order.
std::vector<Point> generic_directions(const std::vector<Point>& points) {
  std::vector<Point> dirs;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) dirs.push_back(projective(points[j] - points[i]));
  auto before = [](const Point& u, const Point& v) {
    // Both in the upper half-plane representative set: compare by angle.
    return sgn(cross(u, v)) > 0;
  };
  std::sort(dirs.begin(), dirs.end(), before);
  std::vector<Point> unique;
  for (const Point& v : dirs)
    if (unique.empty() || sgn(cross(unique.back(), v)) != 0) unique.push_back(v);
  std::vector<Point> out;
  if (unique.size() == 1) {
    out.push_back(Point(-unique[0].y, unique[0].x));
    return out;
  }
  for (std::size_t i = 0; i + 1 < unique.size(); ++i) out.push_back(unique[i] + unique[i + 1]);
  out.push_back(unique.back() - unique.front());
  return out;
}

std::optional<WedgePartition> halving_sweep(const std::vector<Point>& points, std::size_t k) {
  const std::size_t n = points.size();
  const std::size_t half = n / 2;
  for (const Point& d : generic_directions(points)) {
    Point nu(-d.y, d.x);
    std::vector<Rational> proj;
    proj.reserve(n);
    for (const Point& q : points) proj.push_back(dot(nu, q));
    std::vector<Rational> sorted = proj;
    std::sort(sorted.begin(), sorted.end());
    Rational c = (sorted[half - 1] + sorted[half]) / 2;
    Point origin = (c / dot(nu, nu)) * nu;

    std::vector<Rational> ts;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Point e = points[j] - points[i];
        Rational den = cross(e, d);
        ts.push_back(cross(e, points[i] - origin) / den);
      }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<Rational> params;
    params.push_back(ts.front() - 1);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) params.push_back((ts[i] + ts[i + 1]) / 2);
    params.push_back(ts.back() + 1);

    for (const Rational& t : params) {
      Point apex = origin + t * d;
      if (auto split = split_with_frame(points, apex, d, k)) return assemble(points, apex, d, *split);
    }
  }
  return std::nullopt;
}

std::optional<WedgePartition> vertex_search(const std::vector<Point>& points, std::size_t k) {
  const std::size_t n = points.size();
  std::vector<Line> lines;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) lines.push_back(Line::through(points[i], points[j]));
  std::sort(lines.begin(), lines.end(), [](const Line& l, const Line& m) {
    if (l.a != m.a) return l.a < m.a;
    if (l.b != m.b) return l.b < m.b;
    return l.c < m.c;
  });
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

  const std::vector<Point> frames = generic_directions(points);
  std::set<Point> vertices;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Line& l = lines[i];
      const Line& m = lines[j];
      Rational det = l.a * m.b - l.b * m.a;
      if (sgn(det) == 0) continue;
      vertices.insert(Point((l.c * m.b - l.b * m.c) / det, (l.a * m.c - l.c * m.a) / det));
    }
  }

  for (const Point& v : vertices) {
    std::vector<Point> through;
    for (const Line& l : lines)
      if (l.contains(v)) through.push_back(projective(l.direction()));
    std::sort(through.begin(), through.end(), [](const Point& u, const Point& w) { return sgn(cross(u, w)) > 0; });
    std::vector<Point> bisectors;
    for (std::size_t i = 0; i + 1 < through.size(); ++i) bisectors.push_back(through[i] + through[i + 1]);
    bisectors.push_back(through.back() - through.front());
    std::size_t count = bisectors.size();
    for (std::size_t i = 0; i < count; ++i) bisectors.push_back(negate(bisectors[i]));

    for (const Point& w : bisectors) {
      std::optional<Rational> reach;
      for (const Line& l : lines) {
        Rational along = l.a * w.x + l.b * w.y;
        if (sgn(along) == 0) continue;
        Rational s = -l.eval(v) / along;
        if (sgn(s) > 0 && (!reach || s < *reach)) reach = s;
      }
      Rational delta = reach ? Rational(*reach / 2) : Rational(1);
      Point apex = v + delta * w;
      for (const Point& d : frames) {
        if (auto split = split_with_frame(points, apex, d, k)) return assemble(points, apex, d, *split);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Line Line::through(const Point& p, const Point& q) {
  if (p == q) throw Error(ErrorCode::DegenerateInput, "line through coincident points");
  return through_direction(p, q - p);
}

Line Line::through_direction(const Point& p, const Point& direction) {
  if (sgn(direction.x) == 0 && sgn(direction.y) == 0) throw Error(ErrorCode::DegenerateInput, "zero direction");
  Line l;
  l.a = -direction.y;
  l.b = direction.x;
  l.c = l.a * p.x + l.b * p.y;
  normalize(l);
  return l;
}

std::size_t WedgePartition::min_count() const {
  std::size_t m = wedges[0].size();
  for (const auto& w : wedges) m = std::min(m, w.size());
  return m;
}

int wedge_membership(const Point& p, const WedgePartition& partition) {
  std::array<int, 3> signs{};
  for (std::size_t l = 0; l < 3; ++l) {
    signs[l] = partition.lines[l].side(p);
    if (signs[l] == 0) throw Error(ErrorCode::OnBoundary, "point lies on a partition line");
  }
  for (std::size_t w = 0; w < 6; ++w)
    if (partition.sign_pattern[w] == signs) return static_cast<int>(w) + 1;
  throw Error(ErrorCode::OnBoundary, "sign pattern matches no wedge");
}

bool validate_partition(const std::vector<Point>& points, const WedgePartition& partition) {
  for (const Line& l : partition.lines)
    if (!l.contains(partition.apex)) return false;
  std::vector<int> seen(points.size(), 0);
  for (std::size_t w = 0; w < 6; ++w) {
    for (std::size_t idx : partition.wedges[w]) {
      if (idx >= points.size() || seen[idx]++) return false;
      try {
        if (wedge_membership(points[idx], partition) != static_cast<int>(w) + 1) return false;
      } catch (const Error&) {
        return false;
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
  return partition.min_count() >= points.size() / 6;
}

WedgePartition six_wedge_partition(const std::vector<Point>& points, const EquipartitionOptions& options) {
  if (points.size() < 6) throw Error(ErrorCode::InvalidSize, "six-wedge partition needs at least 6 points");
  if (!check_general_position(points, GeneralPosition::Strict))
    throw Error(ErrorCode::GeneralPositionViolation, "input is not in strict general position");
  const std::size_t k = points.size() / 6;
  if (auto wp = halving_sweep(points, k)) return *wp;
  if (points.size() <= options.fallback_max_points) {
    if (auto wp = vertex_search(points, k)) return *wp;
  }
  std::ostringstream msg;
  msg << "no six-wedge partition found for n=" << points.size() << " (halving sweep"
      << (points.size() <= options.fallback_max_points ? " and vertex search" : "") << " exhausted)";
  throw Error(ErrorCode::SearchExhausted, msg.str());
}

}  // namespace crossfam

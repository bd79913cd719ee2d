#pragma once

// Six-wedge equipartition by three concurrent lines.

#include <array>
#include <vector>

#include "crossfam/geom.hpp"

namespace crossfam {

/// The line a*x + b*y = c with integer, coprime coefficients whose leading
/// nonzero coefficient is positive.
struct Line {
  Rational a;
  Rational b;
  Rational c;

  static Line through(const Point& p, const Point& q);
  static Line through_direction(const Point& p, const Point& direction);

  Rational eval(const Point& p) const { return a * p.x + b * p.y - c; }
  int side(const Point& p) const { return sgn(eval(p)); }
  bool contains(const Point& p) const { return side(p) == 0; }
  Point direction() const { return Point(-b, a); }

  friend bool operator==(const Line& l, const Line& m) { return l.a == m.a && l.b == m.b && l.c == m.c; }
};

/// Three concurrent lines, six wedges W1..W6 counterclockwise starting with
/// the wedge that contains the +x direction from the apex (or that starts on
/// it). rays[i] is the ray between W(i) and W(i+1), rays[0] the clockwise
/// boundary of W1. Line roles: lines[0] (L1) carries rays 1 and 4 and
/// separates W3 from W1 and W5; lines[1] (L2) carries rays 2 and 5 and
/// separates W1 from W3 and W5; lines[2] (L3) carries rays 0 and 3 and
/// separates W5 from W1 and W3.
struct WedgePartition {
  Point apex;
  std::array<Line, 3> lines;
  std::array<Point, 6> rays;                       // direction vectors
  std::array<std::vector<std::size_t>, 6> wedges;  // point indices, 0-based wedge slots
  std::array<std::array<int, 3>, 6> sign_pattern;  // sign of each line inside each wedge

  std::size_t min_count() const;
};

struct EquipartitionOptions {
  /// Largest n for which the exhaustive arrangement-vertex fallback runs.
  std::size_t fallback_max_points = 30;
};

/// Finds three concurrent lines whose six open wedges each contain at least
/// floor(n/6) points (exactly n/6 each when 6 | n). Throws
/// GeneralPositionViolation unless the input is in strict general position,
/// InvalidSize for n < 6, SearchExhausted if no partition was found.
WedgePartition six_wedge_partition(const std::vector<Point>& points, const EquipartitionOptions& options = {});

/// Wedge index in 1..6. Throws OnBoundary if p lies on one of the lines.
int wedge_membership(const Point& p, const WedgePartition& partition);

/// Checks every structural invariant: concurrency, no point on a line, wedge
/// lists partition the input consistently with wedge_membership, and each
/// wedge holds at least floor(n/6) points.
bool validate_partition(const std::vector<Point>& points, const WedgePartition& partition);

}  // namespace crossfam

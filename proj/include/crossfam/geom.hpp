#pragma once

// Exact planar primitives: rational points, orientation, segment and elbow
// crossing predicates, general-position checks.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossfam {

using Rational = mpq_class;

enum class ErrorCode {
  DegenerateInput,
  SharedVertex,
  GeneralPositionViolation,
  KindMismatch,
  InvalidSize,
  ResourceLimit,
  DegenerateLabeling,
  PrecisionExhausted,
  IndexOutOfRange,
  SeparationViolation,
  TransversalNotConvex,
  PartitionFailure,
  SearchExhausted,
  OnBoundary,
  NotConvexPosition,
  TieUnresolved,
  SchemaViolation,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  // Lexicographic (x, then y).
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);

Rational cross(const Point& u, const Point& v);
Rational dot(const Point& u, const Point& v);
Rational squared_distance(const Point& a, const Point& b);

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

/// Sign of (q - p) x (r - p).
Orientation orientation(const Point& p, const Point& q, const Point& r);

struct Segment {
  Point a;
  Point b;
};

/// True iff the relatively open segments share a point. Segments that only
/// touch at an endpoint do not cross; collinear segments with overlapping
/// interiors do. Throws DegenerateInput on a zero-length segment.
bool segments_cross(const Segment& s1, const Segment& s2);

/// An orthogonal edge made of a vertical leg through `anchor_vertical` and a
/// horizontal leg through `anchor_horizontal`, meeting at the corner
/// (anchor_vertical.x, anchor_horizontal.y).
struct Elbow {
  Point anchor_vertical;
  Point anchor_horizontal;

  Point corner() const { return Point(anchor_vertical.x, anchor_horizontal.y); }
  Segment vertical_leg() const { return {anchor_vertical, corner()}; }
  Segment horizontal_leg() const { return {corner(), anchor_horizontal}; }
};

/// Leg-against-leg interior crossing test using axis-aligned interval
/// arithmetic. Throws SharedVertex if the two elbows share an anchor and
/// DegenerateInput if a leg has zero length.
bool elbows_cross(const Elbow& e1, const Elbow& e2);

enum class GeneralPosition { Strict, Orthogonal };

/// Strict: points pairwise distinct and no three collinear.
/// Orthogonal: strict, and additionally no shared x or y coordinate.
bool check_general_position(std::span<const Point> points, GeneralPosition mode);

struct PointSet {
  std::vector<Point> points;
  std::vector<std::string> labels;  // empty or one per point

  std::size_t size() const { return points.size(); }
  const Point& operator[](std::size_t i) const { return points[i]; }
};

/// True iff the points, taken in the given cyclic order, form a strictly
/// convex polygon (all turns in the same direction, simple).
bool is_convex_polygon(std::span<const Point> cyclic);

/// True iff every point is a vertex of the convex hull (no point in the hull
/// of the others, no three collinear).
bool in_convex_position(std::span<const Point> points);

/// Parses "p/q", an integer, or a decimal string ("-1.25") exactly.
Rational parse_rational(const std::string& text);
/// Canonical "p/q" (or "p" when q = 1).
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

}  // namespace crossfam

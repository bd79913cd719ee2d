#include "crossfam/geom.hpp"

#include <algorithm>
#include <numeric>

namespace crossfam {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::SharedVertex: return "SharedVertex";
    case ErrorCode::GeneralPositionViolation: return "GeneralPositionViolation";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::DegenerateLabeling: return "DegenerateLabeling";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SeparationViolation: return "SeparationViolation";
    case ErrorCode::TransversalNotConvex: return "TransversalNotConvex";
    case ErrorCode::PartitionFailure: return "PartitionFailure";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::OnBoundary: return "OnBoundary";
    case ErrorCode::NotConvexPosition: return "NotConvexPosition";
    case ErrorCode::TieUnresolved: return "TieUnresolved";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

Point operator+(const Point& a, const Point& b) { return Point(a.x + b.x, a.y + b.y); }
Point operator-(const Point& a, const Point& b) { return Point(a.x - b.x, a.y - b.y); }
Point operator*(const Rational& s, const Point& p) { return Point(s * p.x, s * p.y); }

Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

Rational squared_distance(const Point& a, const Point& b) {
  Rational dx = a.x - b.x;
  Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  int s = sgn(Rational((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)));
  return static_cast<Orientation>(s);
}

namespace {

// Open 1D intervals (a0,a1) and (b0,b1), endpoints unordered.
bool open_intervals_overlap(Rational a0, Rational a1, Rational b0, Rational b1) {
  if (a1 < a0) std::swap(a0, a1);
  if (b1 < b0) std::swap(b0, b1);
  return std::max(a0, b0) < std::min(a1, b1);
}

}  // namespace

bool segments_cross(const Segment& s1, const Segment& s2) {
  if (s1.a == s1.b || s2.a == s2.b) {
    throw Error(ErrorCode::DegenerateInput, "zero-length segment");
  }
  Orientation o1 = orientation(s1.a, s1.b, s2.a);
  Orientation o2 = orientation(s1.a, s1.b, s2.b);
  if (o1 == Orientation::Collinear && o2 == Orientation::Collinear) {
    // All four collinear: compare along the dominant axis.
    if (s1.a.x != s1.b.x) return open_intervals_overlap(s1.a.x, s1.b.x, s2.a.x, s2.b.x);
    return open_intervals_overlap(s1.a.y, s1.b.y, s2.a.y, s2.b.y);
  }
  Orientation o3 = orientation(s2.a, s2.b, s1.a);
  Orientation o4 = orientation(s2.a, s2.b, s1.b);
  if (o1 == Orientation::Collinear || o2 == Orientation::Collinear ||
      o3 == Orientation::Collinear || o4 == Orientation::Collinear) {
    // An endpoint touches the other segment: the touching point is an
    // endpoint of one of them, hence not interior to both.
    return false;
  }
  return o1 != o2 && o3 != o4;
}

namespace {

struct AxisLeg {
  bool vertical;
  Rational fixed;  // x for vertical legs, y for horizontal ones
  Rational lo, hi;
};

AxisLeg make_leg(const Point& a, const Point& b) {
  if (a.x == b.x && a.y == b.y) throw Error(ErrorCode::DegenerateInput, "zero-length elbow leg");
  if (a.x == b.x) return {true, a.x, std::min(a.y, b.y), std::max(a.y, b.y)};
  return {false, a.y, std::min(a.x, b.x), std::max(a.x, b.x)};
}

bool legs_cross(const AxisLeg& u, const AxisLeg& v) {
  if (u.vertical != v.vertical) {
    const AxisLeg& ver = u.vertical ? u : v;
    const AxisLeg& hor = u.vertical ? v : u;
    return hor.lo < ver.fixed && ver.fixed < hor.hi && ver.lo < hor.fixed && hor.fixed < ver.hi;
  }
  if (u.fixed != v.fixed) return false;
  return std::max(u.lo, v.lo) < std::min(u.hi, v.hi);
}

}  // namespace

bool elbows_cross(const Elbow& e1, const Elbow& e2) {
  const std::array<Point, 2> ends1{e1.anchor_vertical, e1.anchor_horizontal};
  const std::array<Point, 2> ends2{e2.anchor_vertical, e2.anchor_horizontal};
  for (const auto& p : ends1) {
    for (const auto& q : ends2) {
      if (p == q) throw Error(ErrorCode::SharedVertex, "elbows share an anchor");
    }
  }
  if (e1.anchor_vertical.x == e1.anchor_horizontal.x || e1.anchor_vertical.y == e1.anchor_horizontal.y ||
      e2.anchor_vertical.x == e2.anchor_horizontal.x || e2.anchor_vertical.y == e2.anchor_horizontal.y) {
    throw Error(ErrorCode::DegenerateInput, "elbow anchors share a coordinate");
  }
  const std::array<AxisLeg, 2> legs1{make_leg(e1.anchor_vertical, e1.corner()),
                                     make_leg(e1.corner(), e1.anchor_horizontal)};
  const std::array<AxisLeg, 2> legs2{make_leg(e2.anchor_vertical, e2.corner()),
                                     make_leg(e2.corner(), e2.anchor_horizontal)};
  for (const auto& u : legs1) {
    for (const auto& v : legs2) {
      if (legs_cross(u, v)) return true;
    }
  }
  return false;
}

bool check_general_position(std::span<const Point> points, GeneralPosition mode) {
  const std::size_t n = points.size();
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (mode == GeneralPosition::Orthogonal) {
    std::vector<Rational> xs, ys;
    xs.reserve(n);
    ys.reserve(n);
    for (const auto& p : points) {
      xs.push_back(p.x);
      ys.push_back(p.y);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) return false;
    if (std::adjacent_find(ys.begin(), ys.end()) != ys.end()) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orientation(points[i], points[j], points[k]) == Orientation::Collinear) return false;
      }
    }
  }
  return true;
}

bool is_convex_polygon(std::span<const Point> cyclic) {
  const std::size_t k = cyclic.size();
  if (k < 3) return false;
  Orientation turn = Orientation::Collinear;
  for (std::size_t i = 0; i < k; ++i) {
    Orientation o = orientation(cyclic[i], cyclic[(i + 1) % k], cyclic[(i + 2) % k]);
    if (o == Orientation::Collinear) return false;
    if (turn == Orientation::Collinear) turn = o;
    if (o != turn) return false;
  }
  // Same-direction turns still allow a star polygon; require the total turning
  // to be one revolution by checking that every vertex sees all others on the
  // same side of each edge.
  for (std::size_t i = 0; i < k; ++i) {
    const Point& a = cyclic[i];
    const Point& b = cyclic[(i + 1) % k];
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i || j == (i + 1) % k) continue;
      if (orientation(a, b, cyclic[j]) != turn) return false;
    }
  }
  return true;
}

bool in_convex_position(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n <= 2) return true;
  if (!check_general_position(points, GeneralPosition::Strict)) return false;
  // A point is not a hull vertex iff it lies in some triangle of the others.
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == p) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j == p) continue;
        for (std::size_t k = j + 1; k < n; ++k) {
          if (k == p) continue;
          Orientation a = orientation(points[i], points[j], points[p]);
          Orientation b = orientation(points[j], points[k], points[p]);
          Orientation c = orientation(points[k], points[i], points[p]);
          if (a == b && b == c) return false;
        }
      }
    }
  }
  return true;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::SchemaViolation, "empty rational");
  auto check_digits = [&](const std::string& s, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start >= s.size()) throw Error(ErrorCode::SchemaViolation, "malformed rational '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw Error(ErrorCode::SchemaViolation, "malformed rational '" + text + "'");
    }
  };
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_digits(num, true);
    check_digits(den, false);
    if (num[0] == '+') num = num.substr(1);
    mpz_class n(num), d(den);
    if (d == 0) throw Error(ErrorCode::SchemaViolation, "zero denominator in '" + text + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
  }
  auto dot_pos = text.find('.');
  if (dot_pos != std::string::npos) {
    std::string whole = text.substr(0, dot_pos);
    std::string frac = text.substr(dot_pos + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    check_digits(whole, false);
    check_digits(frac, false);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational r(mpz_class(whole) * scale + mpz_class(frac), scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  check_digits(text, true);
  std::string t = text[0] == '+' ? text.substr(1) : text;
  return Rational(mpz_class(t));
}

std::string format_rational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace crossfam

#include "crossfam/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace crossfam {

namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  Rational min_x, max_x, min_y, max_y;
  double pad_x = 1, pad_y = 1;
  double x0() const { return to_double(min_x) - pad_x; }
  double y0() const { return -to_double(max_y) - pad_y; }
  double w() const { return to_double(max_x - min_x) + 2 * pad_x; }
  double h() const { return to_double(max_y - min_y) + 2 * pad_y; }
};

std::string sx(const Point& p) { return num(to_double(p.x)); }
std::string sy(const Point& p) { return num(-to_double(p.y)); }

void line(std::ostringstream& out, const Point& a, const Point& b, const std::string& color, double width,
          const char* extra = "") {
  out << "  <line x1=\"" << sx(a) << "\" y1=\"" << sy(a) << "\" x2=\"" << sx(b) << "\" y2=\"" << sy(b)
      << "\" stroke=\"" << color << "\" stroke-width=\"" << num(width) << "\"" << extra << "/>\n";
}

void cross_marks(std::ostringstream& out, const std::vector<Segment>& segs, const std::vector<std::size_t>& owner,
                 bool skip_same_owner, double r) {
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (skip_same_owner && owner[i] == owner[j]) continue;
      const Segment& s = segs[i];
      const Segment& t = segs[j];
      if (s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b) continue;
      if (!segments_cross(s, t)) continue;
      if (sgn(cross(s.b - s.a, t.b - t.a)) == 0) continue;
      Point p = crossing_point(s, t);
      out << "  <circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"" << num(r)
          << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"" << num(r / 3) << "\"/>\n";
    }
  }
}

}  // namespace

Point crossing_point(const Segment& s1, const Segment& s2) {
  Point d1 = s1.b - s1.a;
  Point d2 = s2.b - s2.a;
  Rational den = cross(d1, d2);
  if (sgn(den) == 0) throw Error(ErrorCode::DegenerateInput, "parallel segments have no unique crossing point");
  Rational t = cross(s2.a - s1.a, d2) / den;
  return s1.a + t * d1;
}

std::string render_svg(const Instance& inst, const RenderOptions& options) {
  Frame f;
  if (inst.points.size() == 0) {
    f.min_x = f.min_y = -1;
    f.max_x = f.max_y = 1;
  } else {
    f.min_x = f.max_x = inst.points[0].x;
    f.min_y = f.max_y = inst.points[0].y;
    for (const Point& p : inst.points.points) {
      f.min_x = std::min(f.min_x, p.x);
      f.max_x = std::max(f.max_x, p.x);
      f.min_y = std::min(f.min_y, p.y);
      f.max_y = std::max(f.max_y, p.y);
    }
  }
  double span_x = to_double(f.max_x - f.min_x);
  double span_y = to_double(f.max_y - f.min_y);
  double span = std::max(span_x, span_y);
  if (span <= 0) span = 1;
  f.pad_x = span_x > 0 ? 0.05 * span_x : 0.05 * span;
  f.pad_y = span_y > 0 ? 0.05 * span_y : 0.05 * span;
  const double unit = std::max(f.w(), f.h());
  const double stroke = unit * 0.003;
  const double radius = unit * 0.007;
  const int height_px = std::max(1, static_cast<int>(options.width_px * f.h() / f.w() + 0.5));

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width_px << "\" height=\""
      << height_px << "\" viewBox=\"" << num(f.x0()) << " " << num(f.y0()) << " " << num(f.w()) << " "
      << num(f.h()) << "\">\n";
  out << "  <title>" << escape(inst.name) << "</title>\n";
  out << "  <rect x=\"" << num(f.x0()) << "\" y=\"" << num(f.y0()) << "\" width=\"" << num(f.w()) << "\" height=\""
      << num(f.h()) << "\" fill=\"white\"/>\n";

  // Guide lines clipped to the viewBox.
  for (const Line& l : inst.guides) {
    double a = to_double(l.a), b = to_double(l.b), c = to_double(l.c);
    double xa = f.x0(), xb = f.x0() + f.w();
    double ya = -(f.y0() + f.h()), yb = -f.y0();
    std::vector<std::pair<double, double>> hits;
    if (b != 0) {
      for (double x : {xa, xb}) {
        double y = (c - a * x) / b;
        if (y >= ya && y <= yb) hits.emplace_back(x, y);
      }
    }
    if (a != 0) {
      for (double y : {ya, yb}) {
        double x = (c - b * y) / a;
        if (x >= xa && x <= xb) hits.emplace_back(x, y);
      }
    }
    if (hits.size() < 2) continue;
    std::sort(hits.begin(), hits.end());
    out << "  <line x1=\"" << num(hits.front().first) << "\" y1=\"" << num(-hits.front().second) << "\" x2=\""
        << num(hits.back().first) << "\" y2=\"" << num(-hits.back().second)
        << "\" stroke=\"#555555\" stroke-width=\"" << num(stroke) << "\" stroke-dasharray=\"" << num(4 * stroke)
        << " " << num(3 * stroke) << "\"/>\n";
  }

  std::vector<Segment> family_segments;
  std::vector<std::size_t> family_owner;
  std::size_t member_id = 0;
  for (const Family& fam : inst.families) {
    for (std::size_t mi = 0; mi < fam.members.size(); ++mi, ++member_id) {
      const GeomGraph& g = fam.members[mi];
      std::string color = kPalette[mi % (sizeof kPalette / sizeof kPalette[0])];
      if (g.kind() == GraphKind::Elbow) {
        Elbow e = g.as_elbow();
        Point c = e.corner();
        out << "  <polyline points=\"" << sx(e.anchor_vertical) << "," << sy(e.anchor_vertical) << " " << sx(c)
            << "," << sy(c) << " " << sx(e.anchor_horizontal) << "," << sy(e.anchor_horizontal)
            << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << num(stroke) << "\"/>\n";
        continue;
      }
      for (const Segment& s : g.segments()) {
        line(out, s.a, s.b, color, stroke);
        family_segments.push_back(s);
        family_owner.push_back(member_id);
      }
    }
  }
  if (options.mark_crossings && inst.families.size() == 1)
    cross_marks(out, family_segments, family_owner, true, radius * 1.4);

  for (const HamiltonianCycle& cyc : inst.cycles) {
    if (cyc.order.empty()) continue;
    out << "  <polygon points=\"";
    for (std::size_t i = 0; i < cyc.order.size(); ++i) {
      const Point& p = inst.points[cyc.order[i]];
      out << (i ? " " : "") << sx(p) << "," << sy(p);
    }
    out << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"" << num(stroke) << "\"/>\n";
    if (options.mark_crossings) {
      std::vector<Segment> segs;
      std::vector<std::size_t> owner;
      for (std::size_t i = 0; i < cyc.order.size(); ++i) {
        segs.push_back({inst.points[cyc.order[i]], inst.points[cyc.order[(i + 1) % cyc.order.size()]]});
        owner.push_back(i);
      }
      cross_marks(out, segs, owner, false, radius * 1.4);
    }
  }

  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    const Point& p = inst.points[i];
    out << "  <circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"" << num(radius) << "\" fill=\"black\"/>\n";
    if (options.show_labels && !inst.points.labels.empty() && !inst.points.labels[i].empty()) {
      out << "  <text x=\"" << num(to_double(p.x) + radius * 1.5) << "\" y=\"" << num(-to_double(p.y) - radius * 1.5)
          << "\" font-family=\"sans-serif\" font-size=\"" << num(radius * 3) << "\">"
          << escape(inst.points.labels[i]) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace crossfam

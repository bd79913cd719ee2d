#include <algorithm>

#include "crossfam/constructions.hpp"

namespace crossfam {

namespace {

bool strictly_inside(const Point& p, const std::vector<Point>& tri) {
  Orientation o0 = orientation(tri[0], tri[1], p);
  Orientation o1 = orientation(tri[1], tri[2], p);
  Orientation o2 = orientation(tri[2], tri[0], p);
  return o0 != Orientation::Collinear && o0 == o1 && o1 == o2;
}

struct Labeled {
  Point top;
  Point left;
  Point right;
};

Labeled label_vertices(const GeomGraph& t) {
  if (t.kind() != GraphKind::Triangle) throw Error(ErrorCode::KindMismatch, "labeling needs triangles");
  const auto& v = t.vertices();
  std::size_t top = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (v[top].y < v[i].y) top = i;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != top && v[i].y == v[top].y) throw Error(ErrorCode::DegenerateLabeling, "no unique topmost vertex");
  const Point& u = v[(top + 1) % 3];
  const Point& w = v[(top + 2) % 3];
  if (orientation(v[top], u, w) == Orientation::CCW) return {v[top], u, w};
  return {v[top], w, u};
}

}  // namespace

const char* to_string(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::Left: return "l";
    case EdgeLabel::Right: return "r";
    case EdgeLabel::Bottom: return "b";
  }
  return "?";
}

GeomGraph remove_labeled_edge(const GeomGraph& triangle, EdgeLabel label) {
  Labeled t = label_vertices(triangle);
  switch (label) {
    case EdgeLabel::Left: return GeomGraph::path({t.left, t.right, t.top});
    case EdgeLabel::Right: return GeomGraph::path({t.right, t.left, t.top});
    case EdgeLabel::Bottom: return GeomGraph::path({t.left, t.top, t.right});
  }
  throw Error(ErrorCode::DegenerateLabeling, "unknown label");
}

GeomGraph remove_edge(const GeomGraph& triangle, std::size_t e) {
  if (triangle.kind() != GraphKind::Triangle) throw Error(ErrorCode::KindMismatch, "edge removal needs a triangle");
  if (e > 2) throw Error(ErrorCode::IndexOutOfRange, "triangle edge index out of range");
  const auto& v = triangle.vertices();
  return GeomGraph::path({v[(e + 1) % 3], v[(e + 2) % 3], v[e]});
}

std::vector<EdgeLabel> label_triangle_pair(const GeomGraph& t1, const GeomGraph& t2) {
  if (t1.kind() != GraphKind::Triangle || t2.kind() != GraphKind::Triangle)
    throw Error(ErrorCode::KindMismatch, "labeling needs triangles");
  if (!vertex_disjoint(t1, t2)) throw Error(ErrorCode::SharedVertex, "triangles share a vertex");
  std::vector<EdgeLabel> out;
  for (EdgeLabel label : {EdgeLabel::Left, EdgeLabel::Right, EdgeLabel::Bottom}) {
    if (graphs_cross(remove_labeled_edge(t1, label), remove_labeled_edge(t2, label))) out.push_back(label);
  }
  return out;
}

Instance crossing_triangles_grid(int m, const ConstructionLimits& limits) {
  if (m < 1) throw Error(ErrorCode::InvalidSize, "crossing_triangles_grid needs m >= 1");
  const std::size_t count = static_cast<std::size_t>(m) * m * m;
  if (count > limits.grid_max_triangles)
    throw Error(ErrorCode::ResourceLimit, "m^3 = " + std::to_string(count) + " exceeds the triangle cap " +
                                              std::to_string(limits.grid_max_triangles));
  const Point left(-1, 0), right(1, 0), bottom(Rational(0), Rational(-7, 4));
  const Point step1(2, -1), step2(-2, -1);
  const Rational d1(1, 8 * m);
  const Rational d2 = d1 / (4 * m);
  const Rational d3 = d2 / (4 * m);

  for (long skew = 0; skew < 32; ++skew) {
    const Point step3(Rational(skew) / 97, Rational(1));
    const Rational wobble = d3 / (64 * (skew + 1) * static_cast<long>(count * count * count));
    std::vector<std::vector<Point>> tris;
    std::vector<std::array<int, 3>> index;
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        for (int k = 1; k <= m; ++k) {
          const long s = static_cast<long>(tris.size()) + 1;
          Point off = Rational(i * d1) * step1 + Rational(j * d2) * step2 + Rational(k * d3) * step3 +
                      Rational(wobble * s) * Point(Rational(1), Rational(s));
          tris.push_back({left + off, right + off, bottom + off});
          index.push_back({i, j, k});
        }
      }
    }
    bool nested = true;
    for (std::size_t s = 0; s < tris.size() && nested; ++s) {
      for (std::size_t t = 0; t < tris.size() && nested; ++t) {
        const auto& a = index[s];
        const auto& b = index[t];
        if (a[0] < b[0])
          nested = strictly_inside(tris[t][0], tris[s]);
        else if (a[0] == b[0] && a[1] < b[1])
          nested = strictly_inside(tris[t][1], tris[s]);
        else if (a[0] == b[0] && a[1] == b[1] && a[2] < b[2])
          nested = strictly_inside(tris[t][2], tris[s]);
      }
    }
    if (!nested) continue;
    PointSet ps;
    for (std::size_t s = 0; s < tris.size(); ++s) {
      std::string name = "T" + std::to_string(index[s][0]) + "." + std::to_string(index[s][1]) + "." +
                         std::to_string(index[s][2]);
      for (int v = 0; v < 3; ++v) {
        ps.points.push_back(tris[s][v]);
        ps.labels.push_back(name + ":" + "LRB"[v]);
      }
    }
    if (!check_general_position(ps.points, GeneralPosition::Strict)) continue;

    Instance inst;
    inst.name = "triangle-grid";
    inst.points = std::move(ps);
    Family family{FamilyKind::Crossing, {}};
    for (const auto& t : tris) family.members.push_back(GeomGraph::triangle(t[0], t[1], t[2]));
    inst.families.push_back(std::move(family));
    inst.parameters = {{"m", std::to_string(m)}};
    inst.claims.push_back({"mutually crossing vertex-disjoint triangles", "crossing_family_size", 0, std::nullopt,
                           std::nullopt, Relation::Equal, static_cast<std::int64_t>(count)});
    if (count <= limits.claim_max_two_path_triangles) {
      inst.claims.push_back({"best crossing 2-path family after one removal per triangle", "best_2path_removal", 0,
                             std::nullopt, std::nullopt, Relation::AtMost, 3L * m * m});
    }
    return inst;
  }
  throw Error(ErrorCode::GeneralPositionViolation, "triangle grid could not be placed in general position");
}

}  // namespace crossfam

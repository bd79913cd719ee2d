#include "crossfam/graphs.hpp"

#include <algorithm>

namespace crossfam {

const char* to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::MatchingEdge: return "matching_edge";
    case GraphKind::Elbow: return "elbow";
    case GraphKind::KPath: return "k_path";
    case GraphKind::KCycle: return "k_cycle";
    case GraphKind::Triangle: return "triangle";
  }
  return "unknown";
}

GraphKind graph_kind_from_string(const std::string& name) {
  if (name == "matching_edge") return GraphKind::MatchingEdge;
  if (name == "elbow") return GraphKind::Elbow;
  if (name == "k_path") return GraphKind::KPath;
  if (name == "k_cycle") return GraphKind::KCycle;
  if (name == "triangle") return GraphKind::Triangle;
  throw Error(ErrorCode::SchemaViolation, "unknown graph kind '" + name + "'");
}

const char* to_string(FamilyKind kind) {
  return kind == FamilyKind::Crossing ? "crossing" : "intersecting";
}

GeomGraph::GeomGraph(GraphKind kind, std::vector<Point> vertices)
    : kind_(kind), vertices_(std::move(vertices)) {
  const std::size_t k = vertices_.size();
  switch (kind_) {
    case GraphKind::MatchingEdge:
    case GraphKind::Elbow:
      if (k != 2) throw Error(ErrorCode::InvalidSize, "edge graphs need exactly 2 vertices");
      break;
    case GraphKind::KPath:
      if (k < 2) throw Error(ErrorCode::InvalidSize, "a k-path needs at least 2 vertices");
      break;
    case GraphKind::KCycle:
      if (k < 3) throw Error(ErrorCode::InvalidSize, "a k-cycle needs at least 3 vertices");
      break;
    case GraphKind::Triangle:
      if (k != 3) throw Error(ErrorCode::InvalidSize, "a triangle needs exactly 3 vertices");
      break;
  }
  std::vector<Point> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::DegenerateInput, "repeated vertex inside one graph");
  }
  if (kind_ == GraphKind::Elbow) {
    const Point& a = vertices_[0];
    const Point& b = vertices_[1];
    if (a.x == b.x || a.y == b.y) throw Error(ErrorCode::DegenerateInput, "elbow with a zero-length leg");
  }
}

GeomGraph GeomGraph::matching_edge(Point a, Point b) {
  return GeomGraph(GraphKind::MatchingEdge, {std::move(a), std::move(b)});
}
GeomGraph GeomGraph::elbow(Point anchor_vertical, Point anchor_horizontal) {
  return GeomGraph(GraphKind::Elbow, {std::move(anchor_vertical), std::move(anchor_horizontal)});
}
GeomGraph GeomGraph::path(std::vector<Point> vertices) { return GeomGraph(GraphKind::KPath, std::move(vertices)); }
GeomGraph GeomGraph::cycle(std::vector<Point> vertices) { return GeomGraph(GraphKind::KCycle, std::move(vertices)); }
GeomGraph GeomGraph::triangle(Point a, Point b, Point c) {
  return GeomGraph(GraphKind::Triangle, {std::move(a), std::move(b), std::move(c)});
}

std::vector<std::pair<std::size_t, std::size_t>> GeomGraph::edge_indices() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t k = vertices_.size();
  switch (kind_) {
    case GraphKind::MatchingEdge:
    case GraphKind::Elbow:
      edges.emplace_back(0, 1);
      break;
    case GraphKind::KPath:
      for (std::size_t i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
      break;
    case GraphKind::KCycle:
    case GraphKind::Triangle:
      for (std::size_t i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
      break;
  }
  return edges;
}

std::vector<Segment> GeomGraph::segments() const {
  if (kind_ == GraphKind::Elbow) throw Error(ErrorCode::KindMismatch, "elbow graph has no straight edges");
  std::vector<Segment> out;
  for (auto [i, j] : edge_indices()) out.push_back({vertices_[i], vertices_[j]});
  return out;
}

Elbow GeomGraph::as_elbow() const {
  if (kind_ != GraphKind::Elbow) throw Error(ErrorCode::KindMismatch, "not an elbow graph");
  return Elbow{vertices_[0], vertices_[1]};
}

bool vertex_disjoint(const GeomGraph& g1, const GeomGraph& g2) {
  for (const auto& p : g1.vertices()) {
    for (const auto& q : g2.vertices()) {
      if (p == q) return false;
    }
  }
  return true;
}

namespace {

using PointPair = std::pair<Point, Point>;

PointPair unordered(const Point& a, const Point& b) { return b < a ? PointPair{b, a} : PointPair{a, b}; }

std::vector<PointPair> edge_keys(const GeomGraph& g) {
  std::vector<PointPair> keys;
  for (auto [i, j] : g.edge_indices()) keys.push_back(unordered(g.vertices()[i], g.vertices()[j]));
  return keys;
}

void require_same_edge_type(const GeomGraph& g1, const GeomGraph& g2) {
  if (g1.is_orthogonal() != g2.is_orthogonal()) {
    throw Error(ErrorCode::KindMismatch, "cannot mix elbow and straight-edge graphs");
  }
}

}  // namespace

bool edge_disjoint(const GeomGraph& g1, const GeomGraph& g2) {
  auto k1 = edge_keys(g1);
  auto k2 = edge_keys(g2);
  for (const auto& e : k1) {
    for (const auto& f : k2) {
      if (e == f) return false;
    }
  }
  return true;
}

bool graphs_cross(const GeomGraph& g1, const GeomGraph& g2) {
  require_same_edge_type(g1, g2);
  if (!vertex_disjoint(g1, g2)) throw Error(ErrorCode::SharedVertex, "graphs are not vertex-disjoint");
  if (g1.is_orthogonal()) return elbows_cross(g1.as_elbow(), g2.as_elbow());
  for (const auto& s : g1.segments()) {
    for (const auto& t : g2.segments()) {
      if (segments_cross(s, t)) return true;
    }
  }
  return false;
}

bool graphs_intersect(const GeomGraph& g1, const GeomGraph& g2) {
  require_same_edge_type(g1, g2);
  auto e1 = g1.edge_indices();
  auto e2 = g2.edge_indices();
  for (auto [a, b] : e1) {
    const Point& p = g1.vertices()[a];
    const Point& q = g1.vertices()[b];
    for (auto [c, d] : e2) {
      const Point& r = g2.vertices()[c];
      const Point& s = g2.vertices()[d];
      if (p == r || p == s || q == r || q == s) continue;
      bool hit = g1.is_orthogonal() ? elbows_cross(Elbow{p, q}, Elbow{r, s}) : segments_cross({p, q}, {r, s});
      if (hit) return true;
    }
  }
  return false;
}

namespace {

void require_uniform(const Family& family) {
  for (std::size_t i = 1; i < family.members.size(); ++i) {
    require_same_edge_type(family.members[0], family.members[i]);
  }
}

}  // namespace

bool is_crossing_family(const Family& family) {
  if (family.kind != FamilyKind::Crossing) throw Error(ErrorCode::KindMismatch, "family is not a crossing family");
  require_uniform(family);
  const auto& m = family.members;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!vertex_disjoint(m[i], m[j])) return false;
      if (!graphs_cross(m[i], m[j])) return false;
    }
  }
  return true;
}

bool is_intersecting_family(const Family& family) {
  if (family.kind != FamilyKind::Intersecting) {
    throw Error(ErrorCode::KindMismatch, "family is not an intersecting family");
  }
  require_uniform(family);
  const auto& m = family.members;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!edge_disjoint(m[i], m[j])) return false;
      if (!graphs_intersect(m[i], m[j])) return false;
    }
  }
  return true;
}

void HamiltonianCycle::validate(std::size_t n) const {
  if (order.size() != n) throw Error(ErrorCode::InvalidSize, "cycle length differs from point count");
  std::vector<bool> seen(n, false);
  for (auto v : order) {
    if (v >= n) throw Error(ErrorCode::IndexOutOfRange, "cycle vertex out of range");
    if (seen[v]) throw Error(ErrorCode::InvalidSize, "cycle repeats a vertex");
    seen[v] = true;
  }
}

EdgePairClasses classify_edge_pairs(const PointSet& points, const HamiltonianCycle& cycle) {
  const std::size_t n = points.size();
  if (n < 3) throw Error(ErrorCode::InvalidSize, "a Hamiltonian cycle needs at least 3 points");
  cycle.validate(n);
  EdgePairClasses classes;
  for (std::size_t e = 0; e < n; ++e) {
    std::size_t a = cycle.order[e], b = cycle.order[(e + 1) % n];
    for (std::size_t f = e + 1; f < n; ++f) {
      std::size_t c = cycle.order[f], d = cycle.order[(f + 1) % n];
      if (a == c || a == d || b == c || b == d) {
        ++classes.incident;
      } else if (segments_cross({points[a], points[b]}, {points[c], points[d]})) {
        ++classes.crossing;
      } else {
        ++classes.avoiding;
      }
    }
  }
  return classes;
}

std::uint64_t count_crossings(const PointSet& points, const HamiltonianCycle& cycle) {
  return classify_edge_pairs(points, cycle).crossing;
}

std::uint64_t count_avoiding_pairs(const PointSet& points, const HamiltonianCycle& cycle) {
  return classify_edge_pairs(points, cycle).avoiding;
}

std::uint64_t edge_crossing_count(const PointSet& points, const HamiltonianCycle& cycle, std::size_t edge) {
  const std::size_t n = points.size();
  cycle.validate(n);
  if (edge >= n) throw Error(ErrorCode::IndexOutOfRange, "edge index out of range");
  std::size_t a = cycle.order[edge], b = cycle.order[(edge + 1) % n];
  std::uint64_t count = 0;
  for (std::size_t f = 0; f < n; ++f) {
    std::size_t c = cycle.order[f], d = cycle.order[(f + 1) % n];
    if (a == c || a == d || b == c || b == d) continue;
    if (segments_cross({points[a], points[b]}, {points[c], points[d]})) ++count;
  }
  return count;
}

std::int64_t max_crossings_bound(std::int64_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidSize, "max_crossings_bound needs n >= 3");
  return n % 2 == 1 ? n * (n - 3) / 2 : n * (n - 4) / 2 + 1;
}

SegmentCrossingTable::SegmentCrossingTable(const std::vector<Point>& points)
    : n_(points.size()), bits_(n_ * n_ * n_ * n_, 0) {
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a + 1; b < n_; ++b) {
      for (std::size_t c = 0; c < n_; ++c) {
        if (c == a || c == b) continue;
        for (std::size_t d = c + 1; d < n_; ++d) {
          if (d == a || d == b) continue;
          if (index(c, d, a, b) < index(a, b, c, d)) continue;
          std::uint8_t hit = segments_cross({points[a], points[b]}, {points[c], points[d]}) ? 1 : 0;
          for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
            for (auto [r, s] : {std::pair{c, d}, std::pair{d, c}}) {
              bits_[index(p, q, r, s)] = hit;
              bits_[index(r, s, p, q)] = hit;
            }
          }
        }
      }
    }
  }
}

std::uint64_t SegmentCrossingTable::cycle_crossings(const std::vector<std::size_t>& order) const {
  const std::size_t n = order.size();
  std::uint64_t count = 0;
  for (std::size_t e = 0; e < n; ++e) {
    std::size_t a = order[e], b = order[(e + 1) % n];
    // Edges e+2 .. n-1 (skipping the edge that wraps back onto e).
    for (std::size_t f = e + 2; f < n; ++f) {
      if (e == 0 && f == n - 1) continue;
      count += bits_[index(a, b, order[f], order[(f + 1) % n])];
    }
  }
  return count;
}

}  // namespace crossfam

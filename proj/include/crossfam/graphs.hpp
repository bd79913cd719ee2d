#pragma once

// Geometric graphs over exact points, crossing/intersecting family
// predicates, and the crossing / avoiding-pair counters for Hamiltonian
// cycles.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossfam/geom.hpp"

namespace crossfam {

enum class GraphKind { MatchingEdge, Elbow, KPath, KCycle, Triangle };

const char* to_string(GraphKind kind);
GraphKind graph_kind_from_string(const std::string& name);

class GeomGraph {
 public:
  GeomGraph(GraphKind kind, std::vector<Point> vertices);

  static GeomGraph matching_edge(Point a, Point b);
  static GeomGraph elbow(Point anchor_vertical, Point anchor_horizontal);
  static GeomGraph path(std::vector<Point> vertices);
  static GeomGraph cycle(std::vector<Point> vertices);
  static GeomGraph triangle(Point a, Point b, Point c);

  GraphKind kind() const { return kind_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  bool is_orthogonal() const { return kind_ == GraphKind::Elbow; }

  /// Edges as pairs of vertex positions (into vertices()).
  std::vector<std::pair<std::size_t, std::size_t>> edge_indices() const;
  /// Straight edges; throws KindMismatch for elbow graphs.
  std::vector<Segment> segments() const;
  /// The elbow of an elbow graph; throws KindMismatch otherwise.
  Elbow as_elbow() const;

 private:
  GraphKind kind_;
  std::vector<Point> vertices_;
};

enum class FamilyKind { Crossing, Intersecting };

const char* to_string(FamilyKind kind);

struct Family {
  FamilyKind kind = FamilyKind::Crossing;
  std::vector<GeomGraph> members;
};

bool vertex_disjoint(const GeomGraph& g1, const GeomGraph& g2);
/// Edge identity is the unordered pair of endpoints.
bool edge_disjoint(const GeomGraph& g1, const GeomGraph& g2);

/// Some edge of g1 crosses some edge of g2. Throws SharedVertex when the
/// graphs are not vertex-disjoint, KindMismatch when elbow and straight-edge
/// graphs are mixed.
bool graphs_cross(const GeomGraph& g1, const GeomGraph& g2);

/// Some pair of non-incident edges (one per graph) crosses; vertices may be
/// shared. Throws KindMismatch on mixed elbow/straight graphs.
bool graphs_intersect(const GeomGraph& g1, const GeomGraph& g2);

/// Pairwise vertex-disjoint and pairwise crossing. Throws KindMismatch when
/// F.kind is not Crossing or elbow and straight graphs are mixed.
bool is_crossing_family(const Family& family);
/// Pairwise edge-disjoint and pairwise intersecting.
bool is_intersecting_family(const Family& family);

struct HamiltonianCycle {
  std::vector<std::size_t> order;

  std::size_t size() const { return order.size(); }
  /// Throws InvalidSize / IndexOutOfRange unless `order` is a permutation of
  /// [0, n).
  void validate(std::size_t n) const;
};

struct EdgePairClasses {
  std::uint64_t crossing = 0;
  std::uint64_t avoiding = 0;
  std::uint64_t incident = 0;
};

/// Classifies every unordered pair of cycle edges.
EdgePairClasses classify_edge_pairs(const PointSet& points, const HamiltonianCycle& cycle);
std::uint64_t count_crossings(const PointSet& points, const HamiltonianCycle& cycle);
std::uint64_t count_avoiding_pairs(const PointSet& points, const HamiltonianCycle& cycle);
/// Number of cycle edges crossed by edge (order[e], order[e+1]).
std::uint64_t edge_crossing_count(const PointSet& points, const HamiltonianCycle& cycle, std::size_t edge);

/// n(n-3)/2 for odd n, n(n-4)/2 + 1 for even n. Throws InvalidSize for n < 3.
std::int64_t max_crossings_bound(std::int64_t n);

/// Precomputed crossing relation between all segments spanned by a point set,
/// indexed by endpoint indices.
class SegmentCrossingTable {
 public:
  explicit SegmentCrossingTable(const std::vector<Point>& points);

  std::size_t size() const { return n_; }
  bool crosses(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return bits_[index(a, b, c, d)] != 0;
  }
  /// Crossings of the closed tour given by `order`.
  std::uint64_t cycle_crossings(const std::vector<std::size_t>& order) const;

 private:
  std::size_t index(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return ((a * n_ + b) * n_ + c) * n_ + d;
  }
  std::size_t n_;
  std::vector<std::uint8_t> bits_;
};

}  // namespace crossfam

#pragma once

// Generators for the explicit point sets, families and cycles. Each returns
// an Instance whose claims are re-checkable by a named verifier (see
// claims.hpp).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossfam/equipartition.hpp"
#include "crossfam/graphs.hpp"
#include "crossfam/interval.hpp"

namespace crossfam {

enum class Relation { Equal, AtMost, AtLeast };

const char* to_string(Relation relation);
Relation relation_from_string(const std::string& name);

struct Claim {
  std::string description;
  std::string verifier;
  std::optional<std::size_t> family;
  std::optional<std::size_t> cycle;
  std::optional<std::size_t> edge;
  Relation relation = Relation::Equal;
  std::int64_t value = 0;
};

struct Instance {
  std::string name;
  PointSet points;
  std::vector<Family> families;
  std::vector<HamiltonianCycle> cycles;
  std::vector<Claim> claims;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Line> guides;  // drawn dashed (wedge lines)
};

struct ConstructionLimits {
  std::size_t grid_max_triangles = 4096;
  std::size_t villanger_max_m = 8;
  std::size_t transversal_max_triangles = 4096;
  std::size_t convex_max_transversals = 100000;
  // Claims that need an exhaustive oracle are only attached below these sizes.
  std::size_t claim_max_two_path_triangles = 12;
  std::size_t claim_max_cycle_points = 10;
  std::size_t claim_max_clique_graphs = 512;
  PrecisionPolicy precision;
};

/// Rational point on the unit circle, ((1-t^2)/(1+t^2), 2t/(1+t^2)).
Point circle_point(const Rational& t);
/// Dyadic rational nearest to x with the given number of fractional bits.
Rational dyadic(double x, int bits);

// Elbows.
Instance elbow_family(const PointSet& points);
Instance elbow_hard_pointset(int m);
/// Every elbow over the point set: two per unordered pair (either endpoint
/// carries the vertical leg).
std::vector<GeomGraph> all_elbows(const std::vector<Point>& points);

// Triangles and 2-paths.
Instance crossing_triangles_grid(int m, const ConstructionLimits& limits = {});

enum class EdgeLabel { Left, Right, Bottom };
const char* to_string(EdgeLabel label);

/// Labels x in {l, r, b} such that removing the x-edge (relative to each
/// triangle's unique topmost vertex) from both triangles leaves crossing
/// 2-paths. Throws SharedVertex, KindMismatch, DegenerateLabeling (tie for
/// the topmost vertex).
std::vector<EdgeLabel> label_triangle_pair(const GeomGraph& t1, const GeomGraph& t2);
/// The 2-path left after removing the labelled edge.
GeomGraph remove_labeled_edge(const GeomGraph& triangle, EdgeLabel label);
/// The 2-path left after removing edge (v[e], v[e+1 mod 3]).
GeomGraph remove_edge(const GeomGraph& triangle, std::size_t e);

// Hamiltonian cycles.
Instance ham_cycle_max_odd(int m);

struct EvenLevel {
  std::vector<Point> points;
  HamiltonianCycle cycle;
  std::size_t distinguished_edge;  // edge (order[e], order[e+1])
};

/// Every level of the recursive even construction, from 4 points to 2m.
std::vector<EvenLevel> ham_cycle_even_levels(int m);
Instance ham_cycle_max_even(int m);

Instance blades_pointset(int m, const ConstructionLimits& limits = {});

// Villanger configuration and transpositions.
struct VillangerOptions {
  Rational margin = Rational(1, 1000);
  ConstructionLimits limits;
};

/// Points a_1..a_m (labels "a1".."am") followed by b_1..b_m.
Instance villanger_pointset(int m, const VillangerOptions& options = {});

enum class TranspositionType { TypeI, TypeII, NotReducing };
const char* to_string(TranspositionType type);

struct TranspositionResult {
  TranspositionType type = TranspositionType::NotReducing;
  /// True when sigma_i > sigma_j: the classified move is the reverse one,
  /// from the swapped permutation back to sigma.
  bool reversed = false;
  double length_before = 0;  // matching sigma
  double length_after = 0;   // matching with sigma_i, sigma_j swapped
};

/// sigma is 0-based (a_i matched to b_{sigma[i]}); positions i < j are
/// 0-based. Reducing types are certified by interval arithmetic; throws
/// PrecisionExhausted if a claimed strict decrease cannot be certified.
TranspositionResult transposition_reduces(const Instance& villanger, const std::vector<std::size_t>& sigma,
                                          std::size_t i, std::size_t j, const PrecisionPolicy& precision = {});

/// Positions (i, j) swapped, in order, to go from the identity to sigma by
/// moving values 0, 1, ... rightwards into place.
std::vector<std::pair<std::size_t, std::size_t>> placement_sequence(const std::vector<std::size_t>& sigma);

/// Total length of the matching a_i -> b_{sigma[i]}.
Interval matching_length(const Instance& villanger, const std::vector<std::size_t>& sigma, mpfr_prec_t precision);

// Convex cycles over separated sets.
struct SeparatedSets {
  std::vector<std::vector<Point>> parts;
  std::vector<Line> lines;
};

/// k clusters of `size` points near the vertices of a regular k-gon, each
/// separated from the rest by a line perpendicular to its radial direction.
SeparatedSets radial_separated_sets(int k, int size);
Instance convex_cycles_family(const SeparatedSets& sets, int k, const ConstructionLimits& limits = {});

// Intersecting triangle families.
Instance intersecting_triangles(const PointSet& points, const EquipartitionOptions& options = {});
Instance three_ray_pointset(int n, const ConstructionLimits& limits = {});
/// Points a1..an, b1..bn, c1..cn on the unit circle in counterclockwise
/// order.
PointSet convex_groups(int n);
Instance convex_intersecting_family(const PointSet& points);

/// Deterministic pseudo-random integer points in [0, range)^2 (range grows
/// with n) satisfying the requested general-position mode.
PointSet random_points(std::size_t n, std::uint64_t seed, GeneralPosition mode);

/// ceil(3 m^2 / 4).
std::int64_t antichain_bound(std::int64_t m);

}  // namespace crossfam

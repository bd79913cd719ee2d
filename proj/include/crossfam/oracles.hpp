#pragma once

// Brute-force ground truth at desk scale.

#include <cstdint>
#include <functional>
#include <vector>

#include "crossfam/graphs.hpp"
#include "crossfam/interval.hpp"

namespace crossfam {

enum class Disjointness { Vertex, Edge };

struct OracleLimits {
  std::size_t max_graphs = 512;
  std::size_t max_cycle_points = 10;
  std::size_t max_general_matching_points = 12;
  std::size_t max_bipartite_matching_side = 8;
  std::size_t max_antichain_n = 12;
  std::size_t max_two_path_triangles = 12;
  PrecisionPolicy precision;
};

/// Symmetric, irreflexive compatibility matrix: entry (i, j) is set when the
/// members are disjoint in the given sense and cross (vertex) or intersect
/// (edge).
class CrossingGraph {
 public:
  CrossingGraph(const std::vector<GeomGraph>& graphs, Disjointness mode);
  explicit CrossingGraph(std::vector<std::vector<bool>> adjacency);

  std::size_t size() const { return adj_.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i][j]; }

 private:
  std::vector<std::vector<bool>> adj_;
};

struct CliqueResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // ascending member indices
};

/// Exact maximum clique (branch and bound, greedy colouring bound).
CliqueResult max_clique(const CrossingGraph& graph);
CliqueResult max_crossing_subfamily(const std::vector<GeomGraph>& graphs, Disjointness mode,
                                    const OracleLimits& limits = {});

struct CycleSearchResult {
  std::uint64_t value = 0;
  HamiltonianCycle witness;  // starts at 0, order[1] < order[n-1], lexicographically smallest
  std::uint64_t cycles = 0;  // number of distinct cycles visited
};

/// Calls visit(order, crossings) once per Hamiltonian cycle (first vertex 0,
/// order[1] < order[n-1]), in lexicographic order.
std::uint64_t for_each_hamiltonian_cycle(
    const SegmentCrossingTable& table, const std::function<void(const std::vector<std::size_t>&, std::uint64_t)>& visit);

CycleSearchResult enumerate_hamiltonian_max_crossings(const PointSet& points, const OracleLimits& limits = {});
/// Minimum of count_avoiding_pairs over all Hamiltonian cycles.
CycleSearchResult min_avoiding_pairs(const PointSet& points, const OracleLimits& limits = {});

enum class MatchingMode { BipartiteAB, General };

struct MatchingResult {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // point indices
  double length = 0;
  std::uint64_t crossings = 0;
  bool crossing_free = true;
  std::uint64_t candidates = 0;
  mpfr_prec_t precision_used = 0;
};

/// Longest perfect matching, certified by interval arithmetic. Bipartite mode
/// matches points labelled a* with points labelled b*.
MatchingResult longest_perfect_matching_bruteforce(const PointSet& points, MatchingMode mode,
                                                   const OracleLimits& limits = {});

/// Maximum antichain in [n]^3 under coordinatewise dominance, by minimum
/// chain cover.
std::int64_t max_antichain_3d(std::int64_t n, const OracleLimits& limits = {});

struct TwoPathResult {
  std::size_t value = 0;
  std::vector<std::size_t> removal;  // removed edge index per triangle
  std::vector<std::size_t> witness;  // members of the best crossing 2-path family
};

/// Maximum over all 3^|F| removal assignments of the largest crossing family
/// among the resulting 2-paths.
TwoPathResult best_2path_removal(const Family& triangles, const OracleLimits& limits = {});

}  // namespace crossfam

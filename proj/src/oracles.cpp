#include "crossfam/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>

#include "crossfam/constructions.hpp"

namespace crossfam {

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  for (auto w : b)
    if (w) return true;
  return false;
}

class CliqueSolver {
 public:
  explicit CliqueSolver(const std::vector<Bits>& adj) : adj_(adj), words_(adj.empty() ? 0 : adj[0].size()) {}

  std::vector<std::size_t> solve(std::size_t n) {
    Bits all(words_, 0);
    for (std::size_t v = 0; v < n; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    if (n > 0) expand(all);
    return best_;
  }

 private:
  void expand(Bits candidates) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colors;
    Bits uncolored = candidates;
    std::size_t color = 0;
    while (any(uncolored)) {
      ++color;
      Bits q = uncolored;
      while (any(q)) {
        std::size_t v = first(q);
        q[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        uncolored[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        for (std::size_t w = 0; w < words_; ++w) q[w] &= ~adj_[v][w];
        order.push_back(v);
        colors.push_back(color);
      }
    }
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current_.size() + colors[idx] <= best_.size()) return;
      std::size_t v = order[idx];
      current_.push_back(v);
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = candidates[w] & adj_[v][w];
      if (any(next))
        expand(next);
      else if (current_.size() > best_.size())
        best_ = current_;
      current_.pop_back();
      candidates[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  static std::size_t first(const Bits& b) {
    for (std::size_t w = 0; w < b.size(); ++w)
      if (b[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(b[w]));
    return b.size() * 64;
  }

  const std::vector<Bits>& adj_;
  std::size_t words_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

void require_cycle_size(const PointSet& points, const OracleLimits& limits) {
  if (points.size() < 4) throw Error(ErrorCode::InvalidSize, "cycle enumeration needs at least 4 points");
  if (points.size() > limits.max_cycle_points)
    throw Error(ErrorCode::ResourceLimit, "cycle enumeration capped at n=" + std::to_string(limits.max_cycle_points));
}

bool label_group(const std::string& label, char group) { return !label.empty() && label[0] == group; }

}  // namespace

CrossingGraph::CrossingGraph(const std::vector<GeomGraph>& graphs, Disjointness mode)
    : adj_(graphs.size(), std::vector<bool>(graphs.size(), false)) {
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      bool hit = mode == Disjointness::Vertex
                     ? vertex_disjoint(graphs[i], graphs[j]) && graphs_cross(graphs[i], graphs[j])
                     : edge_disjoint(graphs[i], graphs[j]) && graphs_intersect(graphs[i], graphs[j]);
      adj_[i][j] = adj_[j][i] = hit;
    }
  }
}

CrossingGraph::CrossingGraph(std::vector<std::vector<bool>> adjacency) : adj_(std::move(adjacency)) {
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    if (adj_[i].size() != adj_.size()) throw Error(ErrorCode::InvalidSize, "adjacency matrix is not square");
    if (adj_[i][i]) throw Error(ErrorCode::DegenerateInput, "adjacency matrix has a loop");
    for (std::size_t j = 0; j < i; ++j)
      if (adj_[i][j] != adj_[j][i]) throw Error(ErrorCode::DegenerateInput, "adjacency matrix is not symmetric");
  }
}

CliqueResult max_clique(const CrossingGraph& graph) {
  const std::size_t n = graph.size();
  // Relabel by decreasing degree so colouring bounds are tight early.
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) degree[i] += graph.adjacent(i, j) ? 1 : 0;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

  const std::size_t words = (n + 63) / 64;
  std::vector<Bits> adj(n, Bits(words, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (graph.adjacent(perm[i], perm[j])) adj[i][j / 64] |= std::uint64_t{1} << (j % 64);

  CliqueSolver solver(adj);
  CliqueResult result;
  for (std::size_t v : solver.solve(n)) result.witness.push_back(perm[v]);
  std::sort(result.witness.begin(), result.witness.end());
  result.size = result.witness.size();
  return result;
}

CliqueResult max_crossing_subfamily(const std::vector<GeomGraph>& graphs, Disjointness mode,
                                    const OracleLimits& limits) {
  if (graphs.size() > limits.max_graphs)
    throw Error(ErrorCode::ResourceLimit, "clique search capped at " + std::to_string(limits.max_graphs) + " graphs");
  return max_clique(CrossingGraph(graphs, mode));
}

std::uint64_t for_each_hamiltonian_cycle(
    const SegmentCrossingTable& table,
    const std::function<void(const std::vector<std::size_t>&, std::uint64_t)>& visit) {
  const std::size_t n = table.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t visited = 0;
  do {
    if (order[1] > order[n - 1]) continue;
    ++visited;
    visit(order, table.cycle_crossings(order));
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return visited;
}

CycleSearchResult enumerate_hamiltonian_max_crossings(const PointSet& points, const OracleLimits& limits) {
  require_cycle_size(points, limits);
  SegmentCrossingTable table(points.points);
  CycleSearchResult result;
  bool found = false;
  result.cycles = for_each_hamiltonian_cycle(table, [&](const std::vector<std::size_t>& order, std::uint64_t c) {
    if (!found || c > result.value) {
      result.value = c;
      result.witness.order = order;
      found = true;
    }
  });
  return result;
}

CycleSearchResult min_avoiding_pairs(const PointSet& points, const OracleLimits& limits) {
  require_cycle_size(points, limits);
  if (points.size() % 2 != 0) throw Error(ErrorCode::InvalidSize, "min_avoiding_pairs needs an even point count");
  SegmentCrossingTable table(points.points);
  const std::size_t n = points.size();
  CycleSearchResult result;
  bool found = false;
  result.cycles = for_each_hamiltonian_cycle(table, [&](const std::vector<std::size_t>& order, std::uint64_t) {
    std::uint64_t avoiding = 0;
    for (std::size_t e = 0; e < n; ++e) {
      for (std::size_t f = e + 1; f < n; ++f) {
        std::size_t a = order[e], b = order[(e + 1) % n];
        std::size_t c = order[f], d = order[(f + 1) % n];
        if (a == c || a == d || b == c || b == d) continue;
        if (!table.crosses(a, b, c, d)) ++avoiding;
      }
    }
    if (!found || avoiding < result.value) {
      result.value = avoiding;
      result.witness.order = order;
      found = true;
    }
  });
  return result;
}

MatchingResult longest_perfect_matching_bruteforce(const PointSet& points, MatchingMode mode,
                                                   const OracleLimits& limits) {
  const std::size_t n = points.size();
  if (n == 0 || n % 2 != 0) throw Error(ErrorCode::InvalidSize, "perfect matching needs an even, nonzero point count");

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> candidates;
  if (mode == MatchingMode::BipartiteAB) {
    if (points.labels.size() != n) throw Error(ErrorCode::SchemaViolation, "bipartite mode needs a/b labels");
    std::vector<std::size_t> a, b;
    for (std::size_t i = 0; i < n; ++i) {
      if (label_group(points.labels[i], 'a'))
        a.push_back(i);
      else if (label_group(points.labels[i], 'b'))
        b.push_back(i);
      else
        throw Error(ErrorCode::SchemaViolation, "label '" + points.labels[i] + "' is neither a* nor b*");
    }
    if (a.size() != b.size()) throw Error(ErrorCode::InvalidSize, "groups a and b differ in size");
    if (a.size() > limits.max_bipartite_matching_side)
      throw Error(ErrorCode::ResourceLimit,
                  "bipartite matching capped at m=" + std::to_string(limits.max_bipartite_matching_side));
    std::vector<std::size_t> perm(b.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < a.size(); ++i) pairs.emplace_back(a[i], b[perm[i]]);
      candidates.push_back(std::move(pairs));
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    if (n > limits.max_general_matching_points)
      throw Error(ErrorCode::ResourceLimit,
                  "general matching capped at n=" + std::to_string(limits.max_general_matching_points));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<bool> used(n, false);
    std::function<void()> rec = [&]() {
      std::size_t i = 0;
      while (i < n && used[i]) ++i;
      if (i == n) {
        candidates.push_back(pairs);
        return;
      }
      used[i] = true;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (used[j]) continue;
        used[j] = true;
        pairs.emplace_back(i, j);
        rec();
        pairs.pop_back();
        used[j] = false;
      }
      used[i] = false;
    };
    rec();
  }

  for (mpfr_prec_t prec = limits.precision.start; prec <= limits.precision.ceiling; prec *= 2) {
    std::vector<std::vector<std::optional<Interval>>> dist(n, std::vector<std::optional<Interval>>(n));
    auto d = [&](std::size_t i, std::size_t j) -> const Interval& {
      if (!dist[i][j]) dist[i][j] = distance_interval(points[i], points[j], prec);
      return *dist[i][j];
    };
    std::vector<Interval> totals;
    totals.reserve(candidates.size());
    std::size_t best = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      Interval t = Interval::exact(0, prec);
      for (auto [i, j] : candidates[c]) t += d(i, j);
      totals.push_back(std::move(t));
      if (mpfr_greater_p(totals[c].lo().get(), totals[best].lo().get())) best = c;
    }
    bool certified = true;
    for (std::size_t c = 0; c < candidates.size() && certified; ++c)
      if (c != best && !certainly_less(totals[c], totals[best])) certified = false;
    if (!certified) continue;

    MatchingResult result;
    result.pairs = candidates[best];
    result.length = totals[best].lo().to_double();
    result.candidates = candidates.size();
    result.precision_used = prec;
    for (std::size_t x = 0; x < result.pairs.size(); ++x) {
      for (std::size_t y = x + 1; y < result.pairs.size(); ++y) {
        Segment s1{points[result.pairs[x].first], points[result.pairs[x].second]};
        Segment s2{points[result.pairs[y].first], points[result.pairs[y].second]};
        if (segments_cross(s1, s2)) ++result.crossings;
      }
    }
    result.crossing_free = result.crossings == 0;
    return result;
  }
  throw Error(ErrorCode::TieUnresolved, "longest matching not separated at " +
                                            std::to_string(limits.precision.ceiling) + " bits");
}

std::int64_t max_antichain_3d(std::int64_t n, const OracleLimits& limits) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "max_antichain_3d needs n >= 1");
  if (static_cast<std::size_t>(n) > limits.max_antichain_n)
    throw Error(ErrorCode::ResourceLimit, "antichain search capped at n=" + std::to_string(limits.max_antichain_n));
  const std::size_t N = static_cast<std::size_t>(n * n * n);
  auto coord = [&](std::size_t v) {
    std::size_t nn = static_cast<std::size_t>(n);
    return std::array<std::size_t, 3>{v / (nn * nn), (v / nn) % nn, v % nn};
  };
  std::vector<std::vector<std::size_t>> succ(N);
  for (std::size_t u = 0; u < N; ++u) {
    auto cu = coord(u);
    for (std::size_t v = 0; v < N; ++v) {
      if (u == v) continue;
      auto cv = coord(v);
      if (cu[0] <= cv[0] && cu[1] <= cv[1] && cu[2] <= cv[2]) succ[u].push_back(v);
    }
  }

  // Hopcroft-Karp on the split comparability graph; chains = N - matching.
  const std::size_t none = N;
  std::vector<std::size_t> match_left(N, none), match_right(N, none), dist(N + 1);
  auto bfs = [&]() {
    std::queue<std::size_t> q;
    bool reachable = false;
    for (std::size_t u = 0; u < N; ++u) {
      if (match_left[u] == none) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = SIZE_MAX;
      }
    }
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t v : succ[u]) {
        std::size_t w = match_right[v];
        if (w == none) {
          reachable = true;
        } else if (dist[w] == SIZE_MAX) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return reachable;
  };
  std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
    for (std::size_t v : succ[u]) {
      std::size_t w = match_right[v];
      if (w == none || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    dist[u] = SIZE_MAX;
    return false;
  };
  std::size_t matching = 0;
  while (bfs())
    for (std::size_t u = 0; u < N; ++u)
      if (match_left[u] == none && dfs(u)) ++matching;
  return static_cast<std::int64_t>(N - matching);
}

TwoPathResult best_2path_removal(const Family& triangles, const OracleLimits& limits) {
  const std::size_t k = triangles.members.size();
  if (k > limits.max_two_path_triangles)
    throw Error(ErrorCode::ResourceLimit,
                "2-path removal capped at " + std::to_string(limits.max_two_path_triangles) + " triangles");
  for (const GeomGraph& t : triangles.members)
    if (t.kind() != GraphKind::Triangle) throw Error(ErrorCode::KindMismatch, "best_2path_removal needs triangles");

  std::vector<std::array<GeomGraph, 3>> paths;
  for (const GeomGraph& t : triangles.members)
    paths.push_back({remove_edge(t, 0), remove_edge(t, 1), remove_edge(t, 2)});
  // crosses[(t*3+e)*3k + u*3+f]
  std::vector<std::uint8_t> crosses(9 * k * k, 0);
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t u = t + 1; u < k; ++u)
      for (std::size_t e = 0; e < 3; ++e)
        for (std::size_t f = 0; f < 3; ++f) {
          bool hit = graphs_cross(paths[t][e], paths[u][f]);
          crosses[(t * 3 + e) * 3 * k + u * 3 + f] = hit;
          crosses[(u * 3 + f) * 3 * k + t * 3 + e] = hit;
        }

  TwoPathResult result;
  if (k == 0) return result;
  std::vector<std::size_t> assign(k, 0);
  std::vector<std::uint32_t> adj(k);
  std::size_t best_here = 0;
  std::uint32_t best_mask = 0;
  std::function<void(std::uint32_t, std::uint32_t, std::size_t)> rec = [&](std::uint32_t chosen, std::uint32_t cand,
                                                                          std::size_t size) {
    if (cand == 0) {
      if (size > best_here) {
        best_here = size;
        best_mask = chosen;
      }
      return;
    }
    if (size + static_cast<std::size_t>(std::popcount(cand)) <= best_here) return;
    std::size_t v = static_cast<std::size_t>(std::countr_zero(cand));
    std::uint32_t bit = std::uint32_t{1} << v;
    rec(chosen | bit, cand & adj[v], size + 1);
    rec(chosen, cand & ~bit, size);
  };
  while (true) {
    for (std::size_t t = 0; t < k; ++t) {
      adj[t] = 0;
      for (std::size_t u = 0; u < k; ++u)
        if (u != t && crosses[(t * 3 + assign[t]) * 3 * k + u * 3 + assign[u]]) adj[t] |= std::uint32_t{1} << u;
    }
    best_here = 0;
    best_mask = 0;
    rec(0, (k == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1), 0);
    if (best_here > result.value || result.removal.empty()) {
      result.value = best_here;
      result.removal = assign;
      result.witness.clear();
      for (std::size_t t = 0; t < k; ++t)
        if (best_mask & (std::uint32_t{1} << t)) result.witness.push_back(t);
    }
    if (result.value == k) break;
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++assign[pos] < 3) break;
      assign[pos] = 0;
      if (pos == 0) {
        pos = k + 1;
        break;
      }
    }
    if (pos == k + 1) break;
  }
  return result;
}

}  // namespace crossfam

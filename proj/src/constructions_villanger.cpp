#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "crossfam/constructions.hpp"

namespace crossfam {

namespace {

int lower_sign(const Interval& v) { return mpfr_sgn(v.lo().get()); }
int upper_sign(const Interval& v) { return mpfr_sgn(v.hi().get()); }

// Certified sign of a real quantity given by interval enclosures at growing
// precision. Returns the enclosure that decided the sign.
Interval certify(const std::function<Interval(mpfr_prec_t)>& f, const PrecisionPolicy& policy) {
  for (mpfr_prec_t prec = policy.start; prec <= policy.ceiling; prec *= 2) {
    Interval v = f(prec);
    if (lower_sign(v) > 0 || upper_sign(v) < 0) return v;
  }
  throw Error(ErrorCode::PrecisionExhausted,
              "sign undecided at " + std::to_string(policy.ceiling) + " bits of precision");
}

// d(a_p,b_r) + d(a_q,b_s) - d(a_p,b_s) - d(a_q,b_r): positive iff swapping
// the partners of a_p (matched to b_r) and a_q (matched to b_s) shortens.
Interval exchange_slack(const std::vector<Point>& a, const std::vector<Point>& b, std::size_t p, std::size_t q,
                        std::size_t r, std::size_t s, mpfr_prec_t prec) {
  Interval v = distance_interval(a[p], b[r], prec);
  v += distance_interval(a[q], b[s], prec);
  v -= distance_interval(a[p], b[s], prec);
  v -= distance_interval(a[q], b[r], prec);
  return v;
}

// Quadruples (p<q, r<s) whose exchange must shorten: q <= s (hyperbola
// conditions) or p < r (second transposition type).
bool required(std::size_t p, std::size_t q, std::size_t r, std::size_t s) { return q <= s || p < r; }

struct Placement {
  std::vector<Point> a;
  std::vector<Point> b;
  Rational min_slack;
  bool has_slack = false;
};

enum class StepResult { Ok, Retry };

StepResult check_step(Placement& pl, std::size_t t, const PrecisionPolicy& policy) {
  const std::size_t count = t + 1;
  std::vector<Point> all;
  for (std::size_t i = 0; i < count; ++i) all.push_back(pl.a[i]);
  for (std::size_t i = 0; i < count; ++i) all.push_back(pl.b[i]);
  if (!check_general_position(all, GeneralPosition::Strict)) return StepResult::Retry;

  for (std::size_t r = 0; r < t; ++r)
    if (segments_cross({pl.a[r], pl.b[r]}, {pl.a[t], pl.b[t]})) return StepResult::Retry;

  Rational intra = 0;
  Rational cross_min = -1;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      intra = std::max(intra, squared_distance(pl.a[i], pl.a[j]));
      intra = std::max(intra, squared_distance(pl.b[i], pl.b[j]));
    }
    for (std::size_t j = 0; j < count; ++j) {
      Rational d = squared_distance(pl.a[i], pl.b[j]);
      if (cross_min < 0 || d < cross_min) cross_min = d;
    }
  }
  if (!(intra < cross_min)) return StepResult::Retry;

  Rational step_min = -1;
  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t q = p + 1; q < count; ++q) {
      for (std::size_t r = 0; r < count; ++r) {
        for (std::size_t s = r + 1; s < count; ++s) {
          if (std::max(q, s) != t || !required(p, q, r, s)) continue;
          Interval v = certify([&](mpfr_prec_t prec) { return exchange_slack(pl.a, pl.b, p, q, r, s, prec); },
                               policy);
          if (lower_sign(v) <= 0) return StepResult::Retry;
          Rational lo = v.lo().to_rational();
          if (step_min < 0 || lo < step_min) step_min = lo;
        }
      }
    }
  }
  if (step_min > 0 && (!pl.has_slack || step_min < pl.min_slack)) {
    pl.min_slack = step_min;
    pl.has_slack = true;
  }
  return StepResult::Ok;
}

}  // namespace

Instance villanger_pointset(int m, const VillangerOptions& options) {
  if (m < 2) throw Error(ErrorCode::InvalidSize, "villanger_pointset needs m >= 2");
  if (static_cast<std::size_t>(m) > options.limits.villanger_max_m)
    throw Error(ErrorCode::ResourceLimit, "m exceeds the villanger cap " +
                                              std::to_string(options.limits.villanger_max_m));
  if (sgn(options.margin) <= 0) throw Error(ErrorCode::DegenerateInput, "margin must be positive");
  const std::size_t M = static_cast<std::size_t>(m);
  const PrecisionPolicy& policy = options.limits.precision;

  const double theta_max = 40.0 * std::numbers::pi / 180.0;
  const double ratio = 3.0;
  std::vector<double> theta(M, 0.0);
  for (std::size_t k = 1; k < M; ++k) theta[k] = theta_max / std::pow(ratio, static_cast<double>(M - 1 - k));
  std::vector<Rational> slope(M);
  for (std::size_t k = 0; k < M; ++k) slope[k] = dyadic(std::tan(theta[k]), 48);
  std::vector<Rational> step_slope(M);
  for (std::size_t k = 0; k + 1 < M; ++k) step_slope[k] = dyadic(std::tan((theta[k] + theta[k + 1] / 2) / 2), 48);

  auto right_end = [&](const Point& a, std::size_t k) {
    Rational x = 1 + Rational(static_cast<long>(k * k)) / (64L * m * m);
    Rational lambda = x - a.x;
    return Point(a.x + lambda, a.y + lambda * slope[k]);
  };

  Placement pl;
  pl.a.push_back(Point(0, 0));
  pl.b.push_back(right_end(pl.a[0], 0));
  Rational eps(1, 1000);
  for (std::size_t t = 1; t < M; ++t) {
    eps /= 32;
    bool placed = false;
    for (int attempt = 0; attempt < 48 && !placed; ++attempt) {
      Point a = pl.a[t - 1] + eps * Point(Rational(1), step_slope[t - 1]);
      pl.a.push_back(a);
      pl.b.push_back(right_end(a, t));
      if (check_step(pl, t, policy) == StepResult::Ok) {
        placed = true;
      } else {
        pl.a.pop_back();
        pl.b.pop_back();
        eps /= 2;
      }
    }
    if (!placed)
      throw Error(ErrorCode::PrecisionExhausted,
                  "could not certify the placement of segment " + std::to_string(t + 1));
  }

  mpz_class scale = 1;
  if (pl.has_slack && pl.min_slack < options.margin) {
    Rational ratio_q = options.margin / pl.min_slack;
    mpz_class num = ratio_q.get_num();
    mpz_class den = ratio_q.get_den();
    scale = (num + den - 1) / den;
  }
  Rational scale_q(scale);

  Instance inst;
  inst.name = "villanger";
  for (std::size_t i = 0; i < M; ++i) {
    inst.points.points.push_back(scale_q * pl.a[i]);
    inst.points.labels.push_back("a" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < M; ++i) {
    inst.points.points.push_back(scale_q * pl.b[i]);
    inst.points.labels.push_back("b" + std::to_string(i + 1));
  }
  Family matching{FamilyKind::Crossing, {}};
  for (std::size_t i = 0; i < M; ++i)
    matching.members.push_back(GeomGraph::matching_edge(inst.points[i], inst.points[M + i]));
  inst.families.push_back(std::move(matching));

  char slack_text[64];
  std::snprintf(slack_text, sizeof slack_text, "%.6e", pl.has_slack ? to_double(pl.min_slack * scale_q) : 0.0);
  inst.parameters = {{"m", std::to_string(m)},
                     {"margin", format_rational(options.margin)},
                     {"scale", scale.get_str()},
                     {"certified_min_slack", slack_text}};
  inst.claims.push_back({"identity matching is the unique longest perfect matching", "longest_matching_is_identity",
                         0, std::nullopt, std::nullopt, Relation::Equal, 1});
  inst.claims.push_back({"longest perfect matching has no crossings", "longest_matching_crossings", 0, std::nullopt,
                         std::nullopt, Relation::Equal, 0});
  return inst;
}

Interval matching_length(const Instance& villanger, const std::vector<std::size_t>& sigma, mpfr_prec_t precision) {
  const std::size_t m = villanger.points.size() / 2;
  Interval total = Interval::exact(0, precision);
  for (std::size_t i = 0; i < m; ++i)
    total += distance_interval(villanger.points[i], villanger.points[m + sigma[i]], precision);
  return total;
}

const char* to_string(TranspositionType type) {
  switch (type) {
    case TranspositionType::TypeI: return "type_i";
    case TranspositionType::TypeII: return "type_ii";
    case TranspositionType::NotReducing: return "not_reducing";
  }
  return "?";
}

TranspositionResult transposition_reduces(const Instance& villanger, const std::vector<std::size_t>& sigma,
                                          std::size_t i, std::size_t j, const PrecisionPolicy& precision) {
  const std::size_t m = villanger.points.size() / 2;
  if (sigma.size() != m) throw Error(ErrorCode::IndexOutOfRange, "permutation size does not match the instance");
  std::vector<bool> seen(m, false);
  for (std::size_t v : sigma) {
    if (v >= m || seen[v]) throw Error(ErrorCode::IndexOutOfRange, "sigma is not a permutation");
    seen[v] = true;
  }
  if (!(i < j) || j >= m) throw Error(ErrorCode::IndexOutOfRange, "need positions i < j < m");

  TranspositionResult result;
  std::vector<std::size_t> swapped = sigma;
  std::swap(swapped[i], swapped[j]);
  result.reversed = sigma[i] > sigma[j];
  const std::vector<std::size_t>& from = result.reversed ? swapped : sigma;
  const std::vector<std::size_t>& to = result.reversed ? sigma : swapped;
  const std::size_t k = from[i];
  const std::size_t l = from[j];
  if (k < j && j <= l)
    result.type = TranspositionType::TypeI;
  else if (i < k)
    result.type = TranspositionType::TypeII;

  result.length_before = matching_length(villanger, sigma, precision.start).lo().to_double();
  result.length_after = matching_length(villanger, swapped, precision.start).lo().to_double();
  if (result.type != TranspositionType::NotReducing) {
    Interval gain = certify(
        [&](mpfr_prec_t prec) { return matching_length(villanger, from, prec) - matching_length(villanger, to, prec); },
        precision);
    if (lower_sign(gain) <= 0)
      throw Error(ErrorCode::PrecisionExhausted, "reducing transposition did not shorten the matching");
  }
  return result;
}

std::vector<std::pair<std::size_t, std::size_t>> placement_sequence(const std::vector<std::size_t>& sigma) {
  const std::size_t m = sigma.size();
  std::vector<std::size_t> target(m);
  for (std::size_t pos = 0; pos < m; ++pos) {
    if (sigma[pos] >= m) throw Error(ErrorCode::IndexOutOfRange, "sigma is not a permutation");
    target[sigma[pos]] = pos;
  }
  std::vector<std::size_t> current(m);
  for (std::size_t pos = 0; pos < m; ++pos) current[pos] = pos;
  std::vector<bool> fixed(m, false);
  std::vector<std::pair<std::size_t, std::size_t>> moves;
  for (std::size_t v = 0; v < m; ++v) {
    std::size_t cur = static_cast<std::size_t>(std::find(current.begin(), current.end(), v) - current.begin());
    while (cur != target[v]) {
      std::size_t next = cur + 1;
      while (next < m && fixed[next]) ++next;
      if (next >= m) throw Error(ErrorCode::IndexOutOfRange, "placement overran the permutation");
      std::swap(current[cur], current[next]);
      moves.emplace_back(cur, next);
      cur = next;
    }
    fixed[cur] = true;
  }
  return moves;
}

}  // namespace crossfam

#include <algorithm>
#include <cmath>
#include <random>

#include "crossfam/constructions.hpp"

namespace crossfam {

const char* to_string(Relation relation) {
  switch (relation) {
    case Relation::Equal: return "eq";
    case Relation::AtMost: return "le";
    case Relation::AtLeast: return "ge";
  }
  return "eq";
}

Relation relation_from_string(const std::string& name) {
  if (name == "eq") return Relation::Equal;
  if (name == "le") return Relation::AtMost;
  if (name == "ge") return Relation::AtLeast;
  throw Error(ErrorCode::SchemaViolation, "unknown relation '" + name + "'");
}

Point circle_point(const Rational& t) {
  Rational t2 = t * t;
  Rational den = 1 + t2;
  return Point((1 - t2) / den, 2 * t / den);
}

Rational dyadic(double x, int bits) {
  mpz_class den = 1;
  den <<= bits;
  double scaled = std::ldexp(x, bits);
  mpz_class num(static_cast<long>(std::llround(scaled)));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

PointSet random_points(std::size_t n, std::uint64_t seed, GeneralPosition mode) {
  std::mt19937_64 rng(seed);
  const std::uint64_t range = std::max<std::uint64_t>(64, 8 * n);
  PointSet ps;
  std::size_t rejected = 0;
  while (ps.points.size() < n) {
    long x = static_cast<long>(rng() % range);
    long y = static_cast<long>(rng() % range);
    ps.points.emplace_back(x, y);
    if (!check_general_position(ps.points, mode)) {
      ps.points.pop_back();
      if (++rejected > 100000) throw Error(ErrorCode::ResourceLimit, "could not sample points in general position");
    }
  }
  return ps;
}

std::int64_t antichain_bound(std::int64_t m) { return (3 * m * m + 3) / 4; }

}  // namespace crossfam

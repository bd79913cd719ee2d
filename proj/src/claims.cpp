#include "crossfam/claims.hpp"

namespace crossfam {

namespace {

const Family& target_family(const Instance& inst, const Claim& claim) {
  if (!claim.family || *claim.family >= inst.families.size())
    throw Error(ErrorCode::SchemaViolation, "claim '" + claim.verifier + "' needs a valid family index");
  return inst.families[*claim.family];
}

const HamiltonianCycle& target_cycle(const Instance& inst, const Claim& claim) {
  if (!claim.cycle || *claim.cycle >= inst.cycles.size())
    throw Error(ErrorCode::SchemaViolation, "claim '" + claim.verifier + "' needs a valid cycle index");
  const HamiltonianCycle& cycle = inst.cycles[*claim.cycle];
  cycle.validate(inst.points.size());
  return cycle;
}

// Identity in the a_i <-> b_i sense: labels share the numeric suffix.
bool is_identity_matching(const PointSet& points, const MatchingResult& result) {
  for (auto [i, j] : result.pairs) {
    const std::string& a = points.labels[i];
    const std::string& b = points.labels[j];
    if (a.size() < 2 || b.size() < 2 || a.substr(1) != b.substr(1)) return false;
  }
  return true;
}

}  // namespace

const std::vector<std::string>& verifier_names() {
  static const std::vector<std::string> names = {
      "cycle_crossings",          "edge_crossings",          "crossing_family_size",
      "intersecting_family_size", "max_crossing_subfamily",  "max_intersecting_subfamily",
      "max_cycle_crossings",      "min_avoiding_pairs",      "longest_matching_is_identity",
      "longest_matching_crossings", "best_2path_removal",
  };
  return names;
}

bool relation_holds(std::int64_t computed, Relation relation, std::int64_t value) {
  switch (relation) {
    case Relation::Equal: return computed == value;
    case Relation::AtMost: return computed <= value;
    case Relation::AtLeast: return computed >= value;
  }
  return false;
}

ClaimCheck check_claim(const Instance& inst, const Claim& claim, const OracleLimits& limits) {
  ClaimCheck check;
  check.claim = claim;
  const std::string& v = claim.verifier;
  if (v == "cycle_crossings") {
    check.computed = static_cast<std::int64_t>(count_crossings(inst.points, target_cycle(inst, claim)));
  } else if (v == "edge_crossings") {
    const HamiltonianCycle& cycle = target_cycle(inst, claim);
    if (!claim.edge || *claim.edge >= cycle.size())
      throw Error(ErrorCode::SchemaViolation, "edge_crossings needs a valid edge index");
    check.computed = static_cast<std::int64_t>(edge_crossing_count(inst.points, cycle, *claim.edge));
  } else if (v == "crossing_family_size" || v == "intersecting_family_size") {
    const Family& family = target_family(inst, claim);
    bool ok = v == "crossing_family_size" ? is_crossing_family(family) : is_intersecting_family(family);
    check.computed = ok ? static_cast<std::int64_t>(family.members.size()) : 0;
    if (!ok) check.detail = "family fails the pairwise check";
  } else if (v == "max_crossing_subfamily" || v == "max_intersecting_subfamily") {
    const Family& family = target_family(inst, claim);
    Disjointness mode = v == "max_crossing_subfamily" ? Disjointness::Vertex : Disjointness::Edge;
    CliqueResult r = max_crossing_subfamily(family.members, mode, limits);
    check.computed = static_cast<std::int64_t>(r.size);
  } else if (v == "max_cycle_crossings") {
    CycleSearchResult r = enumerate_hamiltonian_max_crossings(inst.points, limits);
    check.computed = static_cast<std::int64_t>(r.value);
  } else if (v == "min_avoiding_pairs") {
    CycleSearchResult r = min_avoiding_pairs(inst.points, limits);
    check.computed = static_cast<std::int64_t>(r.value);
  } else if (v == "longest_matching_is_identity" || v == "longest_matching_crossings") {
    MatchingResult r = longest_perfect_matching_bruteforce(inst.points, MatchingMode::BipartiteAB, limits);
    check.computed = v == "longest_matching_is_identity" ? (is_identity_matching(inst.points, r) ? 1 : 0)
                                                          : static_cast<std::int64_t>(r.crossings);
  } else if (v == "best_2path_removal") {
    TwoPathResult r = best_2path_removal(target_family(inst, claim), limits);
    check.computed = static_cast<std::int64_t>(r.value);
  } else {
    throw Error(ErrorCode::SchemaViolation, "unknown verifier '" + v + "'");
  }
  check.passed = relation_holds(check.computed, claim.relation, claim.value);
  return check;
}

std::vector<ClaimCheck> verify_instance(const Instance& inst, const OracleLimits& limits) {
  std::vector<ClaimCheck> out;
  for (const Claim& claim : inst.claims) out.push_back(check_claim(inst, claim, limits));
  return out;
}

}  // namespace crossfam

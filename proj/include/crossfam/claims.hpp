#pragma once

// Re-checks instance claims with their named verifiers.

#include <string>
#include <vector>

#include "crossfam/constructions.hpp"
#include "crossfam/oracles.hpp"

namespace crossfam {

struct ClaimCheck {
  Claim claim;
  std::int64_t computed = 0;
  bool passed = false;
  std::string detail;
};

/// Names accepted in Claim::verifier.
const std::vector<std::string>& verifier_names();

/// Computes the verifier's value and compares it with the claim. Throws
/// SchemaViolation for unknown verifiers or missing targets and
/// ResourceLimit when an oracle cap is hit.
ClaimCheck check_claim(const Instance& instance, const Claim& claim, const OracleLimits& limits = {});
std::vector<ClaimCheck> verify_instance(const Instance& instance, const OracleLimits& limits = {});

bool relation_holds(std::int64_t computed, Relation relation, std::int64_t value);

}  // namespace crossfam

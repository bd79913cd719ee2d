#pragma once

// InstanceDocument: the JSON form of an Instance. See docs/schema.md.

#include <string>

#include "crossfam/constructions.hpp"

namespace crossfam {

inline constexpr const char* kSchemaVersion = "1.0";

/// Pretty-printed, deterministic JSON with a trailing newline.
std::string to_json(const Instance& instance);

/// Parses and validates a document. Throws SchemaViolation on any structural
/// problem (missing fields, bad rationals, indices out of range, unknown
/// kinds or verifiers).
Instance from_json(const std::string& text);

/// Reads a point set from either a full document or a bare array of
/// {x, y[, label]} objects.
PointSet points_from_json(const std::string& text);

}  // namespace crossfam

#pragma once

// Deterministic SVG 1.1 figures of instances.

#include <string>

#include "crossfam/constructions.hpp"

namespace crossfam {

struct RenderOptions {
  int width_px = 800;
  bool mark_crossings = true;
  bool show_labels = true;
};

/// Points as circles, straight edges as lines, elbows as two-segment
/// polylines, cycles as closed polylines, guide lines dashed. The viewBox is
/// the exact bounding box of the points with 5% padding.
std::string render_svg(const Instance& instance, const RenderOptions& options = {});

/// Exact intersection point of two crossing, non-parallel segments.
Point crossing_point(const Segment& s1, const Segment& s2);

}  // namespace crossfam

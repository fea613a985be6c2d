#pragma once

#include <string>
#include <vector>

#include "depthcut/geometry.hpp"

namespace depthcut {

enum class ViolationCode { VerticalObject, ProjectionParallel, ThreeConcurrent, SpatialIntersection, DuplicateId };

const char* to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::vector<ObjectId> ids;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  bool has(ViolationCode code) const;
};

/// Checks the general-position assumptions. Line scenes: no vertical line,
/// no two projections parallel, no three concurrent, no two lines meeting.
/// Segment scenes apply the pairwise and concurrency checks only to pairs
/// whose projections actually meet (collinear overlapping projections are
/// reported as ProjectionParallel).
ValidationReport validate_scene(const Scene& scene);

/// All proper projected crossings among the scene's objects (within their
/// parameter ranges), ordered by (a, b).
std::vector<CrossingPoint> scene_crossings(const Scene& scene);

}  // namespace depthcut

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "depthcut/geometry.hpp"

namespace depthcut {

struct SceneStats {
  std::size_t n = 0;
  std::size_t X = 0;  // proper projected crossings
  std::vector<CrossingPoint> crossings;
};

SceneStats scene_stats(const Scene& scene);

enum class GeneratorKind { RandomLines, RandomSegments, GridLowerBound, GridPattern };

GeneratorKind parse_generator_kind(const std::string& name);
const char* to_string(GeneratorKind kind);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::RandomLines;
  std::size_t size = 0;  // n for random scenes, m or k for the grids
  std::uint64_t seed = 0;
  long bound = 1000;                    // coordinate bound B
  Scalar epsilon = Scalar(1, 64);       // grid perturbation, fraction of joint spacing
  long segment_length = 0;              // random segments: max extent per axis, 0 = unrestricted
};

/// n lines with rational origins in [-B, B]^3 and integer directions,
/// resampled until the scene is in general position.
Scene gen_random(std::size_t n, std::uint64_t seed, long bound = 1000);

/// n segments with endpoints in [-B, B]^3. A positive `max_extent` keeps
/// each segment's second endpoint within that distance per axis of the
/// first, which thins out the projected crossings.
Scene gen_random_segments(std::size_t n, std::uint64_t seed, long bound = 1000, long max_extent = 0);

/// 3m^2 lines from the axis-parallel lines of an m x m x m grid of joints,
/// mapped through a sheared frame and perturbed so that every joint turns
/// into a small triangular depth cycle. Both properties (one cycle per
/// joint, pairwise disjoint projected triangles) are verified exactly;
/// throws Error(PerturbationFailed) if no draw passes.
Scene gen_grid_lower_bound(std::size_t m, std::uint64_t seed, const Scalar& epsilon = Scalar(1, 64));

/// The joint triangles of a grid scene from gen_grid_lower_bound, one per
/// joint, as triples of object indices (family 1, family 2, family 3).
std::vector<std::array<std::size_t, 3>> grid_joint_triples(std::size_t m);

/// Two families of k nearly parallel segments whose projections form a
/// k x k grid; heights random.
Scene gen_grid_pattern(std::size_t k, std::uint64_t seed);

Scene generate(const GeneratorSpec& spec);

/// Exact test: closed convex polygons (vertices in either orientation) are
/// disjoint.
bool convex_polygons_disjoint(const std::vector<Point2>& p, const std::vector<Point2>& q);

}  // namespace depthcut

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "depthcut/geometry.hpp"

namespace depthcut {

/// Non-vertical plane a*x + b*y + c*z + d = 0, stored with c == 1.
struct Plane {
  Scalar a, b, c, d;

  Plane() = default;
  /// Throws Error(InvalidArgument) when c == 0 (vertical plane).
  Plane(Scalar a, Scalar b, Scalar c, Scalar d);

  /// Height of the plane above (x, y).
  Scalar z_at(const Scalar& x, const Scalar& y) const;
  /// Sign of a*x + b*y + c*z + d: positive above the plane.
  int side(const Point3& p) const;

  friend bool operator==(const Plane&, const Plane&) = default;
};

/// Surrogate zero set: the product of the planes' linear forms.
using PlaneSet = std::vector<Plane>;

struct PartitionParams {
  int degree = 4;
  std::size_t leaf_threshold = 8;
  Scalar load_factor = Scalar(1, 2);
  int max_retries = 8;
  std::uint64_t seed = 0;
};

/// Bit i set means the i-th plane's linear form is positive.
using SignVector = std::uint32_t;

/// Realized sign vectors and the clipped pieces that run through each cell.
using CellMap = std::map<SignVector, std::vector<Piece>>;

std::string sign_string(SignVector sigma, std::size_t degree);

/// `degree` distinct non-vertical planes, each through the median anchor
/// height of the pieces along a random rational normal (a, b, 1).
PlaneSet choose_planes(const Scene& scene, const std::vector<Piece>& pieces, int degree, std::mt19937_64& rng);

/// Zero-set cuts: where the piece crosses a plane transversally. Planes
/// that contain the object are skipped.
CutSet zero_set_cuts(const Scene& scene, const Piece& piece, const PlaneSet& planes);

/// Criticality cuts: inside the vertical plane through the object, every
/// plane not containing it restricts to a non-vertical line z = m*t + q;
/// cuts at the parameters where two distinct restricted lines meet.
CutSet criticality_cuts(const Scene& scene, const Piece& piece, const PlaneSet& planes);

/// Number of planes strictly below q. Throws Error(OnZeroSet) if q lies on
/// one of them.
std::size_t level(const Point3& q, const PlaneSet& planes);

/// Splits each piece at its plane crossings and files every sub-interval
/// under its sign vector. Pieces lying inside a plane appear nowhere.
CellMap assign_cells(const Scene& scene, const std::vector<Piece>& pieces, const PlaneSet& planes);

struct PartitionStats {
  std::size_t max_depth = 0;
  std::size_t subproblems = 0;
  std::size_t leaves = 0;
  std::size_t fallbacks = 0;
  std::size_t nonleaf_cuts = 0;
  std::size_t leaf_cuts = 0;
  /// Largest number of zero-set plus criticality cuts on one object in one subproblem.
  std::size_t max_nonleaf_cuts_per_object = 0;
};

struct PartitionResult {
  CutSet cuts;
  PartitionStats stats;
  PlaneSet top_planes;
};

/// Recursive cutting: cut every piece at the zero set and at the
/// criticalities of the restricted zero set, then recurse on the pieces
/// clipped to each cell. Subproblems with at most leaf_threshold pieces, or
/// whose best of max_retries plane draws leaves a cell with more than
/// load_factor * n pieces, are cut naively.
PartitionResult partition_cut_detailed(const Scene& scene, const PartitionParams& params);

/// Same procedure on given pieces (e.g. the clipped segments of one
/// trapezoid); `rng` drives every plane draw.
PartitionResult partition_cut_pieces(const Scene& scene, const std::vector<Piece>& pieces,
                                     const PartitionParams& params, std::mt19937_64& rng);

/// Uses `top` as the top-level plane set (no load check) and random planes
/// below it.
PartitionResult partition_cut_with_planes(const Scene& scene, const PlaneSet& top, const PartitionParams& params);

CutSet partition_cut(const Scene& scene, const PartitionParams& params);

nlohmann::json planes_to_json(const PlaneSet& planes);
PlaneSet planes_from_json(const nlohmann::json& j);

nlohmann::json params_to_json(const PartitionParams& params);
/// Missing keys keep their defaults.
PartitionParams params_from_json(const nlohmann::json& j, PartitionParams base = {});

}  // namespace depthcut

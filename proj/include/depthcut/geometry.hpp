#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <json.hpp>

#include "depthcut/scalar.hpp"

namespace depthcut {

using ObjectId = std::int64_t;

struct Point2 {
  Scalar x, y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Point3 {
  Scalar x, y, z;
  friend bool operator==(const Point3&, const Point3&) = default;
};

Point3 operator+(const Point3& a, const Point3& b);
Point3 operator-(const Point3& a, const Point3& b);
Point3 operator*(const Scalar& s, const Point3& p);

enum class SceneKind { Lines, Segments };

/// A line origin + t * direction (t over all of R) or a segment
/// a + t * (b - a) with t in [0, 1]. Which one is decided by the owning
/// Scene's kind.
struct Object3 {
  ObjectId id = 0;
  Point3 origin;
  Point3 direction;

  Point3 at(const Scalar& t) const;
  Point2 xy_at(const Scalar& t) const;
  Scalar z_at(const Scalar& t) const;
  bool is_vertical() const { return direction.x == 0 && direction.y == 0; }
};

/// Builds a line and normalizes the direction so that dx > 0, or dx == 0
/// and dy > 0. Vertical directions are kept as given; validation flags them.
Object3 make_line(ObjectId id, Point3 origin, Point3 direction);
Object3 make_segment(ObjectId id, const Point3& a, const Point3& b);

struct Scene {
  SceneKind kind = SceneKind::Lines;
  std::vector<Object3> objects;
  nlohmann::json meta;  // generator provenance; null when absent

  std::size_t size() const { return objects.size(); }
  bool is_segments() const { return kind == SceneKind::Segments; }
  /// Index of the object with this id; throws InvalidArgument if absent.
  std::size_t index_of(ObjectId id) const;
};

/// A maximal uncut parameter interval of one scene object. Bounds that come
/// from cuts are open; the endpoints of an original segment are closed.
struct Piece {
  std::size_t object = 0;  // index into Scene::objects
  Bound lo, hi;
  bool lo_closed = false;
  bool hi_closed = false;

  bool contains(const Scalar& t) const;
  /// True when t lies strictly between lo and hi.
  bool interior(const Scalar& t) const;
};

Piece whole_piece(const Scene& scene, std::size_t object);

struct CrossingPoint {
  std::size_t a = 0, b = 0;  // object indices
  Scalar ta, tb;
  Point2 point;
};

/// Crossing of the supporting lines' projections, ignoring parameter ranges.
std::optional<CrossingPoint> xy_cross_lines(const Scene& scene, std::size_t a, std::size_t b);

/// Projected crossing of two pieces, if it lies inside both intervals.
std::optional<CrossingPoint> xy_cross(const Scene& scene, const Piece& a, const Piece& b);

enum class DepthRelation { Below, Above };

/// Relation of object c.a to object c.b at the crossing. Throws
/// Error(EqualHeights) when both objects pass through the same point.
DepthRelation depth_order_at(const Scene& scene, const CrossingPoint& c);

inline DepthRelation opposite(DepthRelation r) {
  return r == DepthRelation::Below ? DepthRelation::Above : DepthRelation::Below;
}

struct Cut {
  ObjectId object = 0;
  Scalar t;
  friend bool operator<(const Cut& l, const Cut& r) {
    return l.object != r.object ? l.object < r.object : l.t < r.t;
  }
  friend bool operator==(const Cut& l, const Cut& r) { return l.object == r.object && l.t == r.t; }
};

/// Deduplicated, ordered set of cut points. Merging is a set union, so it
/// is associative and commutative.
class CutSet {
 public:
  CutSet() = default;

  bool insert(ObjectId object, Scalar t) { return cuts_.insert(Cut{object, std::move(t)}).second; }
  void merge(const CutSet& other) { cuts_.insert(other.cuts_.begin(), other.cuts_.end()); }

  std::size_t size() const { return cuts_.size(); }
  bool empty() const { return cuts_.empty(); }
  auto begin() const { return cuts_.begin(); }
  auto end() const { return cuts_.end(); }

  std::size_t count(ObjectId object) const;

  friend bool operator==(const CutSet&, const CutSet&) = default;

 private:
  std::set<Cut> cuts_;
};

/// Splits every object at its cuts. Pieces come out ordered by object
/// index, then by parameter. Throws Error(CutOutOfRange) for an unknown id
/// or a parameter outside the open range of a segment.
std::vector<Piece> apply_cuts(const Scene& scene, const CutSet& cuts);

}  // namespace depthcut

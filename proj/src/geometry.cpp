#include "depthcut/geometry.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace depthcut {

Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Point3 operator*(const Scalar& s, const Point3& p) { return {s * p.x, s * p.y, s * p.z}; }

Point3 Object3::at(const Scalar& t) const {
  return {origin.x + t * direction.x, origin.y + t * direction.y, origin.z + t * direction.z};
}

Point2 Object3::xy_at(const Scalar& t) const {
  return {origin.x + t * direction.x, origin.y + t * direction.y};
}

Scalar Object3::z_at(const Scalar& t) const { return origin.z + t * direction.z; }

Object3 make_line(ObjectId id, Point3 origin, Point3 direction) {
  if (direction.x < 0 || (direction.x == 0 && direction.y < 0)) direction = Scalar(-1) * direction;
  return Object3{id, std::move(origin), std::move(direction)};
}

Object3 make_segment(ObjectId id, const Point3& a, const Point3& b) { return Object3{id, a, b - a}; }

std::size_t Scene::index_of(ObjectId id) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i].id == id) return i;
  throw Error(ErrorCode::InvalidArgument, "unknown object id " + std::to_string(id));
}

bool Piece::contains(const Scalar& t) const {
  if (lo && (lo_closed ? t < *lo : t <= *lo)) return false;
  if (hi && (hi_closed ? t > *hi : t >= *hi)) return false;
  return true;
}

bool Piece::interior(const Scalar& t) const { return (!lo || t > *lo) && (!hi || t < *hi); }

Piece whole_piece(const Scene& scene, std::size_t object) {
  Piece p;
  p.object = object;
  if (scene.is_segments()) {
    p.lo = Scalar(0);
    p.hi = Scalar(1);
    p.lo_closed = p.hi_closed = true;
  }
  return p;
}

std::optional<CrossingPoint> xy_cross_lines(const Scene& scene, std::size_t a, std::size_t b) {
  const Object3& oa = scene.objects[a];
  const Object3& ob = scene.objects[b];
  const Point3& da = oa.direction;
  const Point3& db = ob.direction;
  Scalar det = db.x * da.y - da.x * db.y;
  if (det == 0) return std::nullopt;
  Scalar rx = ob.origin.x - oa.origin.x;
  Scalar ry = ob.origin.y - oa.origin.y;
  CrossingPoint c;
  c.a = a;
  c.b = b;
  c.ta = (db.x * ry - db.y * rx) / det;
  c.tb = (da.x * ry - da.y * rx) / det;
  c.point = oa.xy_at(c.ta);
  return c;
}

std::optional<CrossingPoint> xy_cross(const Scene& scene, const Piece& a, const Piece& b) {
  auto c = xy_cross_lines(scene, a.object, b.object);
  if (!c || !a.contains(c->ta) || !b.contains(c->tb)) return std::nullopt;
  return c;
}

DepthRelation depth_order_at(const Scene& scene, const CrossingPoint& c) {
  const int s = cmp(scene.objects[c.a].z_at(c.ta), scene.objects[c.b].z_at(c.tb));
  if (s == 0)
    throw Error(ErrorCode::EqualHeights, "objects " + std::to_string(scene.objects[c.a].id) + " and " +
                                             std::to_string(scene.objects[c.b].id) + " meet in space");
  return s < 0 ? DepthRelation::Below : DepthRelation::Above;
}

std::size_t CutSet::count(ObjectId object) const {
  return static_cast<std::size_t>(
      std::count_if(cuts_.begin(), cuts_.end(), [&](const Cut& c) { return c.object == object; }));
}

std::vector<Piece> apply_cuts(const Scene& scene, const CutSet& cuts) {
  std::map<ObjectId, std::size_t> index;
  for (std::size_t i = 0; i < scene.objects.size(); ++i) index.emplace(scene.objects[i].id, i);

  std::vector<std::vector<Scalar>> per_object(scene.objects.size());
  for (const Cut& cut : cuts) {
    auto it = index.find(cut.object);
    if (it == index.end())
      throw Error(ErrorCode::CutOutOfRange, "cut on unknown object " + std::to_string(cut.object));
    if (scene.is_segments() && (cut.t <= 0 || cut.t >= 1))
      throw Error(ErrorCode::CutOutOfRange,
                  "cut t=" + format_scalar(cut.t) + " outside segment " + std::to_string(cut.object));
    per_object[it->second].push_back(cut.t);
  }

  std::vector<Piece> pieces;
  pieces.reserve(scene.objects.size() + cuts.size());
  for (std::size_t i = 0; i < scene.objects.size(); ++i) {
    // CutSet iteration is ordered, so per_object[i] is sorted and unique.
    const Piece whole = whole_piece(scene, i);
    Piece current = whole;
    for (const Scalar& t : per_object[i]) {
      current.hi = t;
      current.hi_closed = false;
      pieces.push_back(current);
      current.lo = t;
      current.lo_closed = false;
      current.hi = whole.hi;
      current.hi_closed = whole.hi_closed;
    }
    pieces.push_back(current);
  }
  return pieces;
}

}  // namespace depthcut

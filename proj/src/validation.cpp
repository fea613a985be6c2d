#include "depthcut/validation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace depthcut {

const char* to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::VerticalObject: return "VerticalObject";
    case ViolationCode::ProjectionParallel: return "ProjectionParallel";
    case ViolationCode::ThreeConcurrent: return "ThreeConcurrent";
    case ViolationCode::SpatialIntersection: return "SpatialIntersection";
    case ViolationCode::DuplicateId: return "DuplicateId";
  }
  return "Unknown";
}

bool ValidationReport::has(ViolationCode code) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.code == code; });
}

namespace {

// Projections of two segments with parallel directions: do they overlap
// on a common supporting line?
bool collinear_overlap(const Object3& a, const Object3& b) {
  const Scalar rx = b.origin.x - a.origin.x;
  const Scalar ry = b.origin.y - a.origin.y;
  if (a.direction.x * ry - a.direction.y * rx != 0) return false;
  // Project b's endpoints onto a's parameter.
  const Scalar dd = a.direction.x * a.direction.x + a.direction.y * a.direction.y;
  Scalar t0 = (a.direction.x * rx + a.direction.y * ry) / dd;
  Scalar t1 = t0 + (a.direction.x * b.direction.x + a.direction.y * b.direction.y) / dd;
  if (t0 > t1) std::swap(t0, t1);
  return t1 >= 0 && t0 <= 1;
}

}  // namespace

std::vector<CrossingPoint> scene_crossings(const Scene& scene) {
  std::vector<Piece> whole;
  whole.reserve(scene.size());
  for (std::size_t i = 0; i < scene.size(); ++i) whole.push_back(whole_piece(scene, i));
  std::vector<CrossingPoint> out;
  for (std::size_t i = 0; i < scene.size(); ++i) {
    if (scene.objects[i].is_vertical()) continue;
    for (std::size_t j = i + 1; j < scene.size(); ++j) {
      if (scene.objects[j].is_vertical()) continue;
      if (auto c = xy_cross(scene, whole[i], whole[j])) out.push_back(std::move(*c));
    }
  }
  return out;
}

ValidationReport validate_scene(const Scene& scene) {
  ValidationReport report;
  auto add = [&](ViolationCode code, std::vector<ObjectId> ids) {
    report.violations.push_back(Violation{code, std::move(ids)});
  };

  std::map<ObjectId, int> seen;
  for (const Object3& o : scene.objects)
    if (++seen[o.id] == 2) add(ViolationCode::DuplicateId, {o.id});

  for (const Object3& o : scene.objects)
    if (o.is_vertical()) add(ViolationCode::VerticalObject, {o.id});

  const bool segments = scene.is_segments();
  for (std::size_t i = 0; i < scene.size(); ++i) {
    const Object3& a = scene.objects[i];
    if (a.is_vertical()) continue;
    for (std::size_t j = i + 1; j < scene.size(); ++j) {
      const Object3& b = scene.objects[j];
      if (b.is_vertical()) continue;
      const bool parallel = a.direction.x * b.direction.y == a.direction.y * b.direction.x;
      if (parallel && (!segments || collinear_overlap(a, b))) add(ViolationCode::ProjectionParallel, {a.id, b.id});
    }
  }

  auto crossings = scene_crossings(scene);
  for (const CrossingPoint& c : crossings)
    if (scene.objects[c.a].z_at(c.ta) == scene.objects[c.b].z_at(c.tb))
      add(ViolationCode::SpatialIntersection, {scene.objects[c.a].id, scene.objects[c.b].id});

  // Concurrency: sort crossing points and look for repeats.
  std::vector<std::size_t> order(crossings.size());
  std::iota(order.begin(), order.end(), 0);
  auto point_less = [&](std::size_t l, std::size_t r) {
    const Point2& p = crossings[l].point;
    const Point2& q = crossings[r].point;
    return p.x != q.x ? p.x < q.x : p.y < q.y;
  };
  std::sort(order.begin(), order.end(), point_less);
  for (std::size_t k = 0; k < order.size();) {
    std::size_t e = k + 1;
    while (e < order.size() && crossings[order[e]].point == crossings[order[k]].point) ++e;
    if (e - k > 1) {
      std::vector<ObjectId> ids;
      for (std::size_t m = k; m < e; ++m) {
        ids.push_back(scene.objects[crossings[order[m]].a].id);
        ids.push_back(scene.objects[crossings[order[m]].b].id);
      }
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      add(ViolationCode::ThreeConcurrent, std::move(ids));
    }
    k = e;
  }

  report.ok = report.violations.empty();
  return report;
}

}  // namespace depthcut

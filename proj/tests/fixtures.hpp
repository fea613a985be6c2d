#pragma once

#include "depthcut/geometry.hpp"

namespace fixtures {

using depthcut::Point3;
using depthcut::Scalar;
using depthcut::Scene;

inline Scalar q(long num, long den = 1) { return depthcut::make_scalar(num, den); }
inline Point3 P(long x, long y, long z) { return {Scalar(x), Scalar(y), Scalar(z)}; }

// l1(t) = (t,0,0), l2(t) = (t,t,1), l3(t) = (t,2-t,5-3t): the canonical
// 3-cycle l1 < l2 < l3 < l1 with crossings at (0,0), (1,1), (2,0).
inline Scene s3() {
  Scene s;
  s.kind = depthcut::SceneKind::Lines;
  s.objects.push_back(depthcut::make_line(1, P(0, 0, 0), P(1, 0, 0)));
  s.objects.push_back(depthcut::make_line(2, P(0, 0, 1), P(1, 1, 0)));
  s.objects.push_back(depthcut::make_line(3, P(0, 2, 5), P(1, -1, -3)));
  return s;
}

// Four lines with l1 < l2 < l3 < l4 < l1 whose projected 4-cycle crosses
// itself; found by brute-force search over small integer coordinates.
inline Scene bowtie() {
  Scene s;
  s.kind = depthcut::SceneKind::Lines;
  s.objects.push_back(depthcut::make_line(1, P(0, -3, 0), P(0, 1, 0)));
  s.objects.push_back(depthcut::make_line(2, P(-1, -3, 2), P(2, -2, 2)));
  s.objects.push_back(depthcut::make_line(3, P(3, 3, 4), P(3, -1, 2)));
  s.objects.push_back(depthcut::make_line(4, P(0, -3, -2), P(3, -2, 0)));
  return s;
}

inline Scene segments(std::initializer_list<std::pair<Point3, Point3>> list) {
  Scene s;
  s.kind = depthcut::SceneKind::Segments;
  depthcut::ObjectId id = 1;
  for (const auto& [a, b] : list) s.objects.push_back(depthcut::make_segment(id++, a, b));
  return s;
}

}  // namespace fixtures

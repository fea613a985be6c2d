#include "depthcut/scenes.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "depthcut/validation.hpp"

namespace depthcut {

SceneStats scene_stats(const Scene& scene) {
  SceneStats s;
  s.n = scene.size();
  s.crossings = scene_crossings(scene);
  s.X = s.crossings.size();
  return s;
}

GeneratorKind parse_generator_kind(const std::string& name) {
  if (name == "random-lines") return GeneratorKind::RandomLines;
  if (name == "random-segments") return GeneratorKind::RandomSegments;
  if (name == "grid-lower-bound") return GeneratorKind::GridLowerBound;
  if (name == "grid-pattern") return GeneratorKind::GridPattern;
  throw Error(ErrorCode::InvalidArgument, "unknown generator '" + name + "'");
}

const char* to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::RandomLines: return "random-lines";
    case GeneratorKind::RandomSegments: return "random-segments";
    case GeneratorKind::GridLowerBound: return "grid-lower-bound";
    case GeneratorKind::GridPattern: return "grid-pattern";
  }
  return "unknown";
}

namespace {

constexpr int kMaxResample = 1000;
// Integer direction components are drawn from [-kDirBound, kDirBound]. Wide
// enough that parallel projections are rare, so resampling seldom runs twice.
constexpr long kDirBound = 1024;

// Uniform rational in [-bound, bound] with denominator in [1, 4].
Scalar random_coordinate(std::mt19937_64& rng, long bound) {
  const long den = std::uniform_int_distribution<long>(1, 4)(rng);
  return make_scalar(std::uniform_int_distribution<long>(-bound * den, bound * den)(rng), den);
}

long random_int(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Point3 random_point(std::mt19937_64& rng, long bound) {
  return {random_coordinate(rng, bound), random_coordinate(rng, bound), random_coordinate(rng, bound)};
}

// Resamples objects named in violations until the scene validates.
template <class Draw>
void resample_until_valid(Scene& scene, Draw&& draw) {
  for (int round = 0; round < kMaxResample; ++round) {
    const ValidationReport report = validate_scene(scene);
    if (report.ok) return;
    std::set<ObjectId> redo;
    for (const Violation& v : report.violations) redo.insert(v.ids.back());
    for (Object3& o : scene.objects)
      if (redo.count(o.id)) o = draw(o.id);
  }
  throw Error(ErrorCode::PerturbationFailed, "could not reach general position");
}

bool below(const Scene& scene, std::size_t u, std::size_t v) {
  auto c = xy_cross_lines(scene, u, v);
  return c && depth_order_at(scene, *c) == DepthRelation::Below;
}

std::vector<Point2> projected_triangle(const Scene& scene, const std::array<std::size_t, 3>& t) {
  std::vector<Point2> tri;
  for (int e = 0; e < 3; ++e) tri.push_back(xy_cross_lines(scene, t[e], t[(e + 1) % 3])->point);
  return tri;
}

struct Box {
  Scalar x0, x1, y0, y1;
};

Box bounding_box(const std::vector<Point2>& p) {
  Box b{p[0].x, p[0].x, p[0].y, p[0].y};
  for (const Point2& q : p) {
    b.x0 = std::min(b.x0, q.x);
    b.x1 = std::max(b.x1, q.x);
    b.y0 = std::min(b.y0, q.y);
    b.y1 = std::max(b.y1, q.y);
  }
  return b;
}

bool all_pairwise_disjoint(const std::vector<std::vector<Point2>>& polys) {
  std::vector<Box> boxes;
  for (const auto& p : polys) boxes.push_back(bounding_box(p));
  std::vector<std::size_t> order(polys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return boxes[l].x0 < boxes[r].x0; });
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size() && boxes[order[b]].x0 <= boxes[order[a]].x1; ++b) {
      const Box& p = boxes[order[a]];
      const Box& q = boxes[order[b]];
      if (q.y0 > p.y1 || p.y0 > q.y1) continue;
      if (!convex_polygons_disjoint(polys[order[a]], polys[order[b]])) return false;
    }
  return true;
}

}  // namespace

bool convex_polygons_disjoint(const std::vector<Point2>& p, const std::vector<Point2>& q) {
  auto orient = [](const Point2& a, const Point2& b, const Point2& c) {
    return sgn((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
  };
  // Separating-axis test over the edges of both polygons: an edge line
  // separates when the owner lies on one closed side and the other polygon
  // strictly on the other.
  auto separates = [&](const std::vector<Point2>& owner, const std::vector<Point2>& other) {
    const std::size_t n = owner.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2& a = owner[i];
      const Point2& b = owner[(i + 1) % n];
      int owner_side = 0;
      for (const Point2& v : owner) {
        const int s = orient(a, b, v);
        if (s != 0) {
          owner_side = s;
          break;
        }
      }
      if (owner_side == 0) continue;
      if (std::all_of(other.begin(), other.end(), [&](const Point2& v) { return orient(a, b, v) == -owner_side; }))
        return true;
    }
    return false;
  };
  return separates(p, q) || separates(q, p);
}

Scene gen_random(std::size_t n, std::uint64_t seed, long bound) {
  std::mt19937_64 rng(seed);
  auto draw = [&](ObjectId id) {
    Point3 dir;
    do {
      dir = Point3{Scalar(random_int(rng, -kDirBound, kDirBound)), Scalar(random_int(rng, -kDirBound, kDirBound)),
                   Scalar(random_int(rng, -kDirBound, kDirBound))};
    } while (dir.x == 0 && dir.y == 0);
    return make_line(id, random_point(rng, bound), dir);
  };
  Scene scene;
  scene.kind = SceneKind::Lines;
  for (std::size_t i = 0; i < n; ++i) scene.objects.push_back(draw(static_cast<ObjectId>(i)));
  resample_until_valid(scene, draw);
  scene.meta = {{"generator", "random-lines"}, {"n", n}, {"seed", seed}, {"bound", bound}};
  return scene;
}

Scene gen_random_segments(std::size_t n, std::uint64_t seed, long bound, long max_extent) {
  std::mt19937_64 rng(seed);
  auto draw = [&](ObjectId id) {
    const Point3 a = random_point(rng, bound);
    Point3 b;
    do {
      if (max_extent > 0) {
        b = a + random_point(rng, max_extent);
      } else {
        b = random_point(rng, bound);
      }
    } while (b.x == a.x && b.y == a.y);
    return make_segment(id, a, b);
  };
  Scene scene;
  scene.kind = SceneKind::Segments;
  for (std::size_t i = 0; i < n; ++i) scene.objects.push_back(draw(static_cast<ObjectId>(i)));
  resample_until_valid(scene, draw);
  scene.meta = {{"generator", "random-segments"}, {"n", n}, {"seed", seed}, {"bound", bound}, {"max_extent", max_extent}};
  return scene;
}

std::vector<std::array<std::size_t, 3>> grid_joint_triples(std::size_t m) {
  std::vector<std::array<std::size_t, 3>> out;
  const std::size_t m2 = m * m;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) out.push_back({j * m + k, m2 + i * m + k, 2 * m2 + i * m + j});
  return out;
}

Scene gen_grid_lower_bound(std::size_t m, std::uint64_t seed, const Scalar& epsilon) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "grid size m must be >= 1");
  const long ml = static_cast<long>(m);
  // Sheared frame: joints at i*A + j*B + k*C. The projections of A, B, C
  // turn the same way pairwise, and the shear keeps distinct grid lines of
  // one family from projecting onto each other.
  const Scalar alpha = make_scalar(-1, ml);
  const Scalar beta = make_scalar(-1, ml * ml);
  const Point3 A{Scalar(1), Scalar(0), Scalar(0)};
  const Point3 B{Scalar(-1), Scalar(1), Scalar(0)};
  const Point3 C{alpha - beta, beta, Scalar(1)};
  // Projected joints are at least ~1/m^2 apart; perturbations scale with it.
  const Scalar spacing = make_scalar(1, ml * ml);
  const Scalar shift = epsilon * spacing;
  const Scalar jitter = shift / 8;
  const Scalar tilt = shift / (16 * ml);

  std::mt19937_64 rng(seed);
  auto noise = [&](const Scalar& magnitude) -> Scalar {
    return magnitude * make_scalar(random_int(rng, -1024, 1024), 1024);
  };
  auto noisy = [&](const Point3& p, const Scalar& magnitude) {
    return Point3{p.x + noise(magnitude), p.y + noise(magnitude), p.z + noise(magnitude)};
  };
  auto joint = [&](std::size_t i, std::size_t j, std::size_t k) {
    return Scalar(static_cast<long>(i)) * A + Scalar(static_cast<long>(j)) * B + Scalar(static_cast<long>(k)) * C;
  };

  const auto triples = grid_joint_triples(m);
  constexpr int kAttempts = 16;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Scene scene;
    scene.kind = SceneKind::Lines;
    ObjectId id = 0;
    // Each family is shifted along the next family's direction; this makes
    // every joint cyclic with the same orientation.
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        scene.objects.push_back(make_line(id++, noisy(joint(0, j, k) + shift * C, jitter), noisy(A, tilt)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k)
        scene.objects.push_back(make_line(id++, noisy(joint(i, 0, k) + shift * A, jitter), noisy(B, tilt)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        scene.objects.push_back(make_line(id++, noisy(joint(i, j, 0) + shift * B, jitter), noisy(C, tilt)));

    if (!validate_scene(scene).ok) continue;
    bool cyclic = true;
    std::vector<std::vector<Point2>> triangles;
    for (const auto& t : triples) {
      const bool forward = below(scene, t[0], t[1]) && below(scene, t[1], t[2]) && below(scene, t[2], t[0]);
      const bool backward = below(scene, t[1], t[0]) && below(scene, t[2], t[1]) && below(scene, t[0], t[2]);
      if (!forward && !backward) {
        cyclic = false;
        break;
      }
      triangles.push_back(projected_triangle(scene, t));
    }
    if (!cyclic || !all_pairwise_disjoint(triangles)) continue;
    scene.meta = {{"generator", "grid-lower-bound"},
                  {"m", m},
                  {"seed", seed},
                  {"epsilon", format_scalar(epsilon)},
                  {"attempt", attempt}};
    return scene;
  }
  throw Error(ErrorCode::PerturbationFailed, "grid perturbation failed after " + std::to_string(kAttempts) + " draws");
}

Scene gen_grid_pattern(std::size_t k, std::uint64_t seed) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "grid pattern size k must be >= 1");
  const long kl = static_cast<long>(k);
  std::mt19937_64 rng(seed);
  auto wobble = [&] { return make_scalar(random_int(rng, -15, 15), 64); };  // |r| < 1/4
  auto height = [&] { return Scalar(random_int(rng, 0, 4 * kl)); };
  auto draw = [&](ObjectId id) {
    const long slot = static_cast<long>(id % static_cast<ObjectId>(k)) + 1;
    const Point3 start = id < static_cast<ObjectId>(k) ? Point3{Scalar(0), slot + wobble(), height()}
                                                       : Point3{slot + wobble(), Scalar(0), height()};
    const Point3 end = id < static_cast<ObjectId>(k) ? Point3{Scalar(kl + 1), slot + wobble(), height()}
                                                     : Point3{slot + wobble(), Scalar(kl + 1), height()};
    return make_segment(id, start, end);
  };
  Scene scene;
  scene.kind = SceneKind::Segments;
  for (std::size_t i = 0; i < 2 * k; ++i) scene.objects.push_back(draw(static_cast<ObjectId>(i)));
  resample_until_valid(scene, draw);
  scene.meta = {{"generator", "grid-pattern"}, {"k", k}, {"seed", seed}};
  return scene;
}

Scene generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::RandomLines: return gen_random(spec.size, spec.seed, spec.bound);
    case GeneratorKind::RandomSegments:
      return gen_random_segments(spec.size, spec.seed, spec.bound, spec.segment_length);
    case GeneratorKind::GridLowerBound: return gen_grid_lower_bound(spec.size, spec.seed, spec.epsilon);
    case GeneratorKind::GridPattern: return gen_grid_pattern(spec.size, spec.seed);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown generator kind");
}

}  // namespace depthcut

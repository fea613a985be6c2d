#include <doctest.h>

#include <random>

#include "depthcut/depth_graph.hpp"
#include "depthcut/partition.hpp"
#include "depthcut/scenes.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace depthcut;
using fixtures::P;
using fixtures::q;

namespace {

std::vector<Piece> whole(const Scene& s) { return apply_cuts(s, CutSet{}); }

// Proper crossing of closed 2D segments pq and rs (touching counts).
bool segments_meet(const Point2& p, const Point2& q2, const Point2& r, const Point2& s) {
  auto orient = [](const Point2& a, const Point2& b, const Point2& c) {
    return sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
  };
  const int d1 = orient(p, q2, r), d2 = orient(p, q2, s), d3 = orient(r, s, p), d4 = orient(r, s, q2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  auto on = [](const Point2& a, const Point2& b, const Point2& c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
           c.y <= std::max(a.y, b.y);
  };
  return (d1 == 0 && on(p, q2, r)) || (d2 == 0 && on(p, q2, s)) || (d3 == 0 && on(r, s, p)) ||
         (d4 == 0 && on(r, s, q2));
}

// Projected edge i of a cycle: from crossing i-1 to crossing i.
std::pair<Point2, Point2> projected_edge(const SimpleCycle& c, std::size_t i) {
  const std::size_t k = c.length();
  return {c.crossings[(i + k - 1) % k].point, c.crossings[i].point};
}

bool non_self_crossing(const SimpleCycle& c) {
  const std::size_t k = c.length();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (j == i + 1 || (i == 0 && j == k - 1)) continue;
      const auto [a, b] = projected_edge(c, i);
      const auto [d, e] = projected_edge(c, j);
      if (segments_meet(a, b, d, e)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("build_graph on S3") {
  const Scene s = fixtures::s3();
  const DepthGraph g = build_graph(s, whole(s));
  CHECK(oracle::edges_of(g) == std::set<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(depth_order(g));

  Scene one;
  one.objects = {s.objects[0]};
  CHECK(build_graph(one, whole(one)).edges.empty());
}

TEST_CASE("S3 cut at l1 t=1") {
  const Scene s = fixtures::s3();
  CutSet cuts;
  cuts.insert(1, q(1));
  const DepthGraph g = build_graph(s, apply_cuts(s, cuts));
  // Pieces: 0 = l1 (-inf,1), 1 = l1 (1,inf), 2 = l2, 3 = l3.
  CHECK(oracle::edges_of(g) == std::set<std::pair<std::size_t, std::size_t>>{{0, 2}, {2, 3}, {3, 1}});
  const auto order = depth_order(g);
  REQUIRE(order);
  CHECK(*order == std::vector<std::size_t>{0, 2, 3, 1});
  CHECK_FALSE(find_simple_cycle(s, g));
}

TEST_CASE("find_simple_cycle on S3") {
  const Scene s = fixtures::s3();
  const DepthGraph g = build_graph(s, whole(s));
  const auto c = find_simple_cycle(s, g);
  REQUIRE(c);
  CHECK(c->nodes == std::vector<std::size_t>{0, 1, 2});
  REQUIRE(c->crossings.size() == 3);
  CHECK(c->crossings[0].point == Point2{q(0), q(0)});
  CHECK(c->crossings[1].point == Point2{q(1), q(1)});
  CHECK(c->crossings[2].point == Point2{q(2), q(0)});
}

TEST_CASE("realize_path on S3") {
  const Scene s = fixtures::s3();
  const auto pieces = whole(s);
  const DepthGraph g = build_graph(s, pieces);
  const auto c = find_simple_cycle(s, g);
  REQUIRE(c);
  const CyclePath path = realize_path(s, pieces, *c);
  const std::vector<Point3> expect{P(2, 0, 0), P(0, 0, 0), P(0, 0, 1), P(1, 1, 1), P(1, 1, 2), P(2, 0, -1)};
  CHECK(path.vertices == expect);
}

TEST_CASE("realize_path errors") {
  const Scene s = fixtures::s3();
  const auto pieces = whole(s);
  SimpleCycle two;
  two.nodes = {0, 1};
  two.crossings = {*xy_cross_lines(s, 0, 1), *xy_cross_lines(s, 1, 0)};
  CHECK_THROWS_AS(realize_path(s, pieces, two), Error);
  try {
    realize_path(s, pieces, two);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACycle);
  }

  SimpleCycle reversed;
  reversed.nodes = {0, 2, 1};
  reversed.crossings = {*xy_cross_lines(s, 0, 2), *xy_cross_lines(s, 2, 1), *xy_cross_lines(s, 1, 0)};
  try {
    realize_path(s, pieces, reversed);
    FAIL("expected OrientationViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrientationViolation);
  }
}

TEST_CASE("shortcut of a self-crossing 4-cycle") {
  const Scene s = fixtures::bowtie();
  const auto pieces = whole(s);
  const auto below = oracle::below_matrix(s);
  REQUIRE(below[0][1]);
  REQUIRE(below[1][2]);
  REQUIRE(below[2][3]);
  REQUIRE(below[3][0]);

  SimpleCycle four;
  four.nodes = {0, 1, 2, 3};
  for (std::size_t i = 0; i < 4; ++i) four.crossings.push_back(*xy_cross_lines(s, i, (i + 1) % 4));
  REQUIRE_FALSE(non_self_crossing(four));

  const DepthGraph g = build_graph(s, pieces);
  const auto shorter = shortcut_once(s, g, four);
  REQUIRE(shorter);
  CHECK(shorter->length() == 3);
  CHECK(non_self_crossing(*shorter));
  // Consecutive nodes are related by the oracle.
  for (std::size_t i = 0; i < 3; ++i) CHECK(below[shorter->nodes[i]][shorter->nodes[(i + 1) % 3]]);
  // Every new projected edge lies on an old projected edge of the same line.
  for (std::size_t i = 0; i < 3; ++i) {
    auto [a, b] = edge_params(*shorter, pieces, i);
    if (b < a) std::swap(a, b);
    bool inside = false;
    for (std::size_t j = 0; j < 4; ++j) {
      if (four.nodes[j] != shorter->nodes[i]) continue;
      auto [c, d] = edge_params(four, pieces, j);
      if (d < c) std::swap(c, d);
      inside = inside || (c <= a && b <= d);
    }
    CHECK(inside);
  }
  const CyclePath path = realize_path(s, pieces, *shorter);
  CHECK(path.vertices.size() == 6);
}

TEST_CASE("find_simple_cycle properties on random scenes") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Scene s = gen_random(8 + seed, seed);
    std::mt19937_64 rng(seed);
    CutSet cuts;
    for (int k = 0; k < 10; ++k) cuts.insert(s.objects[rng() % s.size()].id, oracle::random_rational(rng, 200, 3));
    const auto pieces = apply_cuts(s, cuts);
    const DepthGraph g = build_graph(s, pieces);
    const auto order = depth_order(g);
    const auto cycle = find_simple_cycle(s, g);
    CHECK(order.has_value() != cycle.has_value());
    if (order) {
      std::vector<std::size_t> pos(pieces.size());
      for (std::size_t i = 0; i < order->size(); ++i) pos[(*order)[i]] = i;
      for (const auto& e : g.edges) CHECK(pos[e.below] < pos[e.above]);
    }
    if (cycle) {
      CHECK(cycle->length() >= 3);
      CHECK(non_self_crossing(*cycle));
      const auto edges = oracle::edges(s, pieces);
      for (std::size_t i = 0; i < cycle->length(); ++i)
        CHECK(edges.count({cycle->nodes[i], cycle->nodes[(i + 1) % cycle->length()]}));
      const CyclePath path = realize_path(s, pieces, *cycle);
      const std::size_t k = cycle->length();
      for (std::size_t i = 0; i < k; ++i) {
        const Point3& top = path.vertices[2 * i + 1];
        const Point3& next = path.vertices[(2 * i + 2) % (2 * k)];
        CHECK(top.x == next.x);
        CHECK(top.y == next.y);
        CHECK(top.z < next.z);
      }
    }
  }
}

TEST_CASE("build_graph matches the brute-force oracle") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Scene s = seed % 2 ? gen_random_segments(25, seed) : gen_random(25, seed);
    std::mt19937_64 rng(seed + 100);
    CutSet cuts;
    for (int k = 0; k < 30; ++k) {
      const ObjectId id = s.objects[rng() % s.size()].id;
      cuts.insert(id, s.is_segments() ? Scalar(q(1 + rng() % 99, 100)) : oracle::random_rational(rng, 300, 4));
    }
    const auto pieces = apply_cuts(s, cuts);
    CHECK(oracle::edges_of(build_graph(s, pieces)) == oracle::edges(s, pieces));
  }
}

TEST_CASE("triangular cycles") {
  const Scene s = fixtures::s3();
  const auto tri = enumerate_triangular_cycles(s);
  REQUIRE(tri.size() == 1);
  CHECK(tri[0].nodes == std::vector<std::size_t>{0, 1, 2});
  CHECK(is_elementary(s, tri[0]));

  // Stack the lines by slope: no cycles.
  Scene stacked;
  for (int i = 0; i < 6; ++i) stacked.objects.push_back(make_line(i, P(i, 0, i), P(1, i, 0)));
  CHECK(enumerate_triangular_cycles(stacked).empty());

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Scene r = gen_random(30 + 5 * seed, seed);
    std::set<std::array<std::size_t, 3>> got;
    for (const auto& c : enumerate_triangular_cycles(r)) got.insert(oracle::sorted_triple(c));
    CHECK(got == oracle::triangles(r));
  }
}

TEST_CASE("level sums to zero around realized paths") {
  std::mt19937_64 rng(17);
  const Scene s = gen_random(14, 2);
  const auto pieces = whole(s);
  for (const auto& c : enumerate_triangular_cycles(s)) {
    const auto path = realize_path(s, pieces, c);
    const auto planes = oracle::random_planes(rng, 3, 200);
    long total = 0;
    bool on_plane = false;
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
      const auto a = oracle::level(path.vertices[i], planes);
      const auto b = oracle::level(path.vertices[(i + 1) % path.vertices.size()], planes);
      if (!a || !b) {
        on_plane = true;
        break;
      }
      total += static_cast<long>(*b) - static_cast<long>(*a);
      CHECK(*a == level(path.vertices[i], planes));
    }
    if (!on_plane) CHECK(total == 0);
  }
}

TEST_CASE("json dumps") {
  const Scene s = fixtures::s3();
  const auto pieces = whole(s);
  const auto c = find_simple_cycle(s, build_graph(s, pieces));
  const auto j = cycle_to_json(s, pieces, *c);
  CHECK(j.dump().find("\"1/1\"") == std::string::npos);
  CutSet cuts;
  cuts.insert(1, q(1, 2));
  const auto cp = apply_cuts(s, cuts);
  const auto pj = piece_to_json(s, cp[0]);
  CHECK(pj.dump().find("-inf") != std::string::npos);
  CHECK(pj.dump().find("1/2") != std::string::npos);
}

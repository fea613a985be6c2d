#include <doctest.h>

#include <random>

#include "depthcut/cutters.hpp"
#include "depthcut/depth_graph.hpp"
#include "depthcut/partition.hpp"
#include "depthcut/scenes.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace depthcut;
using fixtures::P;
using fixtures::q;

namespace {

Plane horizontal(const Scalar& z) { return Plane(q(0), q(0), q(1), -z); }

std::vector<Scalar> params_of(const CutSet& cuts) {
  std::vector<Scalar> out;
  for (const Cut& c : cuts) out.push_back(c.t);
  return out;
}

}  // namespace

TEST_CASE("plane invariants") {
  const Plane p(q(2), q(4), q(2), q(6));
  CHECK(p.a == 1);
  CHECK(p.c == 1);
  CHECK(p.d == 3);
  CHECK_THROWS_AS(Plane(q(1), q(0), q(0), q(0)), Error);
  CHECK(p.side(P(0, 0, 0)) > 0);
  CHECK(p.side(P(0, 0, -3)) == 0);
  CHECK(p.z_at(q(1), q(1)) == -6);
}

TEST_CASE("choose_planes") {
  const Scene s = gen_random(100, 1);
  const auto pieces = apply_cuts(s, CutSet{});
  std::mt19937_64 rng(4);
  CHECK(choose_planes(s, pieces, 0, rng).empty());
  const auto two = choose_planes(s, pieces, 2, rng);
  REQUIRE(two.size() == 2);
  CHECK_FALSE(two[0] == two[1]);
  for (const auto& p : two) CHECK(p.c != 0);

  std::mt19937_64 a(9), b(9);
  CHECK(choose_planes(s, pieces, 3, a) == choose_planes(s, pieces, 3, b));

  std::mt19937_64 r1(5);
  const auto one = choose_planes(s, pieces, 1, r1);
  const auto cells = assign_cells(s, pieces, one);
  for (SignVector sigma : {SignVector{0}, SignVector{1}}) {
    REQUIRE(cells.count(sigma));
    CHECK(cells.at(sigma).size() >= 40);
  }
}

TEST_CASE("zero_set_cuts examples") {
  const Scene s = fixtures::s3();
  const PlaneSet half{horizontal(q(1, 2))};
  CHECK(params_of(zero_set_cuts(s, whole_piece(s, 2), half)) == std::vector<Scalar>{q(3, 2)});
  CHECK(zero_set_cuts(s, whole_piece(s, 0), half).empty());
  const PlaneSet ground{horizontal(q(0))};
  CHECK(zero_set_cuts(s, whole_piece(s, 0), ground).empty());
}

TEST_CASE("criticality_cuts examples") {
  const Scene s = fixtures::s3();
  const PlaneSet two{horizontal(q(1, 2)), Plane(q(1), q(0), q(1), q(-10))};
  const auto cuts = criticality_cuts(s, whole_piece(s, 0), two);
  CHECK(params_of(cuts) == std::vector<Scalar>{q(19, 2)});
  CHECK(criticality_cuts(s, whole_piece(s, 0), PlaneSet{horizontal(q(1, 2))}).empty());
  CHECK(criticality_cuts(s, whole_piece(s, 0), PlaneSet{horizontal(q(0)), horizontal(q(1))}).empty());
  // l1 lies in z = 0: that factor is dropped, leaving a single restricted line.
  CHECK(criticality_cuts(s, whole_piece(s, 0), PlaneSet{horizontal(q(0)), Plane(q(1), q(0), q(1), q(-10))}).empty());
  // Pieces only receive cuts inside their interval.
  Piece left = whole_piece(s, 0);
  left.hi = q(5);
  CHECK(criticality_cuts(s, left, two).empty());
}

TEST_CASE("level examples") {
  const PlaneSet half{horizontal(q(1, 2))};
  CHECK(level(P(0, 0, 0), half) == 0);
  CHECK(level(P(0, 0, 1), half) == 1);
  const PlaneSet two{horizontal(q(1, 2)), Plane(q(1), q(0), q(1), q(-10))};
  CHECK(level(P(9, 0, 0), two) == 0);
  CHECK(level(P(11, 0, 0), two) == 1);
  CHECK_THROWS_AS(level(P(3, 3, 7), two), Error);
  try {
    level({q(3), q(3), q(1, 2)}, two);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OnZeroSet);
  }
}

TEST_CASE("assign_cells examples") {
  const Scene s = fixtures::s3();
  const auto pieces = apply_cuts(s, CutSet{});
  const auto cells = assign_cells(s, pieces, PlaneSet{horizontal(q(1, 2))});
  REQUIRE(cells.size() == 2);
  auto objects = [&](SignVector sigma) {
    std::vector<std::size_t> out;
    for (const auto& p : cells.at(sigma)) out.push_back(p.object);
    return out;
  };
  CHECK(objects(0) == std::vector<std::size_t>{0, 2});
  CHECK(objects(1) == std::vector<std::size_t>{1, 2});
  CHECK(sign_string(1, 1) == "+");
  CHECK(sign_string(2, 3) == "-+-");

  const auto all = assign_cells(s, pieces, PlaneSet{});
  REQUIRE(all.size() == 1);
  CHECK(all.begin()->second.size() == 3);

  const auto contained = assign_cells(s, pieces, PlaneSet{horizontal(q(0))});
  for (const auto& [sigma, list] : contained)
    for (const auto& p : list) CHECK(p.object != 0);
}

TEST_CASE("partition on S3 with z = 1/2") {
  const Scene s = fixtures::s3();
  const PartitionResult r = partition_cut_with_planes(s, PlaneSet{horizontal(q(1, 2))}, PartitionParams{});
  CHECK(r.cuts.count(3) >= 1);
  bool found = false;
  for (const Cut& c : r.cuts) found = found || (c.object == 3 && c.t == q(3, 2));
  CHECK(found);
  CHECK(oracle::cut_acyclic(s, r.cuts));
  CHECK(cuts_eliminate_cycles(s, r.cuts));
}

TEST_CASE("small scenes are cut naively") {
  const Scene s = gen_random(7, 3);
  CHECK(partition_cut(s, PartitionParams{}) == naive_cut(s));
}

TEST_CASE("partition is correct for every degree") {
  for (int degree = 1; degree <= 6; ++degree)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Scene s = gen_random(40, seed + 10 * degree);
      PartitionParams p;
      p.degree = degree;
      p.seed = seed;
      p.leaf_threshold = 4;
      const auto r = partition_cut_detailed(s, p);
      CAPTURE(degree);
      CHECK(oracle::cut_acyclic(s, r.cuts));
      CHECK(r.stats.max_nonleaf_cuts_per_object <= static_cast<std::size_t>(degree + degree * (degree - 1) / 2));
    }
}

TEST_CASE("partition with forced top planes recurses and stays correct") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 5; ++round) {
    const Scene s = gen_random(30, 50 + round);
    const PlaneSet top = oracle::random_planes(rng, 4, 500);
    PartitionParams p;
    p.leaf_threshold = 3;
    const auto r = partition_cut_with_planes(s, top, p);
    CHECK(r.top_planes == top);
    CHECK(r.stats.subproblems > 1);
    CHECK(r.stats.max_nonleaf_cuts_per_object <= 4 + 6);
    CHECK(oracle::cut_acyclic(s, r.cuts));
  }
}

TEST_CASE("partition on segments") {
  const Scene s = gen_random_segments(40, 6);
  PartitionParams p;
  p.degree = 3;
  p.leaf_threshold = 4;
  CHECK(oracle::cut_acyclic(s, partition_cut(s, p)));
}

TEST_CASE("params and planes JSON") {
  PartitionParams p;
  p.degree = 6;
  p.leaf_threshold = 12;
  p.load_factor = q(2, 3);
  p.seed = 77;
  const auto back = params_from_json(params_to_json(p));
  CHECK(back.degree == 6);
  CHECK(back.leaf_threshold == 12);
  CHECK(back.load_factor == q(2, 3));
  CHECK(back.seed == 77);
  CHECK(params_from_json(nlohmann::json::parse(R"({"degree": 2})")).leaf_threshold == 8);
  CHECK_THROWS_AS(params_from_json(nlohmann::json::parse(R"({"leaf_threshold": 1})")), Error);

  const PlaneSet planes{horizontal(q(1, 2)), Plane(q(1), q(-3, 7), q(1), q(-10))};
  CHECK(planes_from_json(planes_to_json(planes)) == planes);
}

#include <doctest.h>

#include "depthcut/cutters.hpp"
#include "depthcut/scenes.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace depthcut;
using fixtures::P;
using fixtures::q;

TEST_CASE("naive_cut examples") {
  const Scene s = fixtures::s3();
  const CutSet cuts = naive_cut(s);
  CHECK(cuts.size() == 6);
  CHECK(oracle::cut_acyclic(s, cuts));
  Scene one;
  one.objects = {s.objects[0]};
  CHECK(naive_cut(one).empty());
  for (std::size_t n : {5u, 17u, 40u}) {
    const Scene r = gen_random(n, n);
    CHECK(naive_cut(r).size() == n * (n - 1));
  }
}

TEST_CASE("greedy_cycle_cut examples") {
  const Scene s = fixtures::s3();
  const CutSet cuts = greedy_cycle_cut(s);
  CHECK(cuts.size() == 1);
  CHECK(oracle::cut_acyclic(s, cuts));

  Scene stacked;
  for (int i = 0; i < 6; ++i) stacked.objects.push_back(make_line(i, P(i, 0, i), P(1, i, 0)));
  CHECK(greedy_cycle_cut(stacked).empty());

  const Scene grid = gen_grid_lower_bound(3, 0);
  const CutSet g = greedy_cycle_cut(grid);
  CHECK(g.size() >= 27);
  CHECK(g.size() <= naive_cut(grid).size());
  CHECK(oracle::cut_acyclic(grid, g));
}

TEST_CASE("greedy is never worse than naive on random scenes") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Scene s = seed % 2 ? gen_random_segments(30, seed) : gen_random(30, seed);
    const CutSet g = greedy_cycle_cut(s);
    CHECK(g.size() <= naive_cut(s).size());
    CHECK(oracle::cut_acyclic(s, g));
  }
}

TEST_CASE("segment_sensitive_cut regimes") {
  const Scene disjoint = fixtures::segments({{P(0, 0, 0), P(1, 0, 0)}, {P(0, 1, 3), P(1, 2, 0)}, {P(5, 5, 0), P(6, 7, 1)}});
  CHECK(segment_sensitive_cut(disjoint, PartitionParams{}).empty());

  // Two crossings among four segments.
  const Scene sparse = fixtures::segments({{P(0, 0, 0), P(2, 0, 0)},
                                           {P(1, -1, 1), P(1, 1, 1)},
                                           {P(10, 0, 0), P(12, 0, 2)},
                                           {P(11, -1, 3), P(11, 1, -3)}});
  const auto r = segment_sensitive_cut_detailed(sparse, PartitionParams{});
  CHECK(r.X == 2);
  CHECK(r.cuts.size() == 4);
  CHECK(oracle::cut_acyclic(sparse, r.cuts));

  CHECK_THROWS_AS(segment_sensitive_cut(fixtures::s3(), PartitionParams{}), Error);
}

TEST_CASE("segment_sensitive_cut on dense scenes") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Scene s = gen_random_segments(60, seed);
    PartitionParams p;
    p.seed = seed;
    const auto r = segment_sensitive_cut_detailed(s, p);
    CHECK(r.X > r.n);
    CHECK(r.sample_size == (r.n * r.n + r.X - 1) / r.X);
    CHECK(r.trapezoids >= 1);
    CHECK(oracle::cut_acyclic(s, r.cuts));
  }
}

TEST_CASE("segment_sensitive_cut on a grid pattern") {
  const Scene s = gen_grid_pattern(6, 2);
  const auto cuts = segment_sensitive_cut(s, PartitionParams{});
  CHECK(oracle::cut_acyclic(s, cuts));
}

TEST_CASE("strategy names") {
  for (Strategy st : {Strategy::Naive, Strategy::Greedy, Strategy::Partition, Strategy::SegmentSensitive})
    CHECK(parse_strategy(to_string(st)) == st);
  CHECK_THROWS_AS(parse_strategy("magic"), Error);
}

TEST_CASE("cuts_eliminate_cycles agrees with the oracle") {
  const Scene s = gen_random(20, 3);
  CHECK_FALSE(cuts_eliminate_cycles(s, CutSet{}) != oracle::cut_acyclic(s, CutSet{}));
  CHECK(cuts_eliminate_cycles(s, naive_cut(s)));
}

#pragma once

#include <string>
#include <vector>

#include "depthcut/cutters.hpp"

namespace depthcut {

struct BenchRow {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::Naive;
  std::size_t cut_count = 0;
  std::size_t piece_count = 0;
  double wall_time_ms = 0;
  bool acyclic = false;
};

struct BenchConfig {
  std::vector<std::size_t> sizes{64, 128, 256, 512};
  std::size_t seeds = 5;
  std::uint64_t base_seed = 0;
  std::vector<Strategy> strategies{Strategy::Naive, Strategy::Greedy, Strategy::Partition};
  bool segments = false;  // random segment scenes instead of lines
  PartitionParams params;
};

/// Runs every (strategy, n, seed) cell on gen_random / gen_random_segments
/// scenes and verifies each CutSet exactly. Rows come back ordered by
/// (strategy, n, seed).
std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string bench_csv(const std::vector<BenchRow>& rows);

/// Least-squares slope of log(cut_count) against log(n) over the rows of
/// one strategy; NaN with fewer than two distinct sizes.
double fit_exponent(const std::vector<BenchRow>& rows, Strategy strategy);

/// Log-log scatter of cut_count vs n per strategy, with reference curves
/// n(n-1) and n^(3/2).
std::string bench_svg(const std::vector<BenchRow>& rows);

}  // namespace depthcut

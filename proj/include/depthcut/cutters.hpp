#pragma once

#include <string>
#include <vector>

#include "depthcut/geometry.hpp"
#include "depthcut/partition.hpp"

namespace depthcut {

enum class Strategy { Naive, Greedy, Partition, SegmentSensitive };

Strategy parse_strategy(const std::string& name);
const char* to_string(Strategy s);

/// Cuts every object at each of its projected crossing parameters.
CutSet naive_cut(const Scene& scene);

/// Naive cuts restricted to crossings among the given pieces. Cuts that
/// would fall on a segment endpoint are skipped; the other side removes
/// the crossing.
CutSet naive_cut(const Scene& scene, const std::vector<Piece>& pieces);

/// Repeatedly finds a simple cycle and cuts its smallest piece at the
/// midpoint of that piece's cycle edge, until the relation is acyclic.
CutSet greedy_cycle_cut(const Scene& scene);

struct SegmentSensitiveResult {
  CutSet cuts;
  std::size_t n = 0;
  std::size_t X = 0;
  std::size_t sample_size = 0;  // r = ceil(n^2 / X) on the dense path
  std::size_t trapezoids = 0;
  std::size_t boundary_cuts = 0;
};

/// X = 0: no cuts. X <= n: naive. Otherwise: vertical decomposition of a
/// random sample of r = ceil(n^2 / X) projected segments, cuts where
/// segments cross trapezoid boundaries, and partition_cut inside each
/// trapezoid. Throws Error(WrongKind) on line scenes.
SegmentSensitiveResult segment_sensitive_cut_detailed(const Scene& scene, const PartitionParams& params);
CutSet segment_sensitive_cut(const Scene& scene, const PartitionParams& params);

CutSet run_strategy(const Scene& scene, Strategy strategy, const PartitionParams& params);

/// Exact check: applying the cuts leaves an acyclic depth relation.
bool cuts_eliminate_cycles(const Scene& scene, const CutSet& cuts);

}  // namespace depthcut

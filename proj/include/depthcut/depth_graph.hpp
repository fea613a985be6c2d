#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include <json.hpp>

#include "depthcut/geometry.hpp"

namespace depthcut {

/// Edge `below -> above`: piece `below` passes under piece `above` at
/// crossings[crossing].
struct DepthEdge {
  std::size_t below = 0;
  std::size_t above = 0;
  std::size_t crossing = 0;
};

/// Depth relation on pieces. Node ids are indices into `pieces`.
struct DepthGraph {
  std::vector<Piece> pieces;
  std::shared_ptr<const std::vector<CrossingPoint>> crossings;
  std::vector<DepthEdge> edges;
  std::vector<std::vector<std::size_t>> out;  // edge indices leaving each node

  std::size_t node_count() const { return pieces.size(); }
  const CrossingPoint& crossing(const DepthEdge& e) const { return (*crossings)[e.crossing]; }
  /// Edge index between two nodes (in either direction), if any.
  std::optional<std::size_t> edge_between(std::size_t u, std::size_t v) const;
};

/// Parameter of crossing `c` on the given object.
const Scalar& param_on(const CrossingPoint& c, std::size_t object);

/// All projected crossings between distinct objects, within their ranges.
std::shared_ptr<const std::vector<CrossingPoint>> object_crossings(const Scene& scene);

/// Builds the depth relation among `pieces`. Each object crossing is
/// located on the pieces of both objects; crossings that land on a cut
/// point (or outside every piece) produce no edge.
DepthGraph build_graph(const Scene& scene, std::vector<Piece> pieces);

/// Same, reusing precomputed object crossings.
DepthGraph build_graph(const Scene& scene, std::vector<Piece> pieces,
                       std::shared_ptr<const std::vector<CrossingPoint>> crossings);

/// Topological order (smallest available id first), or nullopt if cyclic.
std::optional<std::vector<std::size_t>> depth_order(const DepthGraph& g);

/// A cycle nodes[0] < nodes[1] < ... < nodes[k-1] < nodes[0] in the depth
/// relation; crossings[i] witnesses nodes[i] below nodes[(i+1) % k].
struct SimpleCycle {
  std::vector<std::size_t> nodes;
  std::vector<CrossingPoint> crossings;

  std::size_t length() const { return nodes.size(); }
};

/// Closed path v1- v1+ v2- v2+ ... vk- vk+; vertices[2i], vertices[2i+1]
/// bound the segment on the i-th piece, and each vk+ -> v(k+1)- is an
/// upward vertical jump.
struct CyclePath {
  std::vector<Point3> vertices;
};

/// Strongly connected components (Tarjan); component id per node.
std::vector<std::size_t> strongly_connected_components(const DepthGraph& g, std::size_t* component_count = nullptr);

/// Some cycle whose projection does not cross itself, or nullopt when the
/// graph is acyclic. Picks the shortest cycle through the smallest node of
/// the first cyclic component, then shortcuts it at projection
/// self-crossings until none remain.
std::optional<SimpleCycle> find_simple_cycle(const Scene& scene, const DepthGraph& g);

/// One shortcut step: if the projected path crosses itself, returns the
/// shorter cycle obtained by splitting at the first self-crossing.
std::optional<SimpleCycle> shortcut_once(const Scene& scene, const DepthGraph& g, const SimpleCycle& cycle);

/// Parameter interval [from, to] of the i-th edge e_i on its object.
std::pair<Scalar, Scalar> edge_params(const SimpleCycle& cycle, const std::vector<Piece>& pieces, std::size_t i);

/// Throws Error(NotACycle) for k < 3 or mismatched crossings and
/// Error(OrientationViolation) if a jump is not strictly upward.
CyclePath realize_path(const Scene& scene, const std::vector<Piece>& pieces, const SimpleCycle& cycle);

/// Every triangular cycle among the scene's whole objects, each reported
/// once, rotated to start at its smallest object index.
std::vector<SimpleCycle> enumerate_triangular_cycles(const Scene& scene);

/// Line scenes only: true when no other line's projection enters the open
/// projected triangle of a triangular cycle.
bool is_elementary(const Scene& scene, const SimpleCycle& triangle);

nlohmann::json cycle_to_json(const Scene& scene, const std::vector<Piece>& pieces, const SimpleCycle& cycle);
nlohmann::json order_to_json(const Scene& scene, const DepthGraph& g, const std::vector<std::size_t>& order);
nlohmann::json piece_to_json(const Scene& scene, const Piece& piece);

}  // namespace depthcut

#pragma once

#include <string>
#include <vector>

#include "depthcut/depth_graph.hpp"

namespace depthcut {

/// Painter's-algorithm drawing of the projected pieces, back to front in
/// `order`. Each stroke is drawn over a white halo so later strokes hide
/// earlier ones at crossings. Throws Error(InvalidArgument) if `order` is
/// not a linear extension of the depth relation.
std::string render_svg(const Scene& scene, const DepthGraph& g, const std::vector<std::size_t>& order);

/// Cuts the scene, orders the pieces and renders them. Throws
/// Error(CyclicInput) when the pieces admit no depth order.
std::string render_svg(const Scene& scene, const CutSet& cuts);

}  // namespace depthcut

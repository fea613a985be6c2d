#include "depthcut/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace depthcut {

namespace {

struct Box {
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
  double x1 = -x0, y1 = -x0;
  void add(double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  bool empty() const { return x0 > x1; }
};

// A finite parameter inside the piece, used to keep it in view.
Scalar representative(const Piece& p) {
  if (p.lo && p.hi) return (*p.lo + *p.hi) / 2;
  if (p.lo) return *p.lo;
  if (p.hi) return *p.hi;
  return Scalar(0);
}

// Parameter range of the piece whose projection lies in the box.
bool clip(const Object3& o, const Piece& p, const Box& box, double& t0, double& t1) {
  t0 = p.lo ? p.lo->get_d() : -std::numeric_limits<double>::infinity();
  t1 = p.hi ? p.hi->get_d() : std::numeric_limits<double>::infinity();
  const double origin[2] = {o.origin.x.get_d(), o.origin.y.get_d()};
  const double dir[2] = {o.direction.x.get_d(), o.direction.y.get_d()};
  const double lo[2] = {box.x0, box.y0};
  const double hi[2] = {box.x1, box.y1};
  for (int k = 0; k < 2; ++k) {
    if (dir[k] == 0) {
      if (origin[k] < lo[k] || origin[k] > hi[k]) return false;
      continue;
    }
    double a = (lo[k] - origin[k]) / dir[k];
    double b = (hi[k] - origin[k]) / dir[k];
    if (a > b) std::swap(a, b);
    t0 = std::max(t0, a);
    t1 = std::min(t1, b);
  }
  return t0 <= t1;
}

std::string color_for(ObjectId id) {
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return palette[static_cast<std::size_t>(id < 0 ? -id : id) % 10];
}

}  // namespace

std::string render_svg(const Scene& scene, const DepthGraph& g, const std::vector<std::size_t>& order) {
  if (order.size() != g.node_count()) throw Error(ErrorCode::InvalidArgument, "order does not cover every piece");
  std::vector<std::size_t> position(g.node_count(), g.node_count());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;
  for (const DepthEdge& e : g.edges)
    if (position[e.below] >= position[e.above])
      throw Error(ErrorCode::InvalidArgument, "draw order puts a piece before one it passes below");

  Box box;
  if (g.crossings)
    for (const CrossingPoint& c : *g.crossings) box.add(c.point.x.get_d(), c.point.y.get_d());
  for (const Piece& p : g.pieces) {
    const Point2 q = scene.objects[p.object].xy_at(representative(p));
    box.add(q.x.get_d(), q.y.get_d());
  }
  if (box.empty()) box = Box{-1, -1, 1, 1};
  const double margin = 0.1 * std::max({box.x1 - box.x0, box.y1 - box.y0, 1.0});
  box = Box{box.x0 - margin, box.y0 - margin, box.x1 + margin, box.y1 + margin};

  const double size = 800.0;
  const double scale = size / std::max(box.x1 - box.x0, box.y1 - box.y0);
  auto sx = [&](double x) { return (x - box.x0) * scale; };
  auto sy = [&](double y) { return size - (y - box.y0) * scale; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
      << size << ' ' << size << "\" style=\"background:white\">\n";
  for (std::size_t v : order) {
    const Piece& p = g.pieces[v];
    const Object3& o = scene.objects[p.object];
    double t0, t1;
    if (!clip(o, p, box, t0, t1)) continue;
    const double ox = o.origin.x.get_d(), oy = o.origin.y.get_d();
    const double dx = o.direction.x.get_d(), dy = o.direction.y.get_d();
    const double x1 = sx(ox + t0 * dx), y1 = sy(oy + t0 * dy);
    const double x2 = sx(ox + t1 * dx), y2 = sy(oy + t1 * dy);
    svg << "<g class=\"piece\" data-id=\"" << o.id << "\" data-piece=\"" << v << "\">"
        << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
        << "\" stroke=\"white\" stroke-width=\"7\"/>"
        << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\""
        << color_for(o.id) << "\" stroke-width=\"3\"/></g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_svg(const Scene& scene, const CutSet& cuts) {
  const DepthGraph g = build_graph(scene, apply_cuts(scene, cuts));
  const auto order = depth_order(g);
  if (!order) throw Error(ErrorCode::CyclicInput, "the pieces have a depth cycle; no painter's order exists");
  return render_svg(scene, g, *order);
}

}  // namespace depthcut

#include "depthcut/cutters.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "depthcut/depth_graph.hpp"
#include "depthcut/scenes.hpp"

namespace depthcut {

Strategy parse_strategy(const std::string& name) {
  if (name == "naive") return Strategy::Naive;
  if (name == "greedy") return Strategy::Greedy;
  if (name == "partition") return Strategy::Partition;
  if (name == "segment-sensitive") return Strategy::SegmentSensitive;
  throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + name + "'");
}

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Naive: return "naive";
    case Strategy::Greedy: return "greedy";
    case Strategy::Partition: return "partition";
    case Strategy::SegmentSensitive: return "segment-sensitive";
  }
  return "unknown";
}

namespace {

bool cuttable(const Scene& scene, const Scalar& t) { return !scene.is_segments() || (t > 0 && t < 1); }

std::vector<Piece> whole_pieces(const Scene& scene) {
  std::vector<Piece> pieces;
  pieces.reserve(scene.size());
  for (std::size_t i = 0; i < scene.size(); ++i) pieces.push_back(whole_piece(scene, i));
  return pieces;
}

}  // namespace

CutSet naive_cut(const Scene& scene) { return naive_cut(scene, whole_pieces(scene)); }

CutSet naive_cut(const Scene& scene, const std::vector<Piece>& pieces) {
  CutSet cuts;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (pieces[i].object == pieces[j].object) continue;
      auto c = xy_cross(scene, pieces[i], pieces[j]);
      if (!c) continue;
      if (cuttable(scene, c->ta)) cuts.insert(scene.objects[c->a].id, c->ta);
      if (cuttable(scene, c->tb)) cuts.insert(scene.objects[c->b].id, c->tb);
    }
  return cuts;
}

CutSet greedy_cycle_cut(const Scene& scene) {
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  const auto crossings = object_crossings(scene);
  const std::size_t X = crossings->size();

  std::vector<Piece> pieces = whole_pieces(scene);
  // Current piece on each side of every crossing; `none` once a cut lands
  // exactly on the crossing.
  std::vector<std::size_t> on_a(X), on_b(X);
  std::vector<bool> a_below(X);
  std::vector<std::vector<std::size_t>> incident(pieces.size());
  for (std::size_t ci = 0; ci < X; ++ci) {
    const CrossingPoint& c = (*crossings)[ci];
    on_a[ci] = c.a;
    on_b[ci] = c.b;
    a_below[ci] = depth_order_at(scene, c) == DepthRelation::Below;
    incident[c.a].push_back(ci);
    incident[c.b].push_back(ci);
  }

  CutSet cuts;
  for (;;) {
    DepthGraph g;
    g.pieces = pieces;
    g.crossings = crossings;
    g.out.assign(pieces.size(), {});
    for (std::size_t ci = 0; ci < X; ++ci) {
      if (on_a[ci] == none || on_b[ci] == none) continue;
      DepthEdge e{on_a[ci], on_b[ci], ci};
      if (!a_below[ci]) std::swap(e.below, e.above);
      g.out[e.below].push_back(g.edges.size());
      g.edges.push_back(e);
    }
    const auto cycle = find_simple_cycle(scene, g);
    if (!cycle) break;

    // nodes[0] is the smallest piece id on the cycle.
    const std::size_t victim = cycle->nodes[0];
    const auto [from, to] = edge_params(*cycle, pieces, 0);
    const Scalar mid = (from + to) / 2;
    const std::size_t object = pieces[victim].object;
    cuts.insert(scene.objects[object].id, mid);

    Piece right = pieces[victim];
    right.lo = mid;
    right.lo_closed = false;
    pieces[victim].hi = mid;
    pieces[victim].hi_closed = false;
    const std::size_t right_id = pieces.size();
    pieces.push_back(std::move(right));
    incident.emplace_back();

    std::vector<std::size_t> keep;
    for (std::size_t ci : incident[victim]) {
      const CrossingPoint& c = (*crossings)[ci];
      std::size_t& slot = c.a == object ? on_a[ci] : on_b[ci];
      const int s = cmp(param_on(c, object), mid);
      if (s < 0) {
        keep.push_back(ci);
      } else if (s > 0) {
        slot = right_id;
        incident[right_id].push_back(ci);
      } else {
        slot = none;
      }
    }
    incident[victim] = std::move(keep);
  }
  return cuts;
}

namespace {

// Sheared plane coordinates u = x + lambda * y, v = y, chosen so that no
// scene segment is parallel to the walls u = const and all decomposition
// events have distinct u.
struct Frame {
  Scalar lambda;
  Scalar u(const Point2& p) const { return p.x + lambda * p.y; }
};

struct Event {
  Scalar u, v;
};

class VerticalDecomposition {
 public:
  VerticalDecomposition(const Scene& scene, std::vector<std::size_t> sample, const std::vector<CrossingPoint>& all)
      : scene_(scene), sample_(std::move(sample)) {
    is_sample_.assign(scene.size(), false);
    for (std::size_t s : sample_) is_sample_[s] = true;
    std::vector<Point2> points;
    for (std::size_t s : sample_) {
      points.push_back(scene.objects[s].xy_at(Scalar(0)));
      points.push_back(scene.objects[s].xy_at(Scalar(1)));
    }
    for (const CrossingPoint& c : all)
      if (is_sample_[c.a] && is_sample_[c.b]) points.push_back(c.point);
    choose_frame(points);
    for (const Point2& p : points) events_.push_back(Event{frame_.u(p), p.y});
    std::sort(events_.begin(), events_.end(), [](const Event& l, const Event& r) { return l.u < r.u; });
    build_slabs();
  }

  bool is_sample(std::size_t object) const { return is_sample_[object]; }
  std::size_t trapezoid_count() const { return roots_; }

  /// Parameters where the object's projection meets a wall.
  std::vector<Scalar> wall_crossings(std::size_t object) const {
    const Object3& o = scene_.objects[object];
    const Scalar u0 = frame_.u(o.xy_at(Scalar(0)));
    const Scalar du = frame_.u(o.xy_at(Scalar(1))) - u0;
    std::vector<Scalar> out;
    for (std::size_t e = 0; e < events_.size(); ++e) {
      Scalar t = (events_[e].u - u0) / du;
      if (t <= 0 || t >= 1) continue;
      const Scalar v = o.origin.y + t * o.direction.y;
      const auto [below, above] = wall_extent(e);
      if ((below && v < *below) || (above && v > *above)) continue;
      out.push_back(std::move(t));
    }
    return out;
  }

  /// Merged trapezoid containing the projected point at parameter t.
  std::size_t locate(std::size_t object, const Scalar& t) const {
    const Point2 p = scene_.objects[object].xy_at(t);
    const Scalar u = frame_.u(p);
    const std::size_t slab = static_cast<std::size_t>(
        std::upper_bound(events_.begin(), events_.end(), u, [](const Scalar& x, const Event& e) { return x < e.u; }) -
        events_.begin());
    std::size_t gap = 0;
    for (std::size_t s : active_[slab])
      if (v_at(s, u) < p.y) ++gap;
    return find(slab_offset_[slab] + gap);
  }

 private:
  void choose_frame(const std::vector<Point2>& points) {
    static const long candidates[][2] = {{0, 1}, {1, 3}, {-2, 7}, {3, 5}, {-5, 11}, {7, 13}, {-11, 17}, {13, 19}};
    for (const auto& c : candidates) {
      frame_.lambda = make_scalar(c[0], c[1]);
      if (generic(points)) return;
    }
    std::mt19937_64 rng(points.size());
    for (;;) {
      frame_.lambda = make_scalar(std::uniform_int_distribution<long>(-1000, 1000)(rng), 997);
      if (generic(points)) return;
    }
  }

  bool generic(const std::vector<Point2>& points) const {
    for (const Object3& o : scene_.objects)
      if (frame_.u(Point2{o.direction.x, o.direction.y}) == 0) return false;
    std::vector<Scalar> us;
    for (const Point2& p : points) us.push_back(frame_.u(p));
    std::sort(us.begin(), us.end());
    return std::adjacent_find(us.begin(), us.end()) == us.end();
  }

  Scalar u_lo(std::size_t s) const {
    const Object3& o = scene_.objects[s];
    return std::min(frame_.u(o.xy_at(Scalar(0))), frame_.u(o.xy_at(Scalar(1))));
  }
  Scalar u_hi(std::size_t s) const {
    const Object3& o = scene_.objects[s];
    return std::max(frame_.u(o.xy_at(Scalar(0))), frame_.u(o.xy_at(Scalar(1))));
  }

  Scalar v_at(std::size_t s, const Scalar& u) const {
    const Object3& o = scene_.objects[s];
    const Scalar u0 = frame_.u(o.xy_at(Scalar(0)));
    const Scalar du = frame_.u(Point2{o.direction.x, o.direction.y});
    return o.origin.y + (u - u0) / du * o.direction.y;
  }

  // Nearest sample segments strictly below and above event e, at its u.
  std::pair<Bound, Bound> wall_extent(std::size_t e) const {
    const Event& ev = events_[e];
    Bound below, above;
    for (std::size_t s : sample_) {
      if (u_lo(s) > ev.u || u_hi(s) < ev.u) continue;
      const Scalar v = v_at(s, ev.u);
      if (v < ev.v && (!below || v > *below)) below = v;
      if (v > ev.v && (!above || v < *above)) above = v;
    }
    return {below, above};
  }

  void build_slabs() {
    const std::size_t slabs = events_.size() + 1;
    active_.resize(slabs);
    slab_offset_.resize(slabs);
    std::size_t total = 0;
    for (std::size_t k = 0; k < slabs; ++k) {
      if (k > 0 && k < events_.size()) {
        const Scalar mid = (events_[k - 1].u + events_[k].u) / 2;
        for (std::size_t s : sample_)
          if (u_lo(s) <= events_[k - 1].u && u_hi(s) >= events_[k].u) active_[k].push_back(s);
        std::sort(active_[k].begin(), active_[k].end(),
                  [&](std::size_t l, std::size_t r) { return v_at(l, mid) < v_at(r, mid); });
      }
      slab_offset_[k] = total;
      total += active_[k].size() + 1;
    }
    parent_.resize(total);
    std::iota(parent_.begin(), parent_.end(), 0);
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    auto bounds = [&](std::size_t k, std::size_t g) {
      const auto& act = active_[k];
      return std::pair{g == 0 ? none : act[g - 1], g == act.size() ? none : act[g]};
    };
    for (std::size_t k = 0; k + 1 < slabs; ++k) {
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> next;
      for (std::size_t g = 0; g <= active_[k + 1].size(); ++g) next.emplace(bounds(k + 1, g), g);
      for (std::size_t g = 0; g <= active_[k].size(); ++g) {
        auto it = next.find(bounds(k, g));
        if (it != next.end()) unite(slab_offset_[k] + g, slab_offset_[k + 1] + it->second);
      }
    }
    roots_ = 0;
    for (std::size_t i = 0; i < total; ++i) roots_ += find(i) == i;
  }

  std::size_t find(std::size_t i) const {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  const Scene& scene_;
  std::vector<std::size_t> sample_;
  std::vector<bool> is_sample_;
  Frame frame_;
  std::vector<Event> events_;
  std::vector<std::vector<std::size_t>> active_;
  std::vector<std::size_t> slab_offset_;
  mutable std::vector<std::size_t> parent_;
  std::size_t roots_ = 0;
};

}  // namespace

SegmentSensitiveResult segment_sensitive_cut_detailed(const Scene& scene, const PartitionParams& params) {
  if (!scene.is_segments()) throw Error(ErrorCode::WrongKind, "segment-sensitive cutting needs a segment scene");
  SegmentSensitiveResult result;
  const SceneStats stats = scene_stats(scene);
  result.n = stats.n;
  result.X = stats.X;
  if (stats.X == 0) return result;
  if (stats.X <= stats.n) {
    result.cuts = naive_cut(scene);
    return result;
  }

  const std::size_t n = stats.n;
  const std::size_t r = (n * n + stats.X - 1) / stats.X;
  std::mt19937_64 rng(params.seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> sample(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(std::min(r, n)));
  std::sort(sample.begin(), sample.end());
  result.sample_size = sample.size();

  const VerticalDecomposition vd(scene, sample, stats.crossings);
  result.trapezoids = vd.trapezoid_count();

  // Boundary cuts: crossings with sample segments and with walls.
  std::vector<std::vector<Scalar>> boundary(n);
  for (const CrossingPoint& c : stats.crossings) {
    const bool sa = vd.is_sample(c.a), sb = vd.is_sample(c.b);
    if (!sa && !sb) continue;
    if (sa && sb) {
      boundary[c.a].push_back(c.ta);
      boundary[c.b].push_back(c.tb);
    } else if (!sa) {
      boundary[c.a].push_back(c.ta);
    } else {
      boundary[c.b].push_back(c.tb);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!vd.is_sample(i))
      for (Scalar& t : vd.wall_crossings(i)) boundary[i].push_back(std::move(t));

  std::map<std::size_t, std::vector<Piece>> groups;
  CutSet boundary_cuts;
  for (std::size_t i = 0; i < n; ++i) {
    auto& params_i = boundary[i];
    params_i.erase(std::remove_if(params_i.begin(), params_i.end(), [](const Scalar& t) { return t <= 0 || t >= 1; }),
                   params_i.end());
    std::sort(params_i.begin(), params_i.end());
    params_i.erase(std::unique(params_i.begin(), params_i.end()), params_i.end());
    for (const Scalar& t : params_i) boundary_cuts.insert(scene.objects[i].id, t);
    if (vd.is_sample(i)) continue;
    Piece current = whole_piece(scene, i);
    const Piece whole = current;
    for (std::size_t k = 0; k <= params_i.size(); ++k) {
      if (k < params_i.size()) {
        current.hi = params_i[k];
        current.hi_closed = false;
      } else {
        current.hi = whole.hi;
        current.hi_closed = whole.hi_closed;
      }
      groups[vd.locate(i, (*current.lo + *current.hi) / 2)].push_back(current);
      current.lo = current.hi;
      current.lo_closed = false;
    }
  }
  result.boundary_cuts = boundary_cuts.size();
  result.cuts = std::move(boundary_cuts);
  for (const auto& [trapezoid, pieces] : groups) result.cuts.merge(partition_cut_pieces(scene, pieces, params, rng).cuts);
  return result;
}

CutSet segment_sensitive_cut(const Scene& scene, const PartitionParams& params) {
  return segment_sensitive_cut_detailed(scene, params).cuts;
}

CutSet run_strategy(const Scene& scene, Strategy strategy, const PartitionParams& params) {
  switch (strategy) {
    case Strategy::Naive: return naive_cut(scene);
    case Strategy::Greedy: return greedy_cycle_cut(scene);
    case Strategy::Partition: return partition_cut(scene, params);
    case Strategy::SegmentSensitive: return segment_sensitive_cut(scene, params);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown strategy");
}

bool cuts_eliminate_cycles(const Scene& scene, const CutSet& cuts) {
  return depth_order(build_graph(scene, apply_cuts(scene, cuts))).has_value();
}

}  // namespace depthcut

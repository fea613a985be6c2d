#include "depthcut/depth_graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace depthcut {

using nlohmann::json;

std::optional<std::size_t> DepthGraph::edge_between(std::size_t u, std::size_t v) const {
  for (std::size_t e : out[u])
    if (edges[e].above == v) return e;
  for (std::size_t e : out[v])
    if (edges[e].above == u) return e;
  return std::nullopt;
}

const Scalar& param_on(const CrossingPoint& c, std::size_t object) {
  if (c.a == object) return c.ta;
  if (c.b == object) return c.tb;
  throw Error(ErrorCode::NotACycle, "crossing does not involve object index " + std::to_string(object));
}

std::shared_ptr<const std::vector<CrossingPoint>> object_crossings(const Scene& scene) {
  std::vector<Piece> whole;
  whole.reserve(scene.size());
  for (std::size_t i = 0; i < scene.size(); ++i) whole.push_back(whole_piece(scene, i));
  auto out = std::make_shared<std::vector<CrossingPoint>>();
  for (std::size_t i = 0; i < scene.size(); ++i)
    for (std::size_t j = i + 1; j < scene.size(); ++j)
      if (auto c = xy_cross(scene, whole[i], whole[j])) out->push_back(std::move(*c));
  return out;
}

namespace {

bool lo_before(const Bound& lo, const Scalar& t) { return !lo || *lo <= t; }

// Pieces of one object sorted by lower bound; finds the one containing t.
struct PieceIndex {
  std::vector<std::vector<std::size_t>> by_object;

  PieceIndex(const Scene& scene, const std::vector<Piece>& pieces) : by_object(scene.size()) {
    for (std::size_t i = 0; i < pieces.size(); ++i) by_object[pieces[i].object].push_back(i);
    for (auto& list : by_object)
      std::sort(list.begin(), list.end(), [&](std::size_t l, std::size_t r) {
        const Bound& a = pieces[l].lo;
        const Bound& b = pieces[r].lo;
        if (!a) return bool(b);
        return b && *a < *b;
      });
  }

  std::optional<std::size_t> locate(const std::vector<Piece>& pieces, std::size_t object, const Scalar& t) const {
    const auto& list = by_object[object];
    // First piece whose lower bound exceeds t; the candidate is just before it.
    auto it = std::partition_point(list.begin(), list.end(),
                                   [&](std::size_t p) { return lo_before(pieces[p].lo, t); });
    if (it == list.begin()) return std::nullopt;
    const std::size_t p = *std::prev(it);
    if (pieces[p].contains(t)) return p;
    return std::nullopt;
  }
};

}  // namespace

DepthGraph build_graph(const Scene& scene, std::vector<Piece> pieces) {
  return build_graph(scene, std::move(pieces), object_crossings(scene));
}

DepthGraph build_graph(const Scene& scene, std::vector<Piece> pieces,
                       std::shared_ptr<const std::vector<CrossingPoint>> crossings) {
  DepthGraph g;
  g.pieces = std::move(pieces);
  g.crossings = std::move(crossings);
  g.out.assign(g.pieces.size(), {});
  const PieceIndex index(scene, g.pieces);
  for (std::size_t ci = 0; ci < g.crossings->size(); ++ci) {
    const CrossingPoint& c = (*g.crossings)[ci];
    auto pa = index.locate(g.pieces, c.a, c.ta);
    if (!pa) continue;
    auto pb = index.locate(g.pieces, c.b, c.tb);
    if (!pb) continue;
    DepthEdge e{*pa, *pb, ci};
    if (depth_order_at(scene, c) == DepthRelation::Above) std::swap(e.below, e.above);
    g.out[e.below].push_back(g.edges.size());
    g.edges.push_back(e);
  }
  return g;
}

std::optional<std::vector<std::size_t>> depth_order(const DepthGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> indegree(n, 0);
  for (const DepthEdge& e : g.edges) ++indegree[e.above];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t e : g.out[v])
      if (--indegree[g.edges[e].above] == 0) ready.push(g.edges[e].above);
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

std::vector<std::size_t> strongly_connected_components(const DepthGraph& g, std::size_t* component_count) {
  constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.node_count();
  std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0, components = 0;

  struct Frame {
    std::size_t node;
    std::size_t edge_pos;
  };
  std::vector<Frame> call;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const std::size_t v = f.node;
      if (f.edge_pos < g.out[v].size()) {
        const std::size_t w = g.edges[g.out[v][f.edge_pos++]].above;
        if (index[w] == unvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      call.pop_back();
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
    }
  }
  if (component_count) *component_count = components;
  return comp;
}

namespace {

SimpleCycle rotate_to_smallest(SimpleCycle c) {
  const auto it = std::min_element(c.nodes.begin(), c.nodes.end());
  const auto shift = it - c.nodes.begin();
  std::rotate(c.nodes.begin(), it, c.nodes.end());
  std::rotate(c.crossings.begin(), c.crossings.begin() + shift, c.crossings.end());
  return c;
}

// Does crossing c certify that object `lower` passes below object `upper`?
bool witnesses(const Scene& scene, const CrossingPoint& c, std::size_t lower, std::size_t upper) {
  if (!((c.a == lower && c.b == upper) || (c.a == upper && c.b == lower))) return false;
  const DepthRelation r = depth_order_at(scene, c);
  return (c.a == lower) == (r == DepthRelation::Below);
}

bool strictly_between(const Scalar& t, const Scalar& a, const Scalar& b) {
  return a < b ? (a < t && t < b) : (b < t && t < a);
}

}  // namespace

std::pair<Scalar, Scalar> edge_params(const SimpleCycle& cycle, const std::vector<Piece>& pieces, std::size_t i) {
  const std::size_t k = cycle.length();
  const std::size_t object = pieces[cycle.nodes[i]].object;
  return {param_on(cycle.crossings[(i + k - 1) % k], object), param_on(cycle.crossings[i], object)};
}

std::optional<SimpleCycle> shortcut_once(const Scene& scene, const DepthGraph& g, const SimpleCycle& cycle) {
  const std::size_t k = cycle.length();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t oi = g.pieces[cycle.nodes[i]].object;
    const auto [fi, ti] = edge_params(cycle, g.pieces, i);
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      const std::size_t oj = g.pieces[cycle.nodes[j]].object;
      if (oi == oj) continue;
      auto w = xy_cross_lines(scene, oi, oj);
      if (!w) continue;
      const auto [fj, tj] = edge_params(cycle, g.pieces, j);
      if (!strictly_between(param_on(*w, oi), fi, ti) || !strictly_between(param_on(*w, oj), fj, tj)) continue;

      SimpleCycle shorter;
      const bool j_below_i = witnesses(scene, *w, oj, oi);
      if (j_below_i) {
        // nodes i..j, jumping from j back up to i at w
        for (std::size_t m = i; m <= j; ++m) shorter.nodes.push_back(cycle.nodes[m]);
        for (std::size_t m = i; m < j; ++m) shorter.crossings.push_back(cycle.crossings[m]);
      } else {
        // nodes j..k-1, 0..i, jumping from i up to j at w
        for (std::size_t m = j; m < k + i + 1; ++m) shorter.nodes.push_back(cycle.nodes[m % k]);
        for (std::size_t m = j; m < k + i; ++m) shorter.crossings.push_back(cycle.crossings[m % k]);
      }
      shorter.crossings.push_back(*w);

      // The surviving half must itself be a cycle in the depth relation.
      const std::size_t ks = shorter.length();
      for (std::size_t m = 0; m < ks; ++m) {
        const std::size_t lower = g.pieces[shorter.nodes[m]].object;
        const std::size_t upper = g.pieces[shorter.nodes[(m + 1) % ks]].object;
        if (!witnesses(scene, shorter.crossings[m], lower, upper))
          throw std::logic_error("shortcut produced a non-cycle");
      }
      return rotate_to_smallest(std::move(shorter));
    }
  }
  return std::nullopt;
}

std::optional<SimpleCycle> find_simple_cycle(const Scene& scene, const DepthGraph& g) {
  std::size_t count = 0;
  const auto comp = strongly_connected_components(g, &count);
  std::vector<std::size_t> comp_size(count, 0);
  for (std::size_t c : comp) ++comp_size[c];

  std::optional<std::size_t> start;
  for (std::size_t v = 0; v < g.node_count(); ++v)
    if (comp_size[comp[v]] >= 2) {
      start = v;
      break;
    }
  if (!start) return std::nullopt;

  // Shortest cycle through `start`, staying inside its component.
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent_edge(g.node_count(), none);
  std::vector<bool> seen(g.node_count(), false);
  std::queue<std::size_t> queue;
  queue.push(*start);
  seen[*start] = true;
  std::optional<std::size_t> closing;
  while (!queue.empty() && !closing) {
    const std::size_t v = queue.front();
    queue.pop();
    for (std::size_t e : g.out[v]) {
      const std::size_t w = g.edges[e].above;
      if (comp[w] != comp[*start]) continue;
      if (w == *start) {
        closing = e;
        break;
      }
      if (!seen[w]) {
        seen[w] = true;
        parent_edge[w] = e;
        queue.push(w);
      }
    }
  }
  if (!closing) throw std::logic_error("cyclic component without a cycle through its smallest node");

  std::vector<std::size_t> path_edges{*closing};
  for (std::size_t v = g.edges[*closing].below; v != *start; v = g.edges[parent_edge[v]].below)
    path_edges.push_back(parent_edge[v]);
  std::reverse(path_edges.begin(), path_edges.end());

  SimpleCycle cycle;
  for (std::size_t e : path_edges) {
    cycle.nodes.push_back(g.edges[e].below);
    cycle.crossings.push_back(g.crossing(g.edges[e]));
  }
  cycle = rotate_to_smallest(std::move(cycle));
  while (auto shorter = shortcut_once(scene, g, cycle)) cycle = std::move(*shorter);
  return cycle;
}

CyclePath realize_path(const Scene& scene, const std::vector<Piece>& pieces, const SimpleCycle& cycle) {
  const std::size_t k = cycle.length();
  if (k < 3 || cycle.crossings.size() != k)
    throw Error(ErrorCode::NotACycle, "a depth cycle needs at least 3 pieces, got " + std::to_string(k));
  for (std::size_t i = 0; i < k; ++i) {
    const CrossingPoint& c = cycle.crossings[i];
    const std::size_t u = pieces[cycle.nodes[i]].object;
    const std::size_t v = pieces[cycle.nodes[(i + 1) % k]].object;
    if (!((c.a == u && c.b == v) || (c.a == v && c.b == u)))
      throw Error(ErrorCode::NotACycle, "crossing " + std::to_string(i) + " does not join consecutive pieces");
  }
  CyclePath path;
  path.vertices.reserve(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    const Object3& o = scene.objects[pieces[cycle.nodes[i]].object];
    const auto [from, to] = edge_params(cycle, pieces, i);
    path.vertices.push_back(o.at(from));
    path.vertices.push_back(o.at(to));
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Point3& up_from = path.vertices[2 * i + 1];
    const Point3& up_to = path.vertices[(2 * i + 2) % (2 * k)];
    if (!(up_from.z < up_to.z))
      throw Error(ErrorCode::OrientationViolation, "jump " + std::to_string(i) + " does not go upward");
  }
  return path;
}

std::vector<SimpleCycle> enumerate_triangular_cycles(const Scene& scene) {
  std::vector<Piece> whole;
  for (std::size_t i = 0; i < scene.size(); ++i) whole.push_back(whole_piece(scene, i));
  const DepthGraph g = build_graph(scene, std::move(whole));
  const std::size_t n = g.node_count();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  // below[u * n + v] = edge index when u passes below v.
  std::vector<std::size_t> below(n * n, none);
  for (std::size_t e = 0; e < g.edges.size(); ++e) below[g.edges[e].below * n + g.edges[e].above] = e;

  std::vector<SimpleCycle> cycles;
  auto emit = [&](std::size_t a, std::size_t b, std::size_t c) {
    SimpleCycle cy;
    cy.nodes = {a, b, c};
    cy.crossings = {g.crossing(g.edges[below[a * n + b]]), g.crossing(g.edges[below[b * n + c]]),
                    g.crossing(g.edges[below[c * n + a]])};
    cycles.push_back(std::move(cy));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool ij = below[i * n + j] != none;
      const bool ji = below[j * n + i] != none;
      if (!ij && !ji) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (ij && below[j * n + k] != none && below[k * n + i] != none) emit(i, j, k);
        if (ji && below[i * n + k] != none && below[k * n + j] != none) emit(i, k, j);
      }
    }
  return cycles;
}

bool is_elementary(const Scene& scene, const SimpleCycle& triangle) {
  if (scene.is_segments()) throw Error(ErrorCode::WrongKind, "is_elementary is defined for line scenes");
  if (triangle.length() != 3) throw Error(ErrorCode::NotACycle, "expected a triangular cycle");
  std::vector<std::size_t> own;
  for (const CrossingPoint& c : triangle.crossings) {
    own.push_back(c.a);
    own.push_back(c.b);
  }
  for (std::size_t l = 0; l < scene.size(); ++l) {
    if (std::find(own.begin(), own.end(), l) != own.end()) continue;
    const Object3& o = scene.objects[l];
    int pos = 0, neg = 0;
    for (const CrossingPoint& c : triangle.crossings) {
      const int s = sgn(o.direction.x * (c.point.y - o.origin.y) - o.direction.y * (c.point.x - o.origin.x));
      pos += s > 0;
      neg += s < 0;
    }
    if (pos > 0 && neg > 0) return false;
  }
  return true;
}

json piece_to_json(const Scene& scene, const Piece& piece) {
  return {{"id", scene.objects[piece.object].id},
          {"lo", piece.lo ? format_scalar(*piece.lo) : std::string("-inf")},
          {"hi", piece.hi ? format_scalar(*piece.hi) : std::string("+inf")}};
}

json cycle_to_json(const Scene& scene, const std::vector<Piece>& pieces, const SimpleCycle& cycle) {
  json j;
  j["length"] = cycle.length();
  json nodes = json::array();
  for (std::size_t v : cycle.nodes) nodes.push_back(piece_to_json(scene, pieces[v]));
  j["pieces"] = std::move(nodes);
  json crossings = json::array();
  for (const CrossingPoint& c : cycle.crossings)
    crossings.push_back({{"x", format_scalar(c.point.x)},
                         {"y", format_scalar(c.point.y)},
                         {"ids", {scene.objects[c.a].id, scene.objects[c.b].id}}});
  j["crossings"] = std::move(crossings);
  return j;
}

json order_to_json(const Scene& scene, const DepthGraph& g, const std::vector<std::size_t>& order) {
  json j = json::array();
  for (std::size_t v : order) j.push_back(piece_to_json(scene, g.pieces[v]));
  return j;
}

}  // namespace depthcut

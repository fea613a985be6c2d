#include "depthcut/partition.hpp"

#include <algorithm>
#include <limits>

#include "depthcut/cutters.hpp"

namespace depthcut {

using nlohmann::json;

Plane::Plane(Scalar a_, Scalar b_, Scalar c_, Scalar d_) {
  if (c_ == 0) throw Error(ErrorCode::InvalidArgument, "vertical plane (c == 0)");
  a = a_ / c_;
  b = b_ / c_;
  c = 1;
  d = d_ / c_;
}

Scalar Plane::z_at(const Scalar& x, const Scalar& y) const { return -(a * x + b * y + d) / c; }

int Plane::side(const Point3& p) const { return sgn(a * p.x + b * p.y + c * p.z + d); }

std::string sign_string(SignVector sigma, std::size_t degree) {
  std::string s;
  for (std::size_t i = 0; i < degree; ++i) s += (sigma >> i & 1u) ? '+' : '-';
  return s;
}

namespace {

// Linear form of the plane along the object: alpha * t + beta.
std::pair<Scalar, Scalar> form_along(const Plane& p, const Object3& o) {
  Scalar alpha = p.a * o.direction.x + p.b * o.direction.y + p.c * o.direction.z;
  Scalar beta = p.a * o.origin.x + p.b * o.origin.y + p.c * o.origin.z + p.d;
  return {std::move(alpha), std::move(beta)};
}

bool contains_object(const Plane& p, const Object3& o) {
  const auto [alpha, beta] = form_along(p, o);
  return alpha == 0 && beta == 0;
}

Scalar random_rational(std::mt19937_64& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  return make_scalar(num(rng), den(rng));
}

// A representative parameter inside the piece.
Scalar anchor_param(const Piece& p) {
  if (p.lo && p.hi) return (*p.lo + *p.hi) / 2;
  if (p.lo) return *p.lo + 1;
  if (p.hi) return *p.hi - 1;
  return Scalar(0);
}

// Sub-interval endpoints of a piece split at the given sorted interior
// parameters, as pieces.
std::vector<Piece> split_piece(const Piece& piece, const std::vector<Scalar>& params) {
  std::vector<Piece> parts;
  Piece current = piece;
  for (const Scalar& t : params) {
    current.hi = t;
    current.hi_closed = false;
    parts.push_back(current);
    current.lo = t;
    current.lo_closed = false;
    current.hi = piece.hi;
    current.hi_closed = piece.hi_closed;
  }
  parts.push_back(current);
  return parts;
}

std::vector<Scalar> params_on(const CutSet& cuts) {
  std::vector<Scalar> out;
  for (const Cut& c : cuts) out.push_back(c.t);
  return out;
}

}  // namespace

PlaneSet choose_planes(const Scene& scene, const std::vector<Piece>& pieces, int degree, std::mt19937_64& rng) {
  PlaneSet planes;
  if (degree <= 0) return planes;
  std::vector<Point3> anchors;
  anchors.reserve(pieces.size());
  for (const Piece& p : pieces) anchors.push_back(scene.objects[p.object].at(anchor_param(p)));

  std::vector<Scalar> heights(anchors.size());
  while (planes.size() < static_cast<std::size_t>(degree)) {
    const Scalar a = random_rational(rng, 8, 8);
    const Scalar b = random_rational(rng, 8, 8);
    for (std::size_t i = 0; i < anchors.size(); ++i) heights[i] = a * anchors[i].x + b * anchors[i].y + anchors[i].z;
    Scalar median(0);
    if (!heights.empty()) {
      std::sort(heights.begin(), heights.end());
      const std::size_t m = heights.size() / 2;
      median = heights.size() % 2 ? heights[m] : (heights[m - 1] + heights[m]) / 2;
    }
    Plane plane(a, b, Scalar(1), -median);
    if (std::find(planes.begin(), planes.end(), plane) == planes.end()) planes.push_back(std::move(plane));
  }
  return planes;
}

CutSet zero_set_cuts(const Scene& scene, const Piece& piece, const PlaneSet& planes) {
  const Object3& o = scene.objects[piece.object];
  CutSet cuts;
  for (const Plane& p : planes) {
    const auto [alpha, beta] = form_along(p, o);
    if (alpha == 0) continue;  // parallel, or contained (that factor is dropped)
    Scalar t = -beta / alpha;
    if (piece.interior(t)) cuts.insert(o.id, std::move(t));
  }
  return cuts;
}

CutSet criticality_cuts(const Scene& scene, const Piece& piece, const PlaneSet& planes) {
  const Object3& o = scene.objects[piece.object];
  // Restrictions z = slope * t + offset inside the vertical plane of o.
  std::vector<std::pair<Scalar, Scalar>> restricted;
  for (const Plane& p : planes) {
    if (contains_object(p, o)) continue;
    Scalar slope = -(p.a * o.direction.x + p.b * o.direction.y) / p.c;
    Scalar offset = -(p.a * o.origin.x + p.b * o.origin.y + p.d) / p.c;
    std::pair<Scalar, Scalar> line{std::move(slope), std::move(offset)};
    if (std::find(restricted.begin(), restricted.end(), line) == restricted.end()) restricted.push_back(std::move(line));
  }
  CutSet cuts;
  for (std::size_t i = 0; i < restricted.size(); ++i)
    for (std::size_t j = i + 1; j < restricted.size(); ++j) {
      if (restricted[i].first == restricted[j].first) continue;
      Scalar t = (restricted[j].second - restricted[i].second) / (restricted[i].first - restricted[j].first);
      if (piece.interior(t)) cuts.insert(o.id, std::move(t));
    }
  return cuts;
}

std::size_t level(const Point3& q, const PlaneSet& planes) {
  std::size_t below = 0;
  for (const Plane& p : planes) {
    const int s = p.side(q);
    if (s == 0) throw Error(ErrorCode::OnZeroSet, "point lies on a partition plane");
    below += s > 0;
  }
  return below;
}

CellMap assign_cells(const Scene& scene, const std::vector<Piece>& pieces, const PlaneSet& planes) {
  CellMap cells;
  for (const Piece& piece : pieces) {
    const Object3& o = scene.objects[piece.object];
    if (std::any_of(planes.begin(), planes.end(), [&](const Plane& p) { return contains_object(p, o); })) continue;
    for (const Piece& part : split_piece(piece, params_on(zero_set_cuts(scene, piece, planes)))) {
      const Point3 q = o.at(anchor_param(part));
      SignVector sigma = 0;
      for (std::size_t i = 0; i < planes.size(); ++i)
        if (planes[i].side(q) > 0) sigma |= SignVector{1} << i;
      cells[sigma].push_back(part);
    }
  }
  return cells;
}

namespace {

struct Recursion {
  const Scene& scene;
  const PartitionParams& params;
  std::mt19937_64& rng;
  PartitionResult result;

  static std::size_t max_load(const CellMap& cells) {
    std::size_t m = 0;
    for (const auto& [sigma, list] : cells) m = std::max(m, list.size());
    return m;
  }

  bool load_ok(std::size_t load, std::size_t n) const {
    return Scalar(static_cast<long>(load)) <= params.load_factor * static_cast<long>(n);
  }

  void leaf(const std::vector<Piece>& pieces) {
    ++result.stats.leaves;
    const CutSet cuts = naive_cut(scene, pieces);
    result.stats.leaf_cuts += cuts.size();
    result.cuts.merge(cuts);
  }

  void split(const std::vector<Piece>& pieces, const PlaneSet& planes, const CellMap& cells, std::size_t depth) {
    std::map<std::size_t, std::size_t> per_object;
    for (const Piece& piece : pieces) {
      CutSet local = zero_set_cuts(scene, piece, planes);
      local.merge(criticality_cuts(scene, piece, planes));
      result.stats.nonleaf_cuts += local.size();
      const std::size_t total = per_object[piece.object] += local.size();
      result.stats.max_nonleaf_cuts_per_object = std::max(result.stats.max_nonleaf_cuts_per_object, total);
      result.cuts.merge(local);
    }
    for (const auto& [sigma, cell_pieces] : cells) run(cell_pieces, depth + 1, nullptr);
  }

  void run(const std::vector<Piece>& pieces, std::size_t depth, const PlaneSet* fixed) {
    ++result.stats.subproblems;
    result.stats.max_depth = std::max(result.stats.max_depth, depth);
    if (fixed) {
      if (depth == 0) result.top_planes = *fixed;
      split(pieces, *fixed, assign_cells(scene, pieces, *fixed), depth);
      return;
    }
    if (pieces.size() <= params.leaf_threshold || params.degree <= 0) {
      leaf(pieces);
      return;
    }
    PlaneSet best_planes;
    CellMap best_cells;
    std::size_t best_load = std::numeric_limits<std::size_t>::max();
    for (int attempt = 0; attempt < std::max(1, params.max_retries); ++attempt) {
      PlaneSet planes = choose_planes(scene, pieces, params.degree, rng);
      CellMap cells = assign_cells(scene, pieces, planes);
      const std::size_t load = max_load(cells);
      if (load < best_load) {
        best_load = load;
        best_planes = std::move(planes);
        best_cells = std::move(cells);
      }
      if (load_ok(best_load, pieces.size())) break;
    }
    if (!load_ok(best_load, pieces.size())) {
      ++result.stats.fallbacks;
      leaf(pieces);
      return;
    }
    if (depth == 0) result.top_planes = best_planes;
    split(pieces, best_planes, best_cells, depth);
  }
};

std::vector<Piece> whole_pieces(const Scene& scene) {
  std::vector<Piece> pieces;
  pieces.reserve(scene.size());
  for (std::size_t i = 0; i < scene.size(); ++i) pieces.push_back(whole_piece(scene, i));
  return pieces;
}

}  // namespace

PartitionResult partition_cut_pieces(const Scene& scene, const std::vector<Piece>& pieces,
                                     const PartitionParams& params, std::mt19937_64& rng) {
  Recursion r{scene, params, rng, {}};
  r.run(pieces, 0, nullptr);
  return std::move(r.result);
}

PartitionResult partition_cut_detailed(const Scene& scene, const PartitionParams& params) {
  std::mt19937_64 rng(params.seed);
  return partition_cut_pieces(scene, whole_pieces(scene), params, rng);
}

PartitionResult partition_cut_with_planes(const Scene& scene, const PlaneSet& top, const PartitionParams& params) {
  std::mt19937_64 rng(params.seed);
  Recursion r{scene, params, rng, {}};
  r.run(whole_pieces(scene), 0, &top);
  return std::move(r.result);
}

CutSet partition_cut(const Scene& scene, const PartitionParams& params) {
  return partition_cut_detailed(scene, params).cuts;
}

json planes_to_json(const PlaneSet& planes) {
  json j = json::array();
  for (const Plane& p : planes)
    j.push_back({{"a", format_scalar(p.a)}, {"b", format_scalar(p.b)}, {"c", format_scalar(p.c)},
                 {"d", format_scalar(p.d)}});
  return j;
}

PlaneSet planes_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "plane set must be a JSON array");
  PlaneSet planes;
  for (const json& jp : j) {
    auto get = [&](const char* k) {
      if (!jp.contains(k) || !jp.at(k).is_string()) throw Error(ErrorCode::Parse, std::string("plane field ") + k);
      return parse_scalar(jp.at(k).get<std::string>());
    };
    planes.emplace_back(get("a"), get("b"), get("c"), get("d"));
  }
  return planes;
}

json params_to_json(const PartitionParams& p) {
  return {{"degree", p.degree},
          {"leaf_threshold", p.leaf_threshold},
          {"load_factor", format_scalar(p.load_factor)},
          {"max_retries", p.max_retries},
          {"seed", p.seed}};
}

PartitionParams params_from_json(const json& j, PartitionParams p) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "partition config must be a JSON object");
  try {
    if (j.contains("degree")) p.degree = j.at("degree").get<int>();
    if (j.contains("leaf_threshold")) p.leaf_threshold = j.at("leaf_threshold").get<std::size_t>();
    if (j.contains("load_factor")) p.load_factor = parse_scalar(j.at("load_factor").get<std::string>());
    if (j.contains("max_retries")) p.max_retries = j.at("max_retries").get<int>();
    if (j.contains("seed")) p.seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("partition config: ") + e.what());
  }
  if (p.degree < 0 || p.degree > 31) throw Error(ErrorCode::InvalidArgument, "degree must be in [0, 31]");
  if (p.leaf_threshold < 2) throw Error(ErrorCode::InvalidArgument, "leaf_threshold must be >= 2");
  return p;
}

}  // namespace depthcut

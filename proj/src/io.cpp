#include "depthcut/io.hpp"

#include <fstream>
#include <sstream>

namespace depthcut {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(mpz_class(j.dump()));
  throw Error(ErrorCode::Parse, "coordinate must be a \"p/q\" string, got " + j.dump());
}

ObjectId id_from_json(const json& j) {
  if (!j.is_number_integer()) throw Error(ErrorCode::Parse, "object id must be an integer, got " + j.dump());
  return j.get<ObjectId>();
}

}  // namespace

json to_json(const Point3& p) { return json::array({format_scalar(p.x), format_scalar(p.y), format_scalar(p.z)}); }

Point3 point3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::Parse, "point must be a 3-array, got " + j.dump());
  return Point3{scalar_from_json(j[0]), scalar_from_json(j[1]), scalar_from_json(j[2])};
}

json scene_to_json(const Scene& scene) {
  json j;
  const bool segments = scene.is_segments();
  j["kind"] = segments ? "segments" : "lines";
  json objects = json::array();
  for (const Object3& o : scene.objects) {
    json jo;
    jo["id"] = o.id;
    if (segments) {
      jo["a"] = to_json(o.origin);
      jo["b"] = to_json(o.origin + o.direction);
    } else {
      jo["origin"] = to_json(o.origin);
      jo["direction"] = to_json(o.direction);
    }
    objects.push_back(std::move(jo));
  }
  j["objects"] = std::move(objects);
  if (!scene.meta.is_null()) j["meta"] = scene.meta;
  return j;
}

Scene scene_from_json(const json& j) {
  Scene scene;
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "lines")
    scene.kind = SceneKind::Lines;
  else if (kind == "segments")
    scene.kind = SceneKind::Segments;
  else
    throw Error(ErrorCode::Parse, "unknown scene kind '" + kind + "'");
  const json& objects = field(j, "objects");
  if (!objects.is_array()) throw Error(ErrorCode::Parse, "'objects' must be an array");
  for (const json& jo : objects) {
    const ObjectId id = id_from_json(field(jo, "id"));
    if (scene.is_segments())
      scene.objects.push_back(make_segment(id, point3_from_json(field(jo, "a")), point3_from_json(field(jo, "b"))));
    else
      scene.objects.push_back(
          make_line(id, point3_from_json(field(jo, "origin")), point3_from_json(field(jo, "direction"))));
  }
  if (j.contains("meta")) scene.meta = j.at("meta");
  return scene;
}

json cutset_to_json(const CutSet& cuts) {
  json j = json::array();
  for (const Cut& c : cuts) j.push_back({{"id", c.object}, {"t", format_scalar(c.t)}});
  return j;
}

CutSet cutset_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "cut set must be a JSON array");
  CutSet cuts;
  for (const json& jc : j) cuts.insert(id_from_json(field(jc, "id")), scalar_from_json(field(jc, "t")));
  return cuts;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << text;
}

Scene read_scene(const std::filesystem::path& path) { return scene_from_json(read_json_file(path)); }

CutSet read_cutset(const std::filesystem::path& path) { return cutset_from_json(read_json_file(path)); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace depthcut

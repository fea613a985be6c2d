#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "depthcut/geometry.hpp"

namespace depthcut {

// Scene file:
//   {"kind":"lines"|"segments",
//    "objects":[{"id":1,"origin":["0","0","0"],"direction":["1","0","0"]}, ...],
//    "meta":{...}}
// Segments use "a"/"b" instead of "origin"/"direction". Every coordinate is
// a "p/q" or integer string. CutSet file: [{"id":1,"t":"1/2"}, ...].

nlohmann::json to_json(const Point3& p);
Point3 point3_from_json(const nlohmann::json& j);

nlohmann::json scene_to_json(const Scene& scene);
Scene scene_from_json(const nlohmann::json& j);

nlohmann::json cutset_to_json(const CutSet& cuts);
CutSet cutset_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

Scene read_scene(const std::filesystem::path& path);
CutSet read_cutset(const std::filesystem::path& path);

/// Serialized with two-space indentation and a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace depthcut

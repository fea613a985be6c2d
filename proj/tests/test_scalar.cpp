#include <doctest.h>

#include "depthcut/io.hpp"
#include "depthcut/scalar.hpp"
#include "depthcut/scenes.hpp"
#include "fixtures.hpp"

using namespace depthcut;
using fixtures::q;

TEST_CASE("parse and format are canonical") {
  CHECK(parse_scalar("6/4") == q(3, 2));
  CHECK(format_scalar(parse_scalar("6/4")) == "3/2");
  CHECK(format_scalar(parse_scalar("-10/5")) == "-2");
  CHECK(format_scalar(parse_scalar("7")) == "7");
  CHECK(format_scalar(parse_scalar("-0")) == "0");
  CHECK(parse_scalar("123456789012345678901234567890/3") == Scalar("41152263004115226300411522630"));
}

TEST_CASE("malformed scalars are rejected") {
  for (const char* bad : {"", "1/0", "1/-2", "a", "1.5", "1/", "/2", "1//2", " 1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_scalar(bad), Error);
  }
  try {
    parse_scalar("3/0");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
}

TEST_CASE("arithmetic stays canonical") {
  const Scalar a = q(1, 3) + q(1, 6);
  CHECK(a.get_num() == 1);
  CHECK(a.get_den() == 2);
  const Scalar b = q(2, 4) * q(-4, 6);
  CHECK(format_scalar(b) == "-1/3");
  CHECK(sign(b) == -1);
  CHECK(sign(Scalar(0)) == 0);
}

TEST_CASE("scene JSON round trip is bit exact") {
  const Scene s = gen_random(20, 11);
  const std::string once = dump(scene_to_json(s));
  const std::string twice = dump(scene_to_json(scene_from_json(nlohmann::json::parse(once))));
  CHECK(once == twice);

  const Scene seg = gen_random_segments(15, 4);
  const std::string seg_once = dump(scene_to_json(seg));
  CHECK(dump(scene_to_json(scene_from_json(nlohmann::json::parse(seg_once)))) == seg_once);
}

TEST_CASE("scene JSON accepts integer numbers and rejects junk") {
  const auto j = nlohmann::json::parse(R"({"kind":"lines","objects":[{"id":1,"origin":[0,"1/2",3],"direction":["1","0","0"]}]})");
  const Scene s = scene_from_json(j);
  REQUIRE(s.size() == 1);
  CHECK(s.objects[0].origin.y == q(1, 2));
  CHECK_THROWS_AS(scene_from_json(nlohmann::json::parse(R"({"kind":"curves","objects":[]})")), Error);
  CHECK_THROWS_AS(scene_from_json(nlohmann::json::parse(R"({"kind":"lines","objects":[{"id":1,"origin":["x","0","0"],"direction":["1","0","0"]}]})")),
                  Error);
}

TEST_CASE("cut set JSON round trip") {
  CutSet cuts;
  cuts.insert(3, q(1, 2));
  cuts.insert(1, q(-7, 3));
  cuts.insert(1, q(-7, 3));
  CHECK(cuts.size() == 2);
  const auto j = cutset_to_json(cuts);
  CHECK(j.dump() == R"([{"id":1,"t":"-7/3"},{"id":3,"t":"1/2"}])");
  CHECK(cutset_from_json(j) == cuts);
}

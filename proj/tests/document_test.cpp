#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "crossfam/claims.hpp"
#include "crossfam/document.hpp"
#include "crossfam/svg.hpp"

using namespace crossfam;
using json = nlohmann::ordered_json;

namespace {

std::vector<Instance> sample_instances() {
  std::vector<Instance> out;
  out.push_back(elbow_family(random_points(12, 2, GeneralPosition::Orthogonal)));
  out.push_back(elbow_hard_pointset(2));
  out.push_back(crossing_triangles_grid(2));
  out.push_back(ham_cycle_max_odd(3));
  out.push_back(ham_cycle_max_even(3));
  out.push_back(blades_pointset(2));
  out.push_back(villanger_pointset(3));
  out.push_back(convex_cycles_family(radial_separated_sets(4, 3), 4));
  out.push_back(intersecting_triangles(random_points(12, 5, GeneralPosition::Strict)));
  out.push_back(three_ray_pointset(2));
  out.push_back(convex_intersecting_family(convex_groups(2)));
  return out;
}

ErrorCode parse_error(const std::string& text) {
  try {
    from_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "document accepted: " << text;
  return ErrorCode::DegenerateInput;
}

std::string minimal() {
  return R"({"schema_version":"1.0","name":"t","parameters":{},
    "points":[{"x":"0","y":"0","label":"p"},{"x":"1/2","y":"3","label":"q"},{"x":"2","y":"-1","label":"r"}],
    "families":[],"cycles":[[0,1,2]],
    "claims":[{"description":"d","verifier":"cycle_crossings","cycle":0,"relation":"eq","value":0}],
    "guides":[]})";
}

}  // namespace

TEST(Document, RoundTripIsIdentity) {
  for (const Instance& inst : sample_instances()) {
    std::string first = to_json(inst);
    Instance back = from_json(first);
    EXPECT_EQ(to_json(back), first) << inst.name;
    EXPECT_EQ(back.points.points, inst.points.points);
    EXPECT_EQ(back.claims.size(), inst.claims.size());
    for (const ClaimCheck& c : verify_instance(back)) EXPECT_TRUE(c.passed) << inst.name << " " << c.claim.verifier;
  }
}

TEST(Document, RationalsAreStrings) {
  json doc = json::parse(to_json(villanger_pointset(2)));
  for (const auto& p : doc["points"]) {
    EXPECT_TRUE(p["x"].is_string());
    EXPECT_TRUE(p["y"].is_string());
  }
  EXPECT_EQ(doc["schema_version"], kSchemaVersion);
}

TEST(Document, AcceptsDecimalInput) {
  json doc = json::parse(minimal());
  doc["points"][1]["x"] = "0.5";
  Instance inst = from_json(doc.dump());
  EXPECT_EQ(inst.points[1].x, Rational(1, 2));
  EXPECT_EQ(to_json(inst), to_json(from_json(minimal())));
}

TEST(Document, SchemaViolations) {
  EXPECT_EQ(parse_error("not json"), ErrorCode::SchemaViolation);
  EXPECT_EQ(parse_error("[]"), ErrorCode::SchemaViolation);
  auto mutate = [](const std::function<void(json&)>& f) {
    json doc = json::parse(minimal());
    f(doc);
    return doc.dump();
  };
  EXPECT_EQ(parse_error(mutate([](json& d) { d["points"][0]["x"] = "1/0"; })), ErrorCode::SchemaViolation);
  EXPECT_EQ(parse_error(mutate([](json& d) { d["points"][0]["x"] = 0.5; })), ErrorCode::SchemaViolation);
  EXPECT_EQ(parse_error(mutate([](json& d) { d["cycles"][0][2] = 9; })), ErrorCode::SchemaViolation);
  EXPECT_EQ(parse_error(mutate([](json& d) { d["claims"][0]["verifier"] = "nope"; })), ErrorCode::SchemaViolation);
  EXPECT_EQ(parse_error(mutate([](json& d) { d["claims"][0]["relation"] = "lt"; })), ErrorCode::SchemaViolation);
  EXPECT_EQ(parse_error(mutate([](json& d) { d["claims"][0]["cycle"] = 4; })), ErrorCode::SchemaViolation);
  EXPECT_EQ(parse_error(mutate([](json& d) { d.erase("points"); })), ErrorCode::SchemaViolation);
  EXPECT_EQ(parse_error(mutate([](json& d) { d["schema_version"] = "9.9"; })), ErrorCode::SchemaViolation);
  EXPECT_EQ(parse_error(mutate([](json& d) {
              d["families"] = json::array({{{"kind", "crossing"},
                                            {"members", json::array({{{"graph", "triangle"},
                                                                      {"vertices", json::array({0, 1, 7})}}})}}});
            })),
            ErrorCode::SchemaViolation);
  EXPECT_EQ(parse_error(mutate([](json& d) {
              d["families"] = json::array({{{"kind", "crossing"},
                                            {"members", json::array({{{"graph", "hexagon"},
                                                                      {"vertices", json::array({0, 1, 2})}}})}}});
            })),
            ErrorCode::SchemaViolation);
}

TEST(Document, PointsFromBareArray) {
  PointSet ps = points_from_json(R"([{"x":"1","y":"2"},{"x":"3/4","y":"-1","label":"z"}])");
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(ps[1].x, Rational(3, 4));
  PointSet from_doc = points_from_json(minimal());
  EXPECT_EQ(from_doc.size(), 3u);
  EXPECT_EQ(from_doc.labels[2], "r");
}

TEST(Document, TamperedCycleFails) {
  Instance inst = ham_cycle_max_even(3);
  inst.cycles[0].order = {0, 1, 2, 3, 4, 5};
  Instance back = from_json(to_json(inst));
  ClaimCheck c = check_claim(back, back.claims[0]);
  EXPECT_FALSE(c.passed);
  EXPECT_LT(c.computed, c.claim.value);
}

TEST(Svg, PentagramMarksFiveCrossings) {
  std::string svg = render_svg(ham_cycle_max_odd(2));
  std::size_t marks = 0;
  for (std::size_t pos = svg.find("#d62728"); pos != std::string::npos; pos = svg.find("#d62728", pos + 1)) ++marks;
  EXPECT_EQ(marks, 5u);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  RenderOptions plain;
  plain.mark_crossings = false;
  EXPECT_EQ(render_svg(ham_cycle_max_odd(2), plain).find("#d62728"), std::string::npos);
}

TEST(Svg, PointsOnlyAndDeterministic) {
  Instance inst = from_json(minimal());
  inst.cycles.clear();
  inst.claims.clear();
  std::string svg = render_svg(inst);
  EXPECT_EQ(svg.find("<line"), std::string::npos);
  EXPECT_EQ(svg.find("<polygon"), std::string::npos);
  EXPECT_NE(svg.find("<circle"), std::string::npos);
  Instance v = villanger_pointset(3);
  EXPECT_EQ(render_svg(v), render_svg(v));
}

TEST(Svg, CrossingPoint) {
  Point p = crossing_point({Point(0, 0), Point(2, 2)}, {Point(0, 2), Point(2, 0)});
  EXPECT_EQ(p, Point(1, 1));
  Point q = crossing_point({Point(0, 0), Point(3, 1)}, {Point(1, 1), Point(2, -1)});
  EXPECT_EQ(q, Point(Rational(9, 7), Rational(3, 7)));
  EXPECT_THROW(crossing_point({Point(0, 0), Point(1, 0)}, {Point(0, 1), Point(1, 1)}), Error);
}

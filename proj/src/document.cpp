#include "crossfam/document.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>

#include "crossfam/claims.hpp"

namespace crossfam {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema(const std::string& message) { throw Error(ErrorCode::SchemaViolation, message); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) schema(std::string("expected an object holding '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) schema(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_string()) schema(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t index_value(const json& v, std::size_t bound, const char* what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) schema(std::string(what) + " must be a nonnegative integer");
  auto idx = static_cast<std::size_t>(v.get<std::int64_t>());
  if (idx >= bound) schema(std::string(what) + " " + std::to_string(idx) + " out of range");
  return idx;
}

Rational rational_value(const json& v, const char* what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  schema(std::string(what) + " must be a rational string");
}

json point_json(const Point& p, const std::string& label) {
  json o;
  o["x"] = format_rational(p.x);
  o["y"] = format_rational(p.y);
  o["label"] = label;
  return o;
}

PointSet parse_points(const json& arr) {
  if (!arr.is_array()) schema("'points' must be an array");
  PointSet ps;
  bool any_label = false;
  for (const json& p : arr) {
    ps.points.emplace_back(rational_value(field(p, "x"), "x"), rational_value(field(p, "y"), "y"));
    std::string label;
    if (p.contains("label")) {
      if (!p["label"].is_string()) schema("'label' must be a string");
      label = p["label"].get<std::string>();
    }
    any_label = any_label || !label.empty();
    ps.labels.push_back(label);
  }
  if (!any_label) ps.labels.clear();
  return ps;
}

}  // namespace

std::string to_json(const Instance& inst) {
  std::map<Point, std::size_t> index;
  for (std::size_t i = 0; i < inst.points.size(); ++i) index.emplace(inst.points[i], i);
  auto lookup = [&](const Point& p) {
    auto it = index.find(p);
    if (it == index.end()) schema("graph vertex is not one of the instance points");
    return it->second;
  };

  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["name"] = inst.name;
  json params = json::object();
  for (const auto& [k, v] : inst.parameters) params[k] = v;
  doc["parameters"] = params;
  json points = json::array();
  for (std::size_t i = 0; i < inst.points.size(); ++i)
    points.push_back(point_json(inst.points[i], inst.points.labels.empty() ? "" : inst.points.labels[i]));
  doc["points"] = points;
  json families = json::array();
  for (const Family& f : inst.families) {
    json jf;
    jf["kind"] = to_string(f.kind);
    json members = json::array();
    for (const GeomGraph& g : f.members) {
      json jm;
      jm["graph"] = to_string(g.kind());
      json verts = json::array();
      for (const Point& v : g.vertices()) verts.push_back(lookup(v));
      jm["vertices"] = verts;
      members.push_back(jm);
    }
    jf["members"] = members;
    families.push_back(jf);
  }
  doc["families"] = families;
  json cycles = json::array();
  for (const HamiltonianCycle& c : inst.cycles) cycles.push_back(c.order);
  doc["cycles"] = cycles;
  json claims = json::array();
  for (const Claim& c : inst.claims) {
    json jc;
    jc["description"] = c.description;
    jc["verifier"] = c.verifier;
    if (c.family) jc["family"] = *c.family;
    if (c.cycle) jc["cycle"] = *c.cycle;
    if (c.edge) jc["edge"] = *c.edge;
    jc["relation"] = to_string(c.relation);
    jc["value"] = c.value;
    claims.push_back(jc);
  }
  doc["claims"] = claims;
  json guides = json::array();
  for (const Line& l : inst.guides)
    guides.push_back(json{{"a", format_rational(l.a)}, {"b", format_rational(l.b)}, {"c", format_rational(l.c)}});
  doc["guides"] = guides;
  return doc.dump(2) + "\n";
}

Instance from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
  try {
    std::string version = string_field(doc, "schema_version");
    if (version != kSchemaVersion) schema("unsupported schema_version '" + version + "'");
    Instance inst;
    inst.name = string_field(doc, "name");
    const json& params = field(doc, "parameters");
    if (!params.is_object()) schema("'parameters' must be an object");
    for (const auto& [k, v] : params.items()) {
      if (!v.is_string()) schema("parameter '" + k + "' must be a string");
      inst.parameters.emplace_back(k, v.get<std::string>());
    }
    inst.points = parse_points(field(doc, "points"));
    const std::size_t n = inst.points.size();

    const json& families = field(doc, "families");
    if (!families.is_array()) schema("'families' must be an array");
    for (const json& jf : families) {
      Family f;
      std::string kind = string_field(jf, "kind");
      if (kind == "crossing")
        f.kind = FamilyKind::Crossing;
      else if (kind == "intersecting")
        f.kind = FamilyKind::Intersecting;
      else
        schema("unknown family kind '" + kind + "'");
      const json& members = field(jf, "members");
      if (!members.is_array()) schema("'members' must be an array");
      for (const json& jm : members) {
        GraphKind gk = graph_kind_from_string(string_field(jm, "graph"));
        const json& verts = field(jm, "vertices");
        if (!verts.is_array()) schema("'vertices' must be an array");
        std::vector<Point> pts;
        for (const json& v : verts) pts.push_back(inst.points[index_value(v, n, "vertex index")]);
        try {
          f.members.emplace_back(gk, std::move(pts));
        } catch (const Error& e) {
          schema(std::string("invalid graph: ") + e.what());
        }
      }
      inst.families.push_back(std::move(f));
    }

    const json& cycles = field(doc, "cycles");
    if (!cycles.is_array()) schema("'cycles' must be an array");
    for (const json& jc : cycles) {
      if (!jc.is_array()) schema("each cycle must be an array of indices");
      HamiltonianCycle c;
      for (const json& v : jc) c.order.push_back(index_value(v, n, "cycle index"));
      try {
        c.validate(n);
      } catch (const Error& e) {
        schema(std::string("invalid cycle: ") + e.what());
      }
      inst.cycles.push_back(std::move(c));
    }

    const json& claims = field(doc, "claims");
    if (!claims.is_array()) schema("'claims' must be an array");
    const auto& names = verifier_names();
    for (const json& jc : claims) {
      Claim c;
      c.description = string_field(jc, "description");
      c.verifier = string_field(jc, "verifier");
      if (std::find(names.begin(), names.end(), c.verifier) == names.end())
        schema("unknown verifier '" + c.verifier + "'");
      if (jc.contains("family")) c.family = index_value(jc["family"], inst.families.size(), "claim family");
      if (jc.contains("cycle")) c.cycle = index_value(jc["cycle"], inst.cycles.size(), "claim cycle");
      if (jc.contains("edge")) c.edge = index_value(jc["edge"], n, "claim edge");
      c.relation = relation_from_string(string_field(jc, "relation"));
      const json& value = field(jc, "value");
      if (!value.is_number_integer()) schema("claim value must be an integer");
      c.value = value.get<std::int64_t>();
      inst.claims.push_back(std::move(c));
    }

    if (doc.contains("guides")) {
      const json& guides = doc["guides"];
      if (!guides.is_array()) schema("'guides' must be an array");
      for (const json& g : guides) {
        Line l;
        l.a = rational_value(field(g, "a"), "a");
        l.b = rational_value(field(g, "b"), "b");
        l.c = rational_value(field(g, "c"), "c");
        if (sgn(l.a) == 0 && sgn(l.b) == 0) schema("guide line with a = b = 0");
        inst.guides.push_back(l);
      }
    }
    return inst;
  } catch (const json::exception& e) {
    schema(std::string("malformed document: ") + e.what());
  }
}

PointSet points_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.is_array()) return parse_points(doc);
    return parse_points(field(doc, "points"));
  } catch (const json::exception& e) {
    schema(std::string("malformed point list: ") + e.what());
  }
}

}  // namespace crossfam

#include "g3/scene.hpp"

#include <fstream>
#include <set>

namespace g3 {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Scene, where + ": " + what);
}

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(where, "expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items())
    if (!ok.contains(key)) fail(where, "unknown key '" + key + "'");
}

const json& need(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) fail(where, std::string("missing '") + key + "'");
  return obj.at(key);
}

std::string str(const json& obj, const char* key, const std::string& where) {
  const json& v = need(obj, key, where);
  if (!v.is_string()) fail(where, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

double num(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  return v.get<double>();
}

Interval interval(const json& obj, const char* key, const std::string& where) {
  const json& v = need(obj, key, where);
  if (!v.is_array() || v.size() != 2) fail(where, std::string("'") + key + "' must be [lo, hi]");
  return {num(v[0], where), num(v[1], where)};
}

Vec vec(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 3) fail(where, "axis must be [x, y, z]");
  return Vec(num(v[0], where), num(v[1], where), num(v[2], where));
}

template <typename F>
void each(const json& doc, const char* section, F body) {
  if (!doc.contains(section)) return;
  const json& s = doc.at(section);
  if (!s.is_object()) fail(section, "expected an object of named entries");
  for (const auto& [name, value] : s.items()) body(name, value, std::string(section) + "." + name);
}

}  // namespace

Scene Scene::from_json(const json& doc) {
  only_keys(doc, "scene", {"schema_version", "params", "curves", "surfaces", "traces", "profiles", "axes", "queries"});
  if (doc.contains("schema_version") && doc.at("schema_version") != 1) fail("scene", "unsupported schema_version");
  Scene sc;
  if (doc.contains("params")) {
    if (!doc.at("params").is_object()) fail("params", "expected an object");
    for (const auto& [k, v] : doc.at("params").items()) sc.params[k] = num(v, "params." + k);
  }
  each(doc, "curves", [&](const std::string& name, const json& v, const std::string& where) {
    only_keys(v, where, {"f", "g", "domain"});
    sc.curves.emplace(name, CurveSpec::parse(str(v, "f", where), str(v, "g", where), interval(v, "domain", where), sc.params));
  });
  each(doc, "surfaces", [&](const std::string& name, const json& v, const std::string& where) {
    only_keys(v, where, {"x", "y", "z", "u1", "u2"});
    sc.surfaces.emplace(name, SurfaceSpec::parse(str(v, "x", where), str(v, "y", where), str(v, "z", where),
                                                 interval(v, "u1", where), interval(v, "u2", where), sc.params));
  });
  each(doc, "traces", [&](const std::string& name, const json& v, const std::string& where) {
    only_keys(v, where, {"u1", "u2", "domain"});
    sc.traces.emplace(name, TraceSpec::parse(str(v, "u1", where), str(v, "u2", where), interval(v, "domain", where),
                                             sc.params));
  });
  each(doc, "profiles", [&](const std::string& name, const json& v, const std::string& where) {
    only_keys(v, where, {"g", "domain", "mode", "c", "A"});
    ProfileSpec p = ProfileSpec::parse(str(v, "g", where), interval(v, "domain", where), sc.params);
    if (v.contains("mode")) {
      const std::string m = str(v, "mode", where);
      if (m == "euclidean") p.mode = RevolutionMode::Euclidean;
      else if (m == "isotropic") p.mode = RevolutionMode::Isotropic;
      else fail(where, "mode must be 'euclidean' or 'isotropic'");
    }
    if (v.contains("c")) p.c = num(v.at("c"), where);
    if (v.contains("A")) p.A = num(v.at("A"), where);
    sc.profiles.emplace(name, std::move(p));
  });
  each(doc, "axes", [&](const std::string& name, const json& v, const std::string& where) {
    sc.axes.emplace(name, vec(v, where));
  });
  each(doc, "queries", [&](const std::string& name, const json& v, const std::string& where) {
    only_keys(v, where, {"surface", "axis", "beta", "level", "silhouette", "grid", "refine_tol"});
    NamedQuery nq;
    nq.surface = str(v, "surface", where);
    if (!sc.surfaces.contains(nq.surface)) fail(where, "unknown surface '" + nq.surface + "'");
    const json& axis = need(v, "axis", where);
    if (axis.is_string()) {
      const auto it = sc.axes.find(axis.get<std::string>());
      if (it == sc.axes.end()) fail(where, "unknown axis '" + axis.get<std::string>() + "'");
      nq.query.axis = it->second;
    } else {
      nq.query.axis = vec(axis, where);
    }
    const int kinds = int(v.contains("beta")) + int(v.contains("level")) + int(v.contains("silhouette"));
    if (kinds != 1) fail(where, "exactly one of 'beta', 'level', 'silhouette' is required");
    if (v.contains("beta")) {
      nq.query.kind = LevelKind::Angle;
      nq.query.value = num(v.at("beta"), where);
    } else if (v.contains("level")) {
      nq.query.kind = LevelKind::Level;
      nq.query.value = num(v.at("level"), where);
    } else {
      if (v.at("silhouette") != true) fail(where, "'silhouette' must be true");
      nq.query.kind = LevelKind::Silhouette;
    }
    if (v.contains("grid")) {
      const json& g = v.at("grid");
      if (!g.is_array() || g.size() != 2 || !g[0].is_number_unsigned() || !g[1].is_number_unsigned())
        fail(where, "grid must be [n1, n2] with positive integers");
      nq.query.n1 = g[0].get<std::size_t>();
      nq.query.n2 = g[1].get<std::size_t>();
    }
    if (v.contains("refine_tol")) nq.query.refine_tol = num(v.at("refine_tol"), where);
    sc.queries.emplace(name, nq);
  });
  return sc;
}

Scene Scene::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open scene '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Scene, "scene '" + path + "': " + e.what());
  }
  return from_json(doc);
}

}  // namespace g3

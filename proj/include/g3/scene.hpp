#pragma once

// Named curves, surfaces, traces, profiles, axes and isophote queries loaded
// from one JSON document.
//
//   {
//     "schema_version": 1,
//     "params":   {"c": 1},
//     "curves":   {"cubic": {"f": "s^2/2", "g": "s^3/6", "domain": [0, 2]}},
//     "surfaces": {"cyl": {"x": "u1", "y": "sin(u2)", "z": "cos(u2)", "u1": [0, 1], "u2": [0, 6.283185307179586]}},
//     "traces":   {"helix": {"u1": "s", "u2": "s", "domain": [0, 1]}},
//     "profiles": {"fig1": {"g": "s^2/2", "domain": [0.001, 5], "mode": "isotropic", "c": 1, "A": 0}},
//     "axes":     {"up": [0, 0, 1]},
//     "queries":  {"q": {"surface": "cyl", "axis": "up", "beta": 1.0471975511965976, "grid": [256, 256]}}
//   }
//
// A query takes exactly one of "beta", "level" or "silhouette": true. Unknown
// keys and unresolved names raise ErrorCode::Scene.

#include <iosfwd>
#include <map>
#include <string>

#include "json.hpp"

#include "g3/isophote.hpp"
#include "g3/surfrev.hpp"

namespace g3 {

struct NamedQuery {
  std::string surface;
  IsophoteQuery query;
};

struct Scene {
  ParamMap params;
  std::map<std::string, CurveSpec> curves;
  std::map<std::string, SurfaceSpec> surfaces;
  std::map<std::string, TraceSpec> traces;
  std::map<std::string, ProfileSpec> profiles;
  std::map<std::string, Vec> axes;
  std::map<std::string, NamedQuery> queries;

  static Scene from_json(const nlohmann::json& doc);
  static Scene load(const std::string& path);
};

}  // namespace g3

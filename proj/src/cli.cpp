#include "g3/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "g3/export.hpp"
#include "g3/scene.hpp"
#include "g3/verify.hpp"

namespace g3::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double to_number(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
  if (used == 0 || used != s.size()) throw UsageError("bad number '" + s + "' in " + what);
  return v;
}

Interval parse_interval(const std::string& s, const std::string& what) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw UsageError(what + " must be 'lo,hi', got '" + s + "'");
  return {to_number(parts[0], what), to_number(parts[1], what)};
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string& s, const std::string& what) {
  const auto parts = split(s, 'x');
  if (parts.size() != 2) throw UsageError(what + " must be 'N1xN2', got '" + s + "'");
  std::pair<std::size_t, std::size_t> g;
  for (int k = 0; k < 2; ++k) {
    const double v = to_number(parts[k], what);
    if (!(v >= 1.0) || v != std::floor(v)) throw UsageError(what + " entries must be positive integers");
    (k ? g.second : g.first) = static_cast<std::size_t>(v);
  }
  return g;
}

json vec_json(const Vec& v) { return json::array({v.x(), v.y(), v.z()}); }

json interval_json(const Interval& i) { return json::array({i.lo, i.hi}); }

std::string fixed(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "% .12g", v);
  return buf;
}

std::string vec_text(const Vec& v) { return "(" + format_double(v.x()) + ", " + format_double(v.y()) + ", " + format_double(v.z()) + ")"; }

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body, std::ostream& out) {
  if (path == "-") {
    body(out);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  body(f);
  if (!f) throw Error(ErrorCode::Io, "failed writing '" + path + "'");
}

void write_json(const std::string& path, const json& j, std::ostream& out) {
  write_file(path, [&](std::ostream& o) { o << j.dump(2) << '\n'; }, out);
}

json envelope(const char* command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

struct Context {
  std::string scene_path;
  std::optional<Scene> scene;

  const Scene* get() {
    if (scene_path.empty()) return nullptr;
    if (!scene) scene = Scene::load(scene_path);
    return &*scene;
  }

  CurveSpec curve(const std::string& spec, const std::string& domain) {
    if (const Scene* s = get(); s && s->curves.contains(spec)) {
      CurveSpec c = s->curves.at(spec);
      if (!domain.empty()) c.domain = parse_interval(domain, "--domain");
      return c;
    }
    const auto parts = split(spec, ',');
    if (parts.size() != 2) throw UsageError("--curve must name a scene curve or be inline 'f,g', got '" + spec + "'");
    return CurveSpec::parse(parts[0], parts[1], domain.empty() ? Interval{0.0, 1.0} : parse_interval(domain, "--domain"),
                            params());
  }

  SurfaceSpec surface(const std::string& spec, const std::string& u1, const std::string& u2) {
    if (const Scene* s = get(); s && s->surfaces.contains(spec)) {
      SurfaceSpec out = s->surfaces.at(spec);
      if (!u1.empty()) out.u1 = parse_interval(u1, "--u1");
      if (!u2.empty()) out.u2 = parse_interval(u2, "--u2");
      return out;
    }
    const auto parts = split(spec, ',');
    if (parts.size() != 3) throw UsageError("--surface must name a scene surface or be inline 'x,y,z', got '" + spec + "'");
    return SurfaceSpec::parse(parts[0], parts[1], parts[2], u1.empty() ? Interval{0.0, 1.0} : parse_interval(u1, "--u1"),
                              u2.empty() ? Interval{0.0, 1.0} : parse_interval(u2, "--u2"), params());
  }

  TraceSpec trace(const std::string& spec, const std::string& domain) {
    if (const Scene* s = get(); s && s->traces.contains(spec)) {
      TraceSpec t = s->traces.at(spec);
      if (!domain.empty()) t.domain = parse_interval(domain, "--domain");
      return t;
    }
    const auto parts = split(spec, ',');
    if (parts.size() != 2) throw UsageError("--trace must name a scene trace or be inline 'u1,u2', got '" + spec + "'");
    return TraceSpec::parse(parts[0], parts[1], domain.empty() ? Interval{0.0, 1.0} : parse_interval(domain, "--domain"),
                            params());
  }

  Vec axis(const std::string& spec) {
    if (const Scene* s = get(); s && s->axes.contains(spec)) return s->axes.at(spec);
    const auto parts = split(spec, ',');
    if (parts.size() != 3) throw UsageError("--axis must name a scene axis or be 'x,y,z', got '" + spec + "'");
    return Vec(to_number(parts[0], "--axis"), to_number(parts[1], "--axis"), to_number(parts[2], "--axis"));
  }

  ProfileSpec profile(const std::string& spec, const std::string& domain) {
    if (const Scene* s = get(); s && s->profiles.contains(spec)) {
      ProfileSpec p = s->profiles.at(spec);
      if (!domain.empty()) p.domain = parse_interval(domain, "--domain");
      return p;
    }
    return ProfileSpec::parse(spec, domain.empty() ? Interval{0.0, 1.0} : parse_interval(domain, "--domain"), params());
  }

  ParamMap params() {
    const Scene* s = get();
    return s ? s->params : ParamMap{};
  }
};

int cmd_frenet(Context& ctx, const std::string& curve_spec, const std::string& domain, std::size_t samples,
               const std::string& csv, const std::string& json_path, std::ostream& out) {
  const CurveSpec curve = ctx.curve(curve_spec, domain);
  if (samples < 2) throw UsageError("--samples must be at least 2");
  std::vector<FrenetSample> rows;
  for (double s : linspace(curve.domain, samples)) rows.push_back(frenet(curve, s));
  if (!csv.empty()) write_file(csv, [&](std::ostream& o) { write_csv(o, frenet_table(rows)); }, out);
  if (!json_path.empty()) {
    json j = envelope("frenet");
    j["parameters"] = {{"f", to_string(curve.f)},
                       {"g", to_string(curve.g)},
                       {"domain", interval_json(curve.domain)},
                       {"samples", samples},
                       {"kappa_min", kKappaMin}};
    json list = json::array();
    for (const auto& r : rows)
      list.push_back({{"s", r.s}, {"kappa", r.kappa}, {"tau", r.tau}, {"T", vec_json(r.T)}, {"N", vec_json(r.N)},
                      {"B", vec_json(r.B)}});
    j["samples"] = list;
    write_json(json_path, j, out);
  }
  if (json_path != "-" && csv != "-") {
    out << "# s kappa tau\n";
    for (const auto& r : rows) out << fixed(r.s) << ' ' << fixed(r.kappa) << ' ' << fixed(r.tau) << '\n';
  }
  return 0;
}

int cmd_darboux(Context& ctx, const std::string& surface_spec, const std::string& u1, const std::string& u2,
                const std::string& trace_spec, const std::string& domain, std::size_t samples, const std::string& csv,
                const std::string& json_path, std::ostream& out) {
  const SurfaceSpec surface = ctx.surface(surface_spec, u1, u2);
  const TraceSpec trace = ctx.trace(trace_spec, domain);
  if (samples < 2) throw UsageError("--samples must be at least 2");
  std::vector<DarbouxSample> rows;
  for (double s : linspace(trace.domain, samples)) rows.push_back(darboux(surface, trace, s));
  if (!csv.empty()) write_file(csv, [&](std::ostream& o) { write_csv(o, darboux_table(rows)); }, out);
  if (!json_path.empty()) {
    json j = envelope("darboux");
    j["parameters"] = {{"domain", interval_json(trace.domain)}, {"samples", samples}, {"omega_min", kOmegaMin}};
    json list = json::array();
    for (const auto& r : rows)
      list.push_back({{"s", r.s}, {"kg", r.kg}, {"kn", r.kn}, {"tau_g", r.tau_g}, {"phi", r.phi}, {"T", vec_json(r.T)},
                      {"Q", vec_json(r.Q)}, {"n", vec_json(r.n)}});
    j["samples"] = list;
    write_json(json_path, j, out);
  }
  if (json_path != "-" && csv != "-") {
    out << "# s kg kn tau_g phi\n";
    for (const auto& r : rows)
      out << fixed(r.s) << ' ' << fixed(r.kg) << ' ' << fixed(r.kn) << ' ' << fixed(r.tau_g) << ' ' << fixed(r.phi) << '\n';
  }
  return 0;
}

int cmd_classify(Context& ctx, const std::string& surface_spec, const std::string& u1, const std::string& u2,
                 const std::string& trace_spec, const std::string& domain, std::size_t samples, double tol,
                 const std::string& json_path, std::ostream& out) {
  const SurfaceSpec surface = ctx.surface(surface_spec, u1, u2);
  const TraceSpec trace = ctx.trace(trace_spec, domain);
  const TraceClass c = classify_trace(surface, trace, samples, tol);
  if (!json_path.empty()) {
    json j = envelope("classify");
    j["parameters"] = {{"domain", interval_json(trace.domain)}, {"samples", samples}, {"tol", tol}};
    j["result"] = {{"geodesic", c.geodesic},   {"asymptotic", c.asymptotic}, {"line_of_curvature", c.line_of_curvature},
                   {"max_kg", c.max_kg},       {"max_kn", c.max_kn},         {"max_tau_g", c.max_tau_g}};
    write_json(json_path, j, out);
  }
  if (json_path != "-") {
    out << "geodesic           " << (c.geodesic ? "yes" : "no") << "  max|kg|    = " << format_double(c.max_kg) << '\n';
    out << "asymptotic         " << (c.asymptotic ? "yes" : "no") << "  max|kn|    = " << format_double(c.max_kn) << '\n';
    out << "line of curvature  " << (c.line_of_curvature ? "yes" : "no") << "  max|tau_g| = " << format_double(c.max_tau_g)
        << '\n';
  }
  return 0;
}

int cmd_axis(Context& ctx, const std::string& which, const std::string& surface_spec, const std::string& u1,
             const std::string& u2, const std::string& trace_spec, const std::string& domain, double angle,
             const AxisOptions& opt, const std::string& json_path, std::ostream& out) {
  const SurfaceSpec surface = ctx.surface(surface_spec, u1, u2);
  const TraceSpec trace = ctx.trace(trace_spec, domain);
  const AxisReport r =
      which == "isotropic" ? axis_isotropic(surface, trace, angle, opt) : axis_nonisotropic(surface, trace, angle, opt);
  if (!json_path.empty()) {
    json j = envelope("axis");
    j["parameters"] = {{"case", which},           {"angle", angle},
                       {"samples", opt.samples},  {"tol", opt.tol},
                       {"residual_tol", opt.residual_tol}, {"fd_step", opt.fd_step},
                       {"domain", interval_json(trace.domain)}};
    j["result"] = {{"d", vec_json(r.d)},       {"branch", to_string(r.branch)}, {"residual", r.residual},
                   {"ratio_sign", r.ratio_sign}, {"success", r.success}};
    write_json(json_path, j, out);
  }
  if (json_path != "-") {
    out << "branch    " << to_string(r.branch) << '\n';
    out << "d         " << vec_text(r.d) << '\n';
    out << "residual  " << format_double(r.residual) << '\n';
    out << (r.success ? "constant axis reconstructed\n" : "axis not constant or undetermined\n");
  }
  return r.success ? 0 : 1;
}

int cmd_isophote(Context& ctx, const std::string& query_name, const std::string& surface_spec, const std::string& u1,
                 const std::string& u2, const std::string& axis_spec, std::optional<double> beta,
                 std::optional<double> level, bool silhouette_flag, const std::string& grid, std::optional<double> refine_tol,
                 const std::string& obj, const std::string& svg, const std::string& json_path, std::ostream& out) {
  IsophoteQuery q;
  SurfaceSpec surface;
  if (!query_name.empty()) {
    const Scene* s = ctx.get();
    if (!s || !s->queries.contains(query_name)) throw UsageError("unknown query '" + query_name + "'");
    const NamedQuery& nq = s->queries.at(query_name);
    q = nq.query;
    surface = ctx.surface(nq.surface, u1, u2);
  } else {
    if (surface_spec.empty()) throw UsageError("isophote needs --surface or --query");
    surface = ctx.surface(surface_spec, u1, u2);
    q.axis = ctx.axis(axis_spec.empty() ? "0,0,1" : axis_spec);
    const int kinds = int(beta.has_value()) + int(level.has_value()) + int(silhouette_flag);
    if (kinds != 1) throw UsageError("give exactly one of --beta, --level, --silhouette");
    if (beta) {
      q.kind = LevelKind::Angle;
      q.value = *beta;
    } else if (level) {
      q.kind = LevelKind::Level;
      q.value = *level;
    } else {
      q.kind = LevelKind::Silhouette;
    }
  }
  if (!grid.empty()) std::tie(q.n1, q.n2) = parse_grid(grid, "--grid");
  if (q.n1 < 2 || q.n2 < 2) throw UsageError("--grid needs at least 2x2 cells");
  if (refine_tol) q.refine_tol = *refine_tol;

  const IsophoteSet set = extract(surface, q);
  if (!obj.empty()) write_file(obj, [&](std::ostream& o) { write_obj(o, set.polylines); }, out);
  if (!svg.empty()) write_file(svg, [&](std::ostream& o) { write_svg(o, set); }, out);
  if (!json_path.empty()) {
    json j = envelope("isophote");
    const char* kind = q.kind == LevelKind::Angle ? "beta" : q.kind == LevelKind::Level ? "level" : "silhouette";
    j["parameters"] = {{"axis", vec_json(q.axis)}, {"kind", kind},          {"value", q.value},
                       {"grid", {q.n1, q.n2}},     {"refine_tol", q.refine_tol}, {"max_bisections", q.max_bisections}};
    j["result"] = to_json(set);
    write_json(json_path, j, out);
  }
  if (json_path != "-" && obj != "-" && svg != "-") {
    out << "level      " << format_double(set.level) << '\n';
    if (set.constant_field) {
      out << "constant field " << format_double(set.constant_field->value) << " (spread "
          << format_double(set.constant_field->spread) << ")"
          << (set.constant_field->whole_surface ? ", whole surface is an isophote" : ", no isophote at this level")
          << '\n';
    }
    out << "polylines  " << set.polylines.size() << '\n';
    for (std::size_t k = 0; k < set.polylines.size(); ++k) {
      const auto& l = set.polylines[k];
      out << "  #" << k << "  " << l.points.size() << " points" << (l.closed ? ", closed" : "") << '\n';
    }
    out << "cells " << set.stats.cells << ", crossing " << set.stats.crossing_cells << ", skipped "
        << set.stats.skipped_cells << ", singular samples " << set.stats.singular_samples << ", unconverged "
        << set.stats.unconverged << '\n';
  }
  return 0;
}

int cmd_revolve(Context& ctx, const std::string& profile_spec, const std::string& domain, const std::string& mode,
                std::optional<double> c, std::optional<double> A, const std::string& t_range, double s_min,
                const std::string& mesh_grid, const std::string& obj, const std::string& json_path, std::ostream& out) {
  ProfileSpec p = ctx.profile(profile_spec, domain);
  if (!mode.empty()) p.mode = mode == "euclidean" ? RevolutionMode::Euclidean : RevolutionMode::Isotropic;
  if (c) p.c = *c;
  if (A) p.A = *A;
  RevolveOptions opt;
  opt.s_min = s_min;
  if (!t_range.empty()) opt.t = parse_interval(t_range, "--t");
  const SurfaceSpec surf = revolve(p, opt);

  std::optional<TriMesh> mesh;
  if (!mesh_grid.empty() || !obj.empty()) {
    const auto [n1, n2] = parse_grid(mesh_grid.empty() ? "64x64" : mesh_grid, "--mesh");
    mesh = tessellate(surf, n1, n2);
    if (!obj.empty()) write_file(obj, [&](std::ostream& o) { write_obj(o, *mesh); }, out);
  }
  if (!json_path.empty()) {
    json j = envelope("revolve");
    j["parameters"] = {{"g", to_string(p.g)}, {"mode", to_string(p.mode)}, {"c", p.c},
                       {"A", p.A},            {"s_min", opt.s_min},        {"t", interval_json(opt.t)}};
    j["result"] = {{"x", to_string(surf.x)},          {"y", to_string(surf.y)}, {"z", to_string(surf.z)},
                   {"u1", interval_json(surf.u1)},    {"u2", interval_json(surf.u2)}};
    if (mesh) j["result"]["mesh"] = {{"n1", mesh->n1}, {"n2", mesh->n2}, {"vertices", mesh->vertices.size()},
                                     {"faces", mesh->faces.size()}};
    write_json(json_path, j, out);
  }
  if (json_path != "-" && obj != "-") {
    out << "x = " << to_string(surf.x) << "\ny = " << to_string(surf.y) << "\nz = " << to_string(surf.z) << '\n';
    out << "s in [" << format_double(surf.u1.lo) << ", " << format_double(surf.u1.hi) << "], t in ["
        << format_double(surf.u2.lo) << ", " << format_double(surf.u2.hi) << "]\n";
    if (mesh) out << "mesh " << mesh->vertices.size() << " vertices, " << mesh->faces.size() << " triangles\n";
  }
  return 0;
}

int cmd_verify(const VerifyOptions& opt, const std::string& json_path, std::ostream& out) {
  const auto checks = run_verify(opt);
  if (checks.empty()) throw UsageError("no check matches --filter '" + opt.filter + "'");
  if (!json_path.empty()) write_json(json_path, verify_report(opt, checks), out);
  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.passed ? 0 : 1;
  if (json_path != "-") {
    for (const auto& c : checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      for (const char* key : {"value", "max_error", "max_residual", "residual", "status"})
        if (c.metrics.contains(key)) out << "  " << key << '=' << c.metrics.at(key).dump();
      out << '\n';
    }
    out << checks.size() - failed << '/' << checks.size() << " checks passed\n";
  }
  return failed ? 1 : 0;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax:
    case ErrorCode::UnknownIdentifier:
    case ErrorCode::Arity:
    case ErrorCode::Scene: return 2;
    default: return 1;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curves, surfaces and isophotes in Galilean 3-space", "g3"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  app.add_option("--scene", ctx.scene_path, "Scene JSON with named objects")->check(CLI::ExistingFile);

  // shared option storage
  std::string curve, surface, trace, u1, u2, domain, axis, csv, json_path, obj, svg, grid, query, profile, mode, t_range,
      mesh, which, filter;
  std::size_t samples = 64;
  double tol = 1e-8, angle = 0.0, s_min = kIsotropicSMin;
  std::optional<double> beta, level, refine_tol, c_opt, a_opt;
  bool silhouette = false;
  AxisOptions axis_opt;
  VerifyOptions vopt;

  auto add_surface = [&](CLI::App* sub) {
    sub->add_option("--surface", surface, "Scene name or inline 'x,y,z' in u1, u2");
    sub->add_option("--u1", u1, "u1 range 'lo,hi' (default 0,1 for inline surfaces)");
    sub->add_option("--u2", u2, "u2 range 'lo,hi' (default 0,1 for inline surfaces)");
  };
  auto add_trace = [&](CLI::App* sub) {
    sub->add_option("--trace", trace, "Scene name or inline 'u1(s),u2(s)'")->required();
    sub->add_option("--domain", domain, "s range 'lo,hi'");
  };

  auto* frenet_cmd = app.add_subcommand("frenet", "Frenet apparatus of an admissible curve");
  frenet_cmd->add_option("--curve", curve, "Scene name or inline 'f,g' in s")->required();
  frenet_cmd->add_option("--domain", domain, "s range 'lo,hi' (default 0,1 for inline curves)");
  frenet_cmd->add_option("--samples", samples, "Sample count")->capture_default_str();
  frenet_cmd->add_option("--csv", csv, "CSV output path ('-' for stdout)");
  frenet_cmd->add_option("--json", json_path, "JSON output path ('-' for stdout)");

  auto* darboux_cmd = app.add_subcommand("darboux", "Darboux apparatus of a surface trace");
  add_surface(darboux_cmd);
  add_trace(darboux_cmd);
  darboux_cmd->add_option("--samples", samples, "Sample count")->capture_default_str();
  darboux_cmd->add_option("--csv", csv, "CSV output path ('-' for stdout)");
  darboux_cmd->add_option("--json", json_path, "JSON output path ('-' for stdout)");

  auto* classify_cmd = app.add_subcommand("classify", "Geodesic, asymptotic, line-of-curvature tests");
  add_surface(classify_cmd);
  add_trace(classify_cmd);
  classify_cmd->add_option("--samples", samples, "Sample count")->capture_default_str();
  classify_cmd->add_option("--tol", tol, "Zero tolerance")->capture_default_str();
  classify_cmd->add_option("--json", json_path, "JSON output path ('-' for stdout)");

  auto* axis_cmd = app.add_subcommand("axis", "Reconstruct the constant axis of an isophote trace");
  axis_cmd->add_option("--case", which, "isotropic or nonisotropic")
      ->required()
      ->check(CLI::IsMember({"isotropic", "nonisotropic"}));
  add_surface(axis_cmd);
  add_trace(axis_cmd);
  axis_cmd->add_option("--angle", angle, "theta (isotropic) or the measure phi (nonisotropic)")->required();
  axis_cmd->add_option("--samples", axis_opt.samples, "Sample count")->capture_default_str();
  axis_cmd->add_option("--tol", axis_opt.tol, "Tolerance on curvature quantities")->capture_default_str();
  axis_cmd->add_option("--json", json_path, "JSON output path ('-' for stdout)");

  auto* iso_cmd = app.add_subcommand("isophote", "Extract isophote or silhouette curves");
  add_surface(iso_cmd);
  iso_cmd->add_option("--query", query, "Scene query name");
  iso_cmd->add_option("--axis", axis, "Scene axis name or 'x,y,z' (default 0,0,1)");
  auto* beta_opt = iso_cmd->add_option("--beta", beta, "Angle in [0, pi/2]; level cos(beta)");
  auto* level_opt = iso_cmd->add_option("--level", level, "Raw field level");
  auto* sil_opt = iso_cmd->add_flag("--silhouette", silhouette, "Level 0");
  beta_opt->excludes(level_opt)->excludes(sil_opt);
  level_opt->excludes(sil_opt);
  iso_cmd->add_option("--grid", grid, "Cells 'N1xN2' (default 256x256)");
  iso_cmd->add_option("--refine-tol", refine_tol, "Crossing tolerance (default 1e-9)");
  iso_cmd->add_option("--obj", obj, "OBJ polyline output path");
  iso_cmd->add_option("--svg", svg, "SVG parameter-domain plot path");
  iso_cmd->add_option("--json", json_path, "JSON output path ('-' for stdout)");

  auto* rev_cmd = app.add_subcommand("revolve", "Surface of revolution from a profile (s, 0, g(s))");
  rev_cmd->add_option("--profile", profile, "Scene profile name or inline g(s)")->required();
  rev_cmd->add_option("--domain", domain, "s range 'lo,hi'");
  rev_cmd->add_option("--mode", mode, "euclidean or isotropic")->check(CLI::IsMember({"euclidean", "isotropic"}));
  rev_cmd->add_option("--c", c_opt, "Isotropic rotation radius (default 1)");
  rev_cmd->add_option("--A", a_opt, "Profile constant, recorded in the output");
  rev_cmd->add_option("--t", t_range, "t range 'lo,hi' for isotropic mode (default -2,2)");
  rev_cmd->add_option("--s-min", s_min, "Isotropic lower s bound when the domain reaches 0")->capture_default_str();
  rev_cmd->add_option("--mesh", mesh, "Tessellation 'N1xN2' (default 64x64 when --obj is given)");
  rev_cmd->add_option("--obj", obj, "OBJ mesh output path");
  rev_cmd->add_option("--json", json_path, "JSON output path ('-' for stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the reproduction suite");
  verify_cmd->add_option("--filter", vopt.filter, "Only checks whose name contains this (dots optional)");
  verify_cmd->add_option("--seed", vopt.seed, "Seed of the randomized corpus")->capture_default_str();
  verify_cmd->add_option("--corpus", vopt.corpus_size, "Randomized surface/trace pairs")->capture_default_str();
  verify_cmd->add_option("--json", json_path, "JSON report path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    ctx.get();
    if (*frenet_cmd) return cmd_frenet(ctx, curve, domain, samples, csv, json_path, out);
    if (*darboux_cmd) {
      if (surface.empty()) throw UsageError("--surface is required");
      return cmd_darboux(ctx, surface, u1, u2, trace, domain, samples, csv, json_path, out);
    }
    if (*classify_cmd) {
      if (surface.empty()) throw UsageError("--surface is required");
      return cmd_classify(ctx, surface, u1, u2, trace, domain, samples, tol, json_path, out);
    }
    if (*axis_cmd) {
      if (surface.empty()) throw UsageError("--surface is required");
      return cmd_axis(ctx, which, surface, u1, u2, trace, domain, angle, axis_opt, json_path, out);
    }
    if (*iso_cmd)
      return cmd_isophote(ctx, query, surface, u1, u2, axis, beta, level, silhouette, grid, refine_tol, obj, svg,
                          json_path, out);
    if (*rev_cmd) return cmd_revolve(ctx, profile, domain, mode, c_opt, a_opt, t_range, s_min, mesh, obj, json_path, out);
    if (*verify_cmd) return cmd_verify(vopt, json_path, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return 2;
}

}  // namespace g3::cli

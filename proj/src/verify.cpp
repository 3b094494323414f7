#include "g3/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "g3/identities.hpp"
#include "g3/surfrev.hpp"

namespace g3 {

namespace {

using nlohmann::json;

SurfaceSpec plane() { return SurfaceSpec::parse("u1", "u2", "0", {-3.0, 3.0}, {-3.0, 3.0}); }

TraceSpec line_trace() { return TraceSpec::parse("s", "2*s", {0.0, 1.0}); }

TraceSpec parabola_trace() { return TraceSpec::parse("s", "s^2/2", {-1.0, 1.0}); }

TraceSpec ruling_trace() { return TraceSpec::parse("s", "0", {-1.0, 1.0}); }

SurfaceSpec ruled_cylinder(double sign) {
  return SurfaceSpec::parse("u1", "u1^2/2 + u2", sign > 0 ? "u2" : "-u2", {-2.0, 2.0}, {-2.0, 2.0});
}

SurfaceSpec parabolic_cylinder() { return SurfaceSpec::parse("u1", "u2", "u1^2/2", {-2.0, 2.0}, {-2.0, 2.0}); }

}  // namespace

std::vector<TheoremScenario> theorem_scenarios() {
  const double quarter = std::numbers::pi / 4;
  std::vector<TheoremScenario> out;
  out.push_back({"thm3.1i", "plane, straight trace (s, 2s), d = (0,0,1)", plane(), line_trace(), Vec(0, 0, 1)});
  // asymptotic isophote on the plane; axis reconstructed from theta = 0
  const AxisReport c5 = axis_isotropic(plane(), parabola_trace(), 0.0);
  out.push_back({"thm3.1ii", "plane, parabola (s, s^2/2), d from axis reconstruction", plane(), parabola_trace(), c5.d});
  const AxisReport c6 = axis_isotropic(ruled_cylinder(1.0), ruling_trace(), quarter);
  out.push_back({"thm3.2", "cylinder (u1, u1^2/2 + u2, u2), trace (s, 0), kn/kg = -1", ruled_cylinder(1.0),
                 ruling_trace(), c6.d});
  out.push_back({"thm3.3", "cylinder (u1, u1^2/2 + u2, -u2), trace (s, 0), kn/kg = +1, d = (0,1,0)",
                 ruled_cylinder(-1.0), ruling_trace(), Vec(0, 1, 0)});
  out.push_back({"thm3.4", "parabolic cylinder (u1, u2, u1^2/2), trace (s, 0), d = (0,1,0)", parabolic_cylinder(),
                 ruling_trace(), Vec(0, 1, 0)});
  const AxisReport c13 = axis_nonisotropic(plane(), line_trace(), 0.5);
  out.push_back({"cor3.5", "plane, straight trace (s, 2s), d = T + 0.5 n", plane(), line_trace(), c13.d});
  out.push_back({"thm3.6i", "plane, parabola (s, s^2/2), d = (1,0,0)", plane(), parabola_trace(), Vec(1, 0, 0)});
  out.push_back({"thm3.6ii", "plane, straight trace (s, 2s), d = T = (1,2,0)", plane(), line_trace(), Vec(1, 2, 0)});
  return out;
}

bool filter_matches(const std::string& name, const std::string& filter) {
  if (filter.empty()) return true;
  if (name.find(filter) != std::string::npos) return true;
  std::string a = name, b = filter;
  std::erase(a, '.');
  std::erase(b, '.');
  return a.find(b) != std::string::npos;
}

namespace {

json vec_json(const Vec& v) { return json::array({v.x(), v.y(), v.z()}); }

struct Entry {
  std::string name;
  std::function<VerifyCheck(const VerifyOptions&)> run;
};

VerifyCheck theorem_check(const std::string& id, const VerifyOptions& o) {
  for (const auto& sc : theorem_scenarios()) {
    if (sc.id != id) continue;
    TheoremConfig cfg;
    cfg.axis = sc.axis;
    cfg.samples = o.samples;
    cfg.tol = o.tol;
    for (const auto& t : verify_theorems(sc.surface, sc.trace, cfg)) {
      if (t.id != id) continue;
      VerifyCheck c;
      c.passed = t.status() == TheoremStatus::Confirmed;
      c.metrics = {{"status", to_string(t.status())},
                   {"hypothesis_met", t.hypothesis_met},
                   {"conclusion_verified", t.conclusion_verified},
                   {"axis", vec_json(sc.axis)},
                   {"tol", o.tol}};
      c.detail = sc.description + "; " + t.detail;
      return c;
    }
  }
  throw Error(ErrorCode::Precondition, "no scenario for " + id);
}

VerifyCheck axis_check(const AxisReport& r, const Vec& expected, double theta_or_phi, const VerifyOptions& o) {
  VerifyCheck c;
  const double err = (r.d.coeffs() - expected.coeffs()).cwiseAbs().maxCoeff();
  c.passed = r.success && r.residual <= 1e-5 && err <= o.tol;
  c.metrics = {{"branch", to_string(r.branch)}, {"d", vec_json(r.d)},     {"expected_d", vec_json(expected)},
               {"residual", r.residual},        {"max_d_error", err},     {"success", r.success},
               {"angle", theta_or_phi},         {"ratio_sign", r.ratio_sign}};
  return c;
}

VerifyCheck prop_check(const PropReport& r, double tol) {
  VerifyCheck c;
  c.passed = r.hypothesis_met && r.conclusion_verified;
  c.metrics = {{"hypothesis_met", r.hypothesis_met},
               {"conclusion_verified", r.conclusion_verified},
               {"value", r.value},
               {"expected", r.expected},
               {"spread", r.spread},
               {"tol", tol}};
  c.detail = r.detail;
  return c;
}

ProfileSpec helix_profile() { return ProfileSpec::parse("s^2/2 + 1", {0.0, 2.0}); }

template <typename F>
double corpus_max(const VerifyOptions& o, F value) {
  double m = 0.0;
  for (const auto& pair : random_corpus(o.seed, o.corpus_size)) {
    for (double s : linspace({pair.trace.domain.lo + 0.01, pair.trace.domain.hi - 0.01}, 16)) {
      const IdentityResiduals r = identity_residuals(pair.surface, pair.trace, s);
      m = std::max(m, value(r));
    }
  }
  return m;
}

std::vector<Entry> registry() {
  std::vector<Entry> e;
  for (const char* id : {"thm3.1i", "thm3.1ii", "thm3.2", "thm3.3", "thm3.4", "cor3.5", "thm3.6i", "thm3.6ii"}) {
    const std::string name = id;
    e.push_back({name, [name](const VerifyOptions& o) { return theorem_check(name, o); }});
  }

  e.push_back({"axis.c5", [](const VerifyOptions& o) {
                 return axis_check(axis_isotropic(plane(), parabola_trace(), 0.0), Vec(0, 0, 1), 0.0, o);
               }});
  e.push_back({"axis.c6", [](const VerifyOptions& o) {
                 const double q = std::numbers::pi / 4;
                 return axis_check(axis_isotropic(ruled_cylinder(1.0), ruling_trace(), q), Vec(0, 0, 1), q, o);
               }});
  e.push_back({"axis.c13", [](const VerifyOptions& o) {
                 return axis_check(axis_nonisotropic(plane(), line_trace(), 0.5), Vec(1, 2, 0.5), 0.5, o);
               }});

  for (int k : {0, 1}) {
    e.push_back({"prop4.1.k" + std::to_string(k), [k](const VerifyOptions& o) {
                   return prop_check(verify_prop_4_1(helix_profile(), Vec(0, 1, 0), k, 1e-9, o.samples), 1e-9);
                 }});
  }
  for (int k : {0, 1}) {
    e.push_back({"prop4.2.k" + std::to_string(k), [k](const VerifyOptions& o) {
                   return prop_check(verify_prop_4_2(helix_profile(), Vec(0, 0, 1), k, 1e-9, o.samples), 1e-9);
                 }});
  }
  e.push_back({"prop4.3.i", [](const VerifyOptions&) { return prop_check(verify_prop_4_3({}), 1e-12); }});
  e.push_back({"prop4.3.ii", [](const VerifyOptions&) {
                 Prop43Config c;
                 c.c = 2.0;
                 c.A = 5.0;
                 c.branch = Prop43Branch::AlongB;
                 return prop_check(verify_prop_4_3(c), 1e-12);
               }});
  e.push_back({"prop4.3.lambda2", [](const VerifyOptions&) {
                 Prop43Config c;
                 c.lambda = 2.0;
                 return prop_check(verify_prop_4_3(c), 1e-12);
               }});
  e.push_back({"cor4.4", [](const VerifyOptions& o) {
                 return prop_check(verify_cor_4_4(1.0, 0.0, {kIsotropicSMin, 5.0}, 1e-9, o.samples), 1e-9);
               }});

  e.push_back({"frames.frenet_oracle", [](const VerifyOptions&) {
                 const CurveSpec c = CurveSpec::parse("s^2/2", "s^3/6", {0.0, 2.0});
                 double ek = 0.0, et = 0.0;
                 for (double s : linspace(c.domain, 100)) {
                   const FrenetSample f = frenet(c, s);
                   ek = std::max(ek, std::abs(f.kappa - std::sqrt(1 + s * s)));
                   et = std::max(et, std::abs(f.tau - 1 / (1 + s * s)));
                 }
                 VerifyCheck v;
                 v.passed = ek <= 1e-12 && et <= 1e-12;
                 v.metrics = {{"max_kappa_error", ek}, {"max_tau_error", et}, {"tol", 1e-12}};
                 v.detail = "alpha = (s, s^2/2, s^3/6) on [0, 2]";
                 return v;
               }});
  e.push_back({"frames.darboux_helix", [](const VerifyOptions&) {
                 const CorpusPair h = cylinder_helix();
                 double err = 0.0;
                 for (double s : linspace(h.trace.domain, 50)) {
                   const DarbouxSample d = darboux(h.surface, h.trace, s);
                   err = std::max({err, std::abs(d.kg), std::abs(d.kn + 1), std::abs(d.tau_g + 1)});
                 }
                 VerifyCheck v;
                 v.passed = err <= 1e-10;
                 v.metrics = {{"max_error", err}, {"expected", {0.0, -1.0, -1.0}}, {"tol", 1e-10}};
                 v.detail = h.label + ", (kg, kn, tau_g)";
                 return v;
               }});
  e.push_back({"frames.kappa_split", [](const VerifyOptions& o) {
                 const double m = corpus_max(o, [](const IdentityResiduals& r) { return r.kappa_sq; });
                 VerifyCheck v;
                 v.passed = m <= 1e-9;
                 v.metrics = {{"max_residual", m}, {"tol", 1e-9}, {"seed", o.seed}, {"pairs", o.corpus_size}};
                 v.detail = "kg^2 + kn^2 = kappa^2";
                 return v;
               }});
  e.push_back({"frames.torsion_relation", [](const VerifyOptions& o) {
                 const double rel = corpus_max(o, [](const IdentityResiduals& r) {
                   return std::abs(r.tau_relation - r.tau_frenet);
                 });
                 const double lit = corpus_max(o, [](const IdentityResiduals& r) {
                   return std::abs(r.tau_literal - r.tau_frenet);
                 });
                 VerifyCheck v;
                 v.passed = rel <= 1e-6;
                 v.metrics = {{"max_error", rel}, {"max_error_opposite_sign", lit}, {"tol", 1e-6}, {"seed", o.seed}};
                 v.detail = "tau = tau_g - (kg' kn - kg kn') / kappa^2";
                 return v;
               }});
  e.push_back({"frames.frenet_ode", [](const VerifyOptions& o) {
                 const double m = corpus_max(o, [](const IdentityResiduals& r) { return r.frenet_ode; });
                 VerifyCheck v;
                 v.passed = m <= 1e-5;
                 v.metrics = {{"max_residual", m}, {"tol", 1e-5}, {"step", 1e-5}};
                 v.detail = "T' = kappa N, N' = tau B, B' = -tau N";
                 return v;
               }});
  e.push_back({"frames.darboux_ode", [](const VerifyOptions& o) {
                 const double m = corpus_max(o, [](const IdentityResiduals& r) { return r.darboux_ode; });
                 VerifyCheck v;
                 v.passed = m <= 1e-5;
                 v.metrics = {{"max_residual", m}, {"tol", 1e-5}, {"step", 1e-5}};
                 v.detail = "T' = kg Q + kn n, Q' = tau_g n, n' = -tau_g Q";
                 return v;
               }});
  e.push_back({"frames.rotation", [](const VerifyOptions& o) {
                 const double m = corpus_max(o, [](const IdentityResiduals& r) { return r.frame_rotation; });
                 VerifyCheck v;
                 v.passed = m <= 1e-9;
                 v.metrics = {{"max_residual", m}, {"tol", 1e-9}};
                 v.detail = "Q = cos(phi) N + sin(phi) B, n = -sin(phi) N + cos(phi) B";
                 return v;
               }});
  return e;
}

}  // namespace

std::vector<std::string> verify_check_names() {
  std::vector<std::string> out;
  for (const auto& e : registry()) out.push_back(e.name);
  return out;
}

std::vector<VerifyCheck> run_verify(const VerifyOptions& options) {
  std::vector<VerifyCheck> out;
  for (const auto& e : registry()) {
    if (!filter_matches(e.name, options.filter)) continue;
    VerifyCheck c;
    try {
      c = e.run(options);
    } catch (const Error& err) {
      c.passed = false;
      c.metrics = {{"error", to_string(err.code())}};
      c.detail = err.what();
    }
    c.name = e.name;
    out.push_back(std::move(c));
  }
  return out;
}

json verify_report(const VerifyOptions& options, const std::vector<VerifyCheck>& checks) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "verify";
  j["parameters"] = {{"filter", options.filter},
                     {"seed", options.seed},
                     {"corpus_size", options.corpus_size},
                     {"samples", options.samples},
                     {"tol", options.tol}};
  json list = json::array();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"passed", c.passed}, {"metrics", c.metrics}, {"detail", c.detail}});
    passed += c.passed ? 1 : 0;
  }
  j["checks"] = list;
  j["summary"] = {{"total", checks.size()}, {"passed", passed}, {"failed", checks.size() - passed}};
  return j;
}

}  // namespace g3

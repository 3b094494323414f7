#include "g3/surfrev.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "g3/isophote.hpp"

namespace g3 {

const char* to_string(RevolutionMode m) { return m == RevolutionMode::Euclidean ? "euclidean" : "isotropic"; }

ProfileSpec ProfileSpec::parse(const std::string& g, Interval domain, const ParamMap& params) {
  if (!(domain.lo < domain.hi)) throw Error(ErrorCode::Precondition, "profile domain must satisfy lo < hi");
  ProfileSpec p;
  p.g = g3::parse(g, {"s"}, params);
  p.domain = domain;
  p.params = params;
  return p;
}

CurveSpec ProfileSpec::curve() const {
  CurveSpec c;
  c.f = build::number(0.0);
  c.g = g;
  c.domain = domain;
  c.params = params;
  return c;
}

SurfaceSpec revolve_euclidean(const ProfileSpec& profile, const RevolveOptions& options) {
  using namespace build;
  for (double s : linspace(profile.domain, std::max<std::size_t>(2, options.check_samples))) {
    const double g = evaluate(profile.g, s);
    if (!(g > 0.0)) {
      throw Error(ErrorCode::Precondition,
                  "euclidean revolution needs g > 0; g(" + std::to_string(s) + ") = " + std::to_string(g));
    }
  }
  const Expr s = variable(0, "s");
  const Expr t = variable(1, "t");
  SurfaceSpec out;
  out.x = s;
  out.y = mul(profile.g, call(Func::Sin, t));
  out.z = mul(profile.g, call(Func::Cos, t));
  out.u1 = profile.domain;
  out.u2 = {0.0, 2.0 * std::numbers::pi};
  out.params = profile.params;
  return out;
}

SurfaceSpec revolve_isotropic(const ProfileSpec& profile, const RevolveOptions& options) {
  using namespace build;
  if (!(profile.c > 0.0)) throw Error(ErrorCode::Precondition, "isotropic revolution needs c > 0");
  Interval dom = profile.domain;
  if (dom.lo <= 0.0) {
    if (!(options.s_min > 0.0) || options.s_min >= dom.hi)
      throw Error(ErrorCode::Precondition, "isotropic revolution needs part of the profile at s > 0");
    dom.lo = options.s_min;
  }
  const Expr s = variable(0, "s");
  const Expr t = variable(1, "t");
  const Expr c = number(profile.c);
  SurfaceSpec out;
  out.x = add(s, mul(c, t));
  out.y = add(mul(s, t), div(mul(c, pow(t, number(2.0))), number(2.0)));
  out.z = profile.g;
  out.u1 = dom;
  out.u2 = options.t;
  out.params = profile.params;
  return out;
}

SurfaceSpec revolve(const ProfileSpec& profile, const RevolveOptions& options) {
  return profile.mode == RevolutionMode::Euclidean ? revolve_euclidean(profile, options)
                                                   : revolve_isotropic(profile, options);
}

NormalDecomposition frame_normal_decomposition(const ProfileSpec& profile, RevolutionMode mode, double s, double t) {
  const CurveSpec curve = profile.curve();
  const FrenetSample fr = frenet(curve, s);
  NormalDecomposition out;
  Vec n;
  // N = (0, 0, sign g'')
  const double sigma = eval_jet(profile.g, s, 2).d2 > 0 ? 1.0 : -1.0;
  if (mode == RevolutionMode::Euclidean) {
    out.aN = sigma * std::cos(t);
    out.aB = -sigma * std::sin(t);
    n = sample_surface(revolve_euclidean(profile), s, t).n;
  } else {
    const double gc = eval_jet(profile.g, s, 1).d1 * profile.c;
    const double w = std::hypot(gc, s);
    if (!(w > kOmegaMin)) throw Error(ErrorCode::SingularNormal, "isotropic normal undefined at s = " + std::to_string(s));
    out.aN = sigma * s / w;
    out.aB = -sigma * gc / w;
    ProfileSpec p = profile;
    RevolveOptions opt;
    opt.t = {std::min(t, -2.0), std::max(t, 2.0)};
    n = sample_surface(revolve_isotropic(p, opt), s, t).n;
  }
  out.measured_aN = euclid_dot(n, fr.N);
  out.measured_aB = euclid_dot(n, fr.B);
  out.agrees = std::abs(out.aN - out.measured_aN) <= 1e-9 && std::abs(out.aB - out.measured_aB) <= 1e-9;
  return out;
}

namespace {

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[200];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

PropReport along_trace(const std::string& id, const ProfileSpec& profile, const Vec& d, double t0, const HelixReport& helix,
                       double tol, std::size_t samples) {
  PropReport r;
  r.id = id;
  r.hypothesis_met = helix.is_helix;
  const SurfaceSpec surf = revolve_euclidean(profile);
  std::vector<double> values;
  for (double s : linspace(profile.domain, samples)) values.push_back(field(surf, d, s, t0));
  const Spread sp = spread_of(values);
  r.value = sp.mean;
  r.spread = sp.width();
  r.expected = r.value;
  r.conclusion_verified = r.spread <= tol;
  r.detail = fmt("t0=%.17g helix value=%.17g helix spread=%.3e", t0, helix.value, helix.spread);
  return r;
}

}  // namespace

PropReport verify_prop_4_1(const ProfileSpec& profile, const Vec& d, int k, double tol, std::size_t samples) {
  const HelixReport helix = detect_general_helix(profile.curve(), d, samples, tol);
  const double t0 = (2.0 * k + 1.0) * std::numbers::pi / 2.0;
  return along_trace("prop4.1", profile, d, t0, helix, tol, samples);
}

PropReport verify_prop_4_2(const ProfileSpec& profile, const Vec& d, int k, double tol, std::size_t samples) {
  const HelixReport helix = detect_slant_helix(profile.curve(), d, samples, tol);
  const double t0 = k * std::numbers::pi;
  return along_trace("prop4.2", profile, d, t0, helix, tol, samples);
}

namespace {

ProfileSpec quadratic_profile(double c, double A, Interval s) {
  using namespace build;
  if (!(c > 0.0)) throw Error(ErrorCode::Precondition, "c must be positive");
  ProfileSpec p;
  const Expr v = variable(0, "s");
  p.g = add(div(pow(v, number(2.0)), number(2.0 * c)), number(A));
  p.domain = s;
  p.c = c;
  p.A = A;
  p.mode = RevolutionMode::Isotropic;
  return p;
}

}  // namespace

PropReport verify_prop_4_3(const Prop43Config& config) {
  if (config.lambda == 0.0) throw Error(ErrorCode::Precondition, "lambda must be nonzero");
  if (!(config.s.lo > 0.0)) throw Error(ErrorCode::Precondition, "the sampled s range must lie in s > 0");
  const ProfileSpec profile = quadratic_profile(config.c, config.A, config.s);
  RevolveOptions opt;
  opt.t = config.t;
  const SurfaceSpec surf = revolve_isotropic(profile, opt);

  // profile frame: N = (0, 0, 1), B = (0, -1, 0)
  const Vec d = config.branch == Prop43Branch::AlongN ? Vec(0.0, 0.0, config.lambda) : Vec(0.0, config.lambda, 0.0);

  const auto us = linspace(surf.u1, config.n1 + 1);
  const auto ts = linspace(surf.u2, config.n2 + 1);
  std::vector<double> values(us.size() * ts.size());
  parallel_for(us.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < ts.size(); ++j) values[i * ts.size() + j] = field(surf, d, us[i], ts[j]);
  });
  const Spread sp = spread_of(values);

  PropReport r;
  r.id = config.branch == Prop43Branch::AlongN ? "prop4.3.i" : "prop4.3.ii";
  r.hypothesis_met = true;
  r.value = sp.mean;
  r.spread = sp.width();
  r.expected = config.lambda / std::numbers::sqrt2;
  r.conclusion_verified = r.spread <= config.tol && std::abs(r.value - r.expected) <= config.tol;
  r.detail = fmt("c=%.17g A=%.17g lambda=%.17g", config.c, config.A, config.lambda) +
             fmt(" d=(0,%.17g,%.17g)", d.y(), d.z());
  return r;
}

PropReport verify_cor_4_4(double c, double A, Interval s, double tol, std::size_t samples) {
  const ProfileSpec profile = quadratic_profile(c, A, s);
  const CurveSpec curve = profile.curve();
  const HelixReport general = detect_general_helix(curve, Vec(0.0, 1.0, 0.0), samples, tol);
  const HelixReport slant = detect_slant_helix(curve, Vec(0.0, 0.0, 1.0), samples, tol);
  PropReport r;
  r.id = "cor4.4";
  r.hypothesis_met = true;
  r.conclusion_verified = general.is_helix && slant.is_helix;
  r.value = general.value;
  r.spread = std::max(general.spread, slant.spread);
  r.expected = -1.0;
  r.detail = fmt("<B,(0,1,0)>=%.17g <N,(0,0,1)>=%.17g", general.value, slant.value);
  return r;
}

}  // namespace g3

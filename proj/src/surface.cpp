#include "g3/surface.hpp"

#include <cmath>
#include <numbers>

namespace g3 {

SurfaceSpec SurfaceSpec::parse(const std::string& x, const std::string& y, const std::string& z, Interval u1,
                               Interval u2, const ParamMap& params, const std::vector<std::string>& variables) {
  if (variables.size() != 2) throw Error(ErrorCode::Precondition, "a surface has exactly two parameters");
  if (!(u1.lo < u1.hi) || !(u2.lo < u2.hi)) throw Error(ErrorCode::Precondition, "surface domain must satisfy lo < hi");
  SurfaceSpec s;
  s.x = g3::parse(x, variables, params);
  s.y = g3::parse(y, variables, params);
  s.z = g3::parse(z, variables, params);
  s.u1 = u1;
  s.u2 = u2;
  s.params = params;
  return s;
}

Vec SurfaceSpec::point(double a, double b) const {
  const double v[2] = {a, b};
  const std::span<const double> vars(v, 2);
  return Vec(evaluate<double>(x, vars), evaluate<double>(y, vars), evaluate<double>(z, vars));
}

SurfaceSpec transform(const SurfaceSpec& surface, const GalileanMotion& m) {
  using namespace build;
  const double c = std::cos(m.phi);
  const double s = std::sin(m.phi);
  SurfaceSpec out = surface;
  out.x = add(number(m.a), surface.x);
  out.y = add(add(number(m.b), mul(number(m.c1), surface.x)), add(mul(number(c), surface.y), mul(number(s), surface.z)));
  out.z = add(add(number(m.d0), mul(number(m.e1), surface.x)), add(mul(number(-s), surface.y), mul(number(c), surface.z)));
  return out;
}

SurfaceSample sample_surface(const SurfaceSpec& surface, double u1, double u2, double omega_min) {
  if (!surface.u1.contains(u1, 1e-9) || !surface.u2.contains(u2, 1e-9))
    throw Error(ErrorCode::Precondition, "point outside the surface domain");
  const Jet2 x = eval_jet2(surface.x, u1, u2);
  const Jet2 y = eval_jet2(surface.y, u1, u2);
  const Jet2 z = eval_jet2(surface.z, u1, u2);

  SurfaceSample out;
  out.point = Vec(x.value, y.value, z.value);
  out.Xu1 = Vec(x.du1, y.du1, z.du1);
  out.Xu2 = Vec(x.du2, y.du2, z.du2);
  const double ny = x.du2 * z.du1 - x.du1 * z.du2;
  const double nz = x.du1 * y.du2 - x.du2 * y.du1;
  out.omega = std::hypot(ny, nz);
  if (!(out.omega > omega_min)) {
    throw Error(ErrorCode::SingularNormal, "singular normal at (" + std::to_string(u1) + ", " + std::to_string(u2) +
                                               "): omega = " + std::to_string(out.omega));
  }
  out.n = Vec(0.0, ny / out.omega, nz / out.omega);
  out.g1 = x.du1;
  out.g2 = x.du2;
  out.h11 = euclid_dot(out.Xu1, out.Xu1);
  out.h12 = euclid_dot(out.Xu1, out.Xu2);
  out.h22 = euclid_dot(out.Xu2, out.Xu2);
  return out;
}

TraceSpec TraceSpec::parse(const std::string& u1, const std::string& u2, Interval domain, const ParamMap& params) {
  if (!(domain.lo < domain.hi)) throw Error(ErrorCode::Precondition, "trace domain must satisfy lo < hi");
  TraceSpec t;
  t.u1 = g3::parse(u1, {"s"}, params);
  t.u2 = g3::parse(u2, {"s"}, params);
  t.domain = domain;
  return t;
}

namespace {

struct TraceJets {
  Jet u1, u2;
  GVec3<Jet> alpha;
};

TraceJets trace_jets(const SurfaceSpec& surface, const TraceSpec& trace, double s) {
  TraceJets t;
  t.u1 = eval_jet(trace.u1, s, 3);
  t.u2 = eval_jet(trace.u2, s, 3);
  const Jet vars[2] = {t.u1, t.u2};
  const std::span<const Jet> v(vars, 2);
  t.alpha = GVec3<Jet>(evaluate<Jet>(surface.x, v), evaluate<Jet>(surface.y, v), evaluate<Jet>(surface.z, v));
  const double speed = t.alpha.x().d1;
  if (std::abs(speed - 1.0) > kAdmissibleTol) {
    throw Error(ErrorCode::InadmissibleTrace,
                "trace is not admissible at s = " + std::to_string(s) + ": dx/ds = " + std::to_string(speed) +
                    " (expected 1; when x = u1, substitute u1 = s)");
  }
  return t;
}

Vec vec_derivative(const GVec3<Jet>& v, int k) {
  return Vec(v.x().derivative(k), v.y().derivative(k), v.z().derivative(k));
}

}  // namespace

std::array<Vec, 4> trace_derivatives(const SurfaceSpec& surface, const TraceSpec& trace, double s) {
  const TraceJets t = trace_jets(surface, trace, s);
  return {vec_derivative(t.alpha, 0), vec_derivative(t.alpha, 1), vec_derivative(t.alpha, 2), vec_derivative(t.alpha, 3)};
}

FrenetSample induced_frenet(const SurfaceSpec& surface, const TraceSpec& trace, double s, double kappa_min) {
  const auto d = trace_derivatives(surface, trace, s);
  return frenet_from_derivatives(s, d[1], d[2], d[3], kappa_min);
}

DarbouxSample darboux(const SurfaceSpec& surface, const TraceSpec& trace, double s, double omega_min) {
  const TraceJets t = trace_jets(surface, trace, s);
  const double du1 = t.u1.d1;
  const double du2 = t.u2.d1;

  // Partials X_u1, X_u2 as first-order jets along the trace (chain rule).
  const Jet2 c[3] = {eval_jet2(surface.x, t.u1.value, t.u2.value), eval_jet2(surface.y, t.u1.value, t.u2.value),
                     eval_jet2(surface.z, t.u1.value, t.u2.value)};
  Jet p1[3], p2[3];
  for (int i = 0; i < 3; ++i) {
    p1[i] = Jet(c[i].du1, c[i].du1u1 * du1 + c[i].du1u2 * du2, 0.0, 0.0, 1);
    p2[i] = Jet(c[i].du2, c[i].du1u2 * du1 + c[i].du2u2 * du2, 0.0, 0.0, 1);
  }
  const Jet ny = p2[0] * p1[2] - p1[0] * p2[2];
  const Jet nz = p1[0] * p2[1] - p2[0] * p1[1];
  const double omega = std::hypot(ny.value, nz.value);
  if (!(omega > omega_min)) {
    throw Error(ErrorCode::SingularNormal,
                "singular normal along the trace at s = " + std::to_string(s) + ": omega = " + std::to_string(omega));
  }
  const Jet w = sqrt(ny * ny + nz * nz);
  const GVec3<Jet> n(Jet(0.0), ny / w, nz / w);
  const GVec3<Jet> T = differentiated(t.alpha);
  const GVec3<Jet> Q = gcross(n, T);

  const Vec dT = value_of(differentiated(T));
  const Vec dQ = value_of(differentiated(Q));

  DarbouxSample out;
  out.s = s;
  out.T = value_of(T);
  out.Q = value_of(Q);
  out.n = value_of(n);
  out.kg = euclid_dot(dT, out.Q);
  out.kn = euclid_dot(dT, out.n);
  out.tau_g = euclid_dot(dQ, out.n);
  out.phi = std::atan2(-out.kn, out.kg);
  return out;
}

TraceClass classify_trace(const SurfaceSpec& surface, const TraceSpec& trace, std::size_t samples, double tol) {
  if (samples < 1) throw Error(ErrorCode::Precondition, "classification needs samples");
  TraceClass out;
  for (double s : linspace(trace.domain, samples)) {
    const DarbouxSample d = darboux(surface, trace, s);
    out.max_kg = std::max(out.max_kg, std::abs(d.kg));
    out.max_kn = std::max(out.max_kn, std::abs(d.kn));
    out.max_tau_g = std::max(out.max_tau_g, std::abs(d.tau_g));
  }
  out.geodesic = out.max_kg <= tol;
  out.asymptotic = out.max_kn <= tol;
  out.line_of_curvature = out.max_tau_g <= tol;
  return out;
}

const char* to_string(AxisBranch b) {
  switch (b) {
    case AxisBranch::C5Trivial: return "C5-trivial";
    case AxisBranch::C6LineOfCurvature: return "C6-line-of-curvature";
    case AxisBranch::C13Asymptotic: return "C13-asymptotic";
    case AxisBranch::C14Degenerate: return "C14-degenerate";
  }
  return "?";
}

namespace {

std::vector<double> axis_samples(const TraceSpec& trace, const AxisOptions& o) {
  if (o.samples < 2) throw Error(ErrorCode::Precondition, "axis reconstruction needs at least 2 samples");
  // keep s +- h inside the trace domain
  return linspace({trace.domain.lo + o.fd_step, trace.domain.hi - o.fd_step}, o.samples);
}

template <typename AxisAt>
double fd_residual(const std::vector<double>& ss, double h, AxisAt axis_at) {
  double worst = 0.0;
  for (double s : ss) {
    const Vec diff = axis_at(s + h) - axis_at(s - h);
    worst = std::max(worst, euclid_norm(diff) / (2.0 * h) + std::abs(diff.x()) / (2.0 * h));
  }
  return worst;
}

bool all_below(const std::vector<DarbouxSample>& ds, double tol, double DarbouxSample::*field) {
  for (const auto& d : ds)
    if (std::abs(d.*field) > tol) return false;
  return true;
}

}  // namespace

AxisReport axis_isotropic(const SurfaceSpec& surface, const TraceSpec& trace, double theta, const AxisOptions& o) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2 + 1e-15))
    throw Error(ErrorCode::Precondition, "theta must lie in [0, pi/2]");
  const auto ss = axis_samples(trace, o);
  std::vector<DarbouxSample> ds;
  for (double s : ss) ds.push_back(darboux(surface, trace, s));
  const double cos_t = std::cos(theta);
  const double tan_t = std::tan(theta);

  AxisReport r;
  r.theta_or_phi = theta;

  if (all_below(ds, o.tol, &DarbouxSample::kn)) {
    // d = cos(theta) n is a unit vector only for theta = 0
    if (theta > o.tol) {
      throw Error(ErrorCode::ConstraintViolated,
                  "asymptotic trace has kn/kg = 0, which differs from tan(theta) = " + std::to_string(tan_t));
    }
    auto axis_at = [&](double s) { return cos_t * darboux(surface, trace, s).n; };
    r.branch = AxisBranch::C5Trivial;
    r.d = axis_at(ss[ss.size() / 2]);
    r.residual = fd_residual(ss, o.fd_step, axis_at);
  } else {
    if (!all_below(ds, o.tol, &DarbouxSample::tau_g))
      throw Error(ErrorCode::NotLineOfCurvature, "trace is neither asymptotic nor a line of curvature");
    for (const auto& d : ds) {
      if (std::abs(d.kg) <= o.tol)
        throw Error(ErrorCode::AxisUndefined, "kg vanishes at s = " + std::to_string(d.s) + " while kn does not");
      const double ratio = d.kn / d.kg;
      const int sign = ratio >= 0.0 ? 1 : -1;
      if (std::abs(std::abs(ratio) - tan_t) > o.tol * std::max(1.0, tan_t)) {
        throw Error(ErrorCode::ConstraintViolated, "kn/kg = " + std::to_string(ratio) + " at s = " +
                                                       std::to_string(d.s) + " is not +-tan(theta) = " +
                                                       std::to_string(tan_t));
      }
      if (r.ratio_sign != 0 && sign != r.ratio_sign && tan_t > o.tol)
        throw Error(ErrorCode::ConstraintViolated, "kn/kg changes sign along the trace");
      r.ratio_sign = sign;
    }
    auto axis_at = [&](double s) {
      const DarbouxSample d = darboux(surface, trace, s);
      return (-(d.kn / d.kg) * cos_t) * d.Q + cos_t * d.n;
    };
    r.branch = AxisBranch::C6LineOfCurvature;
    r.d = axis_at(ss[ss.size() / 2]);
    r.residual = fd_residual(ss, o.fd_step, axis_at);
  }
  r.success = r.residual <= o.residual_tol && std::abs(gnorm(r.d) - 1.0) <= 1e-9;
  return r;
}

AxisReport axis_nonisotropic(const SurfaceSpec& surface, const TraceSpec& trace, double phi, const AxisOptions& o) {
  const auto ss = axis_samples(trace, o);
  std::vector<DarbouxSample> ds;
  for (double s : ss) ds.push_back(darboux(surface, trace, s));

  AxisReport r;
  r.theta_or_phi = phi;

  if (all_below(ds, o.tol, &DarbouxSample::kn)) {
    for (const auto& d : ds) {
      if (std::abs(d.kg - phi * d.tau_g) > o.tol) {
        throw Error(ErrorCode::ConstancyViolated, "kg - phi tau_g = " + std::to_string(d.kg - phi * d.tau_g) +
                                                      " at s = " + std::to_string(d.s));
      }
    }
    auto axis_at = [&](double s) {
      const DarbouxSample d = darboux(surface, trace, s);
      return d.T + phi * d.n;
    };
    r.branch = AxisBranch::C13Asymptotic;
    r.d = axis_at(ss[ss.size() / 2]);
    r.residual = fd_residual(ss, o.fd_step, axis_at);
    r.success = r.residual <= o.residual_tol && std::abs(gnorm(r.d) - 1.0) <= 1e-9;
    return r;
  }

  if (all_below(ds, o.tol, &DarbouxSample::tau_g)) {
    // A constant axis here needs kg = kn = 0, i.e. a straight trace; since kn
    // does not vanish the configuration is reported as degenerate.
    auto axis_at = [&](double s) {
      const DarbouxSample d = darboux(surface, trace, s);
      const double q = std::abs(d.kg) > o.tol ? -(d.kn / d.kg) * phi : 0.0;
      return d.T + q * d.Q + phi * d.n;
    };
    r.branch = AxisBranch::C14Degenerate;
    r.d = axis_at(ss[ss.size() / 2]);
    r.residual = fd_residual(ss, o.fd_step, axis_at);
    r.success = false;
    return r;
  }

  throw Error(ErrorCode::NotAsymptotic, "trace is neither asymptotic nor a line of curvature");
}

}  // namespace g3

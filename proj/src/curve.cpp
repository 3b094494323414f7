#include "g3/curve.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace g3 {

CurveSpec CurveSpec::parse(const std::string& f, const std::string& g, Interval domain, const ParamMap& params) {
  if (!(domain.lo < domain.hi)) throw Error(ErrorCode::Precondition, "curve domain must satisfy lo < hi");
  CurveSpec c;
  c.f = g3::parse(f, {"s"}, params);
  c.g = g3::parse(g, {"s"}, params);
  c.domain = domain;
  c.params = params;
  return c;
}

std::array<Vec, 4> CurveSpec::derivatives(double s) const {
  const Jet fj = eval_jet(f, s, 3);
  const Jet gj = eval_jet(g, s, 3);
  return {Vec(s, fj.value, gj.value), Vec(1.0, fj.d1, gj.d1), Vec(0.0, fj.d2, gj.d2), Vec(0.0, fj.d3, gj.d3)};
}

FrenetSample frenet_from_derivatives(double s, const Vec& d1, const Vec& d2, const Vec& d3, double kappa_min) {
  const double kappa = euclid_norm(d2);
  if (!(kappa > kappa_min)) {
    throw Error(ErrorCode::StraightSegment,
                "curvature " + std::to_string(kappa) + " at s = " + std::to_string(s) + " leaves the frame undefined");
  }
  FrenetSample out;
  out.s = s;
  out.T = d1;
  out.N = Vec(0.0, d2.y() / kappa, d2.z() / kappa);
  out.B = gcross(out.T, out.N);
  out.kappa = kappa;
  Eigen::Matrix3d m;
  m.row(0) = d1.coeffs().transpose();
  m.row(1) = d2.coeffs().transpose();
  m.row(2) = d3.coeffs().transpose();
  out.tau = m.determinant() / (kappa * kappa);
  return out;
}

FrenetSample frenet(const CurveSpec& curve, double s, double kappa_min) {
  if (!curve.domain.contains(s)) throw Error(ErrorCode::Precondition, "s = " + std::to_string(s) + " is outside the curve domain");
  const auto d = curve.derivatives(s);
  return frenet_from_derivatives(s, d[1], d[2], d[3], kappa_min);
}

double curvature(const CurveSpec& curve, double s) {
  const Jet fj = eval_jet(curve.f, s, 2);
  const Jet gj = eval_jet(curve.g, s, 2);
  return std::hypot(fj.d2, gj.d2);
}

AdmissibilityReport is_admissible(const CurveSpec& curve, std::size_t samples, double kappa_min) {
  if (samples < 2) throw Error(ErrorCode::Precondition, "admissibility check needs at least 2 samples");
  AdmissibilityReport report;
  for (double s : linspace(curve.domain, samples)) {
    try {
      const double k = curvature(curve, s);
      if (!(k > kappa_min)) report.violations.push_back({s, "straight: curvature " + std::to_string(k)});
    } catch (const Error& e) {
      report.violations.push_back({s, e.what()});
    }
  }
  report.admissible = report.violations.empty();
  return report;
}

namespace {

void require_unit_isotropic(const Vec& d) {
  if (!d.is_isotropic() || std::abs(euclid_norm(d) - 1.0) > 1e-9)
    throw Error(ErrorCode::Precondition, "helix axis must be a unit isotropic vector");
}

template <typename Pick>
HelixReport detect_helix(const CurveSpec& curve, const Vec& d, std::size_t samples, double tol, Pick pick) {
  require_unit_isotropic(d);
  if (samples < 2) throw Error(ErrorCode::Precondition, "helix detection needs at least 2 samples");
  std::vector<double> values;
  values.reserve(samples);
  for (double s : linspace(curve.domain, samples)) values.push_back(gdot(pick(frenet(curve, s)), d));
  const Spread sp = spread_of(values);
  return {sp.width() <= tol, sp.mean, sp.width()};
}

}  // namespace

HelixReport detect_general_helix(const CurveSpec& curve, const Vec& d, std::size_t samples, double tol) {
  return detect_helix(curve, d, samples, tol, [](const FrenetSample& f) { return f.B; });
}

HelixReport detect_slant_helix(const CurveSpec& curve, const Vec& d, std::size_t samples, double tol) {
  return detect_helix(curve, d, samples, tol, [](const FrenetSample& f) { return f.N; });
}

CurveSpec transform(const CurveSpec& curve, const GalileanMotion& m) {
  using namespace build;
  // old parameter in terms of the new one: s_old = s - a
  const Expr s = variable(0, "s");
  const Expr shifted = sub(s, number(m.a));
  const Expr f = substitute(curve.f, 0, shifted);
  const Expr g = substitute(curve.g, 0, shifted);
  const double c = std::cos(m.phi);
  const double sn = std::sin(m.phi);

  CurveSpec out;
  out.f = add(add(number(m.b), mul(number(m.c1), shifted)), add(mul(number(c), f), mul(number(sn), g)));
  out.g = add(add(number(m.d0), mul(number(m.e1), shifted)), add(mul(number(-sn), f), mul(number(c), g)));
  out.domain = {curve.domain.lo + m.a, curve.domain.hi + m.a};
  out.params = curve.params;
  return out;
}

}  // namespace g3

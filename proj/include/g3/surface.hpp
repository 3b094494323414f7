#pragma once

// Parametric surfaces X(u1, u2), the isotropic unit normal, and the Darboux
// apparatus of admissible traces alpha(s) = X(u1(s), u2(s)).

#include <string>
#include <vector>

#include "g3/curve.hpp"
#include "g3/expr.hpp"
#include "g3/galilean.hpp"
#include "g3/sampling.hpp"

namespace g3 {

inline constexpr double kOmegaMin = 1e-10;
inline constexpr double kAdmissibleTol = 1e-9;

struct SurfaceSpec {
  Expr x, y, z;
  Interval u1, u2;
  ParamMap params;

  static SurfaceSpec parse(const std::string& x, const std::string& y, const std::string& z, Interval u1, Interval u2,
                           const ParamMap& params = {}, const std::vector<std::string>& variables = {"u1", "u2"});

  Vec point(double u1, double u2) const;
};

/// Image of the surface under a motion, same parameter domain.
SurfaceSpec transform(const SurfaceSpec& surface, const GalileanMotion& m);

struct SurfaceSample {
  Vec point;
  Vec Xu1, Xu2;
  Vec n;  // unit, isotropic
  double omega = 0.0;
  double g1 = 0.0, g2 = 0.0;
  double h11 = 0.0, h12 = 0.0, h22 = 0.0;
};

/// Throws SingularNormal when omega <= omega_min.
SurfaceSample sample_surface(const SurfaceSpec& surface, double u1, double u2, double omega_min = kOmegaMin);

struct TraceSpec {
  Expr u1, u2;
  Interval domain;

  static TraceSpec parse(const std::string& u1, const std::string& u2, Interval domain, const ParamMap& params = {});
};

struct DarbouxSample {
  double s = 0.0;
  Vec T, Q, n;
  double kg = 0.0;
  double kn = 0.0;
  double tau_g = 0.0;
  double phi = 0.0;  // kg = kappa cos(phi), kn = -kappa sin(phi)
};

/// Throws InadmissibleTrace when d/ds x(alpha(s)) differs from 1 by more than
/// kAdmissibleTol, SingularNormal on a degenerate normal.
DarbouxSample darboux(const SurfaceSpec& surface, const TraceSpec& trace, double s, double omega_min = kOmegaMin);

/// Position and derivatives up to third order of the induced curve.
std::array<Vec, 4> trace_derivatives(const SurfaceSpec& surface, const TraceSpec& trace, double s);

/// Frenet apparatus of the induced curve.
FrenetSample induced_frenet(const SurfaceSpec& surface, const TraceSpec& trace, double s, double kappa_min = kKappaMin);

struct TraceClass {
  bool geodesic = false;
  bool asymptotic = false;
  bool line_of_curvature = false;
  double max_kg = 0.0;
  double max_kn = 0.0;
  double max_tau_g = 0.0;
};

TraceClass classify_trace(const SurfaceSpec& surface, const TraceSpec& trace, std::size_t samples, double tol = 1e-8);

enum class AxisBranch { C5Trivial, C6LineOfCurvature, C13Asymptotic, C14Degenerate };

const char* to_string(AxisBranch b);

struct AxisOptions {
  std::size_t samples = 64;
  double tol = 1e-8;           // analytic quantities
  double residual_tol = 1e-5;  // finite-difference residual of d
  double fd_step = 1e-5;
};

struct AxisReport {
  Vec d;
  double theta_or_phi = 0.0;
  AxisBranch branch = AxisBranch::C5Trivial;
  double residual = 0.0;  // max |d'| over samples, by central differences
  int ratio_sign = 0;     // realized sign of kn/kg = +-tan(theta); 0 when not applicable
  bool success = false;
};

/// Axis of an isophote trace for a unit isotropic axis with <n, d> = cos(theta).
AxisReport axis_isotropic(const SurfaceSpec& surface, const TraceSpec& trace, double theta,
                          const AxisOptions& options = {});

/// Axis of an isophote trace for a unit non-isotropic axis with measure phi.
AxisReport axis_nonisotropic(const SurfaceSpec& surface, const TraceSpec& trace, double phi,
                             const AxisOptions& options = {});

}  // namespace g3

#pragma once

// Admissible curves alpha(s) = (s, f(s), g(s)) and their Frenet apparatus.
// For curves in this graph form the invariant parameter is the x-coordinate,
// so s is both parameter and arc length.

#include <string>
#include <vector>

#include "g3/expr.hpp"
#include "g3/galilean.hpp"
#include "g3/sampling.hpp"

namespace g3 {

inline constexpr double kKappaMin = 1e-10;

struct CurveSpec {
  Expr f;
  Expr g;
  Interval domain;
  ParamMap params;

  /// Parses f and g in the variable `s`.
  static CurveSpec parse(const std::string& f, const std::string& g, Interval domain, const ParamMap& params = {});

  /// Position and derivatives up to third order at s.
  std::array<Vec, 4> derivatives(double s) const;
};

struct FrenetSample {
  double s = 0.0;
  Vec T, N, B;
  double kappa = 0.0;
  double tau = 0.0;
};

/// Frenet frame from alpha', alpha'', alpha'''. Throws StraightSegment when
/// the curvature is at or below kappa_min.
FrenetSample frenet_from_derivatives(double s, const Vec& d1, const Vec& d2, const Vec& d3,
                                     double kappa_min = kKappaMin);

FrenetSample frenet(const CurveSpec& curve, double s, double kappa_min = kKappaMin);

/// Curvature without building a frame (zero on straight segments).
double curvature(const CurveSpec& curve, double s);

struct Violation {
  double s = 0.0;
  std::string reason;
};

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<Violation> violations;
};

/// Samples the domain; expression domain errors and straight points
/// (curvature <= kappa_min) are reported, not thrown.
AdmissibilityReport is_admissible(const CurveSpec& curve, std::size_t samples, double kappa_min = kKappaMin);

struct HelixReport {
  bool is_helix = false;
  double value = 0.0;   // mean of the sampled product
  double spread = 0.0;  // max - min
};

/// <B(s), d> constant along the curve for a unit isotropic axis d.
HelixReport detect_general_helix(const CurveSpec& curve, const Vec& d, std::size_t samples, double tol);

/// <N(s), d> constant along the curve for a unit isotropic axis d.
HelixReport detect_slant_helix(const CurveSpec& curve, const Vec& d, std::size_t samples, double tol);

/// The image of the curve under a motion, rewritten in graph form over the
/// shifted domain [lo + a, hi + a].
CurveSpec transform(const CurveSpec& curve, const GalileanMotion& m);

}  // namespace g3

#pragma once

// Surfaces of revolution in G3 from a profile alpha(s) = (s, 0, g(s)), turned
// either by Euclidean rotations (circles y^2 + z^2 = r^2) or by isotropic
// rotations with radius c (parabolas y = x^2 / 2c).

#include <string>
#include <vector>

#include "g3/curve.hpp"
#include "g3/surface.hpp"

namespace g3 {

enum class RevolutionMode { Euclidean, Isotropic };

const char* to_string(RevolutionMode m);

struct ProfileSpec {
  Expr g;  // in s
  Interval domain{0.0, 1.0};
  double c = 1.0;
  double A = 0.0;
  RevolutionMode mode = RevolutionMode::Euclidean;
  ParamMap params;

  static ProfileSpec parse(const std::string& g, Interval domain, const ParamMap& params = {});

  /// The planar curve (s, 0, g(s)).
  CurveSpec curve() const;
};

/// Lower s bound used for isotropic revolution when the profile domain reaches s = 0.
inline constexpr double kIsotropicSMin = 1e-3;

struct RevolveOptions {
  Interval t{-2.0, 2.0};  // isotropic mode only; Euclidean uses [0, 2 pi]
  double s_min = kIsotropicSMin;
  std::size_t check_samples = 257;
};

/// (s, g sin t, g cos t) over domain x [0, 2 pi]. Throws Precondition when a
/// sampled g(s) is not positive.
SurfaceSpec revolve_euclidean(const ProfileSpec& profile, const RevolveOptions& options = {});

/// (s + c t, s t + c t^2 / 2, g(s)). Throws Precondition for c <= 0. A domain
/// starting at or below 0 is clipped to [s_min, hi].
SurfaceSpec revolve_isotropic(const ProfileSpec& profile, const RevolveOptions& options = {});

SurfaceSpec revolve(const ProfileSpec& profile, const RevolveOptions& options = {});

struct NormalDecomposition {
  double aN = 0.0, aB = 0.0;                    // closed form
  double measured_aN = 0.0, measured_aB = 0.0;  // sampled normal projected on the profile frame
  bool agrees = false;                          // within 1e-9
};

/// n(s, t) = aN N(s) + aB B(s) with (N, B) the Frenet frame of the profile.
/// Throws StraightSegment where the profile has no frame.
NormalDecomposition frame_normal_decomposition(const ProfileSpec& profile, RevolutionMode mode, double s, double t);

struct PropReport {
  std::string id;
  bool hypothesis_met = false;
  bool conclusion_verified = false;
  double value = 0.0;   // mean field along the sampled set
  double spread = 0.0;  // max - min
  double expected = 0.0;
  std::string detail;
};

/// Euclidean revolution; profile a general helix with axis d; trace t0 = (2k+1) pi / 2.
PropReport verify_prop_4_1(const ProfileSpec& profile, const Vec& d, int k, double tol, std::size_t samples = 64);

/// Euclidean revolution; profile a slant helix with axis d; trace t0 = k pi.
PropReport verify_prop_4_2(const ProfileSpec& profile, const Vec& d, int k, double tol, std::size_t samples = 64);

enum class Prop43Branch { AlongN, AlongB };

struct Prop43Config {
  double c = 1.0;
  double A = 0.0;
  double lambda = 1.0;
  Prop43Branch branch = Prop43Branch::AlongN;
  Interval s{kIsotropicSMin, 5.0};
  Interval t{-2.0, 2.0};
  std::size_t n1 = 64, n2 = 64;
  double tol = 1e-12;
};

/// Quadratic profile g = s^2 / 2c + A under isotropic revolution: the field
/// with d = lambda N or d = -lambda B is lambda / sqrt 2 everywhere.
PropReport verify_prop_4_3(const Prop43Config& config);

/// The quadratic profile is both a general helix and a slant helix.
PropReport verify_cor_4_4(double c, double A, Interval s, double tol, std::size_t samples = 64);

}  // namespace g3

#pragma once

// Residuals of the frame identities along a surface trace, and a seeded
// corpus of admissible surface/trace pairs to evaluate them on.

#include <cstdint>
#include <string>
#include <vector>

#include "g3/surface.hpp"

namespace g3 {

struct CorpusPair {
  std::string label;
  SurfaceSpec surface;
  TraceSpec trace;
};

/// Surfaces X = (u1 + p u2, y, z) with random smooth y, z and traces
/// u2 = q(s), u1 = s - p q(s), so that x(alpha(s)) = s. Pairs whose normal or
/// curvature comes close to vanishing on the trace are redrawn.
std::vector<CorpusPair> random_corpus(std::uint64_t seed, std::size_t count);

/// Cylinder X = (u1, sin u2, cos u2) over [-4, 4] x [-4, 4] with the helix trace (s, s).
CorpusPair cylinder_helix();

struct IdentityResiduals {
  double s = 0.0;
  double kappa = 0.0;
  double kappa_sq = 0.0;       // |kg^2 + kn^2 - kappa^2|
  double tau_frenet = 0.0;
  double tau_literal = 0.0;    // -tau_g + (kg' kn - kg kn') / kappa^2
  double tau_relation = 0.0;   //  tau_g - (kg' kn - kg kn') / kappa^2
  double frenet_ode = 0.0;     // max of |T' - kappa N|, |N' - tau B|, |B' + tau N|
  double darboux_ode = 0.0;    // max of |T' - kg Q - kn n|, |Q' - tau_g n|, |n' + tau_g Q|
  double frame_rotation = 0.0; // max componentwise error of Q, n in terms of N, B and phi
};

/// Derivatives of frames and of kg, kn by central differences with step h.
IdentityResiduals identity_residuals(const SurfaceSpec& surface, const TraceSpec& trace, double s, double h = 1e-5);

}  // namespace g3

#pragma once

// Numerical hypothesis -> conclusion checks of the isophote-axis results on a
// concrete surface trace with a given axis.

#include <string>
#include <vector>

#include "g3/surface.hpp"

namespace g3 {

struct TheoremConfig {
  Vec axis;                 // normalized internally
  std::size_t samples = 64;
  double tol = 1e-8;
};

enum class TheoremStatus { Confirmed, Vacuous, Refuted };

const char* to_string(TheoremStatus s);

struct TheoremCheck {
  std::string id;  // "thm3.1i", "thm3.1ii", "thm3.2", "thm3.3", "thm3.4", "cor3.5", "thm3.6i", "thm3.6ii"
  bool hypothesis_met = false;
  bool conclusion_verified = false;
  std::string detail;

  TheoremStatus status() const {
    if (!hypothesis_met) return TheoremStatus::Vacuous;
    return conclusion_verified ? TheoremStatus::Confirmed : TheoremStatus::Refuted;
  }
};

/// Evaluates every result applicable to the axis kind: isotropic axes get
/// thm3.1i..thm3.4, non-isotropic axes get cor3.5, thm3.6i, thm3.6ii.
std::vector<TheoremCheck> verify_theorems(const SurfaceSpec& surface, const TraceSpec& trace,
                                          const TheoremConfig& config);

}  // namespace g3

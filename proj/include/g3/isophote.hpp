#pragma once

// Shading field <n(u1, u2), d> and its level sets over the parameter rectangle.

#include <optional>
#include <utility>
#include <vector>

#include "g3/surface.hpp"

namespace g3 {

/// n_y d_y + n_z d_z with the unit normal. For a unit isotropic axis this is
/// cos(angle(n, d)); for a non-isotropic axis with first component 1 it is the
/// mixed-pair measure. Throws SingularNormal.
double field(const SurfaceSpec& surface, const Vec& axis, double u1, double u2);

enum class LevelKind {
  Angle,       // value is beta in [0, pi/2]; level = cos(beta); isotropic axis only
  Level,       // value is the raw level
  Silhouette,  // level 0
};

struct IsophoteQuery {
  Vec axis{0.0, 0.0, 1.0};
  LevelKind kind = LevelKind::Angle;
  double value = 0.0;
  std::size_t n1 = 256;
  std::size_t n2 = 256;
  double refine_tol = 1e-9;
  int max_bisections = 30;

  /// Target level; validates the kind against the axis.
  double level() const;
};

struct IsophotePoint {
  double u1 = 0.0, u2 = 0.0;
  Vec p;
};

struct Polyline {
  std::vector<IsophotePoint> points;
  bool closed = false;
};

struct ConstantField {
  double value = 0.0;
  double spread = 0.0;
  bool whole_surface = false;  // |value - level| <= refine_tol
};

struct IsophoteStats {
  std::size_t cells = 0;
  std::size_t crossing_cells = 0;
  std::size_t singular_samples = 0;
  std::size_t skipped_cells = 0;  // touching a singular sample or a failed refinement
  std::size_t refinement_iterations = 0;
  std::size_t unconverged = 0;
};

struct IsophoteSet {
  double level = 0.0;
  Interval u1, u2;
  std::vector<Polyline> polylines;
  std::optional<ConstantField> constant_field;
  std::vector<std::pair<std::size_t, std::size_t>> crossing_cells;  // (i, j), row-major order
  IsophoteStats stats;
};

IsophoteSet extract(const SurfaceSpec& surface, const IsophoteQuery& query);

IsophoteSet silhouette(const SurfaceSpec& surface, const Vec& axis, std::size_t n1 = 256, std::size_t n2 = 256,
                       double refine_tol = 1e-9);

}  // namespace g3

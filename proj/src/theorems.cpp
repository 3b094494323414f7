#include "g3/theorems.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace g3 {

const char* to_string(TheoremStatus s) {
  switch (s) {
    case TheoremStatus::Confirmed: return "confirmed";
    case TheoremStatus::Vacuous: return "vacuous";
    case TheoremStatus::Refuted: return "refuted";
  }
  return "?";
}

namespace {

// Frames are built only where the curvature clearly exceeds round-off.
constexpr double kCurvedMin = 1e-6;

struct Row {
  DarbouxSample dx;
  double kappa = 0.0;
  bool curved = false;
  FrenetSample frenet;
  double field = 0.0;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

template <typename F>
bool all_rows(const std::vector<Row>& rows, F pred) {
  for (const auto& r : rows)
    if (!pred(r)) return false;
  return true;
}

template <typename F>
double max_over(const std::vector<Row>& rows, F value) {
  double m = 0.0;
  for (const auto& r : rows) m = std::max(m, std::abs(value(r)));
  return m;
}

}  // namespace

std::vector<TheoremCheck> verify_theorems(const SurfaceSpec& surface, const TraceSpec& trace,
                                          const TheoremConfig& config) {
  if (config.samples < 2) throw Error(ErrorCode::Precondition, "theorem checks need at least 2 samples");
  const Vec d = normalize_axis(config.axis);
  const double tol = config.tol;

  std::vector<Row> rows;
  for (double s : linspace(trace.domain, config.samples)) {
    Row r;
    r.dx = darboux(surface, trace, s);
    const auto der = trace_derivatives(surface, trace, s);
    r.kappa = euclid_norm(der[2]);
    r.curved = r.kappa > kCurvedMin;
    if (r.curved) r.frenet = frenet_from_derivatives(s, der[1], der[2], der[3]);
    r.field = euclid_dot(r.dx.n, d);
    rows.push_back(r);
  }

  std::vector<double> fields;
  for (const auto& r : rows) fields.push_back(r.field);
  const Spread field = spread_of(fields);
  const bool isophote = field.width() <= tol;
  const bool silhouette = isophote && std::abs(field.mean) <= tol;

  const double max_kg = max_over(rows, [](const Row& r) { return r.dx.kg; });
  const double max_kn = max_over(rows, [](const Row& r) { return r.dx.kn; });
  const double max_tg = max_over(rows, [](const Row& r) { return r.dx.tau_g; });
  const double max_kappa = max_over(rows, [](const Row& r) { return r.kappa; });
  const bool geodesic = max_kg <= tol;
  const bool asymptotic = max_kn <= tol;
  const bool line_of_curvature = max_tg <= tol;
  const bool straight = max_kappa <= tol;
  const bool all_curved = all_rows(rows, [](const Row& r) { return r.curved; });
  const double max_tau = max_over(rows, [](const Row& r) { return r.curved ? r.frenet.tau : 0.0; });
  const bool planar = max_tau <= tol;

  const std::string base = fmt("field mean=%.17g spread=%.3e", field.mean, field.width()) +
                           fmt(" max|kg|=%.3e max|kn|=%.3e max|tau_g|=%.3e", max_kg, max_kn, max_tg) +
                           fmt(" max kappa=%.3e max|tau|=%.3e", max_kappa, max_tau);

  std::vector<TheoremCheck> out;
  if (d.is_isotropic()) {
    const double cos_t = std::clamp(field.mean, -1.0, 1.0);
    const double theta = std::acos(cos_t);
    const bool angle_ok = isophote && field.mean >= -tol;
    const double tan_t = std::tan(theta);
    const double ratio_tol = tol * std::max(1.0, std::abs(tan_t));
    const bool kg_nonzero = all_rows(rows, [&](const Row& r) { return std::abs(r.dx.kg) > tol; });
    auto ratio_is = [&](double target) {
      return kg_nonzero && all_rows(rows, [&](const Row& r) { return std::abs(r.dx.kn / r.dx.kg - target) <= ratio_tol; });
    };
    const std::string with_theta = base + fmt(" theta=%.17g", theta);

    // geodesic isophote -> straight line
    out.push_back({"thm3.1i", isophote && geodesic, straight, with_theta});

    // asymptotic isophote -> plane curve with d along B
    const double max_db = max_over(rows, [&](const Row& r) { return r.curved ? 1.0 - std::abs(euclid_dot(r.frenet.B, d)) : 0.0; });
    out.push_back({"thm3.1ii", isophote && asymptotic, planar && max_db <= tol,
                   with_theta + fmt(" max(1-|<B,d>|)=%.3e", max_db)});

    // kn/kg = -tan(theta) -> d perpendicular to N
    const double max_nd = max_over(rows, [&](const Row& r) { return r.curved ? euclid_dot(r.frenet.N, d) : 1.0; });
    out.push_back({"thm3.2", angle_ok && all_curved && ratio_is(-tan_t), max_nd <= tol,
                   with_theta + fmt(" max|<N,d>|=%.3e", max_nd)});

    // kn/kg = tan(theta) and d perpendicular to B -> theta = pi/4
    const double max_bd = max_over(rows, [&](const Row& r) { return r.curved ? euclid_dot(r.frenet.B, d) : 1.0; });
    out.push_back({"thm3.3", angle_ok && all_curved && ratio_is(tan_t) && max_bd <= tol,
                   std::abs(theta - std::numbers::pi / 4) <= tol, with_theta + fmt(" max|<B,d>|=%.3e", max_bd)});

    // silhouette with d parallel to Q -> plane curve
    const double max_qd = max_over(rows, [&](const Row& r) { return 1.0 - std::abs(euclid_dot(r.dx.Q, d)); });
    out.push_back({"thm3.4", silhouette && max_qd <= tol, planar, with_theta + fmt(" max(1-|<Q,d>|)=%.3e", max_qd)});
  } else {
    // geodesic or line-of-curvature isophote -> straight line
    out.push_back({"cor3.5", isophote && (geodesic || line_of_curvature), straight, base});

    // silhouette with d in span{T, Q} -> plane curve
    const double max_span = max_over(rows, [&](const Row& r) { return euclid_dot(d - r.dx.T, r.dx.n); });
    out.push_back({"thm3.6i", silhouette && max_span <= tol, planar, base + fmt(" max|<d-T,n>|=%.3e", max_span)});

    // silhouette with d = T -> geodesic
    const double max_dt = max_over(rows, [&](const Row& r) { return euclid_norm(d - r.dx.T) + std::abs(d.x() - r.dx.T.x()); });
    out.push_back({"thm3.6ii", silhouette && max_dt <= tol, geodesic, base + fmt(" max|d-T|=%.3e", max_dt)});
  }
  return out;
}

}  // namespace g3

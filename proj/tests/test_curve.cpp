#include "doctest.h"

#include <cmath>
#include <random>

#include "g3/curve.hpp"
#include "oracle_values.hpp"

using namespace g3;

namespace {

bool near(const Vec& a, const Vec& b, double tol) { return (a.coeffs() - b.coeffs()).cwiseAbs().maxCoeff() <= tol; }

const CurveSpec cubic = CurveSpec::parse("s^2/2", "s^3/6", {0.0, 2.0});

}  // namespace

TEST_CASE("cubic frame at s = 0 and s = 1") {
  const FrenetSample f = frenet(cubic, 0.0);
  CHECK(near(f.T, Vec(1, 0, 0), 0));
  CHECK(near(f.N, Vec(0, 1, 0), 0));
  CHECK(near(f.B, Vec(0, 0, 1), 0));
  CHECK(f.kappa == 1.0);
  CHECK(f.tau == 1.0);
  const FrenetSample g = frenet(cubic, 1.0);
  CHECK(g.kappa == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(g.tau == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("cubic closed forms at 100 points") {
  for (double s : linspace(cubic.domain, 100)) {
    const FrenetSample f = frenet(cubic, s);
    CHECK(std::abs(f.kappa - std::sqrt(1 + s * s)) <= 1e-12);
    CHECK(std::abs(f.tau - 1 / (1 + s * s)) <= 1e-12);
  }
}

TEST_CASE("transcendental curve against the symbolic oracle") {
  const CurveSpec c = CurveSpec::parse("sin(s) + s^2", "exp(s/2) - s^3", {-1.0, 2.0});
  for (const auto& row : oracle::kCurve) {
    const FrenetSample f = frenet(c, row[0]);
    CHECK(f.kappa == doctest::Approx(row[1]).epsilon(1e-13));
    CHECK(f.tau == doctest::Approx(row[2]).epsilon(1e-12));
  }
}

TEST_CASE("plane profile") {
  const CurveSpec p = CurveSpec::parse("0", "s^2/2", {-1.0, 1.0});
  for (double s : {-0.8, 0.0, 0.6}) {
    const FrenetSample f = frenet(p, s);
    CHECK(f.kappa == 1.0);
    CHECK(f.tau == 0.0);
    CHECK(near(f.N, Vec(0, 0, 1), 0));
    CHECK(near(f.B, Vec(0, -1, 0), 0));
  }
}

TEST_CASE("frame is orthonormal") {
  const CurveSpec c = CurveSpec::parse("sin(s) + s^2", "exp(s/2) - s^3", {-1.0, 2.0});
  for (double s : linspace(c.domain, 40)) {
    const FrenetSample f = frenet(c, s);
    CHECK(std::abs(gnorm(f.N) - 1) <= 1e-12);
    CHECK(std::abs(gnorm(f.B) - 1) <= 1e-12);
    CHECK(std::abs(gdot(f.N, f.B)) <= 1e-12);
    CHECK(f.T.x() == 1.0);
  }
}

TEST_CASE("straight segments and domain") {
  const CurveSpec line = CurveSpec::parse("2*s", "0", {0.0, 1.0});
  CHECK_THROWS_AS(frenet(line, 0.5), Error);
  try {
    frenet(line, 0.5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StraightSegment);
  }
  CHECK_THROWS_AS(frenet(cubic, 3.0), Error);
  CHECK(curvature(line, 0.2) == 0.0);
}

TEST_CASE("admissibility reports") {
  CHECK(is_admissible(CurveSpec::parse("s^2/2", "s^3/6", {0.0, 1.0}), 32).admissible);
  const auto log_curve = is_admissible(CurveSpec::parse("log(s)", "0", {-1.0, 1.0}), 21);
  CHECK_FALSE(log_curve.admissible);
  for (const auto& v : log_curve.violations) CHECK(v.s <= 0.0);
  CHECK(log_curve.violations.size() == 11);
  const auto line = is_admissible(CurveSpec::parse("0", "0", {0.0, 1.0}), 8);
  CHECK_FALSE(line.admissible);
  CHECK(line.violations.size() == 8);
}

TEST_CASE("helix detectors") {
  const CurveSpec profile = CurveSpec::parse("0", "s^2/2 + 1", {0.0, 2.0});
  const HelixReport g = detect_general_helix(profile, Vec(0, 1, 0), 64, 1e-9);
  CHECK(g.is_helix);
  CHECK(g.value == -1.0);
  const HelixReport s = detect_slant_helix(profile, Vec(0, 0, 1), 64, 1e-9);
  CHECK(s.is_helix);
  CHECK(s.value == 1.0);

  CHECK_FALSE(detect_general_helix(cubic, Vec(0, 0, 1), 64, 1e-9).is_helix);
  CHECK_FALSE(detect_slant_helix(cubic, Vec(0, 1, 0), 64, 1e-9).is_helix);

  const CurveSpec plane = CurveSpec::parse("sin(s)", "0", {0.5, 2.5});
  CHECK(detect_general_helix(plane, normalize_axis(Vec(0, 1, 2)), 64, 1e-9).is_helix);

  CHECK_THROWS_AS(detect_slant_helix(profile, Vec(0, 0, 0), 64, 1e-9), Error);
  CHECK_THROWS_AS(detect_slant_helix(profile, Vec(1, 0, 0), 64, 1e-9), Error);
}

TEST_CASE("motions leave curvature and torsion unchanged") {
  const CurveSpec c = CurveSpec::parse("sin(s) + s^2", "exp(s/2) - s^3", {-1.0, 2.0});
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 20; ++k) {
    const GalileanMotion m{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    const CurveSpec moved = transform(c, m);
    for (double s : linspace(c.domain, 9)) {
      const FrenetSample a = frenet(c, s);
      const FrenetSample b = frenet(moved, s + m.a);
      CHECK(std::abs(a.kappa - b.kappa) <= 1e-8);
      CHECK(std::abs(a.tau - b.tau) <= 1e-8);
      CHECK(near(apply_motion(m, c.derivatives(s)[0]), moved.derivatives(s + m.a)[0], 1e-10));
    }
  }
}

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "g3/galilean.hpp"

using namespace g3;

namespace {

bool near(const Vec& a, const Vec& b, double tol) { return (a.coeffs() - b.coeffs()).cwiseAbs().maxCoeff() <= tol; }

}  // namespace

TEST_CASE("scalar product branches") {
  CHECK(gdot(Vec(1, 2, 3), Vec(2, 0, 1)) == 2.0);
  CHECK(gdot(Vec(0, 3, 4), Vec(0, 1, 1)) == 7.0);
  CHECK(gdot(Vec(0, 1, 0), Vec(1, 5, 5)) == 0.0);
}

TEST_CASE("norm") {
  CHECK(gnorm(Vec(2, 7, 9)) == 2.0);
  CHECK(gnorm(Vec(-2, 7, 9)) == 2.0);
  CHECK(gnorm(Vec(0, 3, 4)) == 5.0);
  CHECK(gnorm(Vec(0, 0, 0)) == 0.0);
}

TEST_CASE("cross product") {
  CHECK(near(gcross(Vec(1, 0, 0), Vec(0, 1, 0)), Vec(0, 0, 1), 0));
  CHECK(near(gcross(Vec(1, 0, 0), Vec(0, 0, 1)), Vec(0, -1, 0), 0));
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int k = 0; k < 20; ++k) {
    const Vec a(0, u(rng), u(rng)), b(0, u(rng), u(rng));
    CHECK(near(gcross(a, b), Vec(0, 0, 0), 0));
    const Vec c(u(rng), u(rng), u(rng)), d(u(rng), u(rng), u(rng));
    const Vec x = gcross(c, d);
    CHECK(x.is_isotropic());
    CHECK(near(gcross(d, c), -x, 1e-12));
  }
}

TEST_CASE("angles") {
  const AngleMeasure a = angle(Vec(1, 0, 0), Vec(1, 3, 4));
  CHECK(a.kind == AngleKind::NonIsotropicPair);
  CHECK(a.value == 5.0);
  const AngleMeasure b = angle(Vec(1, 2, 0), Vec(0, 1, 0));
  CHECK(b.kind == AngleKind::MixedPair);
  CHECK(b.value == 2.0);
  const AngleMeasure c = angle(Vec(0, 1, 0), Vec(0, 0, 1));
  CHECK(c.kind == AngleKind::IsotropicPair);
  CHECK(c.value == doctest::Approx(std::numbers::pi / 2));
  CHECK_THROWS_AS(angle(Vec(2, 0, 0), Vec(1, 3, 4)), Error);
  CHECK_THROWS_AS(angle(Vec(0, 0, 0), Vec(0, 1, 0)), Error);
}

TEST_CASE("motions") {
  const GalileanMotion id;
  CHECK(near(apply_motion(id, Vec(1, 2, 3)), Vec(1, 2, 3), 0));
  GalileanMotion r;
  r.phi = std::numbers::pi / 2;
  CHECK(near(apply_motion(r, Vec(0, 1, 0)), Vec(0, 0, -1), 1e-15));
  GalileanMotion t;
  t.a = 5;
  CHECK(near(apply_motion(t, Vec(1, 1, 1)), Vec(6, 1, 1), 0));
  CHECK(near(apply_motion(t, Vec(1, 1, 1), true), Vec(1, 1, 1), 0));
}

TEST_CASE("composition matches sequential application") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int k = 0; k < 50; ++k) {
    const GalileanMotion m1{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    const GalileanMotion m2{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    const Vec p(u(rng), u(rng), u(rng));
    CHECK(near(apply_motion(compose(m1, m2), p), apply_motion(m1, apply_motion(m2, p)), 1e-12));
  }
}

TEST_CASE("motions preserve the metric") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int k = 0; k < 50; ++k) {
    const GalileanMotion m{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    const Vec a(u(rng), u(rng), u(rng)), b(u(rng), u(rng), u(rng));
    CHECK(gdot(apply_motion(m, a, true), apply_motion(m, b, true)) == doctest::Approx(gdot(a, b)).epsilon(1e-12));
    const Vec i(0, u(rng), u(rng)), j(0, u(rng), u(rng));
    CHECK(gdot(apply_motion(m, i, true), apply_motion(m, j, true)) == doctest::Approx(gdot(i, j)).epsilon(1e-12));
  }
}

TEST_CASE("axis normalization") {
  CHECK(near(normalize_axis(Vec(0, 3, 4)), Vec(0, 0.6, 0.8), 1e-15));
  CHECK(near(normalize_axis(Vec(2, 2, 0)), Vec(1, 1, 0), 0));
  CHECK_THROWS_AS(normalize_axis(Vec(0, 0, 0)), Error);
}

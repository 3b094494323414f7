#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>

#include "g3/export.hpp"
#include "g3/identities.hpp"
#include "g3/isophote.hpp"
#include "g3/surfrev.hpp"

using namespace g3;

namespace {

constexpr double pi = std::numbers::pi;

GalileanMotion random_motion(std::mt19937_64& rng, bool shear = true) {
  std::uniform_real_distribution<double> u(-2, 2);
  GalileanMotion m{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
  if (!shear) m.c1 = m.e1 = 0.0;
  return m;
}

CurveSpec random_curve(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.2, 1.5);
  const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
  // f'' = a + 2 b s stays positive on [0, 1], so the curve is never straight
  return CurveSpec::parse(std::to_string(a / 2) + "*s^2 + " + std::to_string(b / 3) + "*s^3",
                          std::to_string(c / 6) + "*s^3 + " + std::to_string(d) + "*sin(s)", {0, 1});
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("frame identities on randomized surface traces") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (const auto& pair : random_corpus(seed, 10)) {
      for (double s : linspace(pair.trace.domain, 7)) {
        const IdentityResiduals r = identity_residuals(pair.surface, pair.trace, s);
        INFO(pair.label << " s = " << s);
        CHECK(r.kappa_sq <= 1e-9 * std::max(1.0, r.kappa * r.kappa));
        CHECK(std::abs(r.tau_relation - r.tau_frenet) <= 1e-6 * std::max(1.0, std::abs(r.tau_frenet)));
        CHECK(r.frenet_ode <= 1e-5);
        CHECK(r.darboux_ode <= 1e-5);
        CHECK(r.frame_rotation <= 1e-9);
      }
    }
  }
}

TEST_CASE("the opposite torsion sign gives minus the torsion") {
  for (const auto& pair : random_corpus(11, 5)) {
    for (double s : linspace(pair.trace.domain, 5)) {
      const IdentityResiduals r = identity_residuals(pair.surface, pair.trace, s);
      CHECK(std::abs(r.tau_literal + r.tau_frenet) <= 1e-6 * std::max(1.0, std::abs(r.tau_frenet)));
    }
  }
}

TEST_CASE("frames are orthonormal") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const CurveSpec c = random_curve(rng);
    for (double s : linspace(c.domain, 9)) {
      const FrenetSample f = frenet(c, s);
      CHECK(f.T.x() == doctest::Approx(1.0));
      CHECK(f.N.is_isotropic());
      CHECK(f.B.is_isotropic());
      CHECK(gnorm(f.N) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(gnorm(f.B) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(gdot(f.N, f.B)) <= 1e-12);
      CHECK(f.kappa > 0);
    }
  }
  for (const auto& pair : random_corpus(9, 10)) {
    for (double s : linspace(pair.trace.domain, 5)) {
      const DarbouxSample d = darboux(pair.surface, pair.trace, s);
      CHECK(gnorm(d.Q) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(gnorm(d.n) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(gdot(d.Q, d.n)) <= 1e-12);
      CHECK(std::abs(d.kg - std::hypot(d.kg, d.kn) * std::cos(d.phi)) <= 1e-12);
      CHECK(std::abs(d.kn + std::hypot(d.kg, d.kn) * std::sin(d.phi)) <= 1e-12);
    }
  }
}

TEST_CASE("curvature and torsion are motion invariants") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 100; ++k) {
    const CurveSpec c = random_curve(rng);
    const GalileanMotion m = random_motion(rng);
    const CurveSpec moved = transform(c, m);
    for (double s : {0.0, 0.37, 1.0}) {
      const FrenetSample a = frenet(c, s), b = frenet(moved, s + m.a);
      CHECK(rel(b.kappa, a.kappa) <= 1e-8);
      CHECK(rel(b.tau, a.tau) <= 1e-8);
    }
  }
}

TEST_CASE("Darboux invariants survive motions") {
  std::mt19937_64 rng(23);
  for (const auto& pair : random_corpus(4, 10)) {
    const SurfaceSpec moved = transform(pair.surface, random_motion(rng));
    for (double s : linspace(pair.trace.domain, 4)) {
      const DarbouxSample a = darboux(pair.surface, pair.trace, s), b = darboux(moved, pair.trace, s);
      CHECK(rel(b.kg, a.kg) <= 1e-8);
      CHECK(rel(b.kn, a.kn) <= 1e-8);
      CHECK(rel(b.tau_g, a.tau_g) <= 1e-8);
    }
  }
}

TEST_CASE("shading field with a co-moving isotropic axis is invariant") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1, 1);
  const auto corpus = random_corpus(8, 10);
  for (int k = 0; k < 100; ++k) {
    const CorpusPair& pair = corpus[k % corpus.size()];
    const GalileanMotion m = random_motion(rng);
    const Vec d = normalize_axis(Vec(0, u(rng), u(rng)));
    const Vec dm = apply_motion(m, d, true);
    const SurfaceSpec moved = transform(pair.surface, m);
    const double s = 0.5 * (1 + u(rng));
    const double u1 = evaluate(pair.trace.u1, s), u2 = evaluate(pair.trace.u2, s);
    CHECK(std::abs(field(moved, dm, u1, u2) - field(pair.surface, d, u1, u2)) <= 1e-10);
  }
}

TEST_CASE("unit normal components on profile frames") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.3, 2.0);
  for (int k = 0; k < 20; ++k) {
    const ProfileSpec p =
        ProfileSpec::parse(std::to_string(u(rng)) + "*s^2 + " + std::to_string(u(rng)) + "*s^3 + 1", {0.2, 2});
    for (RevolutionMode mode : {RevolutionMode::Euclidean, RevolutionMode::Isotropic}) {
      const NormalDecomposition d = frame_normal_decomposition(p, mode, 0.2 + 1.8 * (u(rng) - 0.3) / 1.7, u(rng));
      CHECK(d.aN * d.aN + d.aB * d.aB == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(d.agrees);
    }
  }
}

TEST_CASE("isophotes rotate with the surface") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(-pi, pi);
  const SurfaceSpec s = SurfaceSpec::parse("u1", "u2 + u1^2/3", "sin(u1)*u2 + u2^2/2", {-1, 1}, {-1, 1});
  for (int k = 0; k < 10; ++k) {
    GalileanMotion m;
    m.phi = u(rng);
    m.b = u(rng);
    IsophoteQuery q;
    q.axis = Vec(0, std::cos(u(rng)), 0.3);
    q.kind = LevelKind::Level;
    q.value = 0.4;
    q.n1 = q.n2 = 24;
    IsophoteQuery qm = q;
    qm.axis = apply_motion(m, q.axis, true);
    const IsophoteSet a = extract(s, q), b = extract(transform(s, m), qm);
    CHECK(a.crossing_cells == b.crossing_cells);
    REQUIRE(a.polylines.size() == b.polylines.size());
    for (std::size_t i = 0; i < a.polylines.size(); ++i) {
      REQUIRE(a.polylines[i].points.size() == b.polylines[i].points.size());
      for (std::size_t j = 0; j < a.polylines[i].points.size(); ++j) {
        CHECK(std::abs(a.polylines[i].points[j].u1 - b.polylines[i].points[j].u1) <= 1e-9);
        CHECK(std::abs(a.polylines[i].points[j].u2 - b.polylines[i].points[j].u2) <= 1e-9);
      }
    }
  }
}

TEST_CASE("refining the grid keeps every contour") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-1, 1);
  for (auto pair : random_corpus(12, 8)) {
    pair.surface.u1 = {-1, 1};
    pair.surface.u2 = {-1, 1};
    IsophoteQuery q;
    q.axis = Vec(0, u(rng), u(rng));
    q.kind = LevelKind::Level;
    q.value = 0.5 * u(rng);
    q.n1 = q.n2 = 16;
    IsophoteQuery fine = q;
    fine.n1 = fine.n2 = 32;
    IsophoteSet a, b;
    try {
      a = extract(pair.surface, q);
      b = extract(pair.surface, fine);
    } catch (const Error&) {
      continue;
    }
    const double reach = 2 * std::hypot(2.0 / 16, 2.0 / 16);
    for (const auto& line : a.polylines) {
      const auto& mid = line.points[line.points.size() / 2];
      double best = 1e300;
      for (const auto& other : b.polylines)
        for (const auto& p : other.points) best = std::min(best, std::hypot(p.u1 - mid.u1, p.u2 - mid.u2));
      CHECK(best <= reach);
    }
  }
}

TEST_CASE("results do not depend on the worker count") {
  const SurfaceSpec cyl = SurfaceSpec::parse("u1", "sin(u2)", "cos(u2) + u1^2/4", {0, 1}, {0, 2 * pi});
  IsophoteQuery q;
  q.value = pi / 3;
  q.n1 = q.n2 = 64;
  const char* before = std::getenv("G3_THREADS");
  const std::string saved = before ? before : "";
  setenv("G3_THREADS", "1", 1);
  const std::string one = to_json(extract(cyl, q)).dump();
  const std::size_t mesh_one = tessellate(cyl, 33, 17).vertices.size();
  setenv("G3_THREADS", "7", 1);
  const std::string seven = to_json(extract(cyl, q)).dump();
  std::ostringstream a, b;
  write_obj(a, tessellate(cyl, 33, 17));
  setenv("G3_THREADS", "1", 1);
  write_obj(b, tessellate(cyl, 33, 17));
  if (before) setenv("G3_THREADS", saved.c_str(), 1);
  else unsetenv("G3_THREADS");
  CHECK(one == seven);
  CHECK(a.str() == b.str());
  CHECK(mesh_one == 34 * 18);
}

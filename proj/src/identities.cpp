#include "g3/identities.hpp"

#include <cmath>
#include <cstdio>
#include <random>

namespace g3 {

namespace {

double yz_dist(const Vec& a, const Vec& b) {
  return std::hypot(a.y() - b.y(), a.z() - b.z()) + std::abs(a.x() - b.x());
}

double max_abs_diff(const Vec& a, const Vec& b) {
  return (a.coeffs() - b.coeffs()).cwiseAbs().maxCoeff();
}

bool usable(const CorpusPair& pair) {
  try {
    for (double s : linspace(pair.trace.domain, 33)) {
      if (sample_surface(pair.surface, evaluate(pair.trace.u1, s), evaluate(pair.trace.u2, s)).omega < 0.05) return false;
      if (induced_frenet(pair.surface, pair.trace, s).kappa < 0.05) return false;
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

}  // namespace

std::vector<CorpusPair> random_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_real_distribution<double> freq(0.5, 2.0);
  auto num = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "(%.17g)", v);
    return std::string(buf);
  };

  std::vector<CorpusPair> out;
  while (out.size() < count) {
    // draw in a fixed order; operand evaluation order in a + chain is unspecified
    double a[16];
    for (double& v : a) v = coef(rng);
    const double w1 = freq(rng), w2 = freq(rng);
    const std::string ps = num(0.8 * a[0]);
    const std::string x = "u1 + " + ps + "*u2";
    const std::string y = num(a[1]) + "*u1 + " + num(a[2]) + "*u2 + " + num(a[3]) + "*u1^2 + " + num(a[4]) +
                          "*u1*u2 + " + num(a[5]) + "*sin(" + num(w1) + "*u2)";
    const std::string z = num(a[6]) + "*u1 + " + num(a[7]) + "*u2 + " + num(a[8]) + "*u2^2 + " + num(a[9]) + "*cos(" +
                          num(w2) + "*u1) + " + num(a[10]) + "*u1^3/6";
    const std::string q = num(0.5 * a[11]) + " + " + num(a[12]) + "*s + " + num(0.5 * a[13]) + "*s^2";

    CorpusPair pair;
    pair.label = "corpus#" + std::to_string(out.size());
    pair.surface = SurfaceSpec::parse(x, y, z, {-10.0, 10.0}, {-10.0, 10.0});
    pair.trace = TraceSpec::parse("s - " + ps + "*(" + q + ")", q, {0.0, 1.0});
    if (usable(pair)) out.push_back(std::move(pair));
  }
  return out;
}

CorpusPair cylinder_helix() {
  CorpusPair pair;
  pair.label = "cylinder helix";
  pair.surface = SurfaceSpec::parse("u1", "sin(u2)", "cos(u2)", {-4.0, 4.0}, {-4.0, 4.0});
  pair.trace = TraceSpec::parse("s", "s", {-3.0, 3.0});
  return pair;
}

IdentityResiduals identity_residuals(const SurfaceSpec& surface, const TraceSpec& trace, double s, double h) {
  const DarbouxSample d0 = darboux(surface, trace, s);
  const DarbouxSample dm = darboux(surface, trace, s - h);
  const DarbouxSample dp = darboux(surface, trace, s + h);
  const FrenetSample f0 = induced_frenet(surface, trace, s);
  const FrenetSample fm = induced_frenet(surface, trace, s - h);
  const FrenetSample fp = induced_frenet(surface, trace, s + h);
  auto dvec = [h](const Vec& a, const Vec& b) { return (1.0 / (2.0 * h)) * (b - a); };

  IdentityResiduals r;
  r.s = s;
  r.kappa = f0.kappa;
  r.kappa_sq = std::abs(d0.kg * d0.kg + d0.kn * d0.kn - f0.kappa * f0.kappa);
  r.tau_frenet = f0.tau;
  const double kg1 = (dp.kg - dm.kg) / (2.0 * h);
  const double kn1 = (dp.kn - dm.kn) / (2.0 * h);
  const double cross = (kg1 * d0.kn - d0.kg * kn1) / (f0.kappa * f0.kappa);
  r.tau_literal = -d0.tau_g + cross;
  r.tau_relation = d0.tau_g - cross;

  r.frenet_ode = std::max({yz_dist(dvec(fm.T, fp.T), f0.kappa * f0.N), yz_dist(dvec(fm.N, fp.N), f0.tau * f0.B),
                           yz_dist(dvec(fm.B, fp.B), -f0.tau * f0.N)});
  r.darboux_ode = std::max({yz_dist(dvec(dm.T, dp.T), d0.kg * d0.Q + d0.kn * d0.n),
                            yz_dist(dvec(dm.Q, dp.Q), d0.tau_g * d0.n), yz_dist(dvec(dm.n, dp.n), -d0.tau_g * d0.Q)});
  const double c = std::cos(d0.phi), sn = std::sin(d0.phi);
  r.frame_rotation = std::max(max_abs_diff(d0.Q, c * f0.N + sn * f0.B), max_abs_diff(d0.n, -sn * f0.N + c * f0.B));
  return r;
}

}  // namespace g3

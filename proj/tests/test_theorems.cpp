#include "doctest.h"

#include <numbers>

#include "g3/theorems.hpp"
#include "g3/verify.hpp"

using namespace g3;

namespace {

TheoremCheck find(const std::vector<TheoremCheck>& all, const std::string& id) {
  for (const auto& t : all)
    if (t.id == id) return t;
  FAIL("missing " << id);
  return {};
}

}  // namespace

TEST_CASE("every scenario confirms its theorem") {
  for (const auto& sc : theorem_scenarios()) {
    CAPTURE(sc.id);
    TheoremConfig cfg;
    cfg.axis = sc.axis;
    const TheoremCheck t = find(verify_theorems(sc.surface, sc.trace, cfg), sc.id);
    CHECK(t.hypothesis_met);
    CHECK(t.conclusion_verified);
    CHECK(t.status() == TheoremStatus::Confirmed);
  }
}

TEST_CASE("axis kind selects the applicable results") {
  const SurfaceSpec plane = SurfaceSpec::parse("u1", "u2", "0", {-3, 3}, {-3, 3});
  const TraceSpec line = TraceSpec::parse("s", "2*s", {0, 1});
  TheoremConfig iso;
  iso.axis = Vec(0, 0, 1);
  CHECK(verify_theorems(plane, line, iso).size() == 5);
  TheoremConfig non;
  non.axis = Vec(1, 2, 0.5);
  const auto checks = verify_theorems(plane, line, non);
  CHECK(checks.size() == 3);
  CHECK(checks[0].id == "cor3.5");
}

TEST_CASE("hypotheses that fail are reported as vacuous") {
  const SurfaceSpec cyl = SurfaceSpec::parse("u1", "sin(u2)", "cos(u2)", {-4, 4}, {-4, 4});
  const TraceSpec helix = TraceSpec::parse("s", "s", {-1, 1});
  TheoremConfig cfg;
  cfg.axis = Vec(0, 0, 1);
  for (const auto& t : verify_theorems(cyl, helix, cfg)) {
    CAPTURE(t.id);
    CHECK(t.status() == TheoremStatus::Vacuous);
  }
}

TEST_CASE("theorem 3.3 forces a quarter angle") {
  const SurfaceSpec ruled = SurfaceSpec::parse("u1", "u1^2/2 + u2", "-u2", {-2, 2}, {-2, 2});
  TheoremConfig cfg;
  cfg.axis = Vec(0, 1, 0);
  const TheoremCheck t = find(verify_theorems(ruled, TraceSpec::parse("s", "0", {-1, 1}), cfg), "thm3.3");
  CHECK(t.status() == TheoremStatus::Confirmed);
  CHECK(t.detail.find("theta=0.785398163397448") != std::string::npos);
}

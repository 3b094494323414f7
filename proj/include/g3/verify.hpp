#pragma once

// The reproduction suite: theorem scenarios, axis reconstructions, the
// surface-of-revolution propositions and the frame identities, each reduced
// to a named pass/fail check with its measured numbers.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "g3/surface.hpp"
#include "g3/theorems.hpp"

namespace g3 {

inline constexpr int kSchemaVersion = 1;

struct TheoremScenario {
  std::string id;  // theorem id as reported by verify_theorems
  std::string description;
  SurfaceSpec surface;
  TraceSpec trace;
  Vec axis;
};

/// One constructed plane or cylinder trace per theorem, each meeting the
/// theorem's hypothesis.
std::vector<TheoremScenario> theorem_scenarios();

struct VerifyOptions {
  std::string filter;  // substring of the check name, dots optional
  std::uint64_t seed = 20240607;
  std::size_t corpus_size = 20;
  std::size_t samples = 64;
  double tol = 1e-8;
};

struct VerifyCheck {
  std::string name;
  bool passed = false;
  nlohmann::json metrics = nlohmann::json::object();
  std::string detail;
};

/// "prop4.3.i" matches "prop4.3", "prop43" and "43.i"; an empty filter matches everything.
bool filter_matches(const std::string& name, const std::string& filter);

/// Names of all checks, in run order.
std::vector<std::string> verify_check_names();

std::vector<VerifyCheck> run_verify(const VerifyOptions& options);

/// Deterministic report: no timings, fixed key order.
nlohmann::json verify_report(const VerifyOptions& options, const std::vector<VerifyCheck>& checks);

}  // namespace g3

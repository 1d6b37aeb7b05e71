#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "poisson_geom/identities.hpp"

namespace poisson_geom {

// Pass thresholds for the property suites. Defaults are the library's
// documented guarantees for unit-scale inputs.
struct ToleranceSet {
  double jacobi = 1e-12;
  double tomihisa = 1e-11;
  double razmyslov1 = 1e-10;
  double razmyslov2 = 1e-11;
  double decomposition = 1e-10;
  double tomihisa_points = 1e-9;
  double tomihisa_lines = 1e-9;
  double pappus = 1e-9;
  double eh_duality = 1e-12;
  double orthocenter = 1e-9;

  // Named override ("jacobi", "pappus", ...); unknown names are usage
  // errors.
  void set(const std::string& name, double value);
};

struct VerifyConfig {
  std::uint64_t seed = 42;
  std::uint64_t trials = 1000;
  // Empty means all twelve bracket contexts.
  std::vector<BracketContext> contexts;
  ToleranceSet tolerances;
};

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ContextReport {
  std::string context;
  std::vector<CheckResult> checks;
};

struct Report {
  std::string version;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  bool pass = false;
  std::vector<ContextReport> contexts;
  std::vector<CheckResult> geometry;
};

// Runs the identity suites per context plus the cross-context geometric
// suites. Identical (seed, trials, contexts) give an identical Report.
Report run_verify(const VerifyConfig& cfg);

// Fixed-layout JSON with shortest-round-trip number formatting; two runs of
// the same Report produce identical bytes.
std::string report_to_json(const Report& report);

// Parse "sig(+,+,-)" / "+,+,-" / "+++" / kind names; "all" is handled by the
// caller. Unknown tokens are usage errors.
BracketContext parse_context(const std::string& token);

}  // namespace poisson_geom

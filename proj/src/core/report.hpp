#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace wcert::report {

/// One verified (or skipped) claim inside a suite run.
struct CheckRecord {
  std::string claim;     // human-readable statement of what was checked
  std::string citation;  // registry identifier of the underlying claim
  std::string status;    // "pass" | "fail" | "skip"
  std::string witness;   // payload: counter-examples, determinants, labels, ...
  double ms = 0;
};

struct SuiteParams {
  long p = 3;
  unsigned n = 1;
  long c = 1;
  long cprime = 1;
  unsigned seed = 0;
};

struct Report {
  std::string suite;
  SuiteParams params;
  std::vector<CheckRecord> checks;

  /// Pass iff every non-skipped check passes.
  [[nodiscard]] bool passed() const;
  /// Stable-key JSON; timings can be excluded for byte-exact determinism
  /// comparisons.
  [[nodiscard]] nlohmann::json to_json(bool with_timings = true) const;
  [[nodiscard]] std::string to_text() const;
};

/// The ten suite names, in canonical order.
const std::vector<std::string>& suite_names();

/// Claim-identifier registry: id -> one-line description.  Every check's
/// citation must resolve here.
const std::map<std::string, std::string>& citation_registry();

/// The citations each suite is declared to exercise; the union over all
/// suites covers the registry (traceability).
const std::map<std::string, std::vector<std::string>>& suite_citation_map();

/// Runs a named suite.  Unknown names throw; infeasible parameter
/// combinations are reported as skipped checks with a reason, never silently
/// dropped.
Report run_suite(const std::string& name, const SuiteParams& params);

}  // namespace wcert::report

#pragma once

// ============================================================================
// Machine-readable verification reports.
//
// A report collects named checks (each carrying an anchor string locating
// the verified identity, the measured residual, and its tolerance) together
// with input-file digests.  Serialization is deterministic: identical inputs
// and flags produce byte-identical JSON except for the timestamp field,
// which is excluded from the report digest.
// ============================================================================

#include <string>
#include <utility>
#include <vector>

namespace wharf {

/// One verified identity.
struct CheckResult {
  std::string name;    ///< stable machine-readable identifier
  std::string anchor;  ///< human-readable locator of the verified identity
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// A full verification run.
struct VerificationReport {
  std::string tool_version;
  /// (path, lowercase hex SHA-256) of every input file, in load order.
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<CheckResult> checks;

  /// Conjunction of all pass flags (true when empty).
  bool overall() const;

  /// Records a residual check: passes when the residual is finite and at
  /// most the tolerance.
  void add_check(std::string name, std::string anchor, double residual,
                 double tolerance);

  /// Records a boolean check as residual 0 or 1 against tolerance 0.5.
  void add_flag(std::string name, std::string anchor, bool ok);

  /// Largest residual-to-tolerance ratio over all checks (0 when empty).
  double worst_ratio() const;
};

/// Canonical JSON without the timestamp: the digest input.
std::string report_body_json(const VerificationReport& report);

/// Full JSON: the canonical body plus a UTC timestamp and the SHA-256
/// digest of the canonical body.
std::string report_to_json(const VerificationReport& report);

/// Fixed-width human-readable table with one line per check and an overall
/// verdict line.
std::string report_to_table(const VerificationReport& report);

}  // namespace wharf

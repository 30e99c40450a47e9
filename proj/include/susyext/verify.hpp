#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace susyext {

enum class Comparison { at_most, at_least };

std::string_view to_string(Comparison c) noexcept;  // "<=" or ">="

/// One row of a verification report.
struct VerificationRow {
  std::string name;
  double value;  // worst residual (or the quantity named by the check)
  double tolerance;
  Comparison comparison;
  bool passed;
  std::vector<std::pair<std::string, double>> params;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;  // sorted by name
  bool passed() const noexcept;
};

enum class Suite { identities, spectra, qes, pct, all };

std::string_view to_string(Suite s) noexcept;
/// Throws InvalidParameter("suite", ...) for unknown names.
Suite suite_from_string(std::string_view name);

struct MorseTuple {
  double A = 3.5;
  double B = 1.0;
  double P = 0.4;
  double Q = 2.0;
};

struct RadialTuple {
  double omega = 2.0;
  double l = 1.0;
  int n = 2;
  double P = 0.3;
  double Q = 1.5;
};

struct CoulombTuple {
  double Z = 4.0;
  double l = 2.0;
  int n = 1;
  double P = 0.3;
  double Q = 1.5;
};

struct VerifyConfig {
  MorseTuple morse;
  RadialTuple radial;
  CoulombTuple coulomb;
  std::uint64_t seed = 42;
  /// Replacement tolerances keyed by check name.
  std::map<std::string, double> tolerance_overrides;
  /// Worker threads; 0 means hardware concurrency.
  unsigned threads = 0;
};

/// Names of the checks in a suite, sorted.
std::vector<std::string> suite_checks(Suite s);

/// Runs every check of the suite. ConvergenceError from any eigensolve
/// propagates; InvalidParameter for an override naming an unknown check.
VerificationReport run_suite(Suite s, const VerifyConfig& config);

/// Runs a single named check. InvalidParameter for unknown names.
VerificationRow run_check(std::string_view name, const VerifyConfig& config);

}  // namespace susyext

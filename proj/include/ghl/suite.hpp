#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ghl/report.hpp"

namespace ghl {

/// Inputs shared by the `verify` tests. `kind` selects the profile for pde:
/// soliton, breather, mkdv-breather or periodic.
struct VerifyParams {
  std::string kind = "breather";
  int n = 1;
  double alpha = 1.0;
  double beta = 1.1;
  double mu = 0.3;
  double c = 1.0;         // soliton
  double k = 1.0 / 17.0;  // periodic
  int order = 5;          // periodic
  double t = 0.0;
  double L = 40;
  int N = 2048;
  std::uint64_t seed = 1;

  json to_json() const;
  /// Missing keys keep their defaults. InvalidParameter on unknown keys.
  static VerifyParams from_json(const json& j);
};

VerificationReport verify_pde(const VerifyParams& p);
VerificationReport verify_ode(const VerifyParams& p);
VerificationReport verify_miura(const VerifyParams& p);
VerificationReport verify_conserved(const VerifyParams& p);
VerificationReport verify_critical_point(const VerifyParams& p);

/// Dispatch on "pde", "ode", "miura", "conserved", "critical-point".
VerificationReport verify(const std::string& test, const VerifyParams& p);

struct SuiteOptions {
  std::uint64_t seed = 20240611;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;
  json details = json::object();
  double seconds = 0;

  /// "criterion 3 PASS  exact-solution residuals: ..."
  std::string line() const;
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const SuiteOptions& opt = {});

/// Runs the listed criteria in order, printing each line to `log` (if given)
/// as soon as it finishes.
std::vector<CriterionResult> run_suite(const std::vector<int>& ids, const SuiteOptions& opt,
                                       std::ostream* log);

}  // namespace ghl

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace ghl {

using json = nlohmann::ordered_json;

std::string version();

/// "%.17g"
std::string format_double(double v);

/// Result of one `verify` run. The JSON layout is fixed:
/// {test, params, residual_inf, residual_l2, tolerance, pass} plus `extra`
/// when it is non-empty.
struct VerificationReport {
  std::string test;
  json params = json::object();
  double residual_inf = 0;
  double residual_l2 = 0;
  double tolerance = 0;
  bool pass = false;
  json extra = json::object();

  json to_json() const;
};

/// Written next to every set of results.
struct RunManifest {
  std::string command;
  json parameters = json::object();
  std::vector<std::string> outputs;

  /// The timestamp is UTC ISO-8601; GHL_TIMESTAMP overrides it so reruns
  /// can be compared byte for byte.
  json to_json() const;
};

/// Pretty-printed with a trailing newline. Throws Error when the file
/// cannot be written.
void write_json(const std::string& path, const json& j);

std::string utc_timestamp();

}  // namespace ghl

#include "ghl/report.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>

#include "ghl/error.hpp"

#ifndef GHL_VERSION
#define GHL_VERSION "dev"
#endif

namespace ghl {

std::string version() { return GHL_VERSION; }

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json VerificationReport::to_json() const {
  json j;
  j["test"] = test;
  j["params"] = params;
  j["residual_inf"] = residual_inf;
  j["residual_l2"] = residual_l2;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  if (!extra.empty()) j["extra"] = extra;
  return j;
}

std::string utc_timestamp() {
  if (const char* fixed = std::getenv("GHL_TIMESTAMP")) return fixed;
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json RunManifest::to_json() const {
  json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["version"] = version();
  j["timestamp"] = utc_timestamp();
  j["outputs"] = outputs;
  return j;
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
  if (!out) throw Error("write failed for " + path);
}

}  // namespace ghl

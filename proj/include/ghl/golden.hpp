#pragma once

#include <map>
#include <string>
#include <vector>

#include "ghl/diffpoly.hpp"

namespace ghl {

/// One "[name]" section of a golden transcription file: "key = value" lines
/// followed by polynomial text.
struct GoldenEntry {
  std::string name;
  std::map<std::string, std::string> keys;
  std::string text;

  std::string get(const std::string& key, const std::string& fallback = "") const;
  /// The transcribed polynomial, with `form = flux` entries differentiated
  /// once so the result is always P in u_t + P = 0 (or the Lenard operator).
  DiffPoly poly() const;
};

std::vector<GoldenEntry> load_golden(const std::string& path);

/// Directory the golden files were installed from at build time.
std::string golden_dir();

/// Term-level difference want - got, printed one term per line with the
/// coefficient in each. Empty when equal.
std::vector<std::string> term_diff(const DiffPoly& want, const DiffPoly& got,
                                   const std::string& var = "u");

}  // namespace ghl

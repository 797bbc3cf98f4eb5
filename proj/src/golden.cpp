#include "ghl/golden.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ghl/error.hpp"

#ifndef GHL_GOLDEN_DIR
#define GHL_GOLDEN_DIR "tests/golden"
#endif

namespace ghl {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string GoldenEntry::get(const std::string& key, const std::string& fallback) const {
  auto it = keys.find(key);
  return it == keys.end() ? fallback : it->second;
}

DiffPoly GoldenEntry::poly() const {
  const std::string var = get("var", "u");
  std::map<std::string, DiffPoly> aliases;
  const std::string alias = get("alias");
  if (!alias.empty()) aliases[alias] = DiffPoly::mu() + DiffPoly::var(0);
  DiffPoly p = parse_diffpoly(text, var, aliases);
  const std::string form = get("form", "direct");
  if (form == "flux") return total_derivative(p);
  if (form != "direct") throw ParseError("golden entry " + name + ": unknown form '" + form + "'");
  return p;
}

std::vector<GoldenEntry> load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open golden file " + path);
  std::vector<GoldenEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("bad section header '" + line + "' in " + path);
      out.push_back({line.substr(1, line.size() - 2), {}, ""});
      continue;
    }
    if (out.empty()) throw ParseError("content before first section in " + path);
    const auto eq = line.find('=');
    if (eq != std::string::npos && line.front() != '+' && line.front() != '-') {
      out.back().keys[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    } else {
      out.back().text += line + "\n";
    }
  }
  return out;
}

std::string golden_dir() { return GHL_GOLDEN_DIR; }

std::vector<std::string> term_diff(const DiffPoly& want, const DiffPoly& got,
                                   const std::string& var) {
  std::set<DiffMonomial> keys;
  for (const auto& [m, c] : want.terms()) keys.insert(m);
  for (const auto& [m, c] : got.terms()) keys.insert(m);
  std::vector<std::string> out;
  for (const auto& m : keys) {
    const Coeff a = coefficient_of(want, m);
    const Coeff b = coefficient_of(got, m);
    if (a == b) continue;
    std::ostringstream os;
    os << m.to_string(var) << ": expected " << a.to_string() << ", got " << b.to_string();
    out.push_back(os.str());
  }
  return out;
}

}  // namespace ghl

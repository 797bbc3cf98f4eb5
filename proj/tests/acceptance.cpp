// Runs acceptance criteria 1-10 and prints one PASS/FAIL line per criterion.
// Exit status is nonzero if any criterion fails.
#include <iostream>
#include <string>
#include <vector>

#include "ghl/kernels.hpp"
#include "ghl/suite.hpp"

int main(int argc, char** argv) {
  ghl::apply_thread_limit_from_env();
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
  if (ids.empty())
    for (int i = 1; i <= ghl::kCriterionCount; ++i) ids.push_back(i);
  const auto results = ghl::run_suite(ids, {}, &std::cout);
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

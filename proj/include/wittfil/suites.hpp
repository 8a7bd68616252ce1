#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace wittfil {

struct SuiteReport {
  std::string name;
  bool passed = true;
  long instances = 0;
  std::vector<std::string> counterexamples;  // re-runnable CLI lines where possible
  std::vector<std::string> notes;
};

std::vector<std::string> suite_names();
/// Adds (or replaces) a suite outside the built-in set, e.g. for tests.
void register_suite(const std::string& name, std::function<void(SuiteReport&, uint64_t, long)> body);
/// trials <= 0 selects the suite's default size. Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, uint64_t seed = 1, long trials = 0);

}  // namespace wittfil

#ifndef WBOSON_VERIFY_HPP
#define WBOSON_VERIFY_HPP

#include <string>
#include <vector>

namespace wb {

struct VerifyOptions {
  int p = 2;
  int maxLevel = -1;  // -1: default 2(2p-1)+2
  std::vector<std::string> suites;  // empty: all
  std::string cacheDir;
  int jobs = 1;
};

struct CheckResult {
  std::string name;
  bool pass;
  std::string note;  // failure detail, empty on pass
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
};

const std::vector<std::string>& allSuites();
bool knownSuite(const std::string& name);

// Runs the selected suites in fixed order. Results are deterministic and
// independent of the worker count.
std::vector<SuiteResult> runVerify(const VerifyOptions& opts);

bool allPassed(const std::vector<SuiteResult>& results);

// Fixed-format log, one line per check.
std::string formatResults(const std::vector<SuiteResult>& results,
                          const VerifyOptions& opts);

}  // namespace wb

#endif

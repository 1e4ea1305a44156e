#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wboson/report.hpp"
#include "wboson/verify.hpp"
#include "wboson/walgebra.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// Writes to the path, or stdout when the path is empty.
bool emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  out.flush();
  return static_cast<bool>(out);
}

int runReport(int p, const std::string& format, const std::string& outPath) {
  if (p < 2) {
    std::cerr << "report: p must be >= 2\n";
    return kExitUsage;
  }
  if (format != "json" && format != "text") {
    std::cerr << "report: format must be json or text\n";
    return kExitUsage;
  }
  wb::ReportDocument doc = wb::ReportDocument::build(p);
  std::string text = format == "json" ? doc.toJson() : doc.toText();
  if (!emit(outPath, text)) {
    std::cerr << "report: cannot write '" << outPath << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

int runVerifyCmd(const wb::VerifyOptions& opts, const std::string& outPath) {
  if (opts.p < 2) {
    std::cerr << "verify: p must be >= 2\n";
    return kExitUsage;
  }
  for (const auto& s : opts.suites) {
    if (!wb::knownSuite(s)) {
      std::cerr << "verify: unknown suite '" << s << "'\n";
      return kExitUsage;
    }
  }
  std::vector<wb::SuiteResult> results;
  try {
    results = wb::runVerify(opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kExitIo;
  }
  std::string text = wb::formatResults(results, opts);
  if (!emit(outPath, text)) {
    std::cerr << "verify: cannot write '" << outPath << "'\n";
    return kExitIo;
  }
  return wb::allPassed(results) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic engine for a rank-1 boson model: "
               "screening kernels, W-generators, and the classification "
               "curve"};
  app.require_subcommand(1);

  int reportP = 2;
  std::string reportFormat = "json";
  std::string reportOut;
  CLI::App* report = app.add_subcommand(
      "report", "Emit the classification-curve data for a given p");
  report->add_option("--p", reportP, "Model parameter p (>= 2)");
  report->add_option("--format", reportFormat, "Output format: json or text");
  report->add_option("--out", reportOut, "Output path (default: stdout)");

  wb::VerifyOptions vopts;
  vopts.maxLevel = -1;
  std::string verifyOut;
  const char* envCache = std::getenv("WBOSON_CACHE_DIR");
  if (envCache) vopts.cacheDir = envCache;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the verification suites and print one line per check");
  verify->add_option("--p", vopts.p, "Model parameter p (>= 2)");
  verify->add_option("--max-level", vopts.maxLevel,
                     "Depth bound for graded sweeps (default: 2(2p-1)+2)");
  verify->add_option("--suite", vopts.suites,
                     "Suite to run (repeatable; default: all)");
  verify->add_option("--cache-dir", vopts.cacheDir,
                     "Kernel cache directory (also WBOSON_CACHE_DIR)");
  verify->add_option("--jobs", vopts.jobs, "Worker threads (default: 1)");
  verify->add_option("--out", verifyOut, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (report->parsed()) return runReport(reportP, reportFormat, reportOut);
    if (verify->parsed()) return runVerifyCmd(vopts, verifyOut);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

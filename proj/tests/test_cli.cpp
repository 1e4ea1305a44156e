#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wboson/cache.hpp"
#include "wboson/report.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exitCode;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult runCli(const std::string& args) {
  std::string outPath = "cli_stdout.tmp";
  std::string cmd = std::string(WBOSON_CLI_PATH) + " " + args + " > " +
                    outPath + " 2> cli_stderr.tmp";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exitCode = WEXITSTATUS(rc);
  r.out = slurp(outPath);
  return r;
}

// Structural validation against the shipped schema: required keys, field
// types, and the rational-string pattern, for the subset of JSON Schema the
// schema file actually uses.
void validateRational(const std::string& s) {
  REQUIRE(!s.empty());
  size_t i = s[0] == '-' ? 1 : 0;
  bool sawDigit = false, sawSlash = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '/') {
      REQUIRE(sawDigit);
      REQUIRE(!sawSlash);
      sawSlash = true;
      sawDigit = false;
    } else {
      REQUIRE((s[i] >= '0' && s[i] <= '9'));
      sawDigit = true;
    }
  }
  REQUIRE(sawDigit);
}

void validateReport(const json& doc, const json& schema) {
  for (const auto& key : schema["required"]) {
    CAPTURE(key.get<std::string>());
    REQUIRE(doc.contains(key.get<std::string>()));
  }
  CHECK(doc["format"] == schema["properties"]["format"]["const"]);
  CHECK(doc["p"].is_number_integer());
  CHECK(doc["p"].get<int>() >= 2);
  for (const auto& field : {"central_charge", "C_p"})
    validateRational(doc[field].get<std::string>());
  for (const auto& triple : doc["P"]) {
    REQUIRE(triple.size() == 3);
    CHECK(triple[0].is_number_integer());
    CHECK(triple[1].is_number_integer());
    validateRational(triple[2].get<std::string>());
  }
  for (const auto& field : {"u", "v", "g"})
    for (const auto& pair : doc[field]) {
      REQUIRE(pair.size() == 2);
      CHECK(pair[0].is_number_integer());
      validateRational(pair[1].get<std::string>());
    }
  for (const auto& s : doc["samples"]) {
    for (const auto& key : {"t", "u", "v"}) {
      REQUIRE(s.contains(key));
      validateRational(s[key].get<std::string>());
    }
  }
  REQUIRE(doc["metadata"].contains("generator"));
  REQUIRE(doc["metadata"].contains("timestamp"));
}

}  // namespace

TEST_CASE("report json validates against the schema") {
  RunResult r = runCli("report --p 2 --format json");
  REQUIRE(r.exitCode == 0);
  json doc = json::parse(r.out);
  json schema = json::parse(slurp(WBOSON_SCHEMA_PATH));
  validateReport(doc, schema);
  CHECK(doc["central_charge"] == "-2");
  CHECK(doc["C_p"] == "128/9");
}

TEST_CASE("report text format") {
  RunResult r = runCli("report --p 3 --format text");
  REQUIRE(r.exitCode == 0);
  CHECK(r.out.find("p: 3") != std::string::npos);
  CHECK(r.out.find("central charge: -7") != std::string::npos);
}

TEST_CASE("report is byte-identical across runs") {
  RunResult a = runCli("report --p 2");
  RunResult b = runCli("report --p 2");
  CHECK(a.out == b.out);
}

TEST_CASE("verify suite selection and output") {
  RunResult r = runCli("verify --p 2 --suite heisenberg --suite curve");
  REQUIRE(r.exitCode == 0);
  CHECK(r.out.find("[heisenberg]") != std::string::npos);
  CHECK(r.out.find("[curve]") != std::string::npos);
  CHECK(r.out.find("[zhu]") == std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS heisenberg.bracket_pairs") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(runCli("report --p 1").exitCode == 2);
  CHECK(runCli("report --format yaml").exitCode == 2);
  CHECK(runCli("verify --suite nonsense").exitCode == 2);
  CHECK(runCli("frobnicate").exitCode == 2);
  CHECK(runCli("").exitCode == 2);
}

TEST_CASE("io errors exit with code 3") {
  CHECK(runCli("report --out /nonexistent/dir/report.json").exitCode == 3);
  CHECK(runCli("verify --suite curve --out /nonexistent/dir/log.txt")
            .exitCode == 3);
}

TEST_CASE("verify log is byte-identical across worker counts") {
  RunResult a = runCli("verify --p 2 --suite kernels --suite spanning --jobs 1");
  RunResult b = runCli("verify --p 2 --suite kernels --suite spanning --jobs 4");
  REQUIRE(a.exitCode == 0);
  REQUIRE(b.exitCode == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("kernel cache: hit, invalidation, and corruption") {
  std::string dir = "cli_cache_dir";
  RunResult a = runCli("verify --p 2 --suite kernels --cache-dir " + dir);
  REQUIRE(a.exitCode == 0);
  std::string file = dir + "/" + wb::cacheFileName(2, wb::ScreeningOp::Qtilde, 6);
  REQUIRE(!slurp(file).empty());
  // Cached run gives the same log.
  RunResult b = runCli("verify --p 2 --suite kernels --cache-dir " + dir);
  CHECK(b.out == a.out);
  // Corrupt payload: ignored with a recompute, results unchanged.
  {
    std::ofstream out(file, std::ios::binary);
    out << "format: 1\ngarbage";
  }
  RunResult c = runCli("verify --p 2 --suite kernels --cache-dir " + dir);
  CHECK(c.exitCode == 0);
  CHECK(c.out == a.out);
}

TEST_CASE("report timestamp override") {
  setenv("WBOSON_TIMESTAMP", "2000-01-01T00:00:00Z", 1);
  wb::ReportDocument doc = wb::ReportDocument::build(2);
  CHECK(doc.toJson().find("2000-01-01T00:00:00Z") != std::string::npos);
  unsetenv("WBOSON_TIMESTAMP");
}

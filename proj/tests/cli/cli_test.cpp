#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "schrogeo/cli/runner.hpp"

namespace schrogeo::cli {
namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "schrogeo");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "schrogeo_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

TEST(Config, Defaults) {
  const SuiteConfig c;
  EXPECT_EQ(c.dims, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(c.lambdas.size(), 4u);
  EXPECT_EQ(c.mus.size(), 4u);
  EXPECT_EQ(c.samples, 20);
  EXPECT_EQ(c.seed, 42u);
}

TEST(Config, ValidateCodes) {
  SuiteConfig c;
  try {
    validate(c);
    FAIL() << "missing suite accepted";
  } catch (const CliError& e) {
    EXPECT_EQ(e.code(), kExitUsage);
  }
  c.suite = "axioms";
  c.lambdas = {0.5};
  try {
    validate(c);
    FAIL() << "positive lambda accepted";
  } catch (const CliError& e) {
    EXPECT_EQ(e.code(), kExitValidation);
  }
  c.suite = "bargmann";
  EXPECT_NO_THROW(validate(c));
  c.dims = {0};
  EXPECT_THROW(validate(c), CliError);
}

TEST(Config, FileOverlaysDefaults) {
  const fs::path p = scratch("overlay.json");
  write_file(p, R"({"suite": "axioms", "dim": 3, "lambda": [-0.5], "mu": 1, "seed": 7})");
  const SuiteConfig c = load_config_file(p.string());
  EXPECT_EQ(c.suite, "axioms");
  EXPECT_EQ(c.dims, std::vector<int>{3});
  EXPECT_EQ(c.lambdas, std::vector<double>{-0.5});
  EXPECT_EQ(c.mus, std::vector<double>{1.0});
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.samples, 20);
}

TEST(Config, BadFilesAreIoErrors) {
  const fs::path bad = scratch("bad.json");
  for (const char* text : {"{not json", R"({"colour": 1})", R"({"dim": "three"})", "[1, 2]"}) {
    write_file(bad, text);
    try {
      load_config_file(bad.string());
      FAIL() << "accepted " << text;
    } catch (const CliError& e) {
      EXPECT_EQ(e.code(), kExitIo) << text;
    }
  }
  EXPECT_THROW(load_config_file(scratch("absent.json").string()), CliError);
}

TEST(Config, EnvironmentSeed) {
  SuiteConfig c;
  ::setenv("SCHROGEO_SEED", "123", 1);
  apply_environment(c);
  EXPECT_EQ(c.seed, 123u);
  ::setenv("SCHROGEO_SEED", "abc", 1);
  EXPECT_THROW(apply_environment(c), CliError);
  ::unsetenv("SCHROGEO_SEED");
}

TEST(Runner, CommutantDimensionRecord) {
  const Invocation r = invoke({"lie-algebra", "--dim", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& c : j["checks"]) {
    if (c["name"] == "commutant_dim") {
      found = true;
      EXPECT_EQ(c["expected"], 13.0);
      EXPECT_EQ(c["got"], 13.0);
      EXPECT_EQ(c["status"], "PASS");
    }
  }
  EXPECT_TRUE(found);
}

TEST(Runner, CanonicalAxiomsPass) {
  const Invocation r = invoke({"axioms", "--dim", "3", "--lambda", "-0.5", "--mu", "1"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
}

TEST(Runner, AxiomThreeFailsAwayFromMinusOneHalf) {
  const Invocation r = invoke({"axioms", "--dim", "3", "--lambda", "-1", "--mu", "1", "--format", "text"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_NE(r.out.find("FAIL axioms axiom3.einstein"), std::string::npos);
  EXPECT_NE(r.out.find("predicted factor 2.5"), std::string::npos);
}

TEST(Runner, SummaryCountsChecks) {
  const Invocation r = invoke({"boundary", "--dim", "2"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["version"], "1");
  EXPECT_EQ(j["summary"]["total"], j["checks"].size());
  EXPECT_EQ(j["summary"]["pass"], j["checks"].size());
  EXPECT_FALSE(j["config"].contains("out"));
}

TEST(Runner, ChecksSortedByName) {
  const Invocation r = invoke({"group", "--dim", "1", "--dim", "2"});
  const auto j = nlohmann::json::parse(r.out);
  std::string previous;
  for (const auto& c : j["checks"]) {
    const std::string name = c["name"];
    EXPECT_LE(previous, name);
    previous = name;
  }
}

TEST(Runner, SameSeedSameBytes) {
  const std::vector<std::string> args{"homogeneous", "--dim", "2", "--lambda", "-0.5", "--mu", "1", "--samples", "5"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Runner, SeedChangesReport) {
  const Invocation a = invoke({"boundary", "--dim", "2", "--seed", "1"});
  const Invocation b = invoke({"boundary", "--dim", "2", "--seed", "2"});
  EXPECT_NE(a.out, b.out);
}

TEST(Runner, TextPrefixes) {
  const Invocation r = invoke({"bargmann", "--dim", "1", "--format", "text"});
  std::istringstream lines(r.out);
  std::string line;
  int checks = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("summary:", 0) == 0) continue;
    EXPECT_TRUE(line.rfind("PASS ", 0) == 0 || line.rfind("FAIL ", 0) == 0 || line.rfind("ERROR ", 0) == 0) << line;
    ++checks;
  }
  EXPECT_GT(checks, 0);
}

TEST(Runner, WallClockOnlyOnStderr) {
  const Invocation r = invoke({"bargmann", "--dim", "1"});
  EXPECT_NE(r.err.find("finished in"), std::string::npos);
  EXPECT_EQ(r.out.find("finished in"), std::string::npos);
}

TEST(Runner, ExitCodes) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bargmann", "--frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"homogeneous", "--lambda", "0.5"}).code, kExitValidation);
  EXPECT_EQ(invoke({"bargmann", "--dim", "9"}).code, kExitValidation);
  EXPECT_EQ(invoke({"bargmann", "--format", "xml"}).code, kExitValidation);
  EXPECT_EQ(invoke({"bargmann", "--config", scratch("absent.json").string()}).code, kExitIo);
  EXPECT_EQ(invoke({"bargmann", "--out", "/nonexistent-dir/report.json"}).code, kExitIo);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Runner, FlagsOverrideFileAndEnvironment) {
  const fs::path p = scratch("precedence.json");
  write_file(p, R"({"suite": "boundary", "dim": [1], "seed": 5})");
  ::setenv("SCHROGEO_SEED", "6", 1);
  const auto from_env = nlohmann::json::parse(invoke({"--config", p.string()}).out);
  const auto from_flag = nlohmann::json::parse(invoke({"--config", p.string(), "--seed", "7"}).out);
  ::unsetenv("SCHROGEO_SEED");
  const auto from_file = nlohmann::json::parse(invoke({"--config", p.string()}).out);
  EXPECT_EQ(from_file["config"]["seed"], 5);
  EXPECT_EQ(from_env["config"]["seed"], 6);
  EXPECT_EQ(from_flag["config"]["seed"], 7);
  EXPECT_EQ(from_flag["config"]["suite"], "boundary");
}

TEST(Runner, OutWritesFile) {
  const fs::path p = scratch("report.json");
  fs::remove(p);
  const Invocation r = invoke({"bargmann", "--dim", "1", "--out", p.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(p);
  EXPECT_NO_THROW(nlohmann::json::parse(in));
}

TEST(Runner, EvaluationFailureBecomesErrorRecord) {
  RunReport run;
  run.report.add(error_record("broken", "boom"));
  EXPECT_EQ(exit_code(run), kExitCheckFailed);
  EXPECT_NE(emit_text(run).find("ERROR"), std::string::npos);
  EXPECT_NE(emit_json(run).find("\"error\": 1"), std::string::npos);
}

}  // namespace
}  // namespace schrogeo::cli

// Copyright 2026 The ztc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ztc/driver.h"

#include <sys/stat.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include "support/corpus.h"

namespace ztc {
namespace {

namespace fs = std::filesystem;
using ::ztc::testing::CorpusFiles;
using ::ztc::testing::DataPath;
using ::ztc::testing::ReadFile;
using ::ztc::testing::WriteFile;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string Quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// A fresh directory per test.
fs::path Scratch() {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  fs::path dir = fs::path(::testing::TempDir()) / "ztc_driver_test" /
                 (std::string(info->test_suite_name()) + "." + info->name());
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

CliResult Cli(const std::vector<std::string>& args) {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  fs::path err_file = fs::path(::testing::TempDir()) / "ztc_driver_test" /
                      (std::string(info->test_suite_name()) + "." + info->name() + ".stderr");
  fs::create_directories(err_file.parent_path());
  std::string cmd = Quote(ZTC_CLI_PATH);
  for (const auto& a : args) cmd += " " + Quote(a);
  cmd += " 2>" + Quote(err_file.string());
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = ReadFile(err_file.string());
  return r;
}

std::string Launch() { return DataPath("corpus/launch_vehicle.ztc"); }

std::string Executable(const fs::path& path, const std::string& body) {
  WriteFile(path.string(), "#!/bin/sh\n" + body);
  chmod(path.c_str(), 0755);
  return path.string();
}

// A stand-in solver: answers the reference spec with its checked-in model
// and every other script with unsat.
std::string FakeSolver(const fs::path& dir) {
  return Executable(dir / "fake-solver",
                    "case \"$1\" in\n"
                    "  *DetectReferenceEvent_NR_18.yices.ys) cat " +
                        Quote(DataPath("models/reference.yices.sat")) +
                        " ;;\n"
                        "  *) echo unsat ;;\n"
                        "esac\n");
}

const ReportRow& RowFor(const RunReport& report, const std::string& spec) {
  for (const auto& r : report.rows) {
    if (r.spec == spec) return r;
  }
  throw std::runtime_error("no row for " + spec);
}

TEST(CheckCommandTest, CorpusIsClean) {
  std::vector<std::string> args{"check"};
  for (const auto& f : CorpusFiles()) args.push_back(f);
  CliResult r = Cli(args);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.err.find("error:"), std::string::npos) << r.err;
}

TEST(CheckCommandTest, UndeclaredVariable) {
  fs::path file = Scratch() / "bad.ztc";
  WriteFile(file.string(), "spec S { n : NAT | m > 0 }\n");
  CliResult r = Cli({"check", file.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  EXPECT_NE(r.err.find("m"), std::string::npos);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
}

TEST(CheckCommandTest, EmptyFileOnlyWarns) {
  fs::path file = Scratch() / "empty.ztc";
  WriteFile(file.string(), "");
  std::vector<Diagnostic> diagnostics;
  EXPECT_EQ(Check({file.string()}, diagnostics), 0);
  ASSERT_EQ(diagnostics.size(), 1u);
  EXPECT_TRUE(diagnostics[0].warning);
  EXPECT_EQ(diagnostics[0].message, "no specs");
}

TEST(CheckCommandTest, MissingFileIsAnEnvironmentFailure) {
  CliResult r = Cli({"check", (Scratch() / "absent.ztc").string()});
  EXPECT_EQ(r.code, 2);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).code, 2);
  EXPECT_EQ(Cli({"frobnicate"}).code, 2);
  EXPECT_EQ(Cli({"solve", "--fss", "0", Launch()}).code, 2);
  EXPECT_EQ(Cli({"emit", "--dialect", "z3", Launch()}).code, 2);
  EXPECT_EQ(Cli({"--help"}).code, 0);
}

TEST(SolveCommandTest, StatusSpecHasAVerifiedWitness) {
  RunReport report = Solve({Launch()}, SolveOptions{});
  const ReportRow& row = RowFor(report, "SystemStatus_SP_1");
  EXPECT_EQ(row.result, "witness");
  EXPECT_TRUE(row.verified);
  ASSERT_TRUE(row.witness.has_value());
  EXPECT_EQ(row.explored, 1);
  EXPECT_EQ(report.ExitCode(), 0);
}

TEST(SolveCommandTest, CapAppliesToEverySpec) {
  SolveOptions options;
  options.search.max = 1;
  RunReport report = Solve({Launch()}, options);
  EXPECT_EQ(RowFor(report, "DetectReferenceEvent_NR_18").result, "capped");
  for (const auto& row : report.rows) EXPECT_LE(row.explored, 1) << row.spec;
  EXPECT_EQ(report.ExitCode(), 0);
}

TEST(SolveCommandTest, TotalsCountRows) {
  RunReport report = Solve(CorpusFiles(), SolveOptions{});
  auto totals = report.Totals();
  int sum = 0;
  for (const auto& [k, v] : totals) {
    if (k != "total") sum += v;
  }
  EXPECT_EQ(totals.at("total"), static_cast<int>(report.rows.size()));
  EXPECT_EQ(sum, totals.at("total"));
  EXPECT_GE(totals["witness"], 20);
}

TEST(SolveCommandTest, JsonIsIdenticalAcrossRunsAndJobCounts) {
  SolveOptions one, four;
  four.jobs = 4;
  const std::string a = Solve(CorpusFiles(), one).ToJson(false);
  EXPECT_EQ(a, Solve(CorpusFiles(), one).ToJson(false));
  EXPECT_EQ(a, Solve(CorpusFiles(), four).ToJson(false));
  auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["mode"], "solve");
  EXPECT_FALSE(j["rows"][0].contains("elapsed_ms"));
  EXPECT_TRUE(nlohmann::json::parse(Solve({Launch()}, one).ToJson())["rows"][0].contains("elapsed_ms"));
}

TEST(SolveCommandTest, CliJsonOnStdout) {
  CliResult r = Cli({"solve", "--json", "-", Launch()});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rows"].size(), 6u);
  EXPECT_EQ(j["rows"][1]["witness"]["bindings"]["now"], "2");
}

TEST(SolveCommandTest, UnparsableFileBecomesAnErrorRow) {
  fs::path file = Scratch() / "broken.ztc";
  WriteFile(file.string(), "spec S { n : NAT | n > }\n");
  RunReport report = Solve({file.string(), Launch()}, SolveOptions{});
  ASSERT_FALSE(report.rows.empty());
  EXPECT_EQ(report.rows[0].result, "error");
  EXPECT_EQ(report.rows[0].detail.rfind("ParseError", 0), 0u);
  EXPECT_EQ(report.ExitCode(), 1);
}

TEST(EmitCommandTest, WritesTheGoldenScripts) {
  for (bool variant : {false, true}) {
    for (Dialect d : {Dialect::kYices, Dialect::kCvc3}) {
      fs::path dir = Scratch() / (std::string(DialectName(d)) + (variant ? "-variant" : ""));
      std::vector<std::string> args{"emit", "--dialect", std::string(DialectName(d)), "--out",
                                    dir.string()};
      if (variant) args.push_back("--variant");
      for (const auto& f : CorpusFiles()) args.push_back(f);
      CliResult r = Cli(args);
      ASSERT_EQ(r.code, 0) << r.err << r.out;
      const fs::path golden = DataPath("golden/" + dir.filename().string());
      int files = 0;
      for (const auto& entry : fs::directory_iterator(golden)) {
        ++files;
        const fs::path written = dir / entry.path().filename();
        ASSERT_TRUE(fs::exists(written)) << written;
        EXPECT_EQ(ReadFile(written.string()), ReadFile(entry.path().string())) << written;
      }
      EXPECT_EQ(files, std::distance(fs::directory_iterator(dir), fs::directory_iterator()));
    }
  }
}

TEST(EmitCommandTest, VariantDeclaresScalarTypes) {
  EmitOptions options;
  options.dialect = Dialect::kCvc3;
  options.variant = true;
  options.out_dir = Scratch().string();
  RunReport report = Emit({DataPath("corpus/memory_data.ztc")}, options);
  const ReportRow& row = RowFor(report, "Cache_SP_1");
  ASSERT_EQ(row.artifacts.size(), 1u);
  EXPECT_NE(ReadFile(row.artifacts[0]).find("DATATYPE MDATA = MDATA1 | MDATA2 | MDATA3 END;"),
            std::string::npos);
}

TEST(EmitCommandTest, UnsupportedPredicateIsAnErrorRow) {
  RunReport report = Emit({DataPath("fixtures/unsupported.ztc")}, EmitOptions{});
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_EQ(report.rows[0].result, "error");
  EXPECT_EQ(report.rows[0].detail.rfind("UnsupportedPredicate: 6:", 0), 0u) << report.rows[0].detail;
  EXPECT_EQ(report.rows[1].result, "emitted");
  EXPECT_TRUE(report.rows[1].artifacts.empty());
  EXPECT_EQ(report.ExitCode(), 1);
}

TEST(ReconstructCommandTest, GoldenModel) {
  CliResult r = Cli({"reconstruct", DataPath("golden/yices/DetectReferenceEvent_NR_18.yices.ys"),
                     DataPath("models/reference.yices.sat"), Launch()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("spec DetectReferenceEvent_TC_18 {"), std::string::npos);
  EXPECT_NE(r.out.find("\"verified\": true"), std::string::npos);
}

TEST(ReconstructCommandTest, RejectedPotentialWitness) {
  CliResult r = Cli({"reconstruct", DataPath("golden/yices/DetectReferenceEvent_NR_18.yices.ys"),
                     DataPath("models/reference-wrong.yices.unknown"), Launch()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("\"verified\": false"), std::string::npos);
}

TEST(ReconstructCommandTest, ScriptFromAnotherFile) {
  try {
    ReconstructFiles(DataPath("golden/yices/Cache_SP_1.yices.ys"), DataPath("models/reference.yices.sat"),
                     Launch());
    FAIL() << "expected a ReconstructError";
  } catch (const ReconstructError& e) {
    EXPECT_EQ(e.kind(), ReconstructError::Kind::kMissingBinding);
  }
  CliResult r = Cli({"reconstruct", DataPath("golden/yices/Cache_SP_1.yices.ys"),
                     DataPath("models/reference.yices.sat"), Launch()});
  EXPECT_NE(r.code, 0);
}

TEST(ReconstructCommandTest, MissingModelFile) {
  CliResult r = Cli({"reconstruct", DataPath("golden/yices/DetectReferenceEvent_NR_18.yices.ys"),
                     (Scratch() / "none.txt").string(), Launch()});
  EXPECT_EQ(r.code, 2);
}

TEST(RunSolverCommandTest, FakeSolverAnswersAreReconstructed) {
  fs::path dir = Scratch();
  SolverOptions options;
  options.solver_bin = FakeSolver(dir);
  options.out_dir = (dir / "out").string();
  options.timeout_s = 30;
  RunReport report = RunSolver({Launch()}, options);
  const ReportRow& ref = RowFor(report, "DetectReferenceEvent_NR_18");
  EXPECT_EQ(ref.result, "sat");
  EXPECT_TRUE(ref.verified);
  ASSERT_EQ(ref.artifacts.size(), 2u);
  EXPECT_EQ(ReadFile(ref.artifacts[1]), ReadFile(DataPath("models/reference.yices.sat")));
  EXPECT_EQ(RowFor(report, "SystemStatus_SP_1").result, "unsat");
  EXPECT_EQ(report.ExitCode(), 0);
}

TEST(RunSolverCommandTest, GarbageAnswerIsAParseFailure) {
  fs::path dir = Scratch();
  SolverOptions options;
  options.solver_bin = Executable(dir / "noisy", "echo sat; echo '(= now'\n");
  options.out_dir = (dir / "out").string();
  RunReport report = RunSolver({Launch()}, options);
  const ReportRow& row = RowFor(report, "DetectReferenceEvent_NR_18");
  EXPECT_EQ(row.result, "error");
  EXPECT_EQ(row.detail.rfind("parse-failure at line 2", 0), 0u) << row.detail;
}

TEST(RunSolverCommandTest, SlowSolverTimesOut) {
  fs::path dir = Scratch();
  SolverOptions options;
  options.solver_bin = Executable(dir / "slow", "exec sleep 5\n");
  options.timeout_s = 0.2;
  options.jobs = 6;
  RunReport report = RunSolver({Launch()}, options);
  for (const auto& row : report.rows) EXPECT_EQ(row.result, "timeout") << row.spec;
  EXPECT_EQ(report.ExitCode(), 1);
}

TEST(RunSolverCommandTest, ZeroTimeoutSkipsTheSolver) {
  fs::path dir = Scratch();
  CliResult r = Cli({"run-solver", "--solver-bin", FakeSolver(dir), "--timeout", "0", "--out",
                     (dir / "out").string(), "--json", "-", Launch()});
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["totals"]["timeout"], j["totals"]["total"]);
}

TEST(RunSolverCommandTest, MissingSolverBinary) {
  CliResult r = Cli({"run-solver", "--solver-bin", (Scratch() / "no-such-solver").string(), Launch()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not found"), std::string::npos);
}

}  // namespace
}  // namespace ztc

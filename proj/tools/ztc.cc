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

// ztc: check, search, embed and reconstruct Z test specifications.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ztc/driver.h"
#include "ztc/error.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEnvironment = 2;

int Report(const ztc::RunReport& report, const std::string& json_path) {
  if (json_path == "-") {
    std::cout << report.ToJson();
  } else {
    std::cout << report.ToTable();
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      out << report.ToJson();
      if (!out) {
        std::cerr << "ztc: cannot write " << json_path << "\n";
        return kExitEnvironment;
      }
    }
  }
  return report.ExitCode();
}

ztc::Dialect DialectFlag(const std::string& name) {
  auto d = ztc::ParseDialect(name);
  if (!d) throw ztc::EnvironmentError("unknown dialect '" + name + "' (expected yices or cvc3)");
  return *d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-model search and SMT embedding for Z test specifications", "ztc"};
  app.set_version_flag("--version", std::string(ztc::kToolVersion));
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string json_path;
  int jobs = 1;

  auto* check = app.add_subcommand("check", "Parse and typecheck specs");
  check->add_option("files", files, "Spec files")->required();

  ztc::SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "Search a finite model for every spec");
  solve->add_option("files", files, "Spec files")->required();
  solve->add_option("--fss", solve_opts.search.fss, "Finite set size per basic or numeric type")
      ->capture_default_str();
  solve->add_option("--max", solve_opts.search.max, "Cap on explored model elements")
      ->capture_default_str();
  solve->add_flag("--pad-numeric", solve_opts.search.pad_numeric,
                  "Pad short literal lists with the default interval");
  solve->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
  solve->add_option("--jobs", jobs, "Specs processed in parallel")->check(CLI::PositiveNumber);

  std::string dialect = "yices";
  bool variant = false;
  std::string out_dir;
  auto* emit = app.add_subcommand("emit", "Write one solver script per spec");
  emit->add_option("files", files, "Spec files")->required();
  emit->add_option("--dialect", dialect, "yices or cvc3")->capture_default_str();
  emit->add_flag("--variant", variant, "Declare basic types as three-constant scalar types");
  emit->add_option("--out", out_dir, "Output directory");
  emit->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
  emit->add_option("--jobs", jobs, "Specs processed in parallel")->check(CLI::PositiveNumber);

  std::string script_path, model_path, spec_file;
  auto* reconstruct = app.add_subcommand("reconstruct", "Turn a solver answer into a test case");
  reconstruct->add_option("script", script_path, "Script written by 'ztc emit'")->required();
  reconstruct->add_option("model", model_path, "Solver output for that script")->required();
  reconstruct->add_option("specs", spec_file, "Spec file containing the spec")->required();

  std::string solver_bin;
  std::vector<std::string> solver_args;
  double timeout = 60;
  auto* run = app.add_subcommand("run-solver", "Run an external solver on every emitted script");
  run->add_option("files", files, "Spec files")->required();
  run->add_option("--solver-bin", solver_bin, "Solver executable (default: $ZTC_SOLVER_BIN)");
  run->add_option("--solver-arg", solver_args, "Extra solver argument, before the script path");
  run->add_option("--dialect", dialect, "yices or cvc3")->capture_default_str();
  run->add_flag("--variant", variant, "Declare basic types as three-constant scalar types");
  run->add_option("--timeout", timeout, "Seconds per solver run")->capture_default_str();
  run->add_option("--out", out_dir, "Directory for scripts and answers");
  run->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
  run->add_option("--jobs", jobs, "Solver processes run at once")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitEnvironment;
  }

  try {
    if (*check) {
      std::vector<ztc::Diagnostic> diagnostics;
      int rc = ztc::Check(files, diagnostics);
      for (const auto& d : diagnostics) {
        std::cerr << d.file << ": " << (d.warning ? "warning: " : "error: ") << d.message << "\n";
      }
      return rc;
    }
    if (*solve) {
      try {
        solve_opts.search.Validate();
      } catch (const std::invalid_argument& e) {
        std::cerr << "ztc: " << e.what() << "\n";
        return kExitEnvironment;
      }
      solve_opts.jobs = jobs;
      return Report(ztc::Solve(files, solve_opts), json_path);
    }
    if (*emit) {
      ztc::EmitOptions opts;
      opts.dialect = DialectFlag(dialect);
      opts.variant = variant;
      opts.out_dir = out_dir;
      opts.jobs = jobs;
      return Report(ztc::Emit(files, opts), json_path);
    }
    if (*reconstruct) {
      try {
        auto result = ztc::ReconstructFiles(script_path, model_path, spec_file);
        std::cout << result.json << "\n\n" << result.test_case;
        return result.witness.confirmed() ? kExitOk : 1;
      } catch (const ztc::Error& e) {
        std::cerr << "ztc: " << e.what() << "\n";
        return 1;
      }
    }
    if (*run) {
      ztc::SolverOptions opts;
      opts.solver_bin = ztc::ResolveSolverBin(solver_bin);
      opts.solver_args = solver_args;
      opts.dialect = DialectFlag(dialect);
      opts.variant = variant;
      opts.timeout_s = timeout;
      opts.out_dir = out_dir;
      opts.jobs = jobs;
      return Report(ztc::RunSolver(files, opts), json_path);
    }
  } catch (const ztc::EnvironmentError& e) {
    std::cerr << "ztc: " << e.what() << "\n";
    return kExitEnvironment;
  }
  return kExitOk;
}

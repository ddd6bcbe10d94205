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

// Batch commands behind the `ztc` executable. Each command processes every
// spec of every input file and returns a report with one row per spec.

#ifndef ZTC_DRIVER_H_
#define ZTC_DRIVER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ztc/emit.h"
#include "ztc/search.h"
#include "ztc/witness.h"

namespace ztc {

// Failures of the surroundings rather than of a spec: unreadable inputs,
// unwritable outputs, a missing solver binary. Mapped to exit code 2.
class EnvironmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReportRow {
  std::string file;
  std::string spec;
  // witness, exhausted, capped, emitted, sat, unknown, unsat, timeout, error
  std::string result;
  std::string detail;
  bool verified = false;
  int64_t explored = 0;
  double elapsed_ms = 0;
  std::vector<std::string> artifacts;
  std::optional<Witness> witness;
};

struct RunReport {
  std::string mode;  // solve, emit, run-solver
  std::vector<ReportRow> rows;

  // Count of rows per result, plus "total".
  std::map<std::string, int> Totals() const;
  // Timing is the only field that differs between identical runs.
  std::string ToJson(bool with_timing = true) const;
  std::string ToTable() const;
  // 0 when no row is an error (or an unverified witness), 1 otherwise.
  int ExitCode() const;
};

struct Diagnostic {
  std::string file;
  std::string message;  // includes line:column when known
  bool warning = false;
};

// Parses and typechecks every spec; returns the exit code.
int Check(const std::vector<std::string>& files, std::vector<Diagnostic>& diagnostics);

struct SolveOptions {
  SearchConfig search;
  int jobs = 1;
};
RunReport Solve(const std::vector<std::string>& files, const SolveOptions& options);

struct EmitOptions {
  Dialect dialect = Dialect::kYices;
  bool variant = false;
  std::string out_dir;  // empty: do not write files
  int jobs = 1;
};
RunReport Emit(const std::vector<std::string>& files, const EmitOptions& options);

struct ReconstructResult {
  Witness witness;
  std::string json;
  std::string test_case;
};
// Throws SmtError (unparseable output), ReconstructError or
// EnvironmentError.
ReconstructResult ReconstructFiles(const std::string& script_path, const std::string& model_path,
                                   const std::string& spec_file);

struct SolverOptions {
  std::string solver_bin;
  std::vector<std::string> solver_args;  // placed before the script path
  Dialect dialect = Dialect::kYices;
  bool variant = false;
  double timeout_s = 60;
  std::string out_dir;  // scripts and raw answers; a temporary directory if empty
  int jobs = 1;
};
// Throws EnvironmentError when the solver binary cannot be found.
RunReport RunSolver(const std::vector<std::string>& files, const SolverOptions& options);

// The solver path from the flag, else from ZTC_SOLVER_BIN; empty if neither.
std::string ResolveSolverBin(const std::string& flag);

}  // namespace ztc

#endif  // ZTC_DRIVER_H_

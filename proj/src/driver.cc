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

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "subprocess.h"
#include "ztc/error.h"
#include "ztc/parser.h"

namespace ztc {
namespace {

namespace fs = std::filesystem;

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw EnvironmentError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw EnvironmentError("cannot write " + path.string());
}

// One unit of batch work: a spec of a parsed file, or a file that failed to
// parse (spec empty, error set).
struct Task {
  std::string file;
  std::shared_ptr<const SourceFile> source;
  std::string spec;
  std::string error;
};

std::vector<Task> LoadTasks(const std::vector<std::string>& files) {
  std::vector<Task> tasks;
  for (const auto& path : files) {
    std::string text = ReadText(path);
    try {
      auto source = std::make_shared<const SourceFile>(ParseFile(text, path));
      for (const auto& s : source->specs) tasks.push_back({path, source, s.name, {}});
    } catch (const ParseError& e) {
      tasks.push_back({path, nullptr, {}, e.what()});
    }
  }
  return tasks;
}

// Runs fn over every task with up to `jobs` threads; rows keep task order.
std::vector<ReportRow> RunTasks(const std::vector<Task>& tasks, int jobs,
                                const std::function<ReportRow(const Task&)>& fn) {
  std::vector<ReportRow> rows(tasks.size());
  auto timed = [&](size_t i) {
    const Task& t = tasks[i];
    auto start = std::chrono::steady_clock::now();
    ReportRow row;
    if (!t.source) {
      row.result = "error";
      row.detail = "ParseError: " + t.error;
    } else {
      try {
        row = fn(t);
      } catch (const EnvironmentError&) {
        throw;
      } catch (const std::exception& e) {
        row.result = "error";
        row.detail = e.what();
      }
    }
    row.file = t.file;
    row.spec = t.spec;
    row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rows[i] = std::move(row);
  };
  size_t workers = static_cast<size_t>(std::max(1, jobs));
  workers = std::min(workers, tasks.size());
  if (workers <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) timed(i);
    return rows;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < tasks.size(); i = next++) {
        try {
          timed(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string EmitErrorDetail(const EmitError& e) {
  std::string out;
  for (const auto& p : e.problems()) {
    if (!out.empty()) out += "; ";
    out += p.kind == EmitError::Kind::kUnsupportedType ? "UnsupportedType: " : "UnsupportedPredicate: ";
    if (p.loc.line) out += std::to_string(p.loc.line) + ":" + std::to_string(p.loc.column) + ": ";
    out += p.message;
  }
  return out;
}

bool Executable(const std::string& path) {
  std::error_code ec;
  return fs::is_regular_file(path, ec) && access(path.c_str(), X_OK) == 0;
}

bool FindOnPath(const std::string& bin) {
  if (bin.find('/') != std::string::npos) return Executable(bin);
  const char* path = std::getenv("PATH");
  if (!path) return false;
  std::stringstream ss(path);
  std::string dir;
  while (std::getline(ss, dir, ':')) {
    if (!dir.empty() && Executable((fs::path(dir) / bin).string())) return true;
  }
  return false;
}

fs::path PrepareDir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw EnvironmentError("cannot create directory " + dir);
  return fs::path(dir);
}

}  // namespace

std::map<std::string, int> RunReport::Totals() const {
  std::map<std::string, int> totals;
  for (const auto& r : rows) ++totals[r.result];
  totals["total"] = static_cast<int>(rows.size());
  return totals;
}

std::string RunReport::ToJson(bool with_timing) const {
  nlohmann::ordered_json j;
  j["mode"] = mode;
  nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["file"] = r.file;
    row["spec"] = r.spec;
    row["result"] = r.result;
    row["detail"] = r.detail;
    row["verified"] = r.verified;
    row["explored"] = r.explored;
    if (with_timing) row["elapsed_ms"] = std::round(r.elapsed_ms * 1000) / 1000;
    row["artifacts"] = r.artifacts;
    if (r.witness) row["witness"] = nlohmann::ordered_json::parse(ztc::ToJson(*r.witness));
    rows_json.push_back(std::move(row));
  }
  j["rows"] = rows_json;
  nlohmann::ordered_json totals = nlohmann::ordered_json::object();
  for (const auto& [k, v] : Totals()) totals[k] = v;
  j["totals"] = totals;
  return j.dump(2) + "\n";
}

std::string RunReport::ToTable() const {
  size_t w_spec = 4, w_result = 6;
  for (const auto& r : rows) {
    w_spec = std::max(w_spec, r.spec.size());
    w_result = std::max(w_result, r.result.size());
  }
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(w_spec)) << "spec" << "  "
      << std::setw(static_cast<int>(w_result)) << "result" << "  "
      << std::right << std::setw(9) << "ms" << "  detail\n";
  for (const auto& r : rows) {
    std::string spec = r.spec.empty() ? r.file : r.spec;
    out << std::left << std::setw(static_cast<int>(w_spec)) << spec << "  "
        << std::setw(static_cast<int>(w_result)) << r.result << "  " << std::right << std::setw(9)
        << std::fixed << std::setprecision(1) << r.elapsed_ms << "  " << r.detail << "\n";
  }
  out << "totals:";
  for (const auto& [k, v] : Totals()) out << " " << k << "=" << v;
  out << "\n";
  return out.str();
}

int RunReport::ExitCode() const {
  for (const auto& r : rows) {
    if (r.result == "error" || r.result == "timeout") return 1;
    if (r.witness && !r.verified) return 1;
  }
  return 0;
}

int Check(const std::vector<std::string>& files, std::vector<Diagnostic>& diagnostics) {
  int code = 0;
  for (const auto& path : files) {
    std::string text = ReadText(path);
    SourceFile source;
    try {
      source = ParseFile(text, path);
    } catch (const ParseError& e) {
      diagnostics.push_back({path, e.what(), false});
      code = 1;
      continue;
    }
    if (source.specs.empty()) diagnostics.push_back({path, "no specs", true});
    for (const auto& s : source.specs) {
      try {
        TypedSpec typed = Typecheck(source.Flatten(s.name));
        for (const auto& w : typed.warnings) {
          std::string loc = w.loc.line ? std::to_string(w.loc.line) + ":" + std::to_string(w.loc.column) + ": " : "";
          diagnostics.push_back({path, loc + s.name + ": " + w.message, true});
        }
      } catch (const Error& e) {
        diagnostics.push_back({path, std::string(e.what()) + " (in " + s.name + ")", false});
        code = 1;
      }
    }
  }
  return code;
}

RunReport Solve(const std::vector<std::string>& files, const SolveOptions& options) {
  options.search.Validate();
  RunReport report;
  report.mode = "solve";
  report.rows = RunTasks(LoadTasks(files), options.jobs, [&](const Task& t) {
    TypedSpec typed = Typecheck(t.source->Flatten(t.spec));
    SearchResult r = Search(typed, options.search);
    ReportRow row;
    row.result = std::string(StatusName(r.status));
    row.explored = r.explored;
    switch (r.status) {
      case SearchResult::Status::kWitness: {
        Witness w = FromSearch(typed, r);
        row.verified = w.confirmed();
        row.detail = row.verified ? "verified" : "rejected: " + w.verdict.ToString();
        row.witness = std::move(w);
        break;
      }
      case SearchResult::Status::kExhausted:
        row.detail = "no element of the finite model satisfies the predicates";
        break;
      case SearchResult::Status::kCapped:
        row.detail = "stopped after " + std::to_string(r.explored) + " elements";
        break;
    }
    if (!r.truncated.empty()) {
      row.detail += "; truncated candidates:";
      for (const auto& v : r.truncated) row.detail += " " + v;
    }
    return row;
  });
  return report;
}

RunReport Emit(const std::vector<std::string>& files, const EmitOptions& options) {
  fs::path dir;
  if (!options.out_dir.empty()) dir = PrepareDir(options.out_dir);
  RunReport report;
  report.mode = "emit";
  report.rows = RunTasks(LoadTasks(files), options.jobs, [&](const Task& t) {
    TypedSpec typed = Typecheck(t.source->Flatten(t.spec));
    ReportRow row;
    SmtScript script;
    try {
      script = EmitScript(typed, options.dialect, options.variant);
    } catch (const EmitError& e) {
      row.result = "error";
      row.detail = EmitErrorDetail(e);
      return row;
    }
    row.result = "emitted";
    row.detail = std::to_string(script.asserts.size()) + " asserts";
    if (!options.out_dir.empty()) {
      fs::path path = dir / (t.spec + "." + ScriptSuffix(options.dialect));
      WriteText(path, script.Text());
      row.artifacts.push_back(path.string());
    }
    return row;
  });
  return report;
}

ReconstructResult ReconstructFiles(const std::string& script_path, const std::string& model_path,
                                   const std::string& spec_file) {
  SmtScript script = ReadScript(ReadText(script_path));
  std::string model = ReadText(model_path);
  SourceFile source = ParseFile(ReadText(spec_file), spec_file);
  if (!source.Find(script.spec_name)) {
    throw ReconstructError(ReconstructError::Kind::kMissingBinding,
                           spec_file + " has no spec named '" + script.spec_name + "'");
  }
  TypedSpec typed = Typecheck(source.Flatten(script.spec_name));
  SolverOutput out = ParseOutput(model, script);
  if (out.status == SolverOutput::Status::kParseFailure) {
    throw SmtError(SmtError::Kind::kParseFailure, out.error, out.error_line);
  }
  ReconstructResult result{Reconstruct(out, typed, script), {}, {}};
  result.json = ToJson(result.witness);
  result.test_case = TestCaseBlock(result.witness);
  return result;
}

std::string ResolveSolverBin(const std::string& flag) {
  if (!flag.empty()) return flag;
  const char* env = std::getenv("ZTC_SOLVER_BIN");
  return env ? env : "";
}

RunReport RunSolver(const std::vector<std::string>& files, const SolverOptions& options) {
  if (options.solver_bin.empty()) {
    throw EnvironmentError("no solver binary given (use --solver-bin or ZTC_SOLVER_BIN)");
  }
  if (!FindOnPath(options.solver_bin)) {
    throw EnvironmentError("solver binary not found or not executable: " + options.solver_bin);
  }
  fs::path dir;
  if (options.out_dir.empty()) {
    std::string tmpl = (fs::temp_directory_path() / "ztc-XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw EnvironmentError("cannot create a temporary directory");
    dir = tmpl;
  } else {
    dir = PrepareDir(options.out_dir);
  }
  RunReport report;
  report.mode = "run-solver";
  report.rows = RunTasks(LoadTasks(files), options.jobs, [&](const Task& t) {
    TypedSpec typed = Typecheck(t.source->Flatten(t.spec));
    ReportRow row;
    SmtScript script;
    try {
      script = EmitScript(typed, options.dialect, options.variant);
    } catch (const EmitError& e) {
      row.result = "error";
      row.detail = EmitErrorDetail(e);
      return row;
    }
    fs::path path = dir / (t.spec + "." + ScriptSuffix(options.dialect));
    WriteText(path, script.Text());
    row.artifacts.push_back(path.string());
    if (options.timeout_s <= 0) {
      row.result = "timeout";
      row.detail = "time limit is zero";
      return row;
    }
    std::vector<std::string> argv{options.solver_bin};
    argv.insert(argv.end(), options.solver_args.begin(), options.solver_args.end());
    argv.push_back(path.string());
    ProcessResult proc = RunProcess(argv, options.timeout_s);
    if (!proc.started) {
      row.result = "error";
      row.detail = "cannot start solver: " + proc.error;
      return row;
    }
    if (proc.timed_out) {
      row.result = "timeout";
      row.detail = "no answer within the time limit";
      return row;
    }
    fs::path answer = path;
    answer += ".out";
    WriteText(answer, proc.out);
    row.artifacts.push_back(answer.string());
    SolverOutput out = ParseOutput(proc.out, script);
    switch (out.status) {
      case SolverOutput::Status::kParseFailure:
        row.result = "error";
        row.detail = "parse-failure at line " + std::to_string(out.error_line) + ": " + out.error;
        return row;
      case SolverOutput::Status::kUnsat:
        row.result = "unsat";
        return row;
      case SolverOutput::Status::kSat:
      case SolverOutput::Status::kUnknown:
        break;
    }
    row.result = std::string(StatusName(out.status));
    try {
      Witness w = Reconstruct(out, typed, script);
      row.verified = w.confirmed();
      row.detail = row.verified ? "verified" : "rejected: " + w.verdict.ToString();
      row.witness = std::move(w);
    } catch (const ReconstructError& e) {
      row.result = "error";
      row.detail = std::string(StatusName(out.status)) + " answer, reconstruction failed: " + e.what();
    }
    return row;
  });
  return report;
}

}  // namespace ztc

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


// End-to-end acceptance checks. Prints one PASS or FAIL line per criterion
// and exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "support/corpus.h"
#include "support/model_text.h"
#include "support/oracle.h"
#include "ztc/driver.h"
#include "ztc/error.h"
#include "ztc/eval.h"
#include "ztc/search.h"
#include "ztc/smt.h"
#include "ztc/witness.h"

namespace ztc {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using testing::CorpusFiles;
using testing::CorpusSpecs;
using testing::DataPath;
using testing::ReadFile;

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records the first failure only; later ones are usually consequences.
  void Require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", seconds);
  return buf;
}

struct Config {
  Dialect dialect;
  bool variant;
  std::string dir;
};

const std::vector<Config>& Configs() {
  static const std::vector<Config> kConfigs{{Dialect::kYices, false, "yices"},
                                            {Dialect::kYices, true, "yices-variant"},
                                            {Dialect::kCvc3, false, "cvc3"},
                                            {Dialect::kCvc3, true, "cvc3-variant"}};
  return kConfigs;
}

Outcome ReferenceCaseChecks() {
  Outcome o;
  auto start = Clock::now();
  const std::string text = ReadFile(DataPath("corpus/launch_vehicle.ztc"));
  SourceFile file = ParseFile(text, "launch_vehicle.ztc");
  TypedSpec spec = Typecheck(file.Flatten("DetectReferenceEvent_NR_18"));
  auto tc = AsTestCase(file, "DetectReferenceEvent_TC_18");
  o.Require(tc.has_value(), "the test case is not a list of bindings");
  if (!tc) return o;
  o.Require(tc->target == "DetectReferenceEvent_NR_18", "test case targets " + tc->target);
  Verdict v = CheckSpec(spec, tc->env);
  double took = Seconds(start);
  o.Require(v.satisfied(), v.ToString());
  o.Require(took < 1.0, "took " + Fmt(took));
  if (o.pass) o.detail = "satisfied in " + Fmt(took);
  return o;
}

Outcome SeedFormulas() {
  Outcome o;
  TypedSpec spec = testing::TypedFromText("spec S { n : NAT; z : INT | n = z }");
  for (int fss = 1; fss <= 6; ++fss) {
    SearchConfig cfg;
    cfg.fss = fss;
    NumericSeed seed = ComputeNumericSeed(spec, cfg);
    std::vector<int64_t> nat, integer;
    for (int i = 0; i < fss; ++i) nat.push_back(i);
    for (int64_t i = -(fss / 2 + (fss % 2 - 1)); i <= fss / 2; ++i) integer.push_back(i);
    o.Require(seed.nat == nat, "NAT seed for FSS " + std::to_string(fss));
    o.Require(seed.integer == integer, "INT seed for FSS " + std::to_string(fss));
    o.Require(integer.size() == static_cast<size_t>(fss), "INT interval size for FSS " + std::to_string(fss));
  }
  if (o.pass) o.detail = "FSS 1..6";
  return o;
}

Outcome SearchMatchesBruteForce() {
  Outcome o;
  std::mt19937 rng(2026);
  int checked = 0, witnesses = 0;
  auto start = Clock::now();
  while (checked < 200) {
    const std::string text = testing::RandomSpecText(rng);
    TypedSpec t;
    try {
      t = testing::TypedFromText(text);
    } catch (const Error&) {
      continue;
    }
    const SearchConfig cfg;
    auto lists = testing::OracleCandidates(t, cfg.fss);
    if (testing::ProductSize(lists) > 512) continue;
    ++checked;
    auto expected = testing::BruteForce(t, lists);
    SearchResult r = Search(t, cfg);
    const bool found = r.status == SearchResult::Status::kWitness;
    o.Require(found == expected.has_value(), "existence differs on\n" + text);
    if (found) {
      ++witnesses;
      o.Require(CheckSpec(t, r.witness, &r.universe).satisfied(), "unsound witness on\n" + text);
    }
  }
  double took = Seconds(start);
  o.Require(took < 30.0, "took " + Fmt(took));
  if (o.pass) {
    o.detail = std::to_string(checked) + " specs, " + std::to_string(witnesses) + " witnesses, " + Fmt(took);
  }
  return o;
}

Outcome InterpreterAgrees() {
  Outcome o;
  int witnesses = 0, caught = 0;
  for (const auto& c : CorpusSpecs()) {
    SearchResult r = Search(c.typed, SearchConfig{});
    if (r.status != SearchResult::Status::kWitness) continue;
    ++witnesses;
    FiniteModel model = BuildFiniteModel(c.typed, SearchConfig{});
    std::vector<Env> mutants;
    for (Env& m : testing::Mutations(c.typed, r.witness, model)) {
      if (!CheckSpec(c.typed, m, &model.universe).satisfied()) mutants.push_back(std::move(m));
    }
    for (const Config& cfg : Configs()) {
      const std::string where = c.typed.spec.name + " (" + cfg.dir + ")";
      SmtScript script = ReadScript(EmitScript(c.typed, cfg.dialect, cfg.variant).Text());
      auto truth = [&](const Env& env) {
        return InterpretScript(script, TranslateEnv(c.typed, env, script, &model.universe));
      };
      std::vector<bool> w = truth(r.witness);
      o.Require(std::all_of(w.begin(), w.end(), [](bool b) { return b; }), "witness falsifies " + where);
      bool some_false = false;
      for (const Env& m : mutants) {
        std::vector<bool> v = truth(m);
        const bool any_false = std::find(v.begin(), v.end(), false) != v.end();
        o.Require(any_false, "rejected mutant passes every assert of " + where);
        some_false = some_false || any_false;
      }
      if (some_false) ++caught;
    }
  }
  o.Require(witnesses >= 20, "only " + std::to_string(witnesses) + " witnesses");
  o.Require(caught > 0, "no mutant was caught");
  if (o.pass) {
    o.detail = std::to_string(witnesses) + " witnesses x 4 configurations, " + std::to_string(caught) +
               " with a falsified mutant";
  }
  return o;
}

Outcome GoldensStable() {
  Outcome o;
  int compared = 0;
  for (const Config& cfg : Configs()) {
    const fs::path dir = DataPath("golden/" + cfg.dir);
    size_t expected_files = 0;
    for (const auto& c : CorpusSpecs()) {
      SmtScript script;
      try {
        script = EmitScript(c.typed, cfg.dialect, cfg.variant);
      } catch (const EmitError&) {
        continue;
      }
      ++expected_files;
      const fs::path golden = dir / (c.typed.spec.name + "." + std::string(ScriptSuffix(cfg.dialect)));
      o.Require(fs::exists(golden), "missing " + golden.string());
      if (!fs::exists(golden)) continue;
      o.Require(ReadFile(golden.string()) == script.Text(), "differs: " + golden.string());
      ++compared;
    }
    const auto on_disk = static_cast<size_t>(std::distance(fs::directory_iterator(dir), fs::directory_iterator()));
    o.Require(on_disk == expected_files, "stale files in " + dir.string());
  }
  if (o.pass) o.detail = std::to_string(compared) + " scripts identical";
  return o;
}

Outcome WitnessRoundTrip() {
  Outcome o;
  std::map<std::string, int> recovered;
  const std::vector<std::pair<std::string, testing::ModelTextOptions>> shapes{
      {"yices", {"sat", false, false}},
      {"yices-unknown", {"unknown", true, false}},
      {"cvc3", {"Satisfiable.", false, false}},
      {"cvc3-points", {"Unknown.", false, true}}};
  for (const auto& c : CorpusSpecs()) {
    SearchResult r = Search(c.typed, SearchConfig{});
    if (r.status != SearchResult::Status::kWitness) continue;
    for (const auto& [label, text_options] : shapes) {
      const Dialect d = label.rfind("yices", 0) == 0 ? Dialect::kYices : Dialect::kCvc3;
      const std::string where = c.typed.spec.name + " (" + label + ")";
      SmtScript script = ReadScript(EmitScript(c.typed, d, false).Text());
      const std::string text =
          testing::SynthesizeModel(TranslateEnv(c.typed, r.witness, script, &r.universe), script, text_options);
      try {
        Witness w = Reconstruct(ParseOutput(text, script), c.typed, script);
        o.Require(w.env == r.witness, "different env for " + where);
        o.Require(w.confirmed(), "unverified " + where + ": " + w.verdict.ToString());
        if (w.env == r.witness && w.confirmed()) ++recovered[label];
      } catch (const Error& e) {
        o.Require(false, where + ": " + e.what());
      }
    }
  }
  for (const auto& [label, n] : recovered) o.Require(n >= 20, label + ": only " + std::to_string(n));
  o.Require(recovered.size() == shapes.size(), "some output shape recovered nothing");
  if (o.pass) o.detail = std::to_string(recovered["yices"]) + " witnesses in each of 4 output shapes";
  return o;
}

std::map<std::string, std::string> Snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) files[e.path().filename().string()] = ReadFile(e.path().string());
  return files;
}

Outcome Deterministic() {
  Outcome o;
  const std::vector<std::string> files = CorpusFiles();
  SolveOptions solve;
  o.Require(Solve(files, solve).ToJson(false) == Solve(files, solve).ToJson(false), "solve reports differ");
  const fs::path dir = fs::temp_directory_path() / "ztc_acceptance_emit";
  size_t artifacts = 0;
  for (const Config& cfg : Configs()) {
    fs::remove_all(dir);
    EmitOptions emit;
    emit.dialect = cfg.dialect;
    emit.variant = cfg.variant;
    emit.out_dir = dir.string();
    const std::string first = Emit(files, emit).ToJson(false);
    auto first_files = Snapshot(dir);
    fs::remove_all(dir);
    const std::string second = Emit(files, emit).ToJson(false);
    o.Require(first == second, "emit reports differ (" + cfg.dir + ")");
    o.Require(first_files == Snapshot(dir), "emitted scripts differ (" + cfg.dir + ")");
    artifacts += first_files.size();
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = "solve and emit reports plus " + std::to_string(artifacts) + " scripts";
  return o;
}

Outcome SetLaws() {
  Outcome o;
  TypedSpec laws = testing::TypedFromText(
      "spec Laws { A, B : fset INT |\n"
      "  A cap B subseteq A;\n"
      "  A subseteq A cup B;\n"
      "  #(A cup B) = #A + #B - #(A cap B);\n"
      "  (A setminus B) cap B = {}\n"
      "}");
  std::mt19937 rng(8);
  auto start = Clock::now();
  for (int round = 0; round < 1000; ++round) {
    Value a = testing::RandomIntSet(rng, 5, -4, 4), b = testing::RandomIntSet(rng, 5, -4, 4);
    Env env{{"A", a}, {"B", b}};
    for (const Pred& p : laws.spec.preds) {
      o.Require(EvalPred(p, env), ToString(p) + " fails for A=" + ToString(a) + " B=" + ToString(b));
    }
  }
  double took = Seconds(start);
  o.Require(took < 10.0, "took " + Fmt(took));
  if (o.pass) o.detail = "1000 instances x 4 laws in " + Fmt(took);
  return o;
}

}  // namespace
}  // namespace ztc

int main() {
  const std::vector<std::pair<std::string, std::function<ztc::Outcome()>>> criteria{
      {"reference test case satisfies its specification", ztc::ReferenceCaseChecks},
      {"default numeric seeds", ztc::SeedFormulas},
      {"search agrees with brute force", ztc::SearchMatchesBruteForce},
      {"emitted scripts accept witnesses and reject mutants", ztc::InterpreterAgrees},
      {"emitted scripts match goldens", ztc::GoldensStable},
      {"witnesses survive solver output", ztc::WitnessRoundTrip},
      {"repeated runs are identical", ztc::Deterministic},
      {"set algebra laws", ztc::SetLaws},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    ztc::Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}

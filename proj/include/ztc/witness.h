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

// Witnesses: solver output parsing, model reconstruction, verification and
// rendering as JSON or as a ready-to-paste test case block.

#ifndef ZTC_WITNESS_H_
#define ZTC_WITNESS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ztc/emit.h"
#include "ztc/eval.h"
#include "ztc/parser.h"
#include "ztc/search.h"
#include "ztc/smt.h"
#include "ztc/value.h"

namespace ztc {

// The ground solver model matching `env` under the representation chosen by
// the emitter for `script`. Uninterpreted sorts get as carrier the
// constants in `universe` plus every basic value occurring in `env`.
SmtModel TranslateEnv(const TypedSpec& spec, const Env& env, const SmtScript& script,
                      const Universe* universe = nullptr);

// Values the solver printed for one symbol or record field: a scalar, or
// finitely many points of a function plus an optional default.
struct ModelBinding {
  std::optional<GValue> scalar;
  std::vector<std::pair<std::vector<GValue>, GValue>> points;  // flattened arguments
  std::optional<GValue> fallback;
};

struct SolverOutput {
  enum class Status { kSat, kUnknown, kUnsat, kParseFailure };

  Status status = Status::kParseFailure;
  // Keyed by emitted symbol, or "symbol.field" for record components.
  std::map<std::string, ModelBinding> bindings;
  std::string error;  // kParseFailure
  int error_line = 0;
};

std::string_view StatusName(SolverOutput::Status s);

// Parses the textual answer of a solver run on `script`: a status line
// followed, for sat and unknown, by one model assignment per line.
SolverOutput ParseOutput(std::string_view text, const SmtScript& script);

struct Witness {
  enum class Origin { kSearch, kSolverModel, kSolverPotential };

  std::string spec;
  Origin origin = Origin::kSearch;
  Env env;
  Verdict verdict;
  std::vector<std::string> order;  // declaration order of env keys
  // Default case of each function-valued model entry, kept apart from the
  // finite value recovered for the variable.
  std::map<std::string, std::string> defaults;

  // True when the evaluator confirms every predicate and carrier.
  bool confirmed() const { return verdict.satisfied(); }
};

std::string_view OriginName(Witness::Origin o);

// Rebuilds Z values from a sat or unknown answer and re-evaluates the spec
// on them. Throws ReconstructError.
Witness Reconstruct(const SolverOutput& out, const TypedSpec& spec, const SmtScript& script);

Witness FromSearch(const TypedSpec& spec, const SearchResult& result);

// {"spec", "origin", "status", "bindings": {var: text}, "defaults"?,
// "verified", "verdict"}.
std::string ToJson(const Witness& w);

// `spec <Name>_TC { <Name> | var = value; ... }` with one binding per line.
std::string TestCaseBlock(const Witness& w);

// Recognises a ready-made test case: a spec that includes exactly one other
// spec, declares nothing itself and consists of `var = closed value`
// equations. Returns the included spec's name and the bindings.
struct TestCase {
  std::string target;
  Env env;
};
std::optional<TestCase> AsTestCase(const SourceFile& file, std::string_view name);

}  // namespace ztc

#endif  // ZTC_WITNESS_H_

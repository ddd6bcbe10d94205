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

// Shallow embedding of typed test specifications into solver scripts.
//
// Two dialects are produced: a Yices 1 style script where sets are
// characteristic functions, and a CVC3 style script where sets are arrays of
// one-bit vectors. Partial functions become {dom, law} records, finite sets
// {set, bij, card} records constrained by two axioms, and sequences
// {dom, law, card} records. Set operators are monomorphised per element type
// and defined once per script.

#ifndef ZTC_EMIT_H_
#define ZTC_EMIT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ztc/typecheck.h"

namespace ztc {

inline constexpr std::string_view kToolVersion = "ztc 0.1.0";

enum class Dialect { kYices, kCvc3 };

std::string_view DialectName(Dialect d);  // "yices" / "cvc3"
std::optional<Dialect> ParseDialect(std::string_view name);
// File suffix of an emitted script, e.g. "yices.ys".
std::string ScriptSuffix(Dialect d);

struct ScriptSymbol {
  std::string z_name;   // variable, or basic-type literal declared as constant
  std::string emitted;  // solver-side identifier
};

struct ScriptAssert {
  enum class Origin { kCarrier, kPredicate, kDefinition };

  size_t sentence = 0;  // index into SmtScript::sentences
  Origin origin = Origin::kPredicate;
  int pred_index = -1;  // kPredicate only
  std::string variable;  // kCarrier only
};

struct SmtScript {
  Dialect dialect = Dialect::kYices;
  bool variant = false;
  std::string spec_name;
  std::vector<std::string> header;     // comment lines, without the marker
  std::vector<std::string> sentences;  // one solver command each
  std::vector<ScriptSymbol> symbols;
  std::vector<std::string> aux_defs;  // names, in definition order
  std::vector<ScriptAssert> asserts;
  // Candidate universe: sort name -> constants, plus the integer literals.
  std::vector<std::pair<std::string, std::vector<std::string>>> universe;
  std::vector<int64_t> int_literals;

  const ScriptSymbol* FindZ(std::string_view z_name) const;
  const ScriptSymbol* FindEmitted(std::string_view emitted) const;

  // The script file contents: header comments, then one sentence per line.
  std::string Text() const;
};

// Builds the script for a typed spec. Sentence order: type declarations,
// variable declarations, auxiliary definitions in order of first use,
// carrier axioms, one assert per atomic predicate, the check command.
// Throws EmitError listing every construct without an embedding rule.
SmtScript EmitScript(const TypedSpec& spec, Dialect dialect, bool variant);

// Rebuilds an SmtScript (symbols, universe, sentences and assert list) from
// the text written by SmtScript::Text. Throws SmtError.
SmtScript ReadScript(std::string_view text);

}  // namespace ztc

#endif  // ZTC_EMIT_H_

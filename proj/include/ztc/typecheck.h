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

#ifndef ZTC_TYPECHECK_H_
#define ZTC_TYPECHECK_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ztc/ast.h"

namespace ztc {

// Defining predicates of the ZMT function and finite-set synonyms.
enum class Constraint {
  kFunctional,     // x |-> y1 in f and x |-> y2 in f imply y1 = y2
  kTotalDom,       // dom f = X
  kFiniteDom,      // dom f is finite
  kContiguousDom,  // dom f = 1..#f
  kFinite,         // the set itself is finite
};

std::string_view ConstraintName(Constraint c);

// Expands synonyms to their maximal type and relaxes NAT to INT:
// rel/pfun/fun/ffun X Y -> P(X x Y), seq X -> P(INT x X), fset X -> P X.
// Idempotent; the result contains no kSynonym or kNat nodes.
TypeExpr Normalize(const TypeExpr& t);

// Carrier constraints contributed by the outermost constructor of a
// declared (un-normalized) type. Nonnegativity of NAT positions is checked
// structurally by `SatisfiesCarrier` (eval.h) rather than listed here.
std::vector<Constraint> CarrierConstraints(const TypeExpr& declared);

struct Warning {
  std::string message;
  SourceLocation loc;
};

// A flattened spec whose every Expr node carries its normalized type.
struct TypedSpec {
  TestSpec spec;
  std::map<std::string, std::vector<Constraint>, std::less<>> carrier;
  std::vector<Warning> warnings;

  const TypeExpr& DeclaredType(std::string_view var) const;
};

// Type checks a flattened spec (see SourceFile::Flatten). Set operators are
// instantiated at their use-site element type; untyped `{}` takes its type
// from context. Throws TypeError.
TypedSpec Typecheck(const TestSpec& spec);

// True when `e` is syntactically known to denote a finite set: a variable
// declared fset/ffun/seq, a set extension, a range, `{}`, dom/ran of a
// finite function, or a set operation that preserves finiteness.
bool ProvablyFinite(const Expr& e, const TestSpec& spec);

}  // namespace ztc

#endif  // ZTC_TYPECHECK_H_

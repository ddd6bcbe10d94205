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

// Ground evaluation of expressions and predicates under a complete binding
// of the declared variables to finite values.

#ifndef ZTC_EVAL_H_
#define ZTC_EVAL_H_

#include <map>
#include <string>
#include <vector>

#include "ztc/ast.h"
#include "ztc/error.h"
#include "ztc/typecheck.h"
#include "ztc/value.h"

namespace ztc {

// Finite carriers for basic types, used to decide totality of `fun` over a
// basic domain. Types absent from the map are not checked for totality.
struct Universe {
  std::map<std::string, std::vector<Value>, std::less<>> basic;
};

// Throws EvalError. Function application outside the domain raises
// kApplyOutsideDomain; on a non-functional relation, kApplyNonFunctional.
Value EvalExpr(const Expr& e, const Env& env);
bool EvalPred(const Pred& p, const Env& env);

// Membership of `v` in the carrier set of the declared type `declared`,
// including NAT nonnegativity and every ZMT synonym constraint.
bool SatisfiesCarrier(const Value& v, const TypeExpr& declared,
                      const Universe* universe = nullptr);

struct Verdict {
  enum class Status { kSatisfied, kFailed, kError };

  Status status = Status::kSatisfied;
  // Index of the first predicate that failed or raised; -1 when the failure
  // is a carrier violation of `variable`.
  int pred_index = -1;
  std::string variable;
  EvalError::Kind error_kind = EvalError::Kind::kIllTyped;
  std::string message;

  bool satisfied() const { return status == Status::kSatisfied; }
  std::string ToString() const;
};

// Checks the carrier of every declared variable, in declaration order, then
// each predicate in order, stopping at the first failure.
Verdict CheckSpec(const TypedSpec& spec, const Env& env,
                  const Universe* universe = nullptr);

}  // namespace ztc

#endif  // ZTC_EVAL_H_

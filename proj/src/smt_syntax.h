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

// Term syntax shared by the Yices and CVC3 readers. Both readers work from
// script text only; they never look at the emitter's internal state.

#ifndef ZTC_SRC_SMT_SYNTAX_H_
#define ZTC_SRC_SMT_SYNTAX_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ztc/smt.h"

namespace ztc::smt {

using Binder = std::pair<std::string, Sort>;

struct Term {
  enum class Kind {
    kSym,
    kInt,
    kBool,
    kBits,
    kApp,       // args[0] applied to args[1..]; also array reads
    kLambda,    // binders, args[0] body
    kForall,
    kExists,
    kField,     // args[0].name
    kTupleSel,  // args[0] component `value` (0-based)
    kTuple,
    kOp,        // name: and or not => <=> = /= < <= > >= + - * neg ite
    kUpdate,    // args[0] WITH [args[1]] := args[2]
  };

  Kind kind = Kind::kSym;
  std::string name;
  int64_t value = 0;
  std::vector<Binder> binders;
  std::vector<Term> args;
};

struct Command {
  enum class Kind { kTypeDecl, kDefine, kAssert, kCheck, kOther };

  Kind kind = Kind::kOther;
  std::string name;
  // kTypeDecl: scalar constants, or a subtype of `base` cut out by `pred`.
  std::vector<std::string> constants;
  std::optional<Binder> subtype_binder;
  std::optional<Term> subtype_pred;
  // kDefine: declared sort and optional value. kAssert: the formula.
  Sort sort;
  std::optional<Term> term;
};

Command ParseYicesCommand(std::string_view text, int line);
Term ParseYicesTerm(std::string_view text, int line);

Command ParseCvc3Command(std::string_view text, int line);
Term ParseCvc3Term(std::string_view text, int line);

}  // namespace ztc::smt

#endif  // ZTC_SRC_SMT_SYNTAX_H_

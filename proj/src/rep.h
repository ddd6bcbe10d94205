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

// How each declared variable is laid out in a solver script.

#ifndef ZTC_SRC_REP_H_
#define ZTC_SRC_REP_H_

#include "ztc/ast.h"

namespace ztc {

enum class Rep { kScalar, kSet, kRel, kFun, kPfun, kFfun, kFinset, kSeq };

inline Rep Classify(const TypeExpr& declared) {
  if (declared.kind == TypeExpr::Kind::kPower) return Rep::kSet;
  if (declared.kind != TypeExpr::Kind::kSynonym) return Rep::kScalar;
  switch (declared.synonym) {
    case SynonymKind::kRel:
      return Rep::kRel;
    case SynonymKind::kFun:
      return Rep::kFun;
    case SynonymKind::kPfun:
      return Rep::kPfun;
    case SynonymKind::kFfun:
      return Rep::kFfun;
    case SynonymKind::kFinset:
      return Rep::kFinset;
    case SynonymKind::kSeq:
      return Rep::kSeq;
  }
  return Rep::kScalar;
}

}  // namespace ztc

#endif  // ZTC_SRC_REP_H_

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

#include "ztc/eval.h"

#include <algorithm>
#include <iterator>

#include "ztc/parser.h"

namespace ztc {
namespace {

constexpr int64_t kMaxRangeSize = int64_t{1} << 20;

bool Less(const Value& a, const Value& b) { return CanonicalOrder(a, b) < 0; }

const Value& ExpectKind(const Value& v, Value::Kind kind, const Expr& at) {
  if (v.kind() != kind) {
    throw EvalError(EvalError::Kind::kIllTyped,
                    "ill-typed value " + ToString(v) + " in '" + ToString(at) + "'",
                    at.loc);
  }
  return v;
}

int64_t Arith(Expr::Kind kind, int64_t a, int64_t b, const Expr& at) {
  int64_t r = 0;
  bool overflow = false;
  switch (kind) {
    case Expr::Kind::kAdd:
      overflow = __builtin_add_overflow(a, b, &r);
      break;
    case Expr::Kind::kSub:
      overflow = __builtin_sub_overflow(a, b, &r);
      break;
    default:
      overflow = __builtin_mul_overflow(a, b, &r);
      break;
  }
  if (overflow) {
    throw EvalError(EvalError::Kind::kOverflow,
                    "integer overflow in '" + ToString(at) + "'", at.loc);
  }
  return r;
}

Value Apply(const Value& fn, const Value& arg, const Expr& at) {
  const Value* found = nullptr;
  for (const Value& pair : fn.items()) {
    if (pair.kind() != Value::Kind::kTuple || !(pair.first() == arg)) continue;
    if (found != nullptr) {
      throw EvalError(EvalError::Kind::kApplyNonFunctional,
                      "'" + ToString(at) + "': relation maps " + ToString(arg) +
                          " to more than one value",
                      at.loc);
    }
    found = &pair.second();
  }
  if (found == nullptr) {
    throw EvalError(EvalError::Kind::kApplyOutsideDomain,
                    "'" + ToString(at) + "': " + ToString(arg) +
                        " is outside the domain",
                    at.loc);
  }
  return *found;
}

Value Project(const Value& rel, bool first, const Expr& at) {
  std::vector<Value> out;
  out.reserve(rel.size());
  for (const Value& pair : rel.items()) {
    ExpectKind(pair, Value::Kind::kTuple, at);
    out.push_back(first ? pair.first() : pair.second());
  }
  return Value::Set(std::move(out));
}

Value SetAlgebra(Expr::Kind kind, const Value& a, const Value& b) {
  std::vector<Value> out;
  auto dst = std::back_inserter(out);
  const auto& x = a.items();
  const auto& y = b.items();
  switch (kind) {
    case Expr::Kind::kUnion:
      std::set_union(x.begin(), x.end(), y.begin(), y.end(), dst, Less);
      break;
    case Expr::Kind::kInter:
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), dst, Less);
      break;
    default:
      std::set_difference(x.begin(), x.end(), y.begin(), y.end(), dst, Less);
      break;
  }
  return Value::Set(std::move(out));
}

bool Subset(const Value& a, const Value& b) {
  return std::includes(b.items().begin(), b.items().end(), a.items().begin(),
                       a.items().end(), Less);
}

bool Member(const Expr& elem, const Expr& set, const Env& env) {
  Value x = EvalExpr(elem, env);
  if (set.kind == Expr::Kind::kRange) {
    // Decided without materializing the range.
    const int64_t lo = ExpectKind(EvalExpr(set.lhs(), env), Value::Kind::kInt, set).as_int();
    const int64_t hi = ExpectKind(EvalExpr(set.rhs(), env), Value::Kind::kInt, set).as_int();
    ExpectKind(x, Value::Kind::kInt, elem);
    return lo <= x.as_int() && x.as_int() <= hi;
  }
  return ExpectKind(EvalExpr(set, env), Value::Kind::kSet, set).Contains(x);
}

int CompareInts(const Pred& p, const Env& env) {
  const int64_t a = ExpectKind(EvalExpr(p.lhs, env), Value::Kind::kInt, p.lhs).as_int();
  const int64_t b = ExpectKind(EvalExpr(p.rhs, env), Value::Kind::kInt, p.rhs).as_int();
  return a < b ? -1 : (a > b ? 1 : 0);
}

}  // namespace

Value EvalExpr(const Expr& e, const Env& env) {
  switch (e.kind) {
    case Expr::Kind::kVar: {
      auto it = env.find(e.name);
      if (it == env.end()) {
        throw EvalError(EvalError::Kind::kUnbound,
                        "variable '" + e.name + "' is unbound", e.loc);
      }
      return it->second;
    }
    case Expr::Kind::kIntLit:
      return Value::Int(e.value);
    case Expr::Kind::kEnumLit: {
      const TypeExpr& t = *e.annotation;
      auto it = std::find(t.constants.begin(), t.constants.end(), e.name);
      return Value::Enum(t.name, e.name,
                         static_cast<int>(it - t.constants.begin()));
    }
    case Expr::Kind::kBasicLit:
      return Value::Basic(e.annotation->name, e.name);
    case Expr::Kind::kTuple:
      return Value::Tuple(EvalExpr(e.lhs(), env), EvalExpr(e.rhs(), env));
    case Expr::Kind::kSetExt: {
      std::vector<Value> elems;
      elems.reserve(e.operands.size());
      for (const Expr& op : e.operands) elems.push_back(EvalExpr(op, env));
      return Value::Set(std::move(elems));
    }
    case Expr::Kind::kRange: {
      const int64_t lo = ExpectKind(EvalExpr(e.lhs(), env), Value::Kind::kInt, e).as_int();
      const int64_t hi = ExpectKind(EvalExpr(e.rhs(), env), Value::Kind::kInt, e).as_int();
      std::vector<Value> elems;
      if (lo <= hi) {
        if (hi - lo >= kMaxRangeSize) {
          throw EvalError(EvalError::Kind::kRangeTooLarge,
                          "range '" + ToString(e) + "' is too large to enumerate",
                          e.loc);
        }
        for (int64_t i = lo; i <= hi; ++i) elems.push_back(Value::Int(i));
      }
      return Value::Set(std::move(elems));
    }
    case Expr::Kind::kEmptySet:
      return Value::Set({});
    case Expr::Kind::kApply: {
      Value fn = ExpectKind(EvalExpr(e.lhs(), env), Value::Kind::kSet, e);
      return Apply(fn, EvalExpr(e.rhs(), env), e);
    }
    case Expr::Kind::kDom:
    case Expr::Kind::kRan:
      return Project(ExpectKind(EvalExpr(e.lhs(), env), Value::Kind::kSet, e),
                     e.kind == Expr::Kind::kDom, e);
    case Expr::Kind::kCard:
      return Value::Int(static_cast<int64_t>(
          ExpectKind(EvalExpr(e.lhs(), env), Value::Kind::kSet, e).size()));
    case Expr::Kind::kUnion:
    case Expr::Kind::kInter:
    case Expr::Kind::kDiff:
      return SetAlgebra(
          e.kind, ExpectKind(EvalExpr(e.lhs(), env), Value::Kind::kSet, e),
          ExpectKind(EvalExpr(e.rhs(), env), Value::Kind::kSet, e));
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
    case Expr::Kind::kMul:
      return Value::Int(Arith(
          e.kind, ExpectKind(EvalExpr(e.lhs(), env), Value::Kind::kInt, e).as_int(),
          ExpectKind(EvalExpr(e.rhs(), env), Value::Kind::kInt, e).as_int(), e));
  }
  throw EvalError(EvalError::Kind::kIllTyped, "unhandled expression", e.loc);
}

bool EvalPred(const Pred& p, const Env& env) {
  switch (p.kind) {
    case Pred::Kind::kMemberOf:
      return Member(p.lhs, p.rhs, env);
    case Pred::Kind::kNotMemberOf:
      return !Member(p.lhs, p.rhs, env);
    case Pred::Kind::kEqual:
      return ValueEq(EvalExpr(p.lhs, env), EvalExpr(p.rhs, env));
    case Pred::Kind::kNotEqual:
      return !ValueEq(EvalExpr(p.lhs, env), EvalExpr(p.rhs, env));
    case Pred::Kind::kSubsetEq:
    case Pred::Kind::kNotSubsetEq: {
      const bool sub =
          Subset(ExpectKind(EvalExpr(p.lhs, env), Value::Kind::kSet, p.lhs),
                 ExpectKind(EvalExpr(p.rhs, env), Value::Kind::kSet, p.rhs));
      return p.kind == Pred::Kind::kSubsetEq ? sub : !sub;
    }
    case Pred::Kind::kLt:
      return CompareInts(p, env) < 0;
    case Pred::Kind::kLeq:
      return CompareInts(p, env) <= 0;
    case Pred::Kind::kGt:
      return CompareInts(p, env) > 0;
    case Pred::Kind::kGeq:
      return CompareInts(p, env) >= 0;
  }
  return false;
}

namespace {

bool IsFunctional(const Value& rel) {
  // Pairs are sorted by first component, so duplicates are adjacent.
  for (size_t i = 1; i < rel.size(); ++i) {
    if (rel.items()[i - 1].first() == rel.items()[i].first()) return false;
  }
  return true;
}

bool RelationOf(const Value& v, const TypeExpr& from, const TypeExpr& to,
                const Universe* u) {
  if (v.kind() != Value::Kind::kSet) return false;
  for (const Value& pair : v.items()) {
    if (pair.kind() != Value::Kind::kTuple ||
        !SatisfiesCarrier(pair.first(), from, u) ||
        !SatisfiesCarrier(pair.second(), to, u)) {
      return false;
    }
  }
  return true;
}

bool CoversDomain(const Value& fn, const TypeExpr& from, const Universe* u) {
  std::vector<Value> required;
  if (from.kind == TypeExpr::Kind::kFree) {
    for (size_t i = 0; i < from.constants.size(); ++i) {
      required.push_back(
          Value::Enum(from.name, from.constants[i], static_cast<int>(i)));
    }
  } else if (from.kind == TypeExpr::Kind::kBasic && u != nullptr &&
             u->basic.count(from.name) != 0) {
    required = u->basic.find(from.name)->second;
  } else {
    // Infinite or unknown carrier: a finite value is read as the function
    // restricted to the relevant universe.
    return true;
  }
  for (const Value& x : required) {
    bool hit = false;
    for (const Value& pair : fn.items()) hit = hit || pair.first() == x;
    if (!hit) return false;
  }
  return true;
}

}  // namespace

bool SatisfiesCarrier(const Value& v, const TypeExpr& t, const Universe* u) {
  switch (t.kind) {
    case TypeExpr::Kind::kInt:
      return v.kind() == Value::Kind::kInt;
    case TypeExpr::Kind::kNat:
      return v.kind() == Value::Kind::kInt && v.as_int() >= 0;
    case TypeExpr::Kind::kBasic:
      return v.kind() == Value::Kind::kBasic && v.type_name() == t.name;
    case TypeExpr::Kind::kFree:
      return v.kind() == Value::Kind::kEnum && v.type_name() == t.name &&
             v.ordinal() >= 0 &&
             v.ordinal() < static_cast<int>(t.constants.size()) &&
             t.constants[v.ordinal()] == v.name();
    case TypeExpr::Kind::kProduct:
      return v.kind() == Value::Kind::kTuple &&
             SatisfiesCarrier(v.first(), t.left(), u) &&
             SatisfiesCarrier(v.second(), t.right(), u);
    case TypeExpr::Kind::kPower:
      if (v.kind() != Value::Kind::kSet) return false;
      for (const Value& e : v.items()) {
        if (!SatisfiesCarrier(e, t.elem(), u)) return false;
      }
      return true;
    case TypeExpr::Kind::kSynonym:
      break;
  }
  switch (t.synonym) {
    case SynonymKind::kRel:
      return RelationOf(v, t.left(), t.right(), u);
    case SynonymKind::kPfun:
    case SynonymKind::kFfun:
      return RelationOf(v, t.left(), t.right(), u) && IsFunctional(v);
    case SynonymKind::kFun:
      return RelationOf(v, t.left(), t.right(), u) && IsFunctional(v) &&
             CoversDomain(v, t.left(), u);
    case SynonymKind::kSeq: {
      if (!RelationOf(v, TypeExpr::Int(), t.elem(), u) || !IsFunctional(v)) {
        return false;
      }
      // Sorted by index, so the domain is 1..n exactly when pair i has i+1.
      for (size_t i = 0; i < v.size(); ++i) {
        if (v.items()[i].first().as_int() != static_cast<int64_t>(i + 1)) {
          return false;
        }
      }
      return true;
    }
    case SynonymKind::kFinset:
      return SatisfiesCarrier(v, TypeExpr::Power(t.elem()), u);
  }
  return false;
}

std::string Verdict::ToString() const {
  switch (status) {
    case Status::kSatisfied:
      return "satisfied";
    case Status::kFailed:
      if (pred_index < 0) return "failed: carrier of '" + variable + "'";
      return "failed at predicate " + std::to_string(pred_index);
    case Status::kError:
      return "error at " +
             (pred_index < 0 ? "carrier of '" + variable + "'"
                             : "predicate " + std::to_string(pred_index)) +
             ": " + message;
  }
  return "?";
}

Verdict CheckSpec(const TypedSpec& spec, const Env& env, const Universe* u) {
  Verdict v;
  for (const Decl& d : spec.spec.decls) {
    auto it = env.find(d.name);
    if (it == env.end()) {
      v.status = Verdict::Status::kError;
      v.variable = d.name;
      v.error_kind = EvalError::Kind::kUnbound;
      v.message = "variable '" + d.name + "' is unbound";
      return v;
    }
    if (!SatisfiesCarrier(it->second, d.type, u)) {
      v.status = Verdict::Status::kFailed;
      v.variable = d.name;
      v.message = ToString(it->second) + " is not in " + ztc::ToString(d.type);
      return v;
    }
  }
  for (size_t i = 0; i < spec.spec.preds.size(); ++i) {
    try {
      if (!EvalPred(spec.spec.preds[i], env)) {
        v.status = Verdict::Status::kFailed;
        v.pred_index = static_cast<int>(i);
        v.message = ztc::ToString(spec.spec.preds[i]);
        return v;
      }
    } catch (const EvalError& err) {
      v.status = Verdict::Status::kError;
      v.pred_index = static_cast<int>(i);
      v.error_kind = err.kind();
      v.message = err.what();
      return v;
    }
  }
  return v;
}

}  // namespace ztc

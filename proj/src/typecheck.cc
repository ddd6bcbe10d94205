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

#include "ztc/typecheck.h"

#include <memory>
#include <set>
#include <stdexcept>

#include "ztc/error.h"
#include "ztc/parser.h"

namespace ztc {

std::string_view ConstraintName(Constraint c) {
  switch (c) {
    case Constraint::kFunctional:
      return "Functional";
    case Constraint::kTotalDom:
      return "TotalDom";
    case Constraint::kFiniteDom:
      return "FiniteDom";
    case Constraint::kContiguousDom:
      return "ContiguousDom1toN";
    case Constraint::kFinite:
      return "Finite";
  }
  return "?";
}

TypeExpr Normalize(const TypeExpr& t) {
  switch (t.kind) {
    case TypeExpr::Kind::kInt:
    case TypeExpr::Kind::kNat:
      return TypeExpr::Int();
    case TypeExpr::Kind::kBasic:
    case TypeExpr::Kind::kFree:
      return t;
    case TypeExpr::Kind::kProduct:
      return TypeExpr::Product(Normalize(t.left()), Normalize(t.right()));
    case TypeExpr::Kind::kPower:
      return TypeExpr::Power(Normalize(t.elem()));
    case TypeExpr::Kind::kSynonym:
      switch (t.synonym) {
        case SynonymKind::kRel:
        case SynonymKind::kPfun:
        case SynonymKind::kFun:
        case SynonymKind::kFfun:
          return TypeExpr::Power(
              TypeExpr::Product(Normalize(t.left()), Normalize(t.right())));
        case SynonymKind::kSeq:
          return TypeExpr::Power(
              TypeExpr::Product(TypeExpr::Int(), Normalize(t.elem())));
        case SynonymKind::kFinset:
          return TypeExpr::Power(Normalize(t.elem()));
      }
  }
  throw std::logic_error("unhandled type kind");
}

std::vector<Constraint> CarrierConstraints(const TypeExpr& declared) {
  if (declared.kind != TypeExpr::Kind::kSynonym) return {};
  switch (declared.synonym) {
    case SynonymKind::kRel:
      return {};
    case SynonymKind::kPfun:
      return {Constraint::kFunctional};
    case SynonymKind::kFun:
      return {Constraint::kFunctional, Constraint::kTotalDom};
    case SynonymKind::kFfun:
      return {Constraint::kFunctional, Constraint::kFiniteDom};
    case SynonymKind::kSeq:
      return {Constraint::kFunctional, Constraint::kFiniteDom,
              Constraint::kContiguousDom};
    case SynonymKind::kFinset:
      return {Constraint::kFinite};
  }
  return {};
}

const TypeExpr& TypedSpec::DeclaredType(std::string_view var) const {
  const Decl* d = spec.FindDecl(var);
  if (d == nullptr) {
    throw std::out_of_range("undeclared variable " + std::string(var));
  }
  return d->type;
}

namespace {

bool IsFunctionSynonym(const TypeExpr& t) {
  return t.kind == TypeExpr::Kind::kSynonym &&
         (t.synonym == SynonymKind::kPfun || t.synonym == SynonymKind::kFun ||
          t.synonym == SynonymKind::kFfun || t.synonym == SynonymKind::kSeq);
}

bool IsFiniteFunction(const TypeExpr& t) {
  return t.kind == TypeExpr::Kind::kSynonym &&
         (t.synonym == SynonymKind::kFfun || t.synonym == SynonymKind::kSeq);
}

}  // namespace

bool ProvablyFinite(const Expr& e, const TestSpec& spec) {
  switch (e.kind) {
    case Expr::Kind::kVar: {
      const Decl* d = spec.FindDecl(e.name);
      return d != nullptr && d->type.kind == TypeExpr::Kind::kSynonym &&
             (d->type.synonym == SynonymKind::kFinset ||
              IsFiniteFunction(d->type));
    }
    case Expr::Kind::kSetExt:
    case Expr::Kind::kRange:
    case Expr::Kind::kEmptySet:
      return true;
    case Expr::Kind::kDom:
    case Expr::Kind::kRan:
      return ProvablyFinite(e.lhs(), spec);
    case Expr::Kind::kUnion:
      return ProvablyFinite(e.lhs(), spec) && ProvablyFinite(e.rhs(), spec);
    case Expr::Kind::kInter:
      return ProvablyFinite(e.lhs(), spec) || ProvablyFinite(e.rhs(), spec);
    case Expr::Kind::kDiff:
      return ProvablyFinite(e.lhs(), spec);
    default:
      return false;
  }
}

namespace {

class Checker {
 public:
  explicit Checker(TypedSpec& out) : out_(out) {}

  void Run() {
    for (const Decl& d : out_.spec.decls) {
      out_.carrier[d.name] = CarrierConstraints(d.type);
    }
    for (size_t i = 0; i < out_.spec.preds.size(); ++i) {
      current_pred_ = i;
      CheckPred(out_.spec.preds[i]);
    }
  }

 private:
  [[noreturn]] static void Mismatch(const Expr& e, const TypeExpr& expected,
                                    const TypeExpr& found) {
    throw TypeError(TypeError::Kind::kMismatch,
                    "type mismatch in '" + ToString(e) + "': expected " +
                        ToString(expected) + ", found " + ToString(found),
                    e.loc, ToString(expected), ToString(found));
  }

  static const TypeExpr& Set(Expr& e, TypeExpr t) {
    e.checked_type = std::make_shared<const TypeExpr>(std::move(t));
    return *e.checked_type;
  }

  static void Expect(const Expr& e, const TypeExpr& expected) {
    if (!(e.type() == expected)) Mismatch(e, expected, e.type());
  }

  static void ExpectPower(const Expr& e) {
    if (!e.type().is_power()) {
      throw TypeError(TypeError::Kind::kMismatch,
                      "expected a set in '" + ToString(e) + "', found " +
                          ToString(e.type()),
                      e.loc, "P _", ToString(e.type()));
    }
  }

  // Whether `e`'s type can only be fixed by its context.
  static bool NeedsContext(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::kEmptySet:
        return !e.annotation.has_value();
      case Expr::Kind::kSetExt:
        for (const Expr& op : e.operands) {
          if (!NeedsContext(op)) return false;
        }
        return true;
      case Expr::Kind::kUnion:
      case Expr::Kind::kInter:
      case Expr::Kind::kDiff:
        return NeedsContext(e.lhs()) && NeedsContext(e.rhs());
      case Expr::Kind::kTuple:
        return NeedsContext(e.lhs()) || NeedsContext(e.rhs());
      default:
        return false;
    }
  }

  // Infers both operands of a same-typed pair, resolving whichever side
  // needs context from the other one.
  void InferPair(Expr& a, Expr& b, const TypeExpr* expected) {
    if (expected == nullptr && NeedsContext(a)) {
      Infer(b, nullptr);
      Infer(a, &b.type());
    } else {
      Infer(a, expected);
      Infer(b, &a.type());
    }
  }

  const TypeExpr& Infer(Expr& e, const TypeExpr* expected) {
    const TypeExpr& t = InferNode(e, expected);
    if (expected != nullptr && !(t == *expected)) Mismatch(e, *expected, t);
    return t;
  }

  const TypeExpr& InferNode(Expr& e, const TypeExpr* expected) {
    switch (e.kind) {
      case Expr::Kind::kVar: {
        const Decl* d = out_.spec.FindDecl(e.name);
        if (d == nullptr) {
          throw TypeError(TypeError::Kind::kMismatch,
                          "undeclared variable '" + e.name + "'", e.loc);
        }
        return Set(e, Normalize(d->type));
      }
      case Expr::Kind::kIntLit:
        return Set(e, TypeExpr::Int());
      case Expr::Kind::kEnumLit:
      case Expr::Kind::kBasicLit:
        return Set(e, *e.annotation);
      case Expr::Kind::kTuple: {
        const bool product =
            expected != nullptr && expected->kind == TypeExpr::Kind::kProduct;
        Infer(e.operands[0], product ? &expected->left() : nullptr);
        Infer(e.operands[1], product ? &expected->right() : nullptr);
        return Set(e, TypeExpr::Product(e.lhs().type(), e.rhs().type()));
      }
      case Expr::Kind::kSetExt: {
        const TypeExpr* elem =
            expected != nullptr && expected->is_power() ? &expected->elem()
                                                        : nullptr;
        if (elem == nullptr) {
          // Anchor on the first element that carries its own type.
          for (Expr& op : e.operands) {
            if (!NeedsContext(op)) {
              elem = &Infer(op, nullptr);
              break;
            }
          }
          if (elem == nullptr) {
            throw TypeError(TypeError::Kind::kCannotInfer,
                            "cannot infer the element type of '" +
                                ToString(e) + "'",
                            e.loc);
          }
        }
        TypeExpr elem_type = *elem;
        for (Expr& op : e.operands) Infer(op, &elem_type);
        return Set(e, TypeExpr::Power(elem_type));
      }
      case Expr::Kind::kRange: {
        const TypeExpr kInt = TypeExpr::Int();
        Infer(e.operands[0], &kInt);
        Infer(e.operands[1], &kInt);
        return Set(e, TypeExpr::Power(kInt));
      }
      case Expr::Kind::kEmptySet: {
        if (e.annotation) return Set(e, TypeExpr::Power(Normalize(*e.annotation)));
        if (expected != nullptr && expected->is_power()) return Set(e, *expected);
        throw TypeError(TypeError::Kind::kCannotInfer,
                        "cannot infer the element type of '{}'; write {}T",
                        e.loc);
      }
      case Expr::Kind::kApply:
        return InferApply(e);
      case Expr::Kind::kDom:
      case Expr::Kind::kRan: {
        Infer(e.operands[0], nullptr);
        const TypeExpr& rel = e.lhs().type();
        if (!rel.is_power() || rel.elem().kind != TypeExpr::Kind::kProduct) {
          throw TypeError(TypeError::Kind::kMismatch,
                          "expected a relation in '" + ToString(e) +
                              "', found " + ToString(rel),
                          e.loc, "P (_ x _)", ToString(rel));
        }
        return Set(e, TypeExpr::Power(e.kind == Expr::Kind::kDom
                                          ? rel.elem().left()
                                          : rel.elem().right()));
      }
      case Expr::Kind::kCard: {
        Infer(e.operands[0], nullptr);
        ExpectPower(e.lhs());
        if (!ProvablyFinite(e.lhs(), out_.spec)) {
          throw TypeError(TypeError::Kind::kCardOnNonFinset,
                          "# applied to '" + ToString(e.lhs()) +
                              "', which is not known to be finite",
                          e.loc, "fset _", ToString(e.lhs().type()));
        }
        return Set(e, TypeExpr::Int());
      }
      case Expr::Kind::kUnion:
      case Expr::Kind::kInter:
      case Expr::Kind::kDiff: {
        InferPair(e.operands[0], e.operands[1], expected);
        ExpectPower(e.lhs());
        return Set(e, e.lhs().type());
      }
      case Expr::Kind::kAdd:
      case Expr::Kind::kSub:
      case Expr::Kind::kMul: {
        const TypeExpr kInt = TypeExpr::Int();
        Infer(e.operands[0], &kInt);
        Infer(e.operands[1], &kInt);
        return Set(e, kInt);
      }
    }
    throw std::logic_error("unhandled expression kind");
  }

  const TypeExpr& InferApply(Expr& e) {
    Expr& fn = e.operands[0];
    const Decl* d = fn.kind == Expr::Kind::kVar ? out_.spec.FindDecl(fn.name)
                                                : nullptr;
    if (d == nullptr || !IsFunctionSynonym(d->type)) {
      throw TypeError(TypeError::Kind::kApplyOnNonFunction,
                      "'" + ToString(fn) +
                          "' is applied but is not declared as a function",
                      e.loc, "pfun/fun/ffun/seq",
                      d == nullptr ? ToString(fn) : ToString(d->type));
    }
    Infer(fn, nullptr);
    const TypeExpr& pair = fn.type().elem();
    Infer(e.operands[1], &pair.left());
    if (d->type.synonym != SynonymKind::kFun && !DomainEstablished(e)) {
      out_.warnings.push_back(
          {"'" + ToString(e) + "' applies a partial function without a " +
               "preceding '" + ToString(e.rhs()) + " in dom " + fn.name + "'",
           e.loc});
    }
    return Set(e, pair.right());
  }

  // Looks for `x in dom f` among the predicates before the current one.
  bool DomainEstablished(const Expr& apply) const {
    for (size_t i = 0; i < current_pred_; ++i) {
      const Pred& p = out_.spec.preds[i];
      if (p.kind == Pred::Kind::kMemberOf && p.rhs.kind == Expr::Kind::kDom &&
          p.rhs.lhs() == apply.lhs() && p.lhs == apply.rhs()) {
        return true;
      }
    }
    return false;
  }

  void CheckPred(Pred& p) {
    const TypeExpr kInt = TypeExpr::Int();
    switch (p.kind) {
      case Pred::Kind::kMemberOf:
      case Pred::Kind::kNotMemberOf:
        if (NeedsContext(p.rhs)) {
          Infer(p.lhs, nullptr);
          const TypeExpr set = TypeExpr::Power(p.lhs.type());
          Infer(p.rhs, &set);
        } else {
          Infer(p.rhs, nullptr);
          ExpectPower(p.rhs);
          Infer(p.lhs, &p.rhs.type().elem());
        }
        return;
      case Pred::Kind::kEqual:
      case Pred::Kind::kNotEqual:
        InferPair(p.lhs, p.rhs, nullptr);
        return;
      case Pred::Kind::kSubsetEq:
      case Pred::Kind::kNotSubsetEq:
        InferPair(p.lhs, p.rhs, nullptr);
        ExpectPower(p.lhs);
        return;
      case Pred::Kind::kLt:
      case Pred::Kind::kLeq:
      case Pred::Kind::kGt:
      case Pred::Kind::kGeq:
        Infer(p.lhs, &kInt);
        Infer(p.rhs, &kInt);
        return;
    }
  }

  TypedSpec& out_;
  size_t current_pred_ = 0;
};

}  // namespace

TypedSpec Typecheck(const TestSpec& spec) {
  TypedSpec out;
  out.spec = spec;
  std::set<std::string, std::less<>> seen;
  for (const Decl& d : spec.decls) {
    if (!seen.insert(d.name).second) {
      throw TypeError(TypeError::Kind::kMismatch,
                      "variable '" + d.name + "' is declared twice", d.loc);
    }
  }
  Checker(out).Run();
  return out;
}

}  // namespace ztc

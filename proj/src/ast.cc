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

#include "ztc/ast.h"

#include <stdexcept>
#include <utility>

namespace ztc {

std::string_view SynonymKeyword(SynonymKind kind) {
  switch (kind) {
    case SynonymKind::kRel:
      return "rel";
    case SynonymKind::kPfun:
      return "pfun";
    case SynonymKind::kFun:
      return "fun";
    case SynonymKind::kFfun:
      return "ffun";
    case SynonymKind::kSeq:
      return "seq";
    case SynonymKind::kFinset:
      return "fset";
  }
  return "?";
}

TypeExpr TypeExpr::Int() { return TypeExpr{}; }

TypeExpr TypeExpr::Nat() {
  TypeExpr t;
  t.kind = Kind::kNat;
  return t;
}

TypeExpr TypeExpr::Basic(std::string name) {
  TypeExpr t;
  t.kind = Kind::kBasic;
  t.name = std::move(name);
  return t;
}

TypeExpr TypeExpr::Free(std::string name, std::vector<std::string> constants) {
  TypeExpr t;
  t.kind = Kind::kFree;
  t.name = std::move(name);
  t.constants = std::move(constants);
  return t;
}

TypeExpr TypeExpr::Product(TypeExpr left, TypeExpr right) {
  TypeExpr t;
  t.kind = Kind::kProduct;
  t.args.push_back(std::move(left));
  t.args.push_back(std::move(right));
  return t;
}

TypeExpr TypeExpr::Power(TypeExpr elem) {
  TypeExpr t;
  t.kind = Kind::kPower;
  t.args.push_back(std::move(elem));
  return t;
}

TypeExpr TypeExpr::Synonym(SynonymKind kind, std::vector<TypeExpr> args) {
  const bool unary = kind == SynonymKind::kSeq || kind == SynonymKind::kFinset;
  if (args.size() != (unary ? 1u : 2u)) {
    throw std::invalid_argument("wrong arity for ZMT synonym " +
                                std::string(SynonymKeyword(kind)));
  }
  TypeExpr t;
  t.kind = Kind::kSynonym;
  t.synonym = kind;
  t.args = std::move(args);
  return t;
}

bool operator==(const TypeExpr& a, const TypeExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case TypeExpr::Kind::kInt:
    case TypeExpr::Kind::kNat:
      return true;
    case TypeExpr::Kind::kBasic:
      return a.name == b.name;
    case TypeExpr::Kind::kFree:
      return a.name == b.name && a.constants == b.constants;
    case TypeExpr::Kind::kSynonym:
      if (a.synonym != b.synonym) return false;
      [[fallthrough]];
    case TypeExpr::Kind::kProduct:
    case TypeExpr::Kind::kPower:
      return a.args == b.args;
  }
  return false;
}

namespace {

// Precedence levels: 0 function arrows, 1 product, 2 prefix, 3 atom.
int TypePrecedence(const TypeExpr& t) {
  switch (t.kind) {
    case TypeExpr::Kind::kSynonym:
      return (t.synonym == SynonymKind::kSeq ||
              t.synonym == SynonymKind::kFinset)
                 ? 2
                 : 0;
    case TypeExpr::Kind::kProduct:
      return 1;
    case TypeExpr::Kind::kPower:
      return 2;
    default:
      return 3;
  }
}

std::string TypeAt(const TypeExpr& t, int min_prec) {
  std::string s = ToString(t);
  if (TypePrecedence(t) < min_prec) return "(" + s + ")";
  return s;
}

}  // namespace

std::string ToString(const TypeExpr& t) {
  switch (t.kind) {
    case TypeExpr::Kind::kInt:
      return "INT";
    case TypeExpr::Kind::kNat:
      return "NAT";
    case TypeExpr::Kind::kBasic:
    case TypeExpr::Kind::kFree:
      return t.name;
    case TypeExpr::Kind::kProduct:
      // Left-associative: the right operand needs parens if it is a product.
      return TypeAt(t.left(), 1) + " x " + TypeAt(t.right(), 2);
    case TypeExpr::Kind::kPower:
      return "P " + TypeAt(t.elem(), 2);
    case TypeExpr::Kind::kSynonym:
      if (t.args.size() == 1) {
        return std::string(SynonymKeyword(t.synonym)) + " " +
               TypeAt(t.elem(), 2);
      }
      // Right-associative arrows.
      return TypeAt(t.left(), 1) + " " + std::string(SynonymKeyword(t.synonym)) +
             " " + TypeAt(t.right(), 0);
  }
  return "?";
}

Expr Expr::Var(std::string name, SourceLocation loc) {
  Expr e;
  e.kind = Kind::kVar;
  e.name = std::move(name);
  e.loc = loc;
  return e;
}

Expr Expr::IntLit(int64_t value, SourceLocation loc) {
  Expr e;
  e.kind = Kind::kIntLit;
  e.value = value;
  e.loc = loc;
  return e;
}

Expr Expr::EnumLit(std::string name, TypeExpr type, SourceLocation loc) {
  Expr e;
  e.kind = Kind::kEnumLit;
  e.name = std::move(name);
  e.annotation = std::move(type);
  e.loc = loc;
  return e;
}

Expr Expr::BasicLit(std::string name, TypeExpr type, SourceLocation loc) {
  Expr e;
  e.kind = Kind::kBasicLit;
  e.name = std::move(name);
  e.annotation = std::move(type);
  e.loc = loc;
  return e;
}

Expr Expr::Tuple(Expr left, Expr right, SourceLocation loc) {
  return Binary(Kind::kTuple, std::move(left), std::move(right), loc);
}

Expr Expr::SetExt(std::vector<Expr> elems, SourceLocation loc) {
  Expr e;
  e.kind = Kind::kSetExt;
  e.operands = std::move(elems);
  e.loc = loc;
  return e;
}

Expr Expr::Range(Expr lo, Expr hi, SourceLocation loc) {
  return Binary(Kind::kRange, std::move(lo), std::move(hi), loc);
}

Expr Expr::EmptySet(std::optional<TypeExpr> elem, SourceLocation loc) {
  Expr e;
  e.kind = Kind::kEmptySet;
  e.annotation = std::move(elem);
  e.loc = loc;
  return e;
}

Expr Expr::Apply(Expr fn, Expr arg, SourceLocation loc) {
  return Binary(Kind::kApply, std::move(fn), std::move(arg), loc);
}

Expr Expr::Unary(Kind kind, Expr operand, SourceLocation loc) {
  Expr e;
  e.kind = kind;
  e.operands.push_back(std::move(operand));
  e.loc = loc;
  return e;
}

Expr Expr::Binary(Kind kind, Expr lhs, Expr rhs, SourceLocation loc) {
  Expr e;
  e.kind = kind;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  e.loc = loc;
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.name == b.name && a.value == b.value &&
         a.annotation == b.annotation && a.operands == b.operands;
}

bool operator==(const Pred& a, const Pred& b) {
  return a.kind == b.kind && a.lhs == b.lhs && a.rhs == b.rhs;
}

bool operator==(const Decl& a, const Decl& b) {
  return a.name == b.name && a.type == b.type;
}

bool operator==(const TestSpec& a, const TestSpec& b) {
  return a.name == b.name && a.includes == b.includes && a.decls == b.decls &&
         a.preds == b.preds;
}

std::string_view PredKeyword(Pred::Kind kind) {
  switch (kind) {
    case Pred::Kind::kMemberOf:
      return "in";
    case Pred::Kind::kNotMemberOf:
      return "notin";
    case Pred::Kind::kEqual:
      return "=";
    case Pred::Kind::kNotEqual:
      return "!=";
    case Pred::Kind::kSubsetEq:
      return "subseteq";
    case Pred::Kind::kNotSubsetEq:
      return "notsubseteq";
    case Pred::Kind::kLt:
      return "<";
    case Pred::Kind::kLeq:
      return "<=";
    case Pred::Kind::kGt:
      return ">";
    case Pred::Kind::kGeq:
      return ">=";
  }
  return "?";
}

const Decl* TestSpec::FindDecl(std::string_view var) const {
  for (const Decl& d : decls) {
    if (d.name == var) return &d;
  }
  return nullptr;
}

void ForEachVar(const Expr& e, const std::function<void(const Expr&)>& fn) {
  if (e.kind == Expr::Kind::kVar) {
    fn(e);
    return;
  }
  for (const Expr& op : e.operands) ForEachVar(op, fn);
}

bool MentionsVar(const Pred& p, std::string_view var) {
  bool found = false;
  auto check = [&](const Expr& v) { found = found || v.name == var; };
  ForEachVar(p.lhs, check);
  ForEachVar(p.rhs, check);
  return found;
}

}  // namespace ztc

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

// Abstract syntax for Z test specifications: type expressions, expressions,
// atomic predicates and the schema that groups them.

#ifndef ZTC_AST_H_
#define ZTC_AST_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ztc {

struct SourceLocation {
  int line = 0;
  int column = 0;
};

enum class SynonymKind { kRel, kPfun, kFun, kFfun, kSeq, kFinset };

std::string_view SynonymKeyword(SynonymKind kind);

// A Z type or carrier-set expression. ZMT synonyms are kept as written;
// `Normalize` (typecheck.h) expands them to Power/Product trees.
struct TypeExpr {
  enum class Kind { kInt, kNat, kBasic, kFree, kProduct, kPower, kSynonym };

  Kind kind = Kind::kInt;
  std::string name;                    // kBasic, kFree
  std::vector<std::string> constants;  // kFree, in declaration order
  SynonymKind synonym = SynonymKind::kRel;
  std::vector<TypeExpr> args;  // kProduct: 2, kPower: 1, kSynonym: 1 or 2

  static TypeExpr Int();
  static TypeExpr Nat();
  static TypeExpr Basic(std::string name);
  static TypeExpr Free(std::string name, std::vector<std::string> constants);
  static TypeExpr Product(TypeExpr left, TypeExpr right);
  static TypeExpr Power(TypeExpr elem);
  static TypeExpr Synonym(SynonymKind kind, std::vector<TypeExpr> args);

  bool is_int() const { return kind == Kind::kInt || kind == Kind::kNat; }
  bool is_power() const { return kind == Kind::kPower; }
  const TypeExpr& elem() const { return args.at(0); }
  const TypeExpr& left() const { return args.at(0); }
  const TypeExpr& right() const { return args.at(1); }

  friend bool operator==(const TypeExpr& a, const TypeExpr& b);
};

// ASCII rendering in the .ztc surface syntax, e.g. `REVENT pfun NAT`.
std::string ToString(const TypeExpr& type);

struct Expr {
  enum class Kind {
    kVar,
    kIntLit,
    kEnumLit,
    kBasicLit,
    kTuple,
    kSetExt,
    kRange,
    kEmptySet,
    kApply,
    kDom,
    kRan,
    kCard,
    kUnion,
    kInter,
    kDiff,
    kAdd,
    kSub,
    kMul,
  };

  Kind kind = Kind::kVar;
  std::string name;  // kVar, kEnumLit, kBasicLit
  int64_t value = 0;
  // kEnumLit / kBasicLit: the literal's type as resolved by the parser.
  // kEmptySet: the written element type, when the source gives one.
  std::optional<TypeExpr> annotation;
  std::vector<Expr> operands;
  SourceLocation loc;
  // Normalized type, filled in by the type checker on its own copy.
  std::shared_ptr<const TypeExpr> checked_type;

  static Expr Var(std::string name, SourceLocation loc = {});
  static Expr IntLit(int64_t value, SourceLocation loc = {});
  static Expr EnumLit(std::string name, TypeExpr type, SourceLocation loc = {});
  static Expr BasicLit(std::string name, TypeExpr type, SourceLocation loc = {});
  static Expr Tuple(Expr left, Expr right, SourceLocation loc = {});
  static Expr SetExt(std::vector<Expr> elems, SourceLocation loc = {});
  static Expr Range(Expr lo, Expr hi, SourceLocation loc = {});
  static Expr EmptySet(std::optional<TypeExpr> elem, SourceLocation loc = {});
  static Expr Apply(Expr fn, Expr arg, SourceLocation loc = {});
  static Expr Unary(Kind kind, Expr operand, SourceLocation loc = {});
  static Expr Binary(Kind kind, Expr lhs, Expr rhs, SourceLocation loc = {});

  const Expr& lhs() const { return operands.at(0); }
  const Expr& rhs() const { return operands.at(1); }
  const TypeExpr& type() const { return *checked_type; }

  // Structural equality; source locations and checked types are ignored.
  friend bool operator==(const Expr& a, const Expr& b);
};

struct Pred {
  enum class Kind {
    kMemberOf,
    kNotMemberOf,
    kEqual,
    kNotEqual,
    kSubsetEq,
    kNotSubsetEq,
    kLt,
    kLeq,
    kGt,
    kGeq,
  };

  Kind kind = Kind::kEqual;
  Expr lhs;
  Expr rhs;
  SourceLocation loc;

  friend bool operator==(const Pred& a, const Pred& b);
};

std::string_view PredKeyword(Pred::Kind kind);

struct Decl {
  std::string name;
  TypeExpr type;
  SourceLocation loc;

  friend bool operator==(const Decl& a, const Decl& b);
};

// A test specification: a named schema whose predicate part is a
// conjunction of atomic predicates.
struct TestSpec {
  std::string name;
  std::vector<std::string> includes;
  std::vector<Decl> decls;
  std::vector<Pred> preds;
  SourceLocation loc;

  const Decl* FindDecl(std::string_view var) const;

  friend bool operator==(const TestSpec& a, const TestSpec& b);
};

// Calls `fn` on every variable name occurring free in `e`, in textual order.
void ForEachVar(const Expr& e, const std::function<void(const Expr&)>& fn);
bool MentionsVar(const Pred& p, std::string_view var);

}  // namespace ztc

#endif  // ZTC_AST_H_

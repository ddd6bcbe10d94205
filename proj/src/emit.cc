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

#include "ztc/emit.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "rep.h"
#include "ztc/error.h"
#include "ztc/eval.h"
#include "ztc/parser.h"

namespace ztc {

std::string_view DialectName(Dialect d) {
  return d == Dialect::kYices ? "yices" : "cvc3";
}

std::optional<Dialect> ParseDialect(std::string_view name) {
  if (name == "yices") return Dialect::kYices;
  if (name == "cvc3") return Dialect::kCvc3;
  return std::nullopt;
}

std::string ScriptSuffix(Dialect d) {
  return d == Dialect::kYices ? "yices.ys" : "cvc3.cvc";
}

const ScriptSymbol* SmtScript::FindZ(std::string_view z_name) const {
  for (const ScriptSymbol& s : symbols) {
    if (s.z_name == z_name) return &s;
  }
  return nullptr;
}

const ScriptSymbol* SmtScript::FindEmitted(std::string_view emitted) const {
  for (const ScriptSymbol& s : symbols) {
    if (s.emitted == emitted) return &s;
  }
  return nullptr;
}

std::string SmtScript::Text() const {
  const std::string marker = dialect == Dialect::kYices ? ";; " : "% ";
  std::string out;
  for (const std::string& line : header) out += marker + line + "\n";
  for (const std::string& s : sentences) out += s + "\n";
  return out;
}

namespace {

// Thrown while emitting one declaration or predicate; collected as a problem.
struct Unsupported {
  EmitError::Kind kind;
  std::string message;
};

[[noreturn]] void FailType(const std::string& message) {
  throw Unsupported{EmitError::Kind::kUnsupportedType, message};
}

[[noreturn]] void FailPred(const std::string& message) {
  throw Unsupported{EmitError::Kind::kUnsupportedPredicate, message};
}

bool IsFunctionRep(Rep r) {
  return r == Rep::kFun || r == Rep::kPfun || r == Rep::kFfun || r == Rep::kSeq;
}

const std::set<std::string, std::less<>>& Reserved(Dialect d) {
  static const std::set<std::string, std::less<>> yices = {
      "define", "define-type", "assert", "check", "lambda", "forall",
      "exists", "select", "record", "tuple", "mk-tuple", "scalar",
      "subtype", "int", "nat", "nat1", "bool", "real", "true", "false",
      "and", "or", "not", "ite", "let", "update", "if", "set-evidence!"};
  static const std::set<std::string, std::less<>> cvc3 = {
      "TYPE", "ARRAY", "OF", "INT", "NAT", "NAT1", "BOOLEAN", "TRUE",
      "FALSE", "AND", "OR", "NOT", "XOR", "IF", "THEN", "ELSE", "ELSIF",
      "ENDIF", "FORALL", "EXISTS", "LAMBDA", "ASSERT", "QUERY", "CHECKSAT",
      "DATATYPE", "END", "SUBTYPE", "WITH", "BITVECTOR", "LET", "IN"};
  return d == Dialect::kYices ? yices : cvc3;
}

std::string Mangle(const TypeExpr& t) {
  switch (t.kind) {
    case TypeExpr::Kind::kInt:
    case TypeExpr::Kind::kNat:
      return "INT";
    case TypeExpr::Kind::kBasic:
    case TypeExpr::Kind::kFree:
      return t.name;
    case TypeExpr::Kind::kProduct:
      return Mangle(t.left()) + "x" + Mangle(t.right());
    case TypeExpr::Kind::kPower:
      return "P" + Mangle(t.elem());
    case TypeExpr::Kind::kSynonym:
      return Mangle(Normalize(t));
  }
  return "?";
}

// An element of a set, either as one term or as the pieces of a tuple.
struct Elem {
  TypeExpr type;
  std::string whole;
  std::vector<Elem> parts;
};

struct Binder {
  std::string name;
  std::string sort;
};

struct SetTerm {
  std::function<std::string(const Elem&)> member;
  std::function<std::string()> value;
};

class Emitter {
 public:
  Emitter(const TypedSpec& spec, Dialect d, bool variant)
      : ts_(spec), d_(d), yices_(d == Dialect::kYices), variant_(variant) {}

  SmtScript Run();

 private:
  // ---- names ----------------------------------------------------------
  std::string Unique(std::string base) {
    while (globals_.count(base) != 0 || Reserved(d_).count(base) != 0) {
      base += "_";
    }
    globals_.insert(base);
    return base;
  }

  static std::string Sanitize(std::string_view z) {
    std::string out;
    for (char c : z) {
      if (c == '?') {
        out += "_q";
      } else if (c == '!') {
        out += "_b";
      } else {
        out += c;
      }
    }
    return out;
  }

  std::string Fresh(const std::string& base, bool avoid_globals = true) {
    std::string name = base;
    for (int k = 1;; ++k) {
      if (local_.count(name) == 0 &&
          (!avoid_globals || globals_.count(name) == 0)) {
        break;
      }
      name = base + std::to_string(k);
    }
    local_.insert(name);
    return name;
  }

  // ---- sorts ----------------------------------------------------------
  std::string LeafSort(const TypeExpr& t) {
    switch (t.kind) {
      case TypeExpr::Kind::kInt:
      case TypeExpr::Kind::kNat:
        return yices_ ? "int" : "INT";
      case TypeExpr::Kind::kBasic:
      case TypeExpr::Kind::kFree:
        return t.name;
      default:
        FailType("set elements of type " + ToString(t) + " have no embedding");
    }
  }

  std::vector<TypeExpr> Leaves(const TypeExpr& t) {
    if (t.kind == TypeExpr::Kind::kProduct) {
      std::vector<TypeExpr> out = Leaves(t.left());
      for (TypeExpr& r : Leaves(t.right())) out.push_back(std::move(r));
      return out;
    }
    return {t};
  }

  std::string IndexSort(const TypeExpr& t) {
    if (t.kind == TypeExpr::Kind::kProduct) {
      return "[" + IndexSort(t.left()) + ", " + IndexSort(t.right()) + "]";
    }
    return LeafSort(t);
  }

  std::string ScalarSort(const TypeExpr& t) {
    switch (t.kind) {
      case TypeExpr::Kind::kInt:
        return yices_ ? "int" : "INT";
      case TypeExpr::Kind::kNat:
        need_nat_ = true;
        return yices_ ? "nat" : "NAT";
      case TypeExpr::Kind::kBasic:
      case TypeExpr::Kind::kFree:
        return t.name;
      case TypeExpr::Kind::kProduct:
        if (yices_) {
          return "(tuple " + ScalarSort(t.left()) + " " + ScalarSort(t.right()) + ")";
        }
        return "[" + ScalarSort(t.left()) + ", " + ScalarSort(t.right()) + "]";
      default:
        FailType("values of type " + ToString(t) +
                 " cannot appear as function results or tuple components");
    }
  }

  std::string Nat() {
    need_nat_ = true;
    return yices_ ? "nat" : "NAT";
  }

  std::string Nat1() {
    need_nat1_ = true;
    return yices_ ? "nat1" : "NAT1";
  }

  // Sort of a map from elements of `dom` (normalized) to `cod` (emitted).
  std::string MapSort(const TypeExpr& dom, const std::string& cod) {
    if (yices_) {
      std::string out = "(->";
      for (const TypeExpr& l : Leaves(dom)) out += " " + LeafSort(l);
      return out + " " + cod + ")";
    }
    return "ARRAY " + IndexSort(dom) + " OF " + cod;
  }

  std::string CharSort(const TypeExpr& elem) {
    return MapSort(elem, yices_ ? "bool" : "BITVECTOR(1)");
  }

  std::string RecordSort(const std::vector<std::pair<std::string, std::string>>& fields) {
    std::string out = yices_ ? "(record" : "[#";
    for (size_t i = 0; i < fields.size(); ++i) {
      if (yices_) {
        out += " " + fields[i].first + "::" + fields[i].second;
      } else {
        out += (i == 0 ? " " : ", ") + fields[i].first + ": " + fields[i].second;
      }
    }
    return out + (yices_ ? ")" : " #]");
  }

  std::string VarSort(const TypeExpr& t) {
    switch (Classify(t)) {
      case Rep::kScalar:
        return ScalarSort(t);
      case Rep::kSet:
        return CharSort(Normalize(t.elem()));
      case Rep::kRel:
        return CharSort(Normalize(TypeExpr::Product(t.left(), t.right())));
      case Rep::kFun:
        return MapSort(Normalize(t.left()), ScalarSort(t.right()));
      case Rep::kPfun:
        return RecordSort({{"dom", CharSort(Normalize(t.left()))},
                           {"law", MapSort(Normalize(t.left()), ScalarSort(t.right()))}});
      case Rep::kFfun:
        return RecordSort({{"dom", CharSort(Normalize(t.left()))},
                           {"law", MapSort(Normalize(t.left()), ScalarSort(t.right()))},
                           {"bij", MapSort(Normalize(t.left()), Nat1())},
                           {"card", Nat()}});
      case Rep::kFinset:
        return RecordSort({{"set", CharSort(Normalize(t.elem()))},
                           {"bij", MapSort(Normalize(t.elem()), Nat1())},
                           {"card", Nat()}});
      case Rep::kSeq: {
        const std::string n1 = Nat1();
        return RecordSort(
            {{"dom", yices_ ? "(-> " + n1 + " bool)" : "ARRAY " + n1 + " OF BITVECTOR(1)"},
             {"law", yices_ ? "(-> " + n1 + " " + ScalarSort(t.elem()) + ")"
                            : "ARRAY " + n1 + " OF " + ScalarSort(t.elem())},
             {"card", Nat()}});
      }
    }
    return {};
  }

  // ---- term builders --------------------------------------------------
  std::string True() const { return yices_ ? "true" : "TRUE"; }
  std::string False() const { return yices_ ? "false" : "FALSE"; }

  static bool Wrapped(const std::string& s) {
    if (s.empty() || s.front() != '(' || s.back() != ')') return false;
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')' && --depth == 0 && i + 1 != s.size()) return false;
    }
    return true;
  }

  static std::string Paren(const std::string& s) {
    return Wrapped(s) ? s : "(" + s + ")";
  }

  std::string Nary(const std::string& yop, const std::string& cop,
                   const std::vector<std::string>& xs, const std::string& unit) {
    if (xs.empty()) return unit;
    if (xs.size() == 1) return xs.front();
    std::string out = yices_ ? "(" + yop : "(";
    for (size_t i = 0; i < xs.size(); ++i) {
      if (yices_) {
        out += " " + xs[i];
      } else {
        out += (i == 0 ? "" : " " + cop + " ") + xs[i];
      }
    }
    return out + ")";
  }

  std::string And(const std::vector<std::string>& xs) { return Nary("and", "AND", xs, True()); }
  std::string Or(const std::vector<std::string>& xs) { return Nary("or", "OR", xs, False()); }

  std::string Not(const std::string& a) {
    return yices_ ? "(not " + a + ")" : "NOT " + Paren(a);
  }

  std::string Infix(const std::string& op, const std::string& a, const std::string& b) {
    return yices_ ? "(" + op + " " + a + " " + b + ")" : a + " " + op + " " + b;
  }

  std::string Eq(const std::string& a, const std::string& b) { return Infix("=", a, b); }

  std::string Arith(const std::string& op, const std::string& a, const std::string& b) {
    return yices_ ? "(" + op + " " + a + " " + b + ")" : "(" + a + " " + op + " " + b + ")";
  }

  std::string Field(const std::string& r, const std::string& f) {
    return yices_ ? "(select " + r + " " + f + ")" : r + "." + f;
  }

  std::string Ite(const std::string& c, const std::string& a, const std::string& b) {
    return yices_ ? "(ite " + c + " " + a + " " + b + ")"
                  : "IF " + c + " THEN " + a + " ELSE " + b + " ENDIF";
  }

  std::string Binders(const std::vector<Binder>& bs) {
    std::string out = "(";
    for (size_t i = 0; i < bs.size(); ++i) {
      if (yices_) {
        out += (i == 0 ? "" : " ") + bs[i].name + "::" + bs[i].sort;
        continue;
      }
      // CVC3 groups consecutive binders that share a sort: (n: NAT1, x1, x2: X).
      out += (i == 0 ? "" : ", ") + bs[i].name;
      if (i + 1 == bs.size() || bs[i + 1].sort != bs[i].sort) out += ": " + bs[i].sort;
    }
    return out + ")";
  }

  std::string Quant(const std::string& q, const std::vector<Binder>& bs,
                    const std::string& body) {
    if (yices_) return "(" + q + " " + Binders(bs) + " " + body + ")";
    return (q == "forall" ? "FORALL " : "EXISTS ") + Binders(bs) + ": " + body;
  }

  std::string Implies(const std::string& a, const std::string& b) { return Infix("=>", a, b); }
  std::string Iff(const std::string& a, const std::string& b) { return Infix("<=>", a, b); }

  std::string Assert(const std::string& p) {
    return yices_ ? "(assert " + p + ")" : "ASSERT " + p + ";";
  }

  // ---- elements -------------------------------------------------------
  std::string Sel(const std::string& t, int i) {
    return yices_ ? "(select " + t + " " + std::to_string(i + 1) + ")"
                  : t + "." + std::to_string(i);
  }

  std::pair<Elem, Elem> Split(const Elem& e) {
    if (!e.parts.empty()) return {e.parts[0], e.parts[1]};
    return {Elem{e.type.left(), Sel(e.whole, 0), {}},
            Elem{e.type.right(), Sel(e.whole, 1), {}}};
  }

  std::vector<std::string> LeafTerms(const Elem& e) {
    if (e.type.kind != TypeExpr::Kind::kProduct) return {Whole(e)};
    auto [l, r] = Split(e);
    std::vector<std::string> out = LeafTerms(l);
    for (std::string& s : LeafTerms(r)) out.push_back(std::move(s));
    return out;
  }

  std::string Whole(const Elem& e) {
    if (e.parts.empty()) return e.whole;
    const std::string a = Whole(e.parts[0]);
    const std::string b = Whole(e.parts[1]);
    return yices_ ? "(mk-tuple " + a + " " + b + ")" : "(" + a + ", " + b + ")";
  }

  static Elem Pair(const TypeExpr& type, Elem a, Elem b) {
    return Elem{type, "", {std::move(a), std::move(b)}};
  }

  // Bound variables ranging over elements of `t`: one per leaf for Yices,
  // one tuple-sorted variable for CVC3.
  std::pair<std::vector<Binder>, Elem> Pack(const TypeExpr& t, const std::string& single,
                                            bool avoid_globals = true) {
    if (!yices_) {
      const std::string name = Fresh(single, avoid_globals);
      return {{{name, IndexSort(t)}}, Elem{t, name, {}}};
    }
    const std::vector<TypeExpr> leaves = Leaves(t);
    std::vector<Binder> binders;
    for (size_t i = 0; i < leaves.size(); ++i) {
      const std::string base =
          leaves.size() == 1 ? single : std::string(1, static_cast<char>('a' + i % 26));
      binders.push_back({Fresh(base, avoid_globals), LeafSort(leaves[i])});
    }
    size_t next = 0;
    std::function<Elem(const TypeExpr&)> build = [&](const TypeExpr& u) -> Elem {
      if (u.kind == TypeExpr::Kind::kProduct) {
        Elem l = build(u.left());
        Elem r = build(u.right());
        return Pair(u, std::move(l), std::move(r));
      }
      return Elem{u, binders[next++].name, {}};
    };
    return {binders, build(t)};
  }

  // Membership test of element `x` in the characteristic map `f`.
  std::string MemberRead(const std::string& f, const Elem& x) {
    if (yices_) {
      std::string out = "(" + f;
      for (const std::string& l : LeafTerms(x)) out += " " + l;
      return out + ")";
    }
    return f + "[" + Whole(x) + "] = 0bin1";
  }

  std::string MapRead(const std::string& f, const Elem& x) {
    if (yices_) {
      std::string out = "(" + f;
      for (const std::string& l : LeafTerms(x)) out += " " + l;
      return out + ")";
    }
    return f + "[" + Whole(x) + "]";
  }

  std::string SetValue(const TypeExpr& elem, const std::function<std::string(const Elem&)>& member) {
    auto [binders, x] = Pack(elem, "x");
    const std::string body = member(x);
    if (yices_) return "(lambda " + Binders(binders) + " " + body + ")";
    return "(ARRAY " + Binders(binders) + ": " + Ite(body, "0bin1", "0bin0") + ")";
  }

  std::vector<std::string> NonnegGuards(const TypeExpr& declared, const Elem& x) {
    std::vector<std::string> out;
    if (declared.kind == TypeExpr::Kind::kNat) {
      out.push_back(Infix("<=", "0", Whole(x)));
    } else if (declared.kind == TypeExpr::Kind::kProduct) {
      auto [l, r] = Split(x);
      out = NonnegGuards(declared.left(), l);
      for (std::string& g : NonnegGuards(declared.right(), r)) out.push_back(std::move(g));
    }
    return out;
  }

  // ---- auxiliary definitions -------------------------------------------
  class SentenceScope {
   public:
    explicit SentenceScope(Emitter& e) : e_(e) { std::swap(saved_, e_.local_); }
    ~SentenceScope() { std::swap(saved_, e_.local_); }

   private:
    Emitter& e_;
    std::set<std::string> saved_;
  };

  void AddAux(const std::string& name, std::vector<std::string> sentences) {
    aux_names_.push_back(name);
    for (std::string& s : sentences) aux_.push_back(std::move(s));
  }

  std::string EnsureEmptyset(const TypeExpr& elem) {
    const std::string key = "emptyset" + Mangle(elem);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    SentenceScope scope(*this);
    const std::string name = Unique(key);
    memo_[key] = name;
    if (yices_) {
      auto [binders, x] = Pack(elem, "x", false);
      AddAux(name, {"(define " + name + "::" + CharSort(elem) + " (lambda " +
                    Binders(binders) + " false))"});
    } else {
      auto [binders, x] = Pack(elem, "y", false);
      AddAux(name, {name + ": " + CharSort(elem) + " = (ARRAY " + Binders(binders) +
                    ": 0bin0);"});
    }
    return name;
  }

  // cup, cap and setminus share the shape of the intersection rule.
  std::string EnsureSetOp(const std::string& op, const TypeExpr& elem) {
    const std::string key = op + Mangle(elem);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    SentenceScope scope(*this);
    const std::string name = Unique(key);
    memo_[key] = name;
    const std::string cs = CharSort(elem);
    local_.insert({"A", "B"});
    auto [binders, x] = Pack(elem, "x", false);
    const std::string a = MemberRead("A", x);
    const std::string b = MemberRead("B", x);
    std::string body;
    if (op == "cap") body = And({a, b});
    if (op == "cup") body = Or({a, b});
    if (op == "setminus") body = And({a, Not(b)});
    if (yices_) {
      AddAux(name, {"(define " + name + "::(-> " + cs + " " + cs + " " + cs +
                    ") (lambda (A::" + cs + " B::" + cs + ") (lambda " +
                    Binders(binders) + " " + body + ")))"});
    } else {
      AddAux(name, {name + ": (" + cs + ", " + cs + ") -> " + cs + ";",
                    "ASSERT FORALL (A, B: " + cs + "): " + name + "(A, B) = (ARRAY " +
                        Binders(binders) + ": " + Ite(body, "0bin1", "0bin0") + ");"});
    }
    return name;
  }

  std::string EnsureSubseteq(const TypeExpr& elem) {
    const std::string key = "subseteq" + Mangle(elem);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    SentenceScope scope(*this);
    const std::string name = Unique(key);
    memo_[key] = name;
    const std::string cs = CharSort(elem);
    local_.insert({"A", "B"});
    auto [binders, x] = Pack(elem, "x", false);
    const std::string body = Quant("forall", binders,
                                   Implies(MemberRead("A", x), MemberRead("B", x)));
    if (yices_) {
      AddAux(name, {"(define " + name + "::(-> " + cs + " " + cs + " bool) (lambda (A::" +
                    cs + " B::" + cs + ") " + body + "))"});
    } else {
      AddAux(name, {name + ": (" + cs + ", " + cs + ") -> BOOLEAN;",
                    "ASSERT FORALL (A, B: " + cs + "): " + name + "(A, B) <=> " + body + ";"});
    }
    return name;
  }

  // The characteristic map of the pairs of a function-like variable.
  std::string EnsureCoercion(const std::string& var) {
    const std::string key = "coerce:" + var;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    SentenceScope scope(*this);
    const std::string f = names_.at(var);
    const std::string name = Unique(f + "Set");
    memo_[key] = name;
    const TypeExpr& declared = ts_.DeclaredType(var);
    const Rep rep = Classify(declared);
    const TypeExpr elem = Normalize(declared).elem();
    auto [binders, x] = Pack(elem, "x");
    auto [xd, xc] = Split(x);
    std::vector<std::string> conj;
    if (rep == Rep::kFun) {
      conj = NonnegGuards(declared.left(), xd);
      conj.push_back(Eq(MapRead(f, xd), Whole(xc)));
    } else {
      if (rep == Rep::kSeq) conj.push_back(Infix("<=", "1", Whole(xd)));
      conj.push_back(MemberRead(Field(f, "dom"), xd));
      conj.push_back(Eq(MapRead(Field(f, "law"), xd), Whole(xc)));
    }
    const std::string body = And(conj);
    if (yices_) {
      AddAux(name, {"(define " + name + "::" + CharSort(elem) + " (lambda " +
                    Binders(binders) + " " + body + "))"});
    } else {
      AddAux(name, {name + ": " + CharSort(elem) + " = (ARRAY " + Binders(binders) + ": " +
                    Ite(body, "0bin1", "0bin0") + ");"});
    }
    return name;
  }

  // ---- expressions ----------------------------------------------------
  const TypeExpr& DeclaredOf(const Expr& var) { return ts_.DeclaredType(var.name); }

  std::string Literal(const Expr& e) {
    if (e.kind == Expr::Kind::kBasicLit) {
      if (variant_) {
        if (std::find(kVariantConstants.begin(), kVariantConstants.end(),
                      e.name.substr(e.annotation->name.size())) == kVariantConstants.end()) {
          FailPred("basic constant " + e.name + " is outside the three-value variant");
        }
        return e.name;
      }
      auto [it, inserted] = basic_literals_.try_emplace(e.name, "");
      if (inserted) {
        it->second = Unique(Sanitize(e.name));
        basic_literal_types_[e.name] = e.annotation->name;
        basic_literal_order_.push_back(e.name);
      }
      return it->second;
    }
    return e.name;
  }

  std::string Scalar(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::kVar:
        return names_.at(e.name);
      case Expr::Kind::kIntLit:
        return std::to_string(e.value);
      case Expr::Kind::kEnumLit:
      case Expr::Kind::kBasicLit:
        return Literal(e);
      case Expr::Kind::kTuple:
        return Whole(ElemOf(e));
      case Expr::Kind::kApply: {
        const Expr& f = e.lhs();
        const Rep rep = Classify(DeclaredOf(f));
        const std::string fn = names_.at(f.name);
        if (rep == Rep::kFun) return MapRead(fn, ElemOf(e.rhs()));
        return MapRead(Field(fn, "law"), ElemOf(e.rhs()));
      }
      case Expr::Kind::kCard:
        return Card(e.operands[0]);
      case Expr::Kind::kAdd:
        return Arith("+", Scalar(e.lhs()), Scalar(e.rhs()));
      case Expr::Kind::kSub:
        return Arith("-", Scalar(e.lhs()), Scalar(e.rhs()));
      case Expr::Kind::kMul:
        return Arith("*", Scalar(e.lhs()), Scalar(e.rhs()));
      default:
        FailPred("no embedding for expression " + ToString(e));
    }
  }

  std::string Card(const Expr& s) {
    if (s.kind == Expr::Kind::kVar) {
      const Rep rep = Classify(DeclaredOf(s));
      if (rep == Rep::kFinset || rep == Rep::kFfun || rep == Rep::kSeq) {
        return Field(names_.at(s.name), "card");
      }
    }
    if (s.kind == Expr::Kind::kRange) {
      const std::string lo = Scalar(s.lhs());
      const std::string hi = Scalar(s.rhs());
      return Ite(Infix("<=", lo, hi), Arith("+", Arith("-", hi, lo), "1"), "0");
    }
    if (s.kind == Expr::Kind::kEmptySet) return "0";
    if (s.kind == Expr::Kind::kSetExt) {
      try {
        return std::to_string(EvalExpr(s, Env{}).size());
      } catch (const EvalError&) {
        // Elements mention variables; their distinctness is not known.
      }
    }
    FailPred("no embedding for the cardinality of " + ToString(s));
  }

  Elem ElemOf(const Expr& e) {
    if (e.kind == Expr::Kind::kTuple) {
      return Pair(e.type(), ElemOf(e.lhs()), ElemOf(e.rhs()));
    }
    return Elem{e.type(), Scalar(e), {}};
  }

  SetTerm SetOf(const Expr& e) {
    const TypeExpr elem = e.type().elem();
    switch (e.kind) {
      case Expr::Kind::kVar: {
        const Rep rep = Classify(DeclaredOf(e));
        const std::string v = names_.at(e.name);
        if (rep == Rep::kSet || rep == Rep::kRel) {
          return {[this, v](const Elem& x) { return MemberRead(v, x); },
                  [v] { return v; }};
        }
        if (rep == Rep::kFinset) {
          const std::string s = Field(v, "set");
          return {[this, s](const Elem& x) { return MemberRead(s, x); },
                  [s] { return s; }};
        }
        if (IsFunctionRep(rep)) {
          const std::string name = EnsureCoercion(e.name);
          return {[this, name](const Elem& x) { return MemberRead(name, x); },
                  [name] { return name; }};
        }
        break;
      }
      case Expr::Kind::kSetExt: {
        std::vector<Elem> items;
        for (const Expr& op : e.operands) items.push_back(ElemOf(op));
        auto member = [this, items](const Elem& x) {
          std::vector<std::string> alts;
          for (const Elem& it : items) {
            if (!yices_) {
              alts.push_back(Eq(Whole(x), Whole(it)));
              continue;
            }
            const std::vector<std::string> xs = LeafTerms(x);
            const std::vector<std::string> ys = LeafTerms(it);
            std::vector<std::string> eqs;
            for (size_t i = 0; i < xs.size(); ++i) eqs.push_back(Eq(xs[i], ys[i]));
            alts.push_back(And(eqs));
          }
          return Or(alts);
        };
        return {member, [this, elem, member] { return SetValue(elem, member); }};
      }
      case Expr::Kind::kRange: {
        const std::string lo = Scalar(e.lhs());
        const std::string hi = Scalar(e.rhs());
        auto member = [this, lo, hi](const Elem& x) {
          return And({Infix("<=", lo, Whole(x)), Infix("<=", Whole(x), hi)});
        };
        return {member, [this, elem, member] { return SetValue(elem, member); }};
      }
      case Expr::Kind::kEmptySet:
        return {[this](const Elem&) { return False(); },
                [this, elem] { return EnsureEmptyset(elem); }};
      case Expr::Kind::kDom:
        return DomOf(e.operands[0], elem);
      case Expr::Kind::kRan: {
        const Expr& r = e.operands[0];
        const TypeExpr pair = r.type().elem();
        SetTerm inner = SetOf(r);
        auto member = [this, pair, inner](const Elem& y) {
          auto [binders, x] = Pack(pair.left(), "x");
          return Quant("exists", binders, inner.member(Pair(pair, x, y)));
        };
        return {member, [this, elem, member] { return SetValue(elem, member); }};
      }
      case Expr::Kind::kUnion:
      case Expr::Kind::kInter:
      case Expr::Kind::kDiff: {
        const std::string op = e.kind == Expr::Kind::kUnion   ? "cup"
                               : e.kind == Expr::Kind::kInter ? "cap"
                                                              : "setminus";
        const std::string a = SetOf(e.lhs()).value();
        const std::string b = SetOf(e.rhs()).value();
        const std::string name = EnsureSetOp(op, elem);
        const std::string v =
            yices_ ? "(" + name + " " + a + " " + b + ")" : name + "(" + a + ", " + b + ")";
        return {[this, v](const Elem& x) { return MemberRead(v, x); }, [v] { return v; }};
      }
      default:
        break;
    }
    FailPred("no embedding for set expression " + ToString(e));
  }

  SetTerm DomOf(const Expr& f, const TypeExpr& elem) {
    if (f.kind == Expr::Kind::kVar) {
      const TypeExpr& declared = DeclaredOf(f);
      const Rep rep = Classify(declared);
      const std::string v = names_.at(f.name);
      if (rep == Rep::kPfun || rep == Rep::kFfun) {
        const std::string d = Field(v, "dom");
        return {[this, d](const Elem& x) { return MemberRead(d, x); }, [d] { return d; }};
      }
      if (rep == Rep::kSeq) {
        const std::string d = Field(v, "dom");
        auto member = [this, d](const Elem& x) {
          return And({Infix("<=", "1", Whole(x)), MemberRead(d, x)});
        };
        return {member, [this, elem, member] { return SetValue(elem, member); }};
      }
      if (rep == Rep::kFun) {
        const TypeExpr dom = declared.left();
        auto member = [this, dom](const Elem& x) { return And(NonnegGuards(dom, x)); };
        return {member, [this, elem, member] { return SetValue(elem, member); }};
      }
    }
    const TypeExpr pair = f.type().elem();
    SetTerm inner = SetOf(f);
    auto member = [this, pair, inner](const Elem& x) {
      auto [binders, y] = Pack(pair.right(), "y");
      return Quant("exists", binders, inner.member(Pair(pair, x, y)));
    };
    return {member, [this, elem, member] { return SetValue(elem, member); }};
  }

  std::string PredTerm(const Pred& p) {
    switch (p.kind) {
      case Pred::Kind::kMemberOf:
        return SetOf(p.rhs).member(ElemOf(p.lhs));
      case Pred::Kind::kNotMemberOf:
        return Not(SetOf(p.rhs).member(ElemOf(p.lhs)));
      case Pred::Kind::kEqual:
      case Pred::Kind::kNotEqual: {
        std::string eq;
        if (p.lhs.type().is_power()) {
          const std::string a = SetOf(p.lhs).value();
          eq = Eq(a, SetOf(p.rhs).value());
        } else {
          eq = Eq(Scalar(p.lhs), Scalar(p.rhs));
        }
        return p.kind == Pred::Kind::kEqual ? eq : Not(eq);
      }
      case Pred::Kind::kSubsetEq:
      case Pred::Kind::kNotSubsetEq: {
        const std::string a = SetOf(p.lhs).value();
        const std::string b = SetOf(p.rhs).value();
        const std::string name = EnsureSubseteq(p.lhs.type().elem());
        const std::string call =
            yices_ ? "(" + name + " " + a + " " + b + ")" : name + "(" + a + ", " + b + ")";
        return p.kind == Pred::Kind::kSubsetEq ? call : Not(call);
      }
      case Pred::Kind::kLt:
        return Infix("<", Scalar(p.lhs), Scalar(p.rhs));
      case Pred::Kind::kLeq:
        return Infix("<=", Scalar(p.lhs), Scalar(p.rhs));
      case Pred::Kind::kGt:
        return Infix(">", Scalar(p.lhs), Scalar(p.rhs));
      case Pred::Kind::kGeq:
        return Infix(">=", Scalar(p.lhs), Scalar(p.rhs));
    }
    return {};
  }

  // ---- carrier axioms -------------------------------------------------
  void CarrierAxioms(const Decl& d, std::vector<std::string>& out) {
    const Rep rep = Classify(d.type);
    const std::string v = names_.at(d.name);
    // NAT components of characteristic maps are emitted as int.
    const TypeExpr* char_decl = nullptr;
    std::string char_map;
    TypeExpr rel_pair;
    switch (rep) {
      case Rep::kSet:
        char_decl = &d.type.elem();
        char_map = v;
        break;
      case Rep::kRel:
        rel_pair = TypeExpr::Product(d.type.left(), d.type.right());
        char_decl = &rel_pair;
        char_map = v;
        break;
      case Rep::kPfun:
      case Rep::kFfun:
        char_decl = &d.type.left();
        char_map = Field(v, "dom");
        break;
      case Rep::kFinset:
        char_decl = &d.type.elem();
        char_map = Field(v, "set");
        break;
      default:
        break;
    }
    if (char_decl != nullptr) {
      local_.clear();
      auto [binders, x] = Pack(Normalize(*char_decl), "x");
      std::vector<std::string> guards = NonnegGuards(*char_decl, x);
      if (!guards.empty()) {
        out.push_back(Assert(Quant("forall", binders,
                                   Implies(MemberRead(char_map, x), And(guards)))));
      }
    }
    if (rep == Rep::kFinset || rep == Rep::kFfun) {
      const std::string set = Field(v, rep == Rep::kFinset ? "set" : "dom");
      const std::string bij = Field(v, "bij");
      const std::string card = Field(v, "card");
      const TypeExpr elem = Normalize(rep == Rep::kFinset ? d.type.elem() : d.type.left());
      local_.clear();
      {
        auto [binders, x] = Pack(elem, "x");
        out.push_back(Assert(Quant(
            "forall", binders,
            Iff(MemberRead(set, x), Infix("<=", MapRead(bij, x), card)))));
      }
      local_.clear();
      const std::string n = Fresh("n");
      auto [b1, x1] = Pack(elem, "x1");
      // Yices packs of product elements reuse a, b, ...: the second copy
      // gets numbered names.
      auto [b2, x2] = Pack(elem, "x2");
      std::vector<Binder> binders{{n, Nat1()}};
      binders.insert(binders.end(), b1.begin(), b1.end());
      binders.insert(binders.end(), b2.begin(), b2.end());
      const std::string lhs =
          And({Infix("<=", n, card), MemberRead(set, x1), MemberRead(set, x2),
               Eq(MapRead(bij, x1), n), Eq(MapRead(bij, x2), n)});
      std::string rhs;
      if (yices_) {
        const std::vector<std::string> l1 = LeafTerms(x1);
        const std::vector<std::string> l2 = LeafTerms(x2);
        std::vector<std::string> eqs;
        for (size_t i = 0; i < l1.size(); ++i) eqs.push_back(Eq(l1[i], l2[i]));
        rhs = And(eqs);
      } else {
        rhs = Eq(Whole(x1), Whole(x2));
      }
      out.push_back(Assert(Quant("forall", binders, Implies(lhs, rhs))));
    }
    if (rep == Rep::kSeq) {
      local_.clear();
      const std::string n = Fresh("n");
      const std::string dom = Field(v, "dom");
      const std::string body =
          Iff(Infix("<=", n, Field(v, "card")),
              yices_ ? "(" + dom + " " + n + ")" : dom + "[" + n + "] = 0bin1");
      out.push_back(Assert(Quant("forall", {{n, Nat1()}}, body)));
    }
  }

  // ---- type declarations ----------------------------------------------
  void NoteType(const TypeExpr& t) {
    if (t.kind == TypeExpr::Kind::kBasic || t.kind == TypeExpr::Kind::kFree) {
      if (std::none_of(types_.begin(), types_.end(),
                       [&](const TypeExpr& u) { return u.name == t.name; })) {
        types_.push_back(t);
      }
    }
    for (const TypeExpr& a : t.args) NoteType(a);
  }

  void NoteTypes(const Expr& e) {
    if (e.kind == Expr::Kind::kEnumLit || e.kind == Expr::Kind::kBasicLit) {
      NoteType(*e.annotation);
    }
    if (e.checked_type != nullptr) NoteType(*e.checked_type);
    for (const Expr& op : e.operands) NoteTypes(op);
  }

  void Problem(const Unsupported& u, SourceLocation loc) {
    for (const auto& p : problems_) {
      if (p.message == u.message && p.loc.line == loc.line && p.loc.column == loc.column) return;
    }
    problems_.push_back({u.kind, u.message, loc});
  }

  static inline const std::vector<std::string> kVariantConstants = {"1", "2", "3"};

  const TypedSpec& ts_;
  Dialect d_;
  bool yices_;
  bool variant_;
  std::map<std::string, std::string, std::less<>> names_;
  std::set<std::string, std::less<>> globals_;
  std::set<std::string> local_;
  std::map<std::string, std::string> memo_;
  std::vector<std::string> aux_;
  std::vector<std::string> aux_names_;
  std::vector<TypeExpr> types_;
  std::map<std::string, std::string> basic_literals_;  // Z name -> emitted
  std::map<std::string, std::string> basic_literal_types_;
  std::vector<std::string> basic_literal_order_;
  bool need_nat_ = false;
  bool need_nat1_ = false;
  std::vector<EmitError::Problem> problems_;
};

SmtScript Emitter::Run() {
  const TestSpec& spec = ts_.spec;
  for (const Decl& d : spec.decls) NoteType(d.type);
  for (const Pred& p : spec.preds) {
    NoteTypes(p.lhs);
    NoteTypes(p.rhs);
  }
  for (const TypeExpr& t : types_) {
    globals_.insert(t.name);
    for (const std::string& c : t.constants) globals_.insert(c);
    if (t.kind == TypeExpr::Kind::kBasic && variant_) {
      for (const std::string& k : kVariantConstants) globals_.insert(t.name + k);
    }
  }
  globals_.insert({"nat1", "NAT", "NAT1"});

  SmtScript script;
  script.dialect = d_;
  script.variant = variant_;
  script.spec_name = spec.name;
  for (const Decl& d : spec.decls) {
    names_[d.name] = Unique(Sanitize(d.name));
    script.symbols.push_back({d.name, names_[d.name]});
  }

  std::vector<std::string> var_sents;
  for (const Decl& d : spec.decls) {
    try {
      const std::string sort = VarSort(d.type);
      const std::string& v = names_[d.name];
      var_sents.push_back(yices_ ? "(define " + v + "::" + sort + ")" : v + ": " + sort + ";");
    } catch (const Unsupported& u) {
      Problem(u, d.loc);
    }
  }
  std::vector<std::string> carrier;
  std::vector<std::string> carrier_vars;
  for (const Decl& d : spec.decls) {
    try {
      std::vector<std::string> axioms;
      CarrierAxioms(d, axioms);
      for (std::string& a : axioms) {
        carrier.push_back(std::move(a));
        carrier_vars.push_back(d.name);
      }
    } catch (const Unsupported& u) {
      Problem(u, d.loc);
    }
  }
  std::vector<std::string> preds;
  for (const Pred& p : spec.preds) {
    try {
      local_.clear();
      preds.push_back(Assert(PredTerm(p)));
    } catch (const Unsupported& u) {
      Problem(u, p.loc);
    } catch (const std::out_of_range&) {
      Problem(Unsupported{EmitError::Kind::kUnsupportedPredicate,
               "no embedding for predicate " + ToString(p)},
              p.loc);
    }
  }
  if (!problems_.empty()) throw EmitError(problems_);

  // Type declarations, now that NAT/NAT1 usage is known.
  std::vector<std::string> type_sents;
  if (yices_) {
    type_sents.push_back("(set-evidence! true)");
    if (need_nat1_) type_sents.push_back("(define-type nat1 (subtype (n::int) (< 0 n)))");
  } else {
    if (need_nat_) type_sents.push_back("NAT: TYPE = SUBTYPE(LAMBDA (x: INT): 0 <= x);");
    if (need_nat1_) type_sents.push_back("NAT1: TYPE = SUBTYPE(LAMBDA (x: INT): 1 <= x);");
  }
  for (const TypeExpr& t : types_) {
    std::vector<std::string> constants = t.constants;
    if (t.kind == TypeExpr::Kind::kBasic) {
      constants.clear();
      if (variant_) {
        for (const std::string& k : kVariantConstants) constants.push_back(t.name + k);
      }
    }
    if (constants.empty()) {
      type_sents.push_back(yices_ ? "(define-type " + t.name + ")" : t.name + ": TYPE;");
      continue;
    }
    std::string line;
    for (size_t i = 0; i < constants.size(); ++i) {
      line += (i == 0 ? "" : yices_ ? " " : " | ") + constants[i];
    }
    type_sents.push_back(yices_ ? "(define-type " + t.name + " (scalar " + line + "))"
                                : "DATATYPE " + t.name + " = " + line + " END;");
  }
  for (const std::string& lit : basic_literal_order_) {
    const std::string& emitted = basic_literals_[lit];
    const std::string& type = basic_literal_types_[lit];
    var_sents.push_back(yices_ ? "(define " + emitted + "::" + type + ")"
                               : emitted + ": " + type + ";");
    script.symbols.push_back({lit, emitted});
  }

  auto add = [&script](std::string s) { script.sentences.push_back(std::move(s)); };
  for (std::string& s : type_sents) add(std::move(s));
  for (std::string& s : var_sents) add(std::move(s));
  for (std::string& s : aux_) {
    if (s.rfind("ASSERT", 0) == 0) {
      script.asserts.push_back({script.sentences.size(), ScriptAssert::Origin::kDefinition, -1, {}});
    }
    add(std::move(s));
  }
  for (size_t i = 0; i < carrier.size(); ++i) {
    script.asserts.push_back(
        {script.sentences.size(), ScriptAssert::Origin::kCarrier, -1, carrier_vars[i]});
    add(std::move(carrier[i]));
  }
  for (size_t i = 0; i < preds.size(); ++i) {
    script.asserts.push_back(
        {script.sentences.size(), ScriptAssert::Origin::kPredicate, static_cast<int>(i), {}});
    add(std::move(preds[i]));
  }
  add(yices_ ? "(check)" : "CHECKSAT;");
  script.aux_defs = aux_names_;

  // Header: enough to rebuild the symbol table and candidate universe.
  for (const TypeExpr& t : types_) {
    std::vector<std::string> constants = t.constants;
    if (t.kind == TypeExpr::Kind::kBasic) {
      constants.clear();
      if (variant_) {
        for (const std::string& k : kVariantConstants) constants.push_back(t.name + k);
      } else {
        for (const std::string& lit : basic_literal_order_) {
          if (basic_literal_types_[lit] == t.name) constants.push_back(lit);
        }
      }
    }
    if (!constants.empty()) script.universe.emplace_back(t.name, constants);
  }
  std::function<void(const Expr&)> ints = [&](const Expr& e) {
    if (e.kind == Expr::Kind::kIntLit &&
        std::find(script.int_literals.begin(), script.int_literals.end(), e.value) ==
            script.int_literals.end()) {
      script.int_literals.push_back(e.value);
    }
    for (const Expr& op : e.operands) ints(op);
  };
  for (const Pred& p : spec.preds) {
    ints(p.lhs);
    ints(p.rhs);
  }
  script.header.push_back(std::string(kToolVersion));
  script.header.push_back("spec " + spec.name);
  script.header.push_back("dialect " + std::string(DialectName(d_)) + " variant " +
                          (variant_ ? "true" : "false"));
  for (const auto& [sort, constants] : script.universe) {
    std::string line = "universe " + sort;
    for (const std::string& c : constants) line += " " + c;
    script.header.push_back(line);
  }
  std::string int_line = "universe int";
  for (int64_t v : script.int_literals) int_line += " " + std::to_string(v);
  script.header.push_back(int_line);
  for (const ScriptSymbol& s : script.symbols) {
    script.header.push_back("symbol " + s.z_name + " " + s.emitted);
  }
  return script;
}

}  // namespace

SmtScript EmitScript(const TypedSpec& spec, Dialect dialect, bool variant) {
  return Emitter(spec, dialect, variant).Run();
}

SmtScript ReadScript(std::string_view text) {
  SmtScript script;
  std::istringstream in{std::string(text)};
  std::string line;
  bool dialect_seen = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::string body;
    if (line.rfind(";; ", 0) == 0) {
      body = line.substr(3);
    } else if (line.rfind("% ", 0) == 0) {
      body = line.substr(2);
    } else {
      const bool is_assert = line.rfind("(assert", 0) == 0 || line.rfind("ASSERT", 0) == 0;
      if (is_assert) {
        script.asserts.push_back({script.sentences.size(), ScriptAssert::Origin::kPredicate, -1, {}});
      }
      script.sentences.push_back(line);
      continue;
    }
    script.header.push_back(body);
    std::istringstream words(body);
    std::string key;
    words >> key;
    if (key == "spec") {
      words >> script.spec_name;
    } else if (key == "dialect") {
      std::string name, v, flag;
      words >> name >> v >> flag;
      std::optional<Dialect> d = ParseDialect(name);
      if (!d) throw SmtError(SmtError::Kind::kParseFailure, "unknown dialect " + name, lineno);
      script.dialect = *d;
      script.variant = flag == "true";
      dialect_seen = true;
    } else if (key == "universe") {
      std::string sort;
      words >> sort;
      std::vector<std::string> items;
      for (std::string w; words >> w;) items.push_back(w);
      if (sort == "int") {
        for (const std::string& w : items) script.int_literals.push_back(std::stoll(w));
      } else {
        script.universe.emplace_back(sort, items);
      }
    } else if (key == "symbol") {
      ScriptSymbol s;
      words >> s.z_name >> s.emitted;
      script.symbols.push_back(s);
    }
  }
  if (!dialect_seen) {
    throw SmtError(SmtError::Kind::kParseFailure, "script header lacks a dialect line");
  }
  return script;
}

}  // namespace ztc

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

#include "ztc/witness.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <regex>
#include <set>

#include <nlohmann/json.hpp>

#include "rep.h"
#include "smt_syntax.h"
#include "ztc/error.h"

namespace ztc {
namespace {

using smt::Term;

// ---------------------------------------------------------------------------
// Z values to solver values.

class Layout {
 public:
  Layout(const SmtScript& script) : yices_(script.dialect == Dialect::kYices) {}

  GValue Truth(bool b) const { return yices_ ? GValue::Bool(b) : GValue::Bits(b ? 1 : 0); }

  static GValue Whole(const Value& v) {
    switch (v.kind()) {
      case Value::Kind::kInt:
        return GValue::Int(v.as_int());
      case Value::Kind::kEnum:
      case Value::Kind::kBasic:
        return GValue::Const(v.name());
      case Value::Kind::kTuple:
        return GValue::Tuple({Whole(v.first()), Whole(v.second())});
      case Value::Kind::kSet:
        break;
    }
    throw std::logic_error("set values have no scalar image");
  }

  // Arguments of a map indexed by elements of `type`.
  std::vector<GValue> Key(const Value& v, const TypeExpr& type) const {
    if (!yices_) return {Whole(v)};
    std::vector<GValue> out;
    Flatten(v, type, out);
    return out;
  }

  std::vector<Sort> KeySorts(const TypeExpr& type) const {
    TypeExpr t = Normalize(type);
    if (!yices_) return {IndexSort(t)};
    std::vector<Sort> out;
    FlattenSorts(t, out);
    return out;
  }

  Sort SeqIndexSort() const { return Sort::Named(yices_ ? "nat1" : "NAT1"); }

  std::vector<Sort> SeqKey() const { return {SeqIndexSort()}; }

 private:
  static void Flatten(const Value& v, const TypeExpr& type, std::vector<GValue>& out) {
    if (type.kind == TypeExpr::Kind::kProduct) {
      Flatten(v.first(), type.left(), out);
      Flatten(v.second(), type.right(), out);
      return;
    }
    out.push_back(Whole(v));
  }

  static Sort LeafSort(const TypeExpr& t) {
    if (t.is_int()) return Sort::Int();
    return Sort::Named(t.name);
  }

  static Sort IndexSort(const TypeExpr& t) {
    if (t.kind == TypeExpr::Kind::kProduct) {
      return Sort::Tuple({IndexSort(t.left()), IndexSort(t.right())});
    }
    return LeafSort(t);
  }

  static void FlattenSorts(const TypeExpr& t, std::vector<Sort>& out) {
    if (t.kind == TypeExpr::Kind::kProduct) {
      FlattenSorts(t.left(), out);
      FlattenSorts(t.right(), out);
      return;
    }
    out.push_back(LeafSort(t));
  }

  bool yices_;
};

void CollectBasic(const Value& v, std::map<std::string, std::set<Value>>& out) {
  if (v.kind() == Value::Kind::kBasic) out[v.type_name()].insert(v);
  for (const auto& item : v.items()) CollectBasic(item, out);
}

void BasicTypes(const TypeExpr& t, std::set<std::string>& out) {
  if (t.kind == TypeExpr::Kind::kBasic) out.insert(t.name);
  for (const auto& a : t.args) BasicTypes(a, out);
}

GValue DefaultScalar(const TypeExpr& t, const std::map<std::string, std::vector<GValue>>& carriers) {
  switch (t.kind) {
    case TypeExpr::Kind::kInt:
    case TypeExpr::Kind::kNat:
      return GValue::Int(0);
    case TypeExpr::Kind::kFree:
      return GValue::Const(t.constants.at(0));
    case TypeExpr::Kind::kBasic: {
      auto it = carriers.find(t.name);
      if (it != carriers.end() && !it->second.empty()) return it->second.front();
      return GValue::Const(t.name + "1");
    }
    case TypeExpr::Kind::kProduct:
      return GValue::Tuple({DefaultScalar(t.left(), carriers), DefaultScalar(t.right(), carriers)});
    default:
      break;
  }
  throw std::logic_error("no scalar default for " + ToString(t));
}

// ---------------------------------------------------------------------------
// Solver values to Z values.

[[noreturn]] void Bad(ReconstructError::Kind kind, const std::string& message) {
  throw ReconstructError(kind, message);
}

bool IsTrue(const GValue& g, const std::string& what) {
  if (g.kind() == GValue::Kind::kBool || g.kind() == GValue::Kind::kBits) return g.as_bool();
  Bad(ReconstructError::Kind::kMalformed, "membership value of " + what + " is " + ToString(g));
}

Value FromG(const GValue& g, const TypeExpr& t, const std::string& what) {
  switch (t.kind) {
    case TypeExpr::Kind::kInt:
    case TypeExpr::Kind::kNat:
      if (g.kind() != GValue::Kind::kInt) {
        Bad(ReconstructError::Kind::kMalformed, what + " expects an integer, got " + ToString(g));
      }
      if (t.kind == TypeExpr::Kind::kNat && g.as_int() < 0) {
        Bad(ReconstructError::Kind::kNegativeNat,
            what + " is declared NAT but the model gives " + ToString(g));
      }
      return Value::Int(g.as_int());
    case TypeExpr::Kind::kFree: {
      if (g.kind() == GValue::Kind::kConst) {
        auto it = std::find(t.constants.begin(), t.constants.end(), g.name());
        if (it != t.constants.end()) {
          return Value::Enum(t.name, g.name(), static_cast<int>(it - t.constants.begin()));
        }
      }
      Bad(ReconstructError::Kind::kMalformed, what + ": " + ToString(g) + " is not a constant of " + t.name);
    }
    case TypeExpr::Kind::kBasic:
      if (g.kind() != GValue::Kind::kConst) {
        Bad(ReconstructError::Kind::kMalformed, what + " expects a " + t.name + " element, got " + ToString(g));
      }
      return Value::Basic(t.name, g.name());
    case TypeExpr::Kind::kProduct:
      if (g.kind() != GValue::Kind::kTuple || g.items().size() != 2) {
        Bad(ReconstructError::Kind::kMalformed, what + " expects a pair, got " + ToString(g));
      }
      return Value::Tuple(FromG(g.items()[0], t.left(), what), FromG(g.items()[1], t.right(), what));
    default:
      break;
  }
  Bad(ReconstructError::Kind::kMalformed, what + " has no scalar reading");
}

Value FromLeaves(const std::vector<GValue>& args, size_t& pos, const TypeExpr& t,
                 const std::string& what) {
  if (t.kind == TypeExpr::Kind::kProduct) {
    Value l = FromLeaves(args, pos, t.left(), what);
    Value r = FromLeaves(args, pos, t.right(), what);
    return Value::Tuple(std::move(l), std::move(r));
  }
  if (pos >= args.size()) Bad(ReconstructError::Kind::kMalformed, what + ": too few arguments");
  return FromG(args[pos++], t, what);
}

// Element of type `t` from the argument list of one model point.
Value FromKey(const std::vector<GValue>& args, const TypeExpr& t, const std::string& what) {
  std::vector<GValue> flat;
  std::function<void(const GValue&)> push = [&](const GValue& g) {
    if (g.kind() == GValue::Kind::kTuple) {
      for (const auto& i : g.items()) push(i);
    } else {
      flat.push_back(g);
    }
  };
  for (const auto& a : args) push(a);
  size_t pos = 0;
  Value v = FromLeaves(flat, pos, t, what);
  if (pos != flat.size()) Bad(ReconstructError::Kind::kMalformed, what + ": too many arguments");
  return v;
}

std::vector<Value> AllConstants(const TypeExpr& t) {
  if (t.kind == TypeExpr::Kind::kFree) {
    std::vector<Value> out;
    for (size_t i = 0; i < t.constants.size(); ++i) {
      out.push_back(Value::Enum(t.name, t.constants[i], static_cast<int>(i)));
    }
    return out;
  }
  if (t.kind == TypeExpr::Kind::kProduct) {
    std::vector<Value> out;
    auto ls = AllConstants(t.left());
    auto rs = AllConstants(t.right());
    for (const auto& l : ls) {
      for (const auto& r : rs) out.push_back(Value::Tuple(l, r));
    }
    return out;
  }
  return {};
}

bool Enumerable(const TypeExpr& t) {
  if (t.kind == TypeExpr::Kind::kFree) return true;
  if (t.kind == TypeExpr::Kind::kProduct) return Enumerable(t.left()) && Enumerable(t.right());
  return false;
}

class Rebuilder {
 public:
  Rebuilder(const SolverOutput& out, const SmtScript& script) : out_(out), script_(script) {}

  // Default values of function-valued bindings, by variable.
  const std::map<std::string, std::string>& defaults() const { return defaults_; }

  const ModelBinding& Need(const std::string& key, const std::string& var) const {
    auto it = out_.bindings.find(key);
    if (it == out_.bindings.end()) {
      Bad(ReconstructError::Kind::kMissingBinding, "the model has no value for " + var + " (" + key + ")");
    }
    return it->second;
  }

  const ModelBinding* Find(const std::string& key) const {
    auto it = out_.bindings.find(key);
    return it == out_.bindings.end() ? nullptr : &it->second;
  }

  // Members of a characteristic function over `elem`. Solvers print only
  // the points where it holds, so an absent function is the empty set.
  std::set<Value> Members(const ModelBinding* found, const TypeExpr& elem, const std::string& var) const {
    std::set<Value> in, out;
    if (!found) return in;
    const ModelBinding& b = *found;
    for (const auto& [args, v] : b.points) {
      Value e = FromKey(args, elem, var);
      (IsTrue(v, var) ? in : out).insert(e);
    }
    if (b.fallback && IsTrue(*b.fallback, var)) {
      if (!Enumerable(elem)) {
        Bad(ReconstructError::Kind::kMalformed, var + " is described as an infinite set");
      }
      for (auto& e : AllConstants(elem)) {
        if (!out.count(e)) in.insert(e);
      }
    }
    if (b.scalar) Bad(ReconstructError::Kind::kMalformed, var + " should be a set, not " + ToString(*b.scalar));
    return in;
  }

  Value Lookup(const ModelBinding& b, const Value& key, const TypeExpr& key_type,
               const TypeExpr& cod, const std::string& var) const {
    for (const auto& [args, v] : b.points) {
      if (FromKey(args, key_type, var) == key) return FromG(v, cod, var);
    }
    if (b.fallback) return FromG(*b.fallback, cod, var);
    Bad(ReconstructError::Kind::kMissingBinding, var + " has no value at " + ToString(key));
  }

  int64_t Card(const std::string& key, const std::string& var) const {
    const ModelBinding& b = Need(key, var);
    if (!b.scalar || b.scalar->kind() != GValue::Kind::kInt) {
      Bad(ReconstructError::Kind::kMalformed, "cardinality of " + var + " is not an integer");
    }
    if (b.scalar->as_int() < 0) {
      Bad(ReconstructError::Kind::kNegativeNat, "cardinality of " + var + " is negative");
    }
    return b.scalar->as_int();
  }

  Value Rebuild(const std::string& var, const std::string& sym, const TypeExpr& t) const {
    switch (Classify(t)) {
      case Rep::kScalar: {
        const ModelBinding& b = Need(sym, var);
        if (!b.scalar) Bad(ReconstructError::Kind::kMalformed, var + " should be a scalar");
        return FromG(*b.scalar, t, var);
      }
      case Rep::kSet: {
        auto m = Members(Find(sym), t.elem(), var);
        return Value::Set({m.begin(), m.end()});
      }
      case Rep::kRel: {
        auto m = Members(Find(sym), TypeExpr::Product(t.left(), t.right()), var);
        return Value::Set({m.begin(), m.end()});
      }
      case Rep::kFun: {
        const ModelBinding& b = Need(sym, var);
        std::set<Value> dom;
        for (const auto& [args, v] : b.points) dom.insert(FromKey(args, t.left(), var));
        if (Enumerable(t.left())) {
          for (auto& k : AllConstants(t.left())) {
            if (!dom.count(k) && !b.fallback) {
              Bad(ReconstructError::Kind::kMissingBinding, var + " has no value at " + ToString(k));
            }
            dom.insert(k);
          }
        } else if (b.fallback && t.left().kind == TypeExpr::Kind::kBasic) {
          // The default covers the constants the script itself knows about.
          for (const auto& [sort, consts] : script_.universe) {
            if (sort != t.left().name) continue;
            for (const auto& k : consts) dom.insert(Value::Basic(sort, k));
          }
        }
        return Pairs(b, dom, t, var);
      }
      case Rep::kPfun:
      case Rep::kFfun: {
        auto dom = Members(Find(sym + ".dom"), t.left(), var);
        Value f = dom.empty() ? Value::Set({}) : Pairs(Need(sym + ".law", var), dom, t, var);
        if (Classify(t) == Rep::kFfun) {
          int64_t card = Card(sym + ".card", var);
          if (card != static_cast<int64_t>(dom.size())) {
            Bad(ReconstructError::Kind::kCardMismatch,
                var + " has " + std::to_string(dom.size()) + " pairs but card " + std::to_string(card));
          }
        }
        return f;
      }
      case Rep::kFinset: {
        auto m = Members(Find(sym + ".set"), t.elem(), var);
        int64_t card = Card(sym + ".card", var);
        if (card != static_cast<int64_t>(m.size())) {
          Bad(ReconstructError::Kind::kCardMismatch,
              var + " has " + std::to_string(m.size()) + " members but card " + std::to_string(card));
        }
        return Value::Set({m.begin(), m.end()});
      }
      case Rep::kSeq: {
        int64_t n = Card(sym + ".card", var);
        if (const ModelBinding* d = Find(sym + ".dom")) {
          auto idx = Members(d, TypeExpr::Int(), var);
          std::set<Value> expect;
          for (int64_t i = 1; i <= n; ++i) expect.insert(Value::Int(i));
          if (idx != expect) {
            Bad(ReconstructError::Kind::kCardMismatch,
                var + " has card " + std::to_string(n) + " but its domain is not 1.." + std::to_string(n));
          }
        }
        const ModelBinding& law = Need(sym + ".law", var);
        std::vector<Value> pairs;
        for (int64_t i = 1; i <= n; ++i) {
          Value k = Value::Int(i);
          pairs.push_back(Value::Tuple(k, Lookup(law, k, TypeExpr::Int(), t.elem(), var)));
        }
        return Value::Set(std::move(pairs));
      }
    }
    Bad(ReconstructError::Kind::kMalformed, "unknown layout for " + var);
  }

 private:
  Value Pairs(const ModelBinding& law, const std::set<Value>& dom, const TypeExpr& t,
              const std::string& var) const {
    if (law.fallback) defaults_[var] = ToString(*law.fallback);
    std::vector<Value> pairs;
    for (const auto& k : dom) pairs.push_back(Value::Tuple(k, Lookup(law, k, t.left(), t.right(), var)));
    return Value::Set(std::move(pairs));
  }

  const SolverOutput& out_;
  const SmtScript& script_;
  mutable std::map<std::string, std::string> defaults_;
};

// ---------------------------------------------------------------------------
// Model text.

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::optional<SolverOutput::Status> ReadStatus(std::string line) {
  for (auto& c : line) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (!line.empty() && line.back() == '.') line.pop_back();
  if (line == "sat" || line == "satisfiable") return SolverOutput::Status::kSat;
  if (line == "unsat" || line == "unsatisfiable") return SolverOutput::Status::kUnsat;
  if (line == "unknown") return SolverOutput::Status::kUnknown;
  return std::nullopt;
}

GValue Literal(const Term& t, int line) {
  switch (t.kind) {
    case Term::Kind::kInt:
      return GValue::Int(t.value);
    case Term::Kind::kBool:
      return GValue::Bool(t.value != 0);
    case Term::Kind::kBits:
      return GValue::Bits(static_cast<int>(t.value));
    case Term::Kind::kSym:
      return GValue::Const(t.name);
    case Term::Kind::kTuple: {
      std::vector<GValue> items;
      for (const auto& a : t.args) items.push_back(Literal(a, line));
      return GValue::Tuple(std::move(items));
    }
    case Term::Kind::kOp:
      if (t.name == "neg" && t.args.size() == 1 && t.args[0].kind == Term::Kind::kInt) {
        return GValue::Int(-t.args[0].value);
      }
      break;
    default:
      break;
  }
  throw SmtError(SmtError::Kind::kParseFailure, "unsupported model value", line);
}

std::vector<GValue> Args(const std::vector<Term>& terms, size_t from, int line) {
  std::vector<GValue> out;
  for (size_t i = from; i < terms.size(); ++i) out.push_back(Literal(terms[i], line));
  return out;
}

class OutputReader {
 public:
  OutputReader(const SmtScript& script, SolverOutput& out) : script_(script), out_(out) {}

  void Assignment(const Term& t, int line) {
    if (t.kind != Term::Kind::kOp || t.name != "=" || t.args.size() != 2) {
      throw SmtError(SmtError::Kind::kParseFailure, "expected an assignment '(= name value)'", line);
    }
    const Term& lhs = t.args[0];
    const Term& rhs = t.args[1];
    std::string key;
    std::vector<GValue> args;
    if (lhs.kind == Term::Kind::kApp) {
      key = Name(lhs.args[0], line);
      args = Args(lhs.args, 1, line);
      // CVC3 reads a tuple-indexed array with one tuple argument.
      if (args.size() == 1 && args[0].kind() == GValue::Kind::kTuple) args = Flat(args[0]);
    } else {
      key = Name(lhs, line);
    }
    ModelBinding& b = out_.bindings[key];
    if (!args.empty()) {
      b.points.emplace_back(std::move(args), Literal(rhs, line));
      return;
    }
    if (rhs.kind == Term::Kind::kLambda || rhs.kind == Term::Kind::kUpdate) {
      Array(rhs, b, line);
      return;
    }
    b.scalar = Literal(rhs, line);
  }

 private:
  static std::vector<GValue> Flat(const GValue& g) {
    std::vector<GValue> out;
    std::function<void(const GValue&)> push = [&](const GValue& v) {
      if (v.kind() == GValue::Kind::kTuple) {
        for (const auto& i : v.items()) push(i);
      } else {
        out.push_back(v);
      }
    };
    push(g);
    return out;
  }

  // (ARRAY (x: T): c) WITH [i] := v, ...
  void Array(const Term& t, ModelBinding& b, int line) {
    if (t.kind == Term::Kind::kUpdate) {
      Array(t.args[0], b, line);
      GValue index = Literal(t.args[1], line);
      b.points.emplace_back(Flat(index), Literal(t.args[2], line));
      return;
    }
    if (t.kind == Term::Kind::kLambda) {
      b.fallback = Literal(t.args[0], line);
      return;
    }
    throw SmtError(SmtError::Kind::kParseFailure, "unsupported array value", line);
  }

  std::string Name(const Term& t, int line) const {
    if (t.kind == Term::Kind::kSym) return Resolve(t.name);
    if (t.kind == Term::Kind::kField && t.args[0].kind == Term::Kind::kSym) {
      return t.args[0].name + "." + t.name;
    }
    throw SmtError(SmtError::Kind::kParseFailure, "unsupported left-hand side", line);
  }

  // Yices prints record components of `ot` as `ot_dom` and the like.
  std::string Resolve(const std::string& name) const {
    if (script_.FindEmitted(name)) return name;
    static const std::set<std::string> kFields = {"dom", "law", "bij", "card", "set"};
    for (size_t at = name.rfind('_'); at != std::string::npos && at > 0; at = name.rfind('_', at - 1)) {
      std::string prefix = name.substr(0, at);
      std::string suffix = name.substr(at + 1);
      if (kFields.count(suffix) && script_.FindEmitted(prefix)) return prefix + "." + suffix;
      if (at == 0) break;
    }
    return name;
  }

  const SmtScript& script_;
  SolverOutput& out_;
};

std::string TestCaseName(const std::string& spec) {
  static const std::regex kNumbered("^(.*)_(SP|NR)_([0-9]+)$");
  std::smatch m;
  if (std::regex_match(spec, m, kNumbered)) return m[1].str() + "_TC_" + m[3].str();
  return spec + "_TC";
}

}  // namespace

SmtModel TranslateEnv(const TypedSpec& spec, const Env& env, const SmtScript& script,
                      const Universe* universe) {
  Layout layout(script);
  SmtModel model;

  std::set<std::string> basic_types;
  for (const auto& d : spec.spec.decls) BasicTypes(d.type, basic_types);
  std::map<std::string, std::set<Value>> seen;
  for (const auto& [name, v] : env) CollectBasic(v, seen);
  if (universe) {
    for (const auto& [type, values] : universe->basic) {
      for (const auto& v : values) seen[type].insert(v);
    }
  }
  for (const auto& sym : script.symbols) {
    if (!env.count(sym.z_name)) {
      for (const auto& t : basic_types) {
        if (sym.z_name.rfind(t, 0) == 0) seen[t].insert(Value::Basic(t, sym.z_name));
      }
    }
  }
  for (const auto& t : basic_types) {
    auto& carrier = model.carriers[t];
    for (const auto& v : seen[t]) carrier.push_back(GValue::Const(v.name()));
  }

  for (const auto& sym : script.symbols) {
    auto it = env.find(sym.z_name);
    if (it == env.end()) {
      model.symbols[sym.emitted] = GValue::Const(sym.z_name);  // basic-type literal
      continue;
    }
    const Value& v = it->second;
    const TypeExpr& t = spec.DeclaredType(sym.z_name);
    auto char_map = [&](const std::vector<Value>& elems, const TypeExpr& elem) {
      auto table = std::make_shared<GTable>(layout.KeySorts(elem), layout.Truth(false));
      for (const auto& e : elems) table->Set(layout.Key(e, elem), layout.Truth(true));
      return GValue::Function(std::move(table));
    };
    auto law = [&](const TypeExpr& dom, const TypeExpr& cod) {
      auto table = std::make_shared<GTable>(layout.KeySorts(dom), DefaultScalar(cod, model.carriers));
      for (const auto& p : v.items()) table->Set(layout.Key(p.first(), dom), Layout::Whole(p.second()));
      return GValue::Function(std::move(table));
    };
    auto bij = [&](const std::vector<Value>& elems, const TypeExpr& elem) {
      auto table = std::make_shared<GTable>(layout.KeySorts(elem),
                                            GValue::Int(static_cast<int64_t>(elems.size()) + 1));
      int64_t k = 1;
      for (const auto& e : elems) table->Set(layout.Key(e, elem), GValue::Int(k++));
      return GValue::Function(std::move(table));
    };
    std::vector<Value> dom;
    for (const auto& p : v.items()) {
      if (p.kind() == Value::Kind::kTuple) dom.push_back(p.first());
    }

    GValue g;
    switch (Classify(t)) {
      case Rep::kScalar:
        g = Layout::Whole(v);
        break;
      case Rep::kSet:
        g = char_map(v.items(), t.elem());
        break;
      case Rep::kRel:
        g = char_map(v.items(), TypeExpr::Product(t.left(), t.right()));
        break;
      case Rep::kFun:
        g = law(t.left(), t.right());
        break;
      case Rep::kPfun:
        g = GValue::Record({{"dom", char_map(dom, t.left())}, {"law", law(t.left(), t.right())}});
        break;
      case Rep::kFfun:
        g = GValue::Record({{"dom", char_map(dom, t.left())},
                            {"law", law(t.left(), t.right())},
                            {"bij", bij(dom, t.left())},
                            {"card", GValue::Int(static_cast<int64_t>(dom.size()))}});
        break;
      case Rep::kFinset:
        g = GValue::Record({{"set", char_map(v.items(), t.elem())},
                            {"bij", bij(v.items(), t.elem())},
                            {"card", GValue::Int(static_cast<int64_t>(v.size()))}});
        break;
      case Rep::kSeq: {
        auto d = std::make_shared<GTable>(layout.SeqKey(), layout.Truth(false));
        auto l = std::make_shared<GTable>(layout.SeqKey(), DefaultScalar(t.elem(), model.carriers));
        for (const auto& p : v.items()) {
          d->Set({Layout::Whole(p.first())}, layout.Truth(true));
          l->Set({Layout::Whole(p.first())}, Layout::Whole(p.second()));
        }
        g = GValue::Record({{"dom", GValue::Function(d)},
                            {"law", GValue::Function(l)},
                            {"card", GValue::Int(static_cast<int64_t>(v.size()))}});
        break;
      }
    }
    model.symbols[sym.emitted] = std::move(g);
  }
  return model;
}

std::string_view StatusName(SolverOutput::Status s) {
  switch (s) {
    case SolverOutput::Status::kSat:
      return "sat";
    case SolverOutput::Status::kUnknown:
      return "unknown";
    case SolverOutput::Status::kUnsat:
      return "unsat";
    case SolverOutput::Status::kParseFailure:
      return "parse-failure";
  }
  return "?";
}

SolverOutput ParseOutput(std::string_view text, const SmtScript& script) {
  SolverOutput out;
  std::vector<std::string> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(std::string(text.substr(start, end - start)));
    start = end + 1;
  }
  auto fail = [&](const std::string& message, int line) {
    out.status = SolverOutput::Status::kParseFailure;
    out.error = message;
    out.error_line = line;
    out.bindings.clear();
    return out;
  };

  size_t i = 0;
  std::optional<SolverOutput::Status> status;
  for (; i < lines.size(); ++i) {
    std::string line = Trim(lines[i]);
    if (line.empty()) continue;
    status = ReadStatus(line);
    if (!status) return fail("expected a solver status, found '" + line + "'", static_cast<int>(i) + 1);
    ++i;
    break;
  }
  if (!status) return fail("empty solver output", 0);
  out.status = *status;
  if (out.status == SolverOutput::Status::kUnsat) return out;

  OutputReader reader(script, out);
  bool yices = script.dialect == Dialect::kYices;
  std::string pending;
  int pending_line = 0;
  for (; i < lines.size(); ++i) {
    std::string line = Trim(lines[i]);
    if (pending.empty()) {
      if (line.empty() || line[0] == ';' || line[0] == '%') continue;
      if (!yices && line.rfind("ASSERT", 0) != 0) {
        // CVC3 may echo other text, such as a trailing status; skip it.
        if (ReadStatus(line)) continue;
        return fail("expected 'ASSERT (name = value);', found '" + line + "'", static_cast<int>(i) + 1);
      }
      pending_line = static_cast<int>(i) + 1;
    }
    pending += (pending.empty() ? "" : " ") + line;
    bool complete = false;
    if (yices) {
      int depth = 0;
      for (char c : pending) depth += c == '(' ? 1 : c == ')' ? -1 : 0;
      complete = depth <= 0;
    } else {
      complete = !pending.empty() && pending.back() == ';';
    }
    if (!complete) continue;
    try {
      if (yices) {
        reader.Assignment(smt::ParseYicesTerm(pending, pending_line), pending_line);
      } else {
        smt::Command c = smt::ParseCvc3Command(pending, pending_line);
        if (c.kind != smt::Command::Kind::kAssert) {
          throw SmtError(SmtError::Kind::kParseFailure, "expected ASSERT", pending_line);
        }
        reader.Assignment(*c.term, pending_line);
      }
    } catch (const SmtError& e) {
      return fail(e.message(), pending_line);
    }
    pending.clear();
  }
  if (!pending.empty()) return fail("incomplete model line", pending_line);
  return out;
}

std::string_view OriginName(Witness::Origin o) {
  switch (o) {
    case Witness::Origin::kSearch:
      return "search";
    case Witness::Origin::kSolverModel:
      return "solver-model";
    case Witness::Origin::kSolverPotential:
      return "solver-potential";
  }
  return "?";
}

Witness Reconstruct(const SolverOutput& out, const TypedSpec& spec, const SmtScript& script) {
  if (out.status == SolverOutput::Status::kUnsat) {
    throw ReconstructError(ReconstructError::Kind::kMalformed, "an unsat answer has no model");
  }
  if (out.status == SolverOutput::Status::kParseFailure) {
    throw ReconstructError(ReconstructError::Kind::kMalformed, "solver output did not parse: " + out.error);
  }
  Witness w;
  w.spec = spec.spec.name;
  w.origin = out.status == SolverOutput::Status::kSat ? Witness::Origin::kSolverModel
                                                      : Witness::Origin::kSolverPotential;
  Rebuilder rebuild(out, script);
  for (const auto& d : spec.spec.decls) {
    const ScriptSymbol* sym = script.FindZ(d.name);
    if (!sym) {
      throw ReconstructError(ReconstructError::Kind::kMissingBinding,
                             "the script declares no symbol for " + d.name);
    }
    w.env[d.name] = rebuild.Rebuild(d.name, sym->emitted, d.type);
    w.order.push_back(d.name);
  }
  w.defaults = rebuild.defaults();
  Universe universe;
  std::map<std::string, std::set<Value>> seen;
  for (const auto& [name, v] : w.env) CollectBasic(v, seen);
  for (const auto& [sort, consts] : script.universe) {
    for (const auto& k : consts) seen[sort].insert(Value::Basic(sort, k));
  }
  std::set<std::string> basic_types;
  for (const auto& d : spec.spec.decls) BasicTypes(d.type, basic_types);
  for (const auto& t : basic_types) universe.basic[t] = {seen[t].begin(), seen[t].end()};
  w.verdict = CheckSpec(spec, w.env, &universe);
  return w;
}

Witness FromSearch(const TypedSpec& spec, const SearchResult& result) {
  Witness w;
  w.spec = spec.spec.name;
  w.origin = Witness::Origin::kSearch;
  w.env = result.witness;
  for (const auto& d : spec.spec.decls) {
    if (w.env.count(d.name)) w.order.push_back(d.name);
  }
  w.verdict = CheckSpec(spec, w.env, &result.universe);
  return w;
}

std::string ToJson(const Witness& w) {
  nlohmann::ordered_json j;
  j["spec"] = w.spec;
  j["origin"] = std::string(OriginName(w.origin));
  j["status"] = w.origin == Witness::Origin::kSearch            ? "witness"
                : w.origin == Witness::Origin::kSolverModel ? "sat"
                                                            : "unknown";
  nlohmann::ordered_json bindings = nlohmann::ordered_json::object();
  for (const auto& name : w.order) bindings[name] = ToString(w.env.at(name));
  j["bindings"] = bindings;
  if (!w.defaults.empty()) {
    nlohmann::ordered_json defaults = nlohmann::ordered_json::object();
    for (const auto& [name, text] : w.defaults) defaults[name] = text;
    j["defaults"] = defaults;
  }
  j["verified"] = w.confirmed();
  j["verdict"] = w.verdict.ToString();
  return j.dump(2);
}

std::string TestCaseBlock(const Witness& w) {
  std::string out = "spec " + TestCaseName(w.spec) + " {\n  " + w.spec + "\n";
  if (!w.order.empty()) out += "|\n";
  for (size_t i = 0; i < w.order.size(); ++i) {
    out += "  " + w.order[i] + " = " + ToString(w.env.at(w.order[i]));
    out += i + 1 < w.order.size() ? ";\n" : "\n";
  }
  return out + "}\n";
}

std::optional<TestCase> AsTestCase(const SourceFile& file, std::string_view name) {
  const TestSpec* spec = file.Find(name);
  if (!spec || spec->includes.size() != 1 || !spec->decls.empty() || spec->preds.empty()) {
    return std::nullopt;
  }
  TypedSpec typed = Typecheck(file.Flatten(name));
  size_t own = spec->preds.size();
  TestCase tc;
  tc.target = spec->includes[0];
  for (size_t i = typed.spec.preds.size() - own; i < typed.spec.preds.size(); ++i) {
    const Pred& p = typed.spec.preds[i];
    if (p.kind != Pred::Kind::kEqual || p.lhs.kind != Expr::Kind::kVar || tc.env.count(p.lhs.name)) {
      return std::nullopt;
    }
    try {
      tc.env[p.lhs.name] = EvalExpr(p.rhs, Env{});
    } catch (const EvalError&) {
      return std::nullopt;
    }
  }
  for (const auto& d : typed.spec.decls) {
    if (!tc.env.count(d.name)) return std::nullopt;
  }
  return tc;
}

}  // namespace ztc

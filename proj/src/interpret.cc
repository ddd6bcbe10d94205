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

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "smt_syntax.h"
#include "ztc/error.h"
#include "ztc/smt.h"

namespace ztc {

Sort Sort::Func(std::vector<Sort> args, Sort result) {
  Sort s;
  s.kind = Kind::kFunc;
  s.items = std::move(args);
  s.items.push_back(std::move(result));
  return s;
}

GValue GValue::Bool(bool b) {
  GValue v;
  v.kind_ = Kind::kBool;
  v.int_ = b ? 1 : 0;
  return v;
}

GValue GValue::Int(int64_t i) {
  GValue v;
  v.kind_ = Kind::kInt;
  v.int_ = i;
  return v;
}

GValue GValue::Bits(int bit) {
  GValue v;
  v.kind_ = Kind::kBits;
  v.int_ = bit ? 1 : 0;
  return v;
}

GValue GValue::Const(std::string name) {
  GValue v;
  v.kind_ = Kind::kConst;
  v.name_ = std::move(name);
  return v;
}

GValue GValue::Tuple(std::vector<GValue> items) {
  GValue v;
  v.kind_ = Kind::kTuple;
  v.items_ = std::move(items);
  return v;
}

GValue GValue::Record(std::map<std::string, GValue> fields) {
  GValue v;
  v.kind_ = Kind::kRecord;
  v.fields_ = std::move(fields);
  return v;
}

GValue GValue::Function(std::shared_ptr<const GFunction> fn) {
  GValue v;
  v.kind_ = Kind::kFunction;
  v.fn_ = std::move(fn);
  return v;
}

bool operator<(const GValue& a, const GValue& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  switch (a.kind_) {
    case GValue::Kind::kBool:
    case GValue::Kind::kInt:
    case GValue::Kind::kBits:
      return a.int_ < b.int_;
    case GValue::Kind::kConst:
      return a.name_ < b.name_;
    case GValue::Kind::kTuple:
      return a.items_ < b.items_;
    case GValue::Kind::kRecord:
      return a.fields_ < b.fields_;
    case GValue::Kind::kFunction:
      break;
  }
  throw std::logic_error("functions are not ordered");
}

bool operator==(const GValue& a, const GValue& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case GValue::Kind::kBool:
    case GValue::Kind::kInt:
    case GValue::Kind::kBits:
      return a.int_ == b.int_;
    case GValue::Kind::kConst:
      return a.name_ == b.name_;
    case GValue::Kind::kTuple:
      return a.items_ == b.items_;
    case GValue::Kind::kRecord:
      return a.fields_ == b.fields_;
    case GValue::Kind::kFunction:
      return a.fn_ == b.fn_;
  }
  return false;
}

std::string ToString(const GValue& v) {
  switch (v.kind()) {
    case GValue::Kind::kBool:
      return v.as_bool() ? "true" : "false";
    case GValue::Kind::kInt:
      return std::to_string(v.as_int());
    case GValue::Kind::kBits:
      return v.as_int() ? "0bin1" : "0bin0";
    case GValue::Kind::kConst:
      return v.name();
    case GValue::Kind::kTuple: {
      std::string out = "(";
      for (size_t i = 0; i < v.items().size(); ++i) {
        if (i) out += ", ";
        out += ToString(v.items()[i]);
      }
      return out + ")";
    }
    case GValue::Kind::kRecord: {
      std::string out = "{";
      bool first = true;
      for (const auto& [k, f] : v.fields()) {
        if (!first) out += ", ";
        first = false;
        out += k + ": " + ToString(f);
      }
      return out + "}";
    }
    case GValue::Kind::kFunction: {
      const auto* table = dynamic_cast<const GTable*>(&v.function());
      if (!table) return "<lambda>";
      std::string out = "[";
      bool first = true;
      for (const auto& [args, val] : table->entries()) {
        if (!first) out += ", ";
        first = false;
        out += ToString(args.size() == 1 ? args[0] : GValue::Tuple(args)) + " -> " + ToString(val);
      }
      if (table->fallback()) out += std::string(first ? "" : ", ") + "else -> " + ToString(*table->fallback());
      return out + "]";
    }
  }
  return "?";
}

const GValue& GTable::At(const std::vector<GValue>& args) const {
  auto it = entries_.find(args);
  if (it != entries_.end()) return it->second;
  if (fallback_) return *fallback_;
  throw SmtError(SmtError::Kind::kEvaluation,
                 "function has no value at " +
                     ToString(args.size() == 1 ? args[0] : GValue::Tuple(args)));
}

namespace {

using smt::Command;
using smt::Term;

[[noreturn]] void EvalFail(const std::string& message) {
  throw SmtError(SmtError::Kind::kEvaluation, message);
}

struct Scope {
  std::map<std::string, GValue> vars;
  std::shared_ptr<const Scope> parent;
};

class Interpreter;

class Closure final : public GFunction {
 public:
  Closure(const Interpreter* interp, std::vector<smt::Binder> binders,
          std::shared_ptr<const Term> body, std::shared_ptr<const Scope> scope)
      : interp_(interp), binders_(std::move(binders)), body_(std::move(body)),
        scope_(std::move(scope)) {
    for (const auto& b : binders_) sorts_.push_back(b.second);
  }

  const std::vector<Sort>& arg_sorts() const override { return sorts_; }
  GValue Apply(const std::vector<GValue>& args) const;

 private:
  const Interpreter* interp_;
  std::vector<smt::Binder> binders_;
  std::vector<Sort> sorts_;
  std::shared_ptr<const Term> body_;
  std::shared_ptr<const Scope> scope_;
};

struct TypeInfo {
  std::vector<std::string> constants;  // scalar types
  std::optional<smt::Binder> binder;   // subtypes
  std::shared_ptr<const Term> pred;
  bool uninterpreted = false;
};

class Interpreter {
 public:
  Interpreter(const SmtScript& script, const SmtModel& model) : script_(script), model_(model) {}

  std::vector<bool> Run() {
    std::vector<Command> commands;
    int first_line = static_cast<int>(script_.header.size()) + 1;
    for (size_t i = 0; i < script_.sentences.size(); ++i) {
      int line = first_line + static_cast<int>(i);
      commands.push_back(script_.dialect == Dialect::kYices
                             ? smt::ParseYicesCommand(script_.sentences[i], line)
                             : smt::ParseCvc3Command(script_.sentences[i], line));
    }
    CollectInts(commands);

    std::vector<bool> results;
    for (auto& c : commands) {
      switch (c.kind) {
        case Command::Kind::kTypeDecl:
          DeclareType(c);
          break;
        case Command::Kind::kDefine:
          Define(c);
          break;
        case Command::Kind::kAssert:
          results.push_back(Assert(*c.term));
          break;
        case Command::Kind::kCheck:
        case Command::Kind::kOther:
          break;
      }
    }
    return results;
  }

  GValue Eval(const Term& t, const std::shared_ptr<const Scope>& scope) const {
    switch (t.kind) {
      case Term::Kind::kSym:
        return Lookup(t.name, scope.get());
      case Term::Kind::kInt:
        return GValue::Int(t.value);
      case Term::Kind::kBool:
        return GValue::Bool(t.value != 0);
      case Term::Kind::kBits:
        return GValue::Bits(static_cast<int>(t.value));
      case Term::Kind::kApp: {
        GValue f = Eval(t.args[0], scope);
        std::vector<GValue> args;
        for (size_t i = 1; i < t.args.size(); ++i) args.push_back(Eval(t.args[i], scope));
        return Apply(f, args);
      }
      case Term::Kind::kLambda:
        return GValue::Function(std::make_shared<Closure>(
            this, t.binders, std::make_shared<const Term>(t.args[0]), scope));
      case Term::Kind::kForall:
      case Term::Kind::kExists:
        return GValue::Bool(Quantify(t, scope));
      case Term::Kind::kField: {
        GValue r = Eval(t.args[0], scope);
        if (r.kind() != GValue::Kind::kRecord) EvalFail("field access on a non-record");
        auto it = r.fields().find(t.name);
        if (it == r.fields().end()) EvalFail("record has no field '" + t.name + "'");
        return it->second;
      }
      case Term::Kind::kTupleSel: {
        GValue v = Eval(t.args[0], scope);
        if (v.kind() != GValue::Kind::kTuple || t.value < 0 ||
            static_cast<size_t>(t.value) >= v.items().size()) {
          EvalFail("bad tuple selection");
        }
        return v.items()[t.value];
      }
      case Term::Kind::kTuple: {
        std::vector<GValue> items;
        for (const auto& a : t.args) items.push_back(Eval(a, scope));
        return GValue::Tuple(std::move(items));
      }
      case Term::Kind::kOp:
        return EvalOp(t, scope);
      case Term::Kind::kUpdate: {
        GValue base = Eval(t.args[0], scope);
        const auto* table = base.kind() == GValue::Kind::kFunction
                                ? dynamic_cast<const GTable*>(&base.function())
                                : nullptr;
        if (!table) EvalFail("update of a non-table value");
        auto copy = std::make_shared<GTable>(*table);
        GValue index = Eval(t.args[1], scope);
        std::vector<GValue> key;
        if (copy->arg_sorts().size() > 1 && index.kind() == GValue::Kind::kTuple) {
          key = index.items();
        } else {
          key = {index};
        }
        copy->Set(std::move(key), Eval(t.args[2], scope));
        return GValue::Function(std::move(copy));
      }
    }
    EvalFail("unknown term");
  }

  GValue Apply(const GValue& f, const std::vector<GValue>& args) const {
    if (f.kind() != GValue::Kind::kFunction) EvalFail("application of a non-function");
    if (const auto* table = dynamic_cast<const GTable*>(&f.function())) return table->At(args);
    const auto* closure = dynamic_cast<const Closure*>(&f.function());
    if (!closure) EvalFail("unknown function representation");
    return closure->Apply(args);
  }

 private:
  GValue Lookup(const std::string& name, const Scope* scope) const {
    for (const Scope* s = scope; s; s = s->parent.get()) {
      auto it = s->vars.find(name);
      if (it != s->vars.end()) return it->second;
    }
    if (auto it = globals_.find(name); it != globals_.end()) return it->second;
    if (auto it = constants_.find(name); it != constants_.end()) return it->second;
    throw SmtError(SmtError::Kind::kUnboundSymbol, "no value for symbol '" + name + "'");
  }

  void DeclareType(const Command& c) {
    TypeInfo info;
    if (!c.constants.empty()) {
      info.constants = c.constants;
      for (const auto& k : c.constants) constants_[k] = GValue::Const(k);
    } else if (c.subtype_binder) {
      info.binder = c.subtype_binder;
      info.pred = std::make_shared<const Term>(*c.subtype_pred);
    } else {
      info.uninterpreted = true;
    }
    types_[c.name] = std::move(info);
  }

  void Define(const Command& c) {
    if (c.term) {
      globals_[c.name] = Eval(*c.term, nullptr);
      return;
    }
    auto it = model_.symbols.find(c.name);
    if (it == model_.symbols.end()) {
      if (c.sort.kind == Sort::Kind::kFunc) {
        pending_.insert(c.name);  // may still be defined by an axiom
        return;
      }
      throw SmtError(SmtError::Kind::kUnboundSymbol, "model gives no value for '" + c.name + "'");
    }
    CheckSort(it->second, c.sort, c.name);
    globals_[c.name] = it->second;
  }

  // Values of subtype sorts must satisfy the subtype predicate, also inside
  // tables and records.
  void CheckSort(const GValue& v, const Sort& sort, const std::string& what) const {
    switch (sort.kind) {
      case Sort::Kind::kNamed:
        if (v.kind() == GValue::Kind::kInt && !InSubtype(v, sort.name)) {
          EvalFail("value " + ToString(v) + " of '" + what + "' lies outside " + sort.name);
        }
        break;
      case Sort::Kind::kTuple:
        if (v.kind() == GValue::Kind::kTuple) {
          for (size_t i = 0; i < v.items().size() && i < sort.items.size(); ++i) {
            CheckSort(v.items()[i], sort.items[i], what);
          }
        }
        break;
      case Sort::Kind::kRecord:
        if (v.kind() == GValue::Kind::kRecord) {
          for (size_t i = 0; i < sort.fields.size(); ++i) {
            auto it = v.fields().find(sort.fields[i]);
            if (it != v.fields().end()) CheckSort(it->second, sort.items[i], what + "." + sort.fields[i]);
          }
        }
        break;
      case Sort::Kind::kFunc:
        if (v.kind() == GValue::Kind::kFunction) {
          if (const auto* table = dynamic_cast<const GTable*>(&v.function())) {
            for (const auto& [args, val] : table->entries()) CheckSort(val, sort.items.back(), what);
            if (table->fallback()) CheckSort(*table->fallback(), sort.items.back(), what);
          }
        }
        break;
      default:
        break;
    }
  }

  bool InSubtype(const GValue& v, const std::string& name) const {
    if (name == "nat") return v.as_int() >= 0;
    auto it = types_.find(name);
    if (it == types_.end() || !it->second.binder) return true;
    auto scope = std::make_shared<Scope>();
    scope->vars[it->second.binder->first] = v;
    GValue ok = Eval(*it->second.pred, scope);
    return ok.kind() == GValue::Kind::kBool && ok.as_bool();
  }

  bool Assert(const Term& t) {
    if (InstallDefinition(t)) return true;
    GValue v = Eval(t, nullptr);
    if (v.kind() != GValue::Kind::kBool) EvalFail("assert of a non-boolean term");
    return v.as_bool();
  }

  // FORALL (A, B: S): f(A, B) = rhs, with f declared but not yet valued.
  bool InstallDefinition(const Term& t) {
    if (t.kind != Term::Kind::kForall || pending_.empty()) return false;
    const Term& body = t.args[0];
    if (body.kind != Term::Kind::kOp || (body.name != "=" && body.name != "<=>")) return false;
    const Term& lhs = body.args[0];
    if (lhs.kind != Term::Kind::kApp || lhs.args[0].kind != Term::Kind::kSym) return false;
    const std::string& name = lhs.args[0].name;
    if (!pending_.count(name) || lhs.args.size() != t.binders.size() + 1) return false;
    for (size_t i = 0; i < t.binders.size(); ++i) {
      const Term& a = lhs.args[i + 1];
      if (a.kind != Term::Kind::kSym || a.name != t.binders[i].first) return false;
    }
    globals_[name] = GValue::Function(std::make_shared<Closure>(
        this, t.binders, std::make_shared<const Term>(body.args[1]), nullptr));
    pending_.erase(name);
    return true;
  }

  bool Quantify(const Term& t, const std::shared_ptr<const Scope>& scope) const {
    bool universal = t.kind == Term::Kind::kForall;
    std::vector<std::vector<GValue>> domains;
    for (const auto& b : t.binders) domains.push_back(Domain(b.second));
    for (const auto& d : domains) {
      if (d.empty()) return universal;
    }
    std::vector<size_t> idx(domains.size(), 0);
    auto local = std::make_shared<Scope>();
    local->parent = scope;
    for (;;) {
      for (size_t i = 0; i < idx.size(); ++i) local->vars[t.binders[i].first] = domains[i][idx[i]];
      GValue v = Eval(t.args[0], local);
      if (v.kind() != GValue::Kind::kBool) EvalFail("quantifier body is not boolean");
      if (v.as_bool() != universal) return !universal;
      size_t k = idx.size();
      while (k > 0) {
        --k;
        if (++idx[k] < domains[k].size()) break;
        idx[k] = 0;
        if (k == 0) return universal;
      }
      if (idx.empty()) return universal;
    }
  }

  std::vector<GValue> Domain(const Sort& sort) const {
    std::vector<GValue> out;
    switch (sort.kind) {
      case Sort::Kind::kBool:
        return {GValue::Bool(false), GValue::Bool(true)};
      case Sort::Kind::kBits:
        return {GValue::Bits(0), GValue::Bits(1)};
      case Sort::Kind::kInt:
        for (int64_t i : ints_) out.push_back(GValue::Int(i));
        return out;
      case Sort::Kind::kNamed: {
        if (sort.name == "nat") {
          for (int64_t i : ints_) {
            if (i >= 0) out.push_back(GValue::Int(i));
          }
          return out;
        }
        auto it = types_.find(sort.name);
        if (it == types_.end()) EvalFail("unknown sort '" + sort.name + "'");
        const TypeInfo& info = it->second;
        if (!info.constants.empty()) {
          for (const auto& k : info.constants) out.push_back(GValue::Const(k));
          return out;
        }
        if (info.binder) {
          for (auto& v : Domain(info.binder->second)) {
            if (InSubtype(v, sort.name)) out.push_back(v);
          }
          return out;
        }
        auto c = model_.carriers.find(sort.name);
        if (c != model_.carriers.end()) out = c->second;
        return out;
      }
      case Sort::Kind::kTuple: {
        out.push_back(GValue::Tuple({}));
        for (const auto& item : sort.items) {
          std::vector<GValue> next;
          auto dom = Domain(item);
          for (const auto& prefix : out) {
            for (const auto& v : dom) {
              auto items = prefix.items();
              items.push_back(v);
              next.push_back(GValue::Tuple(std::move(items)));
            }
          }
          out = std::move(next);
        }
        return out;
      }
      case Sort::Kind::kFunc:
      case Sort::Kind::kRecord:
        break;
    }
    EvalFail("cannot range over a function or record sort");
  }

  bool Equal(const GValue& a, const GValue& b) const {
    if (a.kind() == GValue::Kind::kFunction && b.kind() == GValue::Kind::kFunction) {
      const auto& sorts = a.function().arg_sorts();
      std::vector<std::vector<GValue>> domains;
      for (const auto& s : sorts) domains.push_back(Domain(s));
      std::vector<size_t> idx(domains.size(), 0);
      for (const auto& d : domains) {
        if (d.empty()) return true;
      }
      for (;;) {
        std::vector<GValue> args;
        for (size_t i = 0; i < idx.size(); ++i) args.push_back(domains[i][idx[i]]);
        if (!Equal(Apply(a, args), Apply(b, args))) return false;
        size_t k = idx.size();
        if (k == 0) return true;
        while (k > 0) {
          --k;
          if (++idx[k] < domains[k].size()) break;
          idx[k] = 0;
          if (k == 0) return true;
        }
      }
    }
    if (a.kind() != b.kind()) {
      EvalFail("comparison of " + ToString(a) + " with " + ToString(b));
    }
    if (a.kind() == GValue::Kind::kTuple) {
      if (a.items().size() != b.items().size()) return false;
      for (size_t i = 0; i < a.items().size(); ++i) {
        if (!Equal(a.items()[i], b.items()[i])) return false;
      }
      return true;
    }
    if (a.kind() == GValue::Kind::kRecord) {
      if (a.fields().size() != b.fields().size()) return false;
      for (const auto& [k, v] : a.fields()) {
        auto it = b.fields().find(k);
        if (it == b.fields().end() || !Equal(v, it->second)) return false;
      }
      return true;
    }
    return a == b;
  }

  bool Truth(const Term& t, const std::shared_ptr<const Scope>& scope) const {
    GValue v = Eval(t, scope);
    if (v.kind() != GValue::Kind::kBool) EvalFail("expected a boolean");
    return v.as_bool();
  }

  int64_t Number(const Term& t, const std::shared_ptr<const Scope>& scope) const {
    GValue v = Eval(t, scope);
    if (v.kind() != GValue::Kind::kInt) EvalFail("expected an integer, found " + ToString(v));
    return v.as_int();
  }

  GValue EvalOp(const Term& t, const std::shared_ptr<const Scope>& scope) const {
    const std::string& op = t.name;
    const auto& a = t.args;
    if (op == "and") {
      for (const auto& x : a) {
        if (!Truth(x, scope)) return GValue::Bool(false);
      }
      return GValue::Bool(true);
    }
    if (op == "or") {
      for (const auto& x : a) {
        if (Truth(x, scope)) return GValue::Bool(true);
      }
      return GValue::Bool(false);
    }
    if (op == "not") return GValue::Bool(!Truth(a.at(0), scope));
    if (op == "=>") return GValue::Bool(!Truth(a.at(0), scope) || Truth(a.at(1), scope));
    if (op == "<=>") return GValue::Bool(Truth(a.at(0), scope) == Truth(a.at(1), scope));
    if (op == "ite") return Truth(a.at(0), scope) ? Eval(a.at(1), scope) : Eval(a.at(2), scope);
    if (op == "=" || op == "/=") {
      bool eq = Equal(Eval(a.at(0), scope), Eval(a.at(1), scope));
      return GValue::Bool(op == "=" ? eq : !eq);
    }
    if (op == "<") return GValue::Bool(Number(a.at(0), scope) < Number(a.at(1), scope));
    if (op == "<=") return GValue::Bool(Number(a.at(0), scope) <= Number(a.at(1), scope));
    if (op == ">") return GValue::Bool(Number(a.at(0), scope) > Number(a.at(1), scope));
    if (op == ">=") return GValue::Bool(Number(a.at(0), scope) >= Number(a.at(1), scope));
    if (op == "neg") {
      int64_t r = 0;
      if (__builtin_sub_overflow(int64_t{0}, Number(a.at(0), scope), &r)) EvalFail("overflow");
      return GValue::Int(r);
    }
    if (op == "+" || op == "-" || op == "*") {
      if (a.empty()) EvalFail("arithmetic without operands");
      int64_t acc = Number(a[0], scope);
      for (size_t i = 1; i < a.size(); ++i) {
        int64_t x = Number(a[i], scope);
        bool bad = op == "+"   ? __builtin_add_overflow(acc, x, &acc)
                   : op == "-" ? __builtin_sub_overflow(acc, x, &acc)
                               : __builtin_mul_overflow(acc, x, &acc);
        if (bad) EvalFail("integer overflow");
      }
      return GValue::Int(acc);
    }
    EvalFail("unknown operator '" + op + "'");
  }

  void CollectInts(const std::vector<Command>& commands) {
    std::set<int64_t> seen{0, 1};
    std::function<void(const Term&)> term = [&](const Term& t) {
      if (t.kind == Term::Kind::kInt) seen.insert(t.value);
      for (const auto& a : t.args) term(a);
    };
    std::function<void(const GValue&)> value = [&](const GValue& v) {
      switch (v.kind()) {
        case GValue::Kind::kInt:
          seen.insert(v.as_int());
          break;
        case GValue::Kind::kTuple:
          for (const auto& i : v.items()) value(i);
          break;
        case GValue::Kind::kRecord:
          for (const auto& [k, f] : v.fields()) value(f);
          break;
        case GValue::Kind::kFunction:
          if (const auto* table = dynamic_cast<const GTable*>(&v.function())) {
            for (const auto& [args, r] : table->entries()) {
              for (const auto& x : args) value(x);
              value(r);
            }
            if (table->fallback()) value(*table->fallback());
          }
          break;
        default:
          break;
      }
    };
    for (const auto& c : commands) {
      if (c.term) term(*c.term);
      if (c.subtype_pred) term(*c.subtype_pred);
    }
    for (const auto& [name, v] : model_.symbols) value(v);
    int64_t lo = *seen.begin();
    int64_t hi = *seen.rbegin();
    if (hi - lo <= kWindow) {
      for (int64_t i = lo - 1; i <= hi + 1; ++i) ints_.push_back(i);
      return;
    }
    std::set<int64_t> spread;
    for (int64_t v : seen) {
      spread.insert(v - 1);
      spread.insert(v);
      spread.insert(v + 1);
    }
    ints_.assign(spread.begin(), spread.end());
  }

  static constexpr int64_t kWindow = 64;

  const SmtScript& script_;
  const SmtModel& model_;
  std::map<std::string, TypeInfo> types_;
  std::map<std::string, GValue> globals_;
  std::map<std::string, GValue> constants_;
  std::set<std::string> pending_;
  std::vector<int64_t> ints_;

  friend class Closure;
};

GValue Closure::Apply(const std::vector<GValue>& args) const {
  std::vector<GValue> bound = args;
  // A CVC3 array indexed by a tuple may be read with the components.
  if (binders_.size() == 1 && args.size() > 1) bound = {GValue::Tuple(args)};
  if (bound.size() != binders_.size()) EvalFail("wrong number of arguments");
  auto local = std::make_shared<Scope>();
  local->parent = scope_;
  for (size_t i = 0; i < binders_.size(); ++i) local->vars[binders_[i].first] = bound[i];
  return interp_->Eval(*body_, local);
}

}  // namespace

std::vector<bool> InterpretScript(const SmtScript& script, const SmtModel& model) {
  return Interpreter(script, model).Run();
}

}  // namespace ztc

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

// Ground semantics for emitted solver scripts.
//
// The interpreter reads a script back from its text (with a parser per
// dialect), binds every uninterpreted symbol from a ground model and
// evaluates each assert. Quantifiers range over a finite universe: the
// constants of scalar types, the carriers supplied for uninterpreted sorts,
// and a window of integers around the literals of the script and the model.

#ifndef ZTC_SMT_H_
#define ZTC_SMT_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ztc/emit.h"

namespace ztc {

struct Sort {
  enum class Kind { kBool, kInt, kBits, kNamed, kTuple, kFunc, kRecord };

  Kind kind = Kind::kInt;
  std::string name;                 // kNamed
  std::vector<Sort> items;          // kTuple; kFunc: arguments then result
  std::vector<std::string> fields;  // kRecord, parallel to items

  static Sort Bool() { return {Kind::kBool, {}, {}, {}}; }
  static Sort Int() { return {Kind::kInt, {}, {}, {}}; }
  static Sort Bits() { return {Kind::kBits, {}, {}, {}}; }
  static Sort Named(std::string n) { return {Kind::kNamed, std::move(n), {}, {}}; }
  static Sort Tuple(std::vector<Sort> items) {
    return {Kind::kTuple, {}, std::move(items), {}};
  }
  static Sort Func(std::vector<Sort> args, Sort result);

  friend bool operator==(const Sort&, const Sort&) = default;
};

class GFunction;

// A ground solver value. Functions (and CVC3 arrays) are either finite
// tables with a default or closures produced by lambda terms.
class GValue {
 public:
  enum class Kind { kBool, kInt, kBits, kConst, kTuple, kRecord, kFunction };

  GValue() = default;
  static GValue Bool(bool b);
  static GValue Int(int64_t v);
  static GValue Bits(int bit);
  static GValue Const(std::string name);
  static GValue Tuple(std::vector<GValue> items);
  static GValue Record(std::map<std::string, GValue> fields);
  static GValue Function(std::shared_ptr<const GFunction> fn);

  Kind kind() const { return kind_; }
  bool as_bool() const { return int_ != 0; }
  int64_t as_int() const { return int_; }
  const std::string& name() const { return name_; }
  const std::vector<GValue>& items() const { return items_; }
  const std::map<std::string, GValue>& fields() const { return fields_; }
  const GFunction& function() const { return *fn_; }
  const std::shared_ptr<const GFunction>& function_ptr() const { return fn_; }

  // Structural order on first-order values; throws std::logic_error for
  // functions.
  friend bool operator<(const GValue& a, const GValue& b);
  // Structural equality on first-order values (functions by identity).
  friend bool operator==(const GValue& a, const GValue& b);

 private:
  Kind kind_ = Kind::kBool;
  int64_t int_ = 0;
  std::string name_;
  std::vector<GValue> items_;
  std::map<std::string, GValue> fields_;
  std::shared_ptr<const GFunction> fn_;
};

std::string ToString(const GValue& v);

class GFunction {
 public:
  virtual ~GFunction() = default;
  virtual const std::vector<Sort>& arg_sorts() const = 0;
};

// A function given by finitely many points plus an optional default.
class GTable final : public GFunction {
 public:
  GTable(std::vector<Sort> arg_sorts, std::optional<GValue> fallback)
      : arg_sorts_(std::move(arg_sorts)), fallback_(std::move(fallback)) {}

  const std::vector<Sort>& arg_sorts() const override { return arg_sorts_; }
  void Set(std::vector<GValue> args, GValue value) {
    entries_[std::move(args)] = std::move(value);
  }
  // Throws SmtError when the point is missing and there is no default.
  const GValue& At(const std::vector<GValue>& args) const;
  const std::map<std::vector<GValue>, GValue>& entries() const { return entries_; }
  const std::optional<GValue>& fallback() const { return fallback_; }

 private:
  std::vector<Sort> arg_sorts_;
  std::optional<GValue> fallback_;
  std::map<std::vector<GValue>, GValue> entries_;
};

// Ground values for the uninterpreted symbols of a script, plus the finite
// carrier of every uninterpreted sort.
struct SmtModel {
  std::map<std::string, GValue> symbols;
  std::map<std::string, std::vector<GValue>> carriers;
};

// One truth value per assert sentence, in script order. Definitional
// axioms of declared operators (CVC3 `ASSERT FORALL (A, B: ...): f(A, B) =
// ...`) install the operator and count as true. Throws SmtError
// (kUnboundSymbol for a declared symbol without a value).
std::vector<bool> InterpretScript(const SmtScript& script, const SmtModel& model);

}  // namespace ztc

#endif  // ZTC_SMT_H_

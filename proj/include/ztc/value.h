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

// Ground Z values. Sets are finite and extensional; they are stored sorted
// under `CanonicalOrder` with duplicates removed, so equal sets share one
// representation.

#ifndef ZTC_VALUE_H_
#define ZTC_VALUE_H_

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ztc {

class Value {
 public:
  enum class Kind { kInt, kEnum, kBasic, kTuple, kSet };

  Value() = default;

  static Value Int(int64_t v);
  // `ordinal` is the constant's position in its free type declaration.
  static Value Enum(std::string type, std::string name, int ordinal);
  static Value Basic(std::string type, std::string name);
  static Value Tuple(Value left, Value right);
  // Sorts and deduplicates `elems`.
  static Value Set(std::vector<Value> elems);

  Kind kind() const { return kind_; }
  int64_t as_int() const { return int_; }
  const std::string& name() const { return name_; }
  const std::string& type_name() const { return type_; }
  int ordinal() const { return static_cast<int>(int_); }
  const Value& first() const { return items_.at(0); }
  const Value& second() const { return items_.at(1); }
  // Tuple components or set members.
  const std::vector<Value>& items() const { return items_; }
  size_t size() const { return items_.size(); }

  bool Contains(const Value& v) const;

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  Kind kind_ = Kind::kInt;
  int64_t int_ = 0;  // integer value, or enum ordinal
  std::string name_;
  std::string type_;
  std::vector<Value> items_;
};

// Total order on same-typed values: integers numerically, enum constants by
// declaration order, basic constants by name, tuples lexicographically, sets
// by cardinality then lexicographically over their sorted members.
// Throws std::logic_error when the kinds differ.
std::strong_ordering CanonicalOrder(const Value& a, const Value& b);

// Extensional equality.
bool ValueEq(const Value& a, const Value& b);

// Renders `v` in .ztc literal syntax: `{LiftOff |-> 2, ThrustDrop1E |-> 5}`.
std::string ToString(const Value& v);

using Env = std::map<std::string, Value, std::less<>>;

}  // namespace ztc

#endif  // ZTC_VALUE_H_

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

#include "ztc/value.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ztc {

Value Value::Int(int64_t v) {
  Value out;
  out.kind_ = Kind::kInt;
  out.int_ = v;
  return out;
}

Value Value::Enum(std::string type, std::string name, int ordinal) {
  Value out;
  out.kind_ = Kind::kEnum;
  out.type_ = std::move(type);
  out.name_ = std::move(name);
  out.int_ = ordinal;
  return out;
}

Value Value::Basic(std::string type, std::string name) {
  Value out;
  out.kind_ = Kind::kBasic;
  out.type_ = std::move(type);
  out.name_ = std::move(name);
  return out;
}

Value Value::Tuple(Value left, Value right) {
  Value out;
  out.kind_ = Kind::kTuple;
  out.items_.reserve(2);
  out.items_.push_back(std::move(left));
  out.items_.push_back(std::move(right));
  return out;
}

Value Value::Set(std::vector<Value> elems) {
  Value out;
  out.kind_ = Kind::kSet;
  std::sort(elems.begin(), elems.end(), [](const Value& a, const Value& b) {
    return CanonicalOrder(a, b) < 0;
  });
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  out.items_ = std::move(elems);
  return out;
}

bool Value::Contains(const Value& v) const {
  return std::binary_search(
      items_.begin(), items_.end(), v,
      [](const Value& a, const Value& b) { return CanonicalOrder(a, b) < 0; });
}

std::strong_ordering CanonicalOrder(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) {
    throw std::logic_error("comparing values of different kinds: " +
                           ToString(a) + " vs " + ToString(b));
  }
  switch (a.kind()) {
    case Value::Kind::kInt:
      return a.as_int() <=> b.as_int();
    case Value::Kind::kEnum:
      if (auto c = a.type_name() <=> b.type_name(); c != 0) return c;
      return a.ordinal() <=> b.ordinal();
    case Value::Kind::kBasic:
      if (auto c = a.type_name() <=> b.type_name(); c != 0) return c;
      return a.name() <=> b.name();
    case Value::Kind::kSet:
      if (auto c = a.size() <=> b.size(); c != 0) return c;
      [[fallthrough]];
    case Value::Kind::kTuple:
      for (size_t i = 0; i < a.items().size(); ++i) {
        if (auto c = CanonicalOrder(a.items()[i], b.items()[i]); c != 0) {
          return c;
        }
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

bool ValueEq(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return false;
  return CanonicalOrder(a, b) == 0;
}

bool operator==(const Value& a, const Value& b) { return ValueEq(a, b); }

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  return CanonicalOrder(a, b);
}

namespace {

void Render(const Value& v, bool nested_tuple, std::string& out) {
  switch (v.kind()) {
    case Value::Kind::kInt:
      out += std::to_string(v.as_int());
      return;
    case Value::Kind::kEnum:
    case Value::Kind::kBasic:
      out += v.name();
      return;
    case Value::Kind::kTuple:
      if (nested_tuple) out += '(';
      Render(v.first(), true, out);
      out += " |-> ";
      Render(v.second(), true, out);
      if (nested_tuple) out += ')';
      return;
    case Value::Kind::kSet: {
      out += '{';
      bool first = true;
      for (const Value& e : v.items()) {
        if (!first) out += ", ";
        first = false;
        Render(e, false, out);
      }
      out += '}';
      return;
    }
  }
}

}  // namespace

std::string ToString(const Value& v) {
  std::string out;
  Render(v, false, out);
  return out;
}

}  // namespace ztc

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

// Reader and printer for `.ztc` files, an ASCII rendering of Z test
// specifications:
//
//   basic MDATA;
//   free STATUS ::= normal | abnormal;
//
//   -- a comment
//   spec Example {
//     now, fa : NAT;
//     ot : REVENT pfun NAT
//   |
//     e? notin dom ot;
//     1 < now < 3
//   }
//
// A bare identifier in the declaration part includes an earlier spec.

#ifndef ZTC_PARSER_H_
#define ZTC_PARSER_H_

#include <string>
#include <string_view>
#include <vector>

#include "ztc/ast.h"

namespace ztc {

struct TypeDecl {
  std::string name;
  bool is_basic = true;
  std::vector<std::string> constants;  // free types only
  SourceLocation loc;

  TypeExpr AsType() const;

  friend bool operator==(const TypeDecl& a, const TypeDecl& b) {
    return a.name == b.name && a.is_basic == b.is_basic &&
           a.constants == b.constants;
  }
};

struct SourceFile {
  std::string path;
  std::vector<TypeDecl> types;
  std::vector<TestSpec> specs;

  const TestSpec* Find(std::string_view name) const;

  // The spec with every inclusion expanded in place: included declarations
  // and predicates come first, in inclusion order. Throws ParseError if the
  // name is unknown.
  TestSpec Flatten(std::string_view name) const;

  friend bool operator==(const SourceFile& a, const SourceFile& b) {
    return a.types == b.types && a.specs == b.specs;
  }
};

// Throws ParseError (with line/column) on malformed input, undeclared
// identifiers, unknown types, duplicate declarations and bad inclusions.
SourceFile ParseFile(std::string_view text, std::string path = {});

std::string ToString(const Expr& e);
std::string ToString(const Pred& p);
std::string PrintSpec(const TestSpec& spec);
std::string PrintFile(const SourceFile& file);

}  // namespace ztc

#endif  // ZTC_PARSER_H_

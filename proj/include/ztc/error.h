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

#ifndef ZTC_ERROR_H_
#define ZTC_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "ztc/ast.h"

namespace ztc {

// Base for every diagnostic the toolkit raises. `what()` carries the
// formatted message including the location.
class Error : public std::runtime_error {
 public:
  Error(const std::string& message, SourceLocation loc)
      : std::runtime_error(Format(message, loc)), message_(message), loc_(loc) {}

  const std::string& message() const { return message_; }
  SourceLocation location() const { return loc_; }

 private:
  static std::string Format(const std::string& message, SourceLocation loc) {
    if (loc.line == 0) return message;
    return std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " +
           message;
  }

  std::string message_;
  SourceLocation loc_;
};

class ParseError : public Error {
 public:
  enum class Kind {
    kSyntax,
    kUndeclaredVariable,
    kUnknownType,
    kDuplicateVariable,
    kDuplicateName,
    kUnknownInclude,
  };

  ParseError(Kind kind, const std::string& message, SourceLocation loc,
             std::vector<std::string> expected = {})
      : Error(message, loc), kind_(kind), expected_(std::move(expected)) {}

  Kind kind() const { return kind_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Kind kind_;
  std::vector<std::string> expected_;
};

class TypeError : public Error {
 public:
  enum class Kind {
    kMismatch,
    kApplyOnNonFunction,
    kCardOnNonFinset,
    kCannotInfer,
    kUnsupported,
  };

  TypeError(Kind kind, const std::string& message, SourceLocation loc,
            std::string expected = {}, std::string found = {})
      : Error(message, loc),
        kind_(kind),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  Kind kind() const { return kind_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  Kind kind_;
  std::string expected_;
  std::string found_;
};

class EvalError : public Error {
 public:
  enum class Kind {
    kApplyOutsideDomain,
    kApplyNonFunctional,
    kUnbound,
    kOverflow,
    kRangeTooLarge,
    kIllTyped,
  };

  EvalError(Kind kind, const std::string& message, SourceLocation loc = {})
      : Error(message, loc), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Raised by the script emitter for constructs that have no embedding rule.
// One spec may produce several problems; they are all collected.
class EmitError : public Error {
 public:
  enum class Kind { kUnsupportedType, kUnsupportedPredicate };

  struct Problem {
    Kind kind;
    std::string message;
    SourceLocation loc;
  };

  explicit EmitError(std::vector<Problem> problems)
      : Error(Summary(problems), problems.empty() ? SourceLocation{}
                                                  : problems.front().loc),
        problems_(std::move(problems)) {}

  const std::vector<Problem>& problems() const { return problems_; }
  Kind kind() const { return problems_.front().kind; }

 private:
  static std::string Summary(const std::vector<Problem>& problems) {
    if (problems.empty()) return "emission failed";
    std::string out = problems.front().message;
    if (problems.size() > 1) {
      out += " (and " + std::to_string(problems.size() - 1) + " more)";
    }
    return out;
  }

  std::vector<Problem> problems_;
};

// Malformed solver scripts or model text, and evaluation failures of the
// script interpreter.
class SmtError : public Error {
 public:
  enum class Kind { kParseFailure, kUnboundSymbol, kEvaluation };

  SmtError(Kind kind, const std::string& message, int line = 0)
      : Error(message, SourceLocation{line, line == 0 ? 0 : 1}), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class ReconstructError : public Error {
 public:
  enum class Kind { kMissingBinding, kCardMismatch, kNegativeNat, kMalformed };

  ReconstructError(Kind kind, const std::string& message)
      : Error(message, SourceLocation{}), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace ztc

#endif  // ZTC_ERROR_H_

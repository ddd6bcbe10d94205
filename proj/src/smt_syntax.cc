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

#include "smt_syntax.h"

#include <cctype>
#include <charconv>
#include <set>

#include "ztc/error.h"

namespace ztc::smt {
namespace {

[[noreturn]] void Fail(const std::string& message, int line) {
  throw SmtError(SmtError::Kind::kParseFailure, message, line);
}

std::optional<int64_t> ParseInt(std::string_view s) {
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

Term Leaf(Term::Kind kind, std::string name = {}, int64_t value = 0) {
  Term t;
  t.kind = kind;
  t.name = std::move(name);
  t.value = value;
  return t;
}

Term Node(Term::Kind kind, std::string name, std::vector<Term> args) {
  Term t;
  t.kind = kind;
  t.name = std::move(name);
  t.args = std::move(args);
  return t;
}

// ---------------------------------------------------------------------------
// Yices: s-expressions with `name::sort` binders.

struct Sexp {
  bool is_atom = true;
  std::string atom;
  std::vector<Sexp> items;
};

class SexpReader {
 public:
  SexpReader(std::string_view text, int line) : text_(text), line_(line) {}

  Sexp ReadOne() {
    Sexp s = Read();
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing text after s-expression", line_);
    return s;
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  Sexp Read() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unexpected end of s-expression", line_);
    if (text_[pos_] == ')') Fail("unbalanced ')'", line_);
    if (text_[pos_] == '(') {
      ++pos_;
      Sexp list;
      list.is_atom = false;
      for (;;) {
        SkipSpace();
        if (pos_ >= text_.size()) Fail("missing ')'", line_);
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        list.items.push_back(Read());
      }
      return SplitBinders(std::move(list));
    }
    size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')') break;
      ++pos_;
    }
    Sexp atom;
    atom.atom = std::string(text_.substr(start, pos_ - start));
    return atom;
  }

  // `x::int` arrives as one atom, `x::(-> A B)` as the atom `x::` followed by
  // a list. Both become the three items x, ::, sort.
  static Sexp SplitBinders(Sexp list) {
    std::vector<Sexp> out;
    for (auto& item : list.items) {
      if (!item.is_atom) {
        out.push_back(std::move(item));
        continue;
      }
      size_t at = item.atom.find("::");
      if (at == std::string::npos || item.atom == "::") {
        out.push_back(std::move(item));
        continue;
      }
      Sexp name, sep, rest;
      name.atom = item.atom.substr(0, at);
      sep.atom = "::";
      rest.atom = item.atom.substr(at + 2);
      if (!name.atom.empty()) out.push_back(std::move(name));
      out.push_back(std::move(sep));
      if (!rest.atom.empty()) out.push_back(std::move(rest));
    }
    list.items = std::move(out);
    return list;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_;
};

class YicesReader {
 public:
  explicit YicesReader(int line) : line_(line) {}

  Sort ReadSort(const Sexp& s) {
    if (s.is_atom) {
      if (s.atom == "int") return Sort::Int();
      if (s.atom == "bool") return Sort::Bool();
      return Sort::Named(s.atom);
    }
    if (s.items.empty() || !s.items[0].is_atom) Fail("malformed sort", line_);
    const std::string& head = s.items[0].atom;
    if (head == "->") {
      if (s.items.size() < 3) Fail("function sort needs a range", line_);
      std::vector<Sort> args;
      for (size_t i = 1; i + 1 < s.items.size(); ++i) args.push_back(ReadSort(s.items[i]));
      return Sort::Func(std::move(args), ReadSort(s.items.back()));
    }
    if (head == "tuple") {
      std::vector<Sort> items;
      for (size_t i = 1; i < s.items.size(); ++i) items.push_back(ReadSort(s.items[i]));
      return Sort::Tuple(std::move(items));
    }
    if (head == "record") {
      Sort r;
      r.kind = Sort::Kind::kRecord;
      for (auto& [name, sort] : ReadBinders(s.items, 1)) {
        r.fields.push_back(name);
        r.items.push_back(sort);
      }
      return r;
    }
    Fail("unknown sort constructor '" + head + "'", line_);
  }

  // Reads `name :: sort` triples from items[from..].
  std::vector<Binder> ReadBinders(const std::vector<Sexp>& items, size_t from) {
    std::vector<Binder> out;
    size_t i = from;
    while (i < items.size()) {
      const Sexp& name = items[i];
      if (!name.is_atom || i + 1 >= items.size() || !items[i + 1].is_atom ||
          items[i + 1].atom != "::" || i + 2 >= items.size()) {
        Fail("malformed binder", line_);
      }
      out.emplace_back(name.atom, ReadSort(items[i + 2]));
      i += 3;
    }
    return out;
  }

  Term ReadTerm(const Sexp& s) {
    if (s.is_atom) {
      if (auto v = ParseInt(s.atom)) return Leaf(Term::Kind::kInt, {}, *v);
      if (s.atom == "true") return Leaf(Term::Kind::kBool, {}, 1);
      if (s.atom == "false") return Leaf(Term::Kind::kBool, {}, 0);
      if (s.atom == "::") Fail("unexpected '::'", line_);
      return Leaf(Term::Kind::kSym, s.atom);
    }
    if (s.items.empty()) Fail("empty application", line_);
    const Sexp& head = s.items[0];
    if (head.is_atom) {
      static const std::set<std::string> kOps = {"and", "or", "not", "=>", "<=>", "=",
                                                 "/=", "<", "<=", ">", ">=", "+",
                                                 "-", "*", "ite"};
      const std::string& h = head.atom;
      if (kOps.count(h)) {
        std::vector<Term> args;
        for (size_t i = 1; i < s.items.size(); ++i) args.push_back(ReadTerm(s.items[i]));
        if (h == "-" && args.size() == 1) return Node(Term::Kind::kOp, "neg", std::move(args));
        if (h == "ite" && args.size() != 3) Fail("ite takes three arguments", line_);
        if (h == "not" && args.size() != 1) Fail("not takes one argument", line_);
        return Node(Term::Kind::kOp, h, std::move(args));
      }
      if (h == "lambda" || h == "forall" || h == "exists") {
        if (s.items.size() != 3 || s.items[1].is_atom) Fail("malformed " + h, line_);
        Term t;
        t.kind = h == "lambda"   ? Term::Kind::kLambda
                 : h == "forall" ? Term::Kind::kForall
                                 : Term::Kind::kExists;
        t.binders = ReadBinders(s.items[1].items, 0);
        t.args.push_back(ReadTerm(s.items[2]));
        return t;
      }
      if (h == "select") {
        if (s.items.size() != 3 || !s.items[2].is_atom) Fail("malformed select", line_);
        Term t = Node(Term::Kind::kField, s.items[2].atom, {ReadTerm(s.items[1])});
        if (auto idx = ParseInt(s.items[2].atom)) {
          if (*idx < 1) Fail("tuple index starts at 1", line_);
          t.kind = Term::Kind::kTupleSel;
          t.value = *idx - 1;
          t.name.clear();
        }
        return t;
      }
      if (h == "mk-tuple") {
        std::vector<Term> args;
        for (size_t i = 1; i < s.items.size(); ++i) args.push_back(ReadTerm(s.items[i]));
        return Node(Term::Kind::kTuple, {}, std::move(args));
      }
      if (h == "update") {
        // (update f (args...) v)
        if (s.items.size() != 4 || s.items[2].is_atom) Fail("malformed update", line_);
        std::vector<Term> idx;
        for (auto& a : s.items[2].items) idx.push_back(ReadTerm(a));
        Term index = idx.size() == 1 ? idx[0] : Node(Term::Kind::kTuple, {}, idx);
        return Node(Term::Kind::kUpdate, {},
                    {ReadTerm(s.items[1]), std::move(index), ReadTerm(s.items[3])});
      }
    }
    std::vector<Term> args;
    for (const auto& item : s.items) args.push_back(ReadTerm(item));
    return Node(Term::Kind::kApp, {}, std::move(args));
  }

  Command ReadCommand(const Sexp& s) {
    if (s.is_atom || s.items.empty() || !s.items[0].is_atom) Fail("expected a command", line_);
    const std::string& head = s.items[0].atom;
    Command c;
    if (head == "check") {
      c.kind = Command::Kind::kCheck;
    } else if (head == "set-evidence!") {
      c.kind = Command::Kind::kOther;
    } else if (head == "assert") {
      if (s.items.size() != 2) Fail("assert takes one formula", line_);
      c.kind = Command::Kind::kAssert;
      c.term = ReadTerm(s.items[1]);
    } else if (head == "define-type") {
      if (s.items.size() < 2 || !s.items[1].is_atom) Fail("malformed define-type", line_);
      c.kind = Command::Kind::kTypeDecl;
      c.name = s.items[1].atom;
      if (s.items.size() == 3) {
        const Sexp& body = s.items[2];
        if (body.is_atom || body.items.empty() || !body.items[0].is_atom) {
          Fail("malformed type definition", line_);
        }
        if (body.items[0].atom == "scalar") {
          for (size_t i = 1; i < body.items.size(); ++i) {
            if (!body.items[i].is_atom) Fail("malformed scalar", line_);
            c.constants.push_back(body.items[i].atom);
          }
        } else if (body.items[0].atom == "subtype") {
          if (body.items.size() != 3 || body.items[1].is_atom) Fail("malformed subtype", line_);
          auto binders = ReadBinders(body.items[1].items, 0);
          if (binders.size() != 1) Fail("subtype binds one variable", line_);
          c.subtype_binder = binders[0];
          c.subtype_pred = ReadTerm(body.items[2]);
        } else {
          Fail("unsupported type definition", line_);
        }
      } else if (s.items.size() > 3) {
        Fail("malformed define-type", line_);
      }
    } else if (head == "define") {
      if (s.items.size() < 4 || s.items.size() > 5 || !s.items[1].is_atom ||
          !s.items[2].is_atom || s.items[2].atom != "::") {
        Fail("malformed define", line_);
      }
      c.kind = Command::Kind::kDefine;
      c.name = s.items[1].atom;
      c.sort = ReadSort(s.items[3]);
      if (s.items.size() == 5) c.term = ReadTerm(s.items[4]);
    } else {
      Fail("unknown command '" + head + "'", line_);
    }
    return c;
  }

 private:
  int line_;
};

// ---------------------------------------------------------------------------
// CVC3 presentation language.

struct Token {
  enum class Kind { kIdent, kInt, kBits, kPunct, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
  int64_t value = 0;
};

class Cvc3Lexer {
 public:
  Cvc3Lexer(std::string_view text, int line) : text_(text), line_(line) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      if (pos_ >= text_.size()) break;
      out.push_back(Next());
    }
    out.push_back(Token{});
    return out;
  }

 private:
  Token Next() {
    char c = text_[pos_];
    Token t;
    if (text_.substr(pos_, 4) == "0bin") {
      size_t start = pos_ + 4;
      size_t end = start;
      while (end < text_.size() && (text_[end] == '0' || text_[end] == '1')) ++end;
      if (end == start) Fail("empty bit-vector literal", line_);
      t.kind = Token::Kind::kBits;
      t.value = text_[end - 1] == '1' ? 1 : 0;
      t.text = std::string(text_.substr(pos_, end - pos_));
      pos_ = end;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      t.kind = Token::Kind::kInt;
      t.text = std::string(text_.substr(start, pos_ - start));
      auto v = ParseInt(t.text);
      if (!v) Fail("integer literal out of range", line_);
      t.value = *v;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '\'' || d == '?' ||
            d == '!') {
          ++pos_;
        } else {
          break;
        }
      }
      t.kind = Token::Kind::kIdent;
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    static const char* kPuncts[] = {"<=>", "[#", "#]", "(#", "#)", "<=", ">=", "/=", "=>",
                                    "->",  ":=", "(",  ")",  "[",  "]",  ",",  ":",  ";",
                                    ".",   "=",  "<",  ">",  "+",  "-",  "*",  "|"};
    for (const char* p : kPuncts) {
      std::string_view pv(p);
      if (text_.substr(pos_, pv.size()) == pv) {
        t.kind = Token::Kind::kPunct;
        t.text = std::string(pv);
        pos_ += pv.size();
        return t;
      }
    }
    Fail(std::string("unexpected character '") + c + "'", line_);
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_;
};

class Cvc3Reader {
 public:
  Cvc3Reader(std::string_view text, int line) : toks_(Cvc3Lexer(text, line).Run()), line_(line) {}

  Command ReadCommand() {
    Command c;
    if (IsIdent("ASSERT")) {
      Advance();
      c.kind = Command::Kind::kAssert;
      c.term = ReadTerm();
    } else if (IsIdent("CHECKSAT") || IsIdent("QUERY")) {
      Advance();
      c.kind = Command::Kind::kCheck;
      if (!AtPunct(";") && !AtEnd()) ReadTerm();
    } else if (IsIdent("DATATYPE")) {
      Advance();
      c.kind = Command::Kind::kTypeDecl;
      c.name = ExpectIdent();
      ExpectPunct("=");
      c.constants.push_back(ExpectIdent());
      while (AtPunct("|")) {
        Advance();
        c.constants.push_back(ExpectIdent());
      }
      if (!IsIdent("END")) Fail("expected END", line_);
      Advance();
    } else {
      c.name = ExpectIdent();
      ExpectPunct(":");
      if (IsIdent("TYPE")) {
        Advance();
        c.kind = Command::Kind::kTypeDecl;
        if (AtPunct("=")) {
          Advance();
          if (!IsIdent("SUBTYPE")) Fail("expected SUBTYPE", line_);
          Advance();
          ExpectPunct("(");
          if (!IsIdent("LAMBDA")) Fail("expected LAMBDA", line_);
          Advance();
          auto binders = ReadBinders();
          if (binders.size() != 1) Fail("subtype binds one variable", line_);
          ExpectPunct(":");
          c.subtype_binder = binders[0];
          c.subtype_pred = ReadTerm();
          ExpectPunct(")");
        }
      } else {
        c.kind = Command::Kind::kDefine;
        c.sort = ReadSort();
        if (AtPunct("=")) {
          Advance();
          c.term = ReadTerm();
        }
      }
    }
    if (AtPunct(";")) Advance();
    if (!AtEnd()) Fail("unexpected '" + Peek().text + "'", line_);
    return c;
  }

  Term ReadWholeTerm() {
    Term t = ReadTerm();
    if (!AtEnd()) Fail("unexpected '" + Peek().text + "'", line_);
    return t;
  }

 private:
  const Token& Peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  void Advance() {
    if (pos_ + 1 < toks_.size()) ++pos_;
  }
  bool AtEnd() const { return Peek().kind == Token::Kind::kEnd; }
  bool AtPunct(std::string_view p, size_t ahead = 0) const {
    return Peek(ahead).kind == Token::Kind::kPunct && Peek(ahead).text == p;
  }
  bool IsIdent(std::string_view w) const {
    return Peek().kind == Token::Kind::kIdent && Peek().text == w;
  }
  void ExpectPunct(std::string_view p) {
    if (!AtPunct(p)) {
      Fail("expected '" + std::string(p) + "' but found '" + Peek().text + "'", line_);
    }
    Advance();
  }
  std::string ExpectIdent() {
    if (Peek().kind != Token::Kind::kIdent) {
      Fail("expected an identifier but found '" + Peek().text + "'", line_);
    }
    std::string s = Peek().text;
    Advance();
    return s;
  }

  Sort ReadSort() {
    if (AtPunct("(")) {
      // (A, B) -> C
      Advance();
      std::vector<Sort> args{ReadSort()};
      while (AtPunct(",")) {
        Advance();
        args.push_back(ReadSort());
      }
      ExpectPunct(")");
      ExpectPunct("->");
      return Sort::Func(std::move(args), ReadSort());
    }
    Sort base = ReadBaseSort();
    if (AtPunct("->")) {
      Advance();
      return Sort::Func({base}, ReadSort());
    }
    return base;
  }

  Sort ReadBaseSort() {
    if (AtPunct("[")) {
      Advance();
      std::vector<Sort> items{ReadSort()};
      while (AtPunct(",")) {
        Advance();
        items.push_back(ReadSort());
      }
      ExpectPunct("]");
      return Sort::Tuple(std::move(items));
    }
    if (AtPunct("[#")) {
      Advance();
      Sort r;
      r.kind = Sort::Kind::kRecord;
      for (;;) {
        r.fields.push_back(ExpectIdent());
        ExpectPunct(":");
        r.items.push_back(ReadSort());
        if (!AtPunct(",")) break;
        Advance();
      }
      ExpectPunct("#]");
      return r;
    }
    std::string name = ExpectIdent();
    if (name == "INT") return Sort::Int();
    if (name == "BOOLEAN") return Sort::Bool();
    if (name == "BITVECTOR") {
      ExpectPunct("(");
      if (Peek().kind != Token::Kind::kInt || Peek().value != 1) {
        Fail("only one-bit vectors are supported", line_);
      }
      Advance();
      ExpectPunct(")");
      return Sort::Bits();
    }
    if (name == "ARRAY") {
      Sort index = ReadSort();
      if (!IsIdent("OF")) Fail("expected OF", line_);
      Advance();
      return Sort::Func({index}, ReadSort());
    }
    return Sort::Named(name);
  }

  // (a, b: S, c: T)
  std::vector<Binder> ReadBinders() {
    ExpectPunct("(");
    std::vector<Binder> out;
    for (;;) {
      std::vector<std::string> names{ExpectIdent()};
      while (AtPunct(",")) {
        Advance();
        names.push_back(ExpectIdent());
      }
      ExpectPunct(":");
      Sort s = ReadSort();
      for (auto& n : names) out.emplace_back(n, s);
      if (!AtPunct(",")) break;
      Advance();
    }
    ExpectPunct(")");
    return out;
  }

  Term ReadTerm() { return ReadIff(); }

  Term ReadIff() {
    Term lhs = ReadImplies();
    while (AtPunct("<=>")) {
      Advance();
      lhs = Node(Term::Kind::kOp, "<=>", {std::move(lhs), ReadImplies()});
    }
    return lhs;
  }

  Term ReadImplies() {
    Term lhs = ReadOr();
    if (AtPunct("=>")) {
      Advance();
      return Node(Term::Kind::kOp, "=>", {std::move(lhs), ReadImplies()});
    }
    return lhs;
  }

  Term ReadOr() {
    Term first = ReadAnd();
    if (!IsIdent("OR")) return first;
    std::vector<Term> args{std::move(first)};
    while (IsIdent("OR")) {
      Advance();
      args.push_back(ReadAnd());
    }
    return Node(Term::Kind::kOp, "or", std::move(args));
  }

  Term ReadAnd() {
    Term first = ReadNot();
    if (!IsIdent("AND")) return first;
    std::vector<Term> args{std::move(first)};
    while (IsIdent("AND")) {
      Advance();
      args.push_back(ReadNot());
    }
    return Node(Term::Kind::kOp, "and", std::move(args));
  }

  Term ReadNot() {
    if (IsIdent("NOT")) {
      Advance();
      return Node(Term::Kind::kOp, "not", {ReadNot()});
    }
    return ReadCompare();
  }

  Term ReadCompare() {
    Term lhs = ReadAdd();
    for (const char* op : {"=", "/=", "<=", ">=", "<", ">"}) {
      if (AtPunct(op)) {
        Advance();
        return Node(Term::Kind::kOp, op, {std::move(lhs), ReadAdd()});
      }
    }
    return lhs;
  }

  Term ReadAdd() {
    Term lhs = ReadMul();
    while (AtPunct("+") || AtPunct("-")) {
      std::string op = Peek().text;
      Advance();
      lhs = Node(Term::Kind::kOp, op, {std::move(lhs), ReadMul()});
    }
    return lhs;
  }

  Term ReadMul() {
    Term lhs = ReadUnary();
    while (AtPunct("*")) {
      Advance();
      lhs = Node(Term::Kind::kOp, "*", {std::move(lhs), ReadUnary()});
    }
    return lhs;
  }

  Term ReadUnary() {
    if (AtPunct("-")) {
      Advance();
      Term inner = ReadUnary();
      if (inner.kind == Term::Kind::kInt) {
        inner.value = -inner.value;
        return inner;
      }
      return Node(Term::Kind::kOp, "neg", {std::move(inner)});
    }
    return ReadPostfix();
  }

  Term ReadPostfix() {
    Term t = ReadPrimary();
    for (;;) {
      if (AtPunct("[")) {
        Advance();
        Term index = ReadTerm();
        ExpectPunct("]");
        t = Node(Term::Kind::kApp, {}, {std::move(t), std::move(index)});
      } else if (AtPunct(".")) {
        Advance();
        if (Peek().kind == Token::Kind::kInt) {
          Term sel = Node(Term::Kind::kTupleSel, {}, {std::move(t)});
          sel.value = Peek().value;
          Advance();
          t = std::move(sel);
        } else {
          t = Node(Term::Kind::kField, ExpectIdent(), {std::move(t)});
        }
      } else if (IsIdent("WITH")) {
        Advance();
        for (;;) {
          ExpectPunct("[");
          Term index = ReadTerm();
          ExpectPunct("]");
          ExpectPunct(":=");
          Term value = ReadUnary();
          t = Node(Term::Kind::kUpdate, {}, {std::move(t), std::move(index), std::move(value)});
          if (!AtPunct(",") || !AtPunct("[", 1)) break;
          Advance();
        }
      } else {
        return t;
      }
    }
  }

  Term ReadQuantifier(Term::Kind kind) {
    Advance();
    Term t;
    t.kind = kind;
    t.binders = ReadBinders();
    ExpectPunct(":");
    t.args.push_back(ReadTerm());
    return t;
  }

  Term ReadPrimary() {
    const Token& tok = Peek();
    switch (tok.kind) {
      case Token::Kind::kInt: {
        Term t = Leaf(Term::Kind::kInt, {}, tok.value);
        Advance();
        return t;
      }
      case Token::Kind::kBits: {
        Term t = Leaf(Term::Kind::kBits, {}, tok.value);
        Advance();
        return t;
      }
      case Token::Kind::kEnd:
        Fail("unexpected end of sentence", line_);
      case Token::Kind::kPunct:
        break;
      case Token::Kind::kIdent: {
        const std::string& w = tok.text;
        if (w == "TRUE" || w == "FALSE") {
          Term t = Leaf(Term::Kind::kBool, {}, w == "TRUE" ? 1 : 0);
          Advance();
          return t;
        }
        if (w == "FORALL") return ReadQuantifier(Term::Kind::kForall);
        if (w == "EXISTS") return ReadQuantifier(Term::Kind::kExists);
        if (w == "LAMBDA") return ReadQuantifier(Term::Kind::kLambda);
        if (w == "IF") return ReadIf();
        std::string name = w;
        Advance();
        Term sym = Leaf(Term::Kind::kSym, name);
        if (AtPunct("(")) {
          Advance();
          std::vector<Term> args{std::move(sym), ReadTerm()};
          while (AtPunct(",")) {
            Advance();
            args.push_back(ReadTerm());
          }
          ExpectPunct(")");
          return Node(Term::Kind::kApp, {}, std::move(args));
        }
        return sym;
      }
    }
    if (AtPunct("(")) {
      Advance();
      if (IsIdent("ARRAY")) {
        Advance();
        Term t;
        t.kind = Term::Kind::kLambda;
        t.binders = ReadBinders();
        ExpectPunct(":");
        t.args.push_back(ReadTerm());
        ExpectPunct(")");
        return t;
      }
      Term first = ReadTerm();
      if (AtPunct(",")) {
        std::vector<Term> items{std::move(first)};
        while (AtPunct(",")) {
          Advance();
          items.push_back(ReadTerm());
        }
        ExpectPunct(")");
        return Node(Term::Kind::kTuple, {}, std::move(items));
      }
      ExpectPunct(")");
      return first;
    }
    Fail("unexpected '" + tok.text + "'", line_);
  }

  Term ReadIf() {
    Advance();
    Term cond = ReadTerm();
    if (!IsIdent("THEN")) Fail("expected THEN", line_);
    Advance();
    Term then_branch = ReadTerm();
    Term else_branch;
    if (IsIdent("ELSIF")) {
      else_branch = ReadIf();
      return Node(Term::Kind::kOp, "ite",
                  {std::move(cond), std::move(then_branch), std::move(else_branch)});
    }
    if (!IsIdent("ELSE")) Fail("expected ELSE", line_);
    Advance();
    else_branch = ReadTerm();
    if (!IsIdent("ENDIF")) Fail("expected ENDIF", line_);
    Advance();
    return Node(Term::Kind::kOp, "ite",
                {std::move(cond), std::move(then_branch), std::move(else_branch)});
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  int line_;
};

}  // namespace

Command ParseYicesCommand(std::string_view text, int line) {
  Sexp s = SexpReader(text, line).ReadOne();
  return YicesReader(line).ReadCommand(s);
}

Term ParseYicesTerm(std::string_view text, int line) {
  Sexp s = SexpReader(text, line).ReadOne();
  return YicesReader(line).ReadTerm(s);
}

Command ParseCvc3Command(std::string_view text, int line) {
  return Cvc3Reader(text, line).ReadCommand();
}

Term ParseCvc3Term(std::string_view text, int line) {
  return Cvc3Reader(text, line).ReadWholeTerm();
}

}  // namespace ztc::smt

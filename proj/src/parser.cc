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

#include "ztc/parser.h"

#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <utility>

#include "ztc/error.h"

namespace ztc {

TypeExpr TypeDecl::AsType() const {
  return is_basic ? TypeExpr::Basic(name) : TypeExpr::Free(name, constants);
}

const TestSpec* SourceFile::Find(std::string_view name) const {
  for (const TestSpec& s : specs) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

namespace {

void FlattenInto(const SourceFile& file, const TestSpec& spec, TestSpec& out) {
  for (const std::string& inc : spec.includes) {
    const TestSpec* included = file.Find(inc);
    if (included == nullptr) {
      throw ParseError(ParseError::Kind::kUnknownInclude,
                       "unknown included schema '" + inc + "'", spec.loc);
    }
    FlattenInto(file, *included, out);
  }
  out.decls.insert(out.decls.end(), spec.decls.begin(), spec.decls.end());
  out.preds.insert(out.preds.end(), spec.preds.begin(), spec.preds.end());
}

}  // namespace

TestSpec SourceFile::Flatten(std::string_view name) const {
  const TestSpec* spec = Find(name);
  if (spec == nullptr) {
    throw ParseError(ParseError::Kind::kUnknownInclude,
                     "no schema named '" + std::string(name) + "'", {});
  }
  TestSpec out;
  out.name = spec->name;
  out.loc = spec->loc;
  FlattenInto(*this, *spec, out);
  return out;
}

namespace {

enum class Tok {
  kIdent,
  kInt,
  kLBrace,
  kRBrace,
  kLParen,
  kRParen,
  kComma,
  kSemi,
  kColon,
  kBar,
  kMaplet,   // |->
  kDotDot,   // ..
  kAt,       // @
  kHash,     // #
  kEq,       // =
  kNeq,      // !=
  kLt,
  kLeq,
  kGt,
  kGeq,
  kMinus,
  kPlus,
  kStar,
  kDefines,  // ::=
  kEof,
};

struct Token {
  Tok kind = Tok::kEof;
  std::string text;
  SourceLocation loc;
};

std::string Describe(Tok t) {
  switch (t) {
    case Tok::kIdent:
      return "identifier";
    case Tok::kInt:
      return "integer";
    case Tok::kLBrace:
      return "'{'";
    case Tok::kRBrace:
      return "'}'";
    case Tok::kLParen:
      return "'('";
    case Tok::kRParen:
      return "')'";
    case Tok::kComma:
      return "','";
    case Tok::kSemi:
      return "';'";
    case Tok::kColon:
      return "':'";
    case Tok::kBar:
      return "'|'";
    case Tok::kMaplet:
      return "'|->'";
    case Tok::kDotDot:
      return "'..'";
    case Tok::kAt:
      return "'@'";
    case Tok::kHash:
      return "'#'";
    case Tok::kEq:
      return "'='";
    case Tok::kNeq:
      return "'!='";
    case Tok::kLt:
      return "'<'";
    case Tok::kLeq:
      return "'<='";
    case Tok::kGt:
      return "'>'";
    case Tok::kGeq:
      return "'>='";
    case Tok::kMinus:
      return "'-'";
    case Tok::kPlus:
      return "'+'";
    case Tok::kStar:
      return "'*'";
    case Tok::kDefines:
      return "'::='";
    case Tok::kEof:
      return "end of input";
  }
  return "?";
}

const std::set<std::string, std::less<>>& Reserved() {
  static const std::set<std::string, std::less<>> kReserved = {
      "basic", "free",     "spec",        "NAT", "INT",    "P",
      "seq",   "fset",     "rel",         "pfun", "fun",   "ffun",
      "in",    "notin",    "subseteq",    "notsubseteq",   "not",
      "cup",   "cap",      "setminus",    "dom", "ran"};
  return kReserved;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (true) {
      SkipSpaceAndComments();
      Token t;
      t.loc = {line_, col_};
      if (pos_ >= text_.size()) {
        t.kind = Tok::kEof;
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
          Advance();
        }
        if (pos_ < text_.size() && (text_[pos_] == '?' || text_[pos_] == '!')) {
          // `x!=` is `x != ...`, not the output variable `x!`.
          if (!(text_[pos_] == '!' && Peek(1) == '=')) Advance();
        }
        t.kind = Tok::kIdent;
        t.text = std::string(text_.substr(start, pos_ - start));
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          Advance();
        }
        t.kind = Tok::kInt;
        t.text = std::string(text_.substr(start, pos_ - start));
      } else {
        t.kind = Punct(t.loc);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char Peek(size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void SkipSpaceAndComments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else if (c == '-' && Peek(1) == '-') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
      } else {
        return;
      }
    }
  }

  Tok Punct(SourceLocation loc) {
    auto take = [this](int n, Tok t) {
      for (int i = 0; i < n; ++i) Advance();
      return t;
    };
    char c = text_[pos_];
    switch (c) {
      case '{':
        return take(1, Tok::kLBrace);
      case '}':
        return take(1, Tok::kRBrace);
      case '(':
        return take(1, Tok::kLParen);
      case ')':
        return take(1, Tok::kRParen);
      case ',':
        return take(1, Tok::kComma);
      case ';':
        return take(1, Tok::kSemi);
      case '@':
        return take(1, Tok::kAt);
      case '#':
        return take(1, Tok::kHash);
      case '=':
        return take(1, Tok::kEq);
      case '+':
        return take(1, Tok::kPlus);
      case '*':
        return take(1, Tok::kStar);
      case '-':
        return take(1, Tok::kMinus);
      case ':':
        if (Peek(1) == ':' && Peek(2) == '=') return take(3, Tok::kDefines);
        return take(1, Tok::kColon);
      case '|':
        if (Peek(1) == '-' && Peek(2) == '>') return take(3, Tok::kMaplet);
        return take(1, Tok::kBar);
      case '.':
        if (Peek(1) == '.') return take(2, Tok::kDotDot);
        break;
      case '!':
        if (Peek(1) == '=') return take(2, Tok::kNeq);
        break;
      case '<':
        if (Peek(1) == '=') return take(2, Tok::kLeq);
        return take(1, Tok::kLt);
      case '>':
        if (Peek(1) == '=') return take(2, Tok::kGeq);
        return take(1, Tok::kGt);
      default:
        break;
    }
    throw ParseError(ParseError::Kind::kSyntax,
                     std::string("unexpected character '") + c + "'", loc);
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string path)
      : toks_(std::move(tokens)) {
    file_.path = std::move(path);
  }

  SourceFile Run() {
    while (!At(Tok::kEof)) {
      const Token& t = Expect(Tok::kIdent, {"'basic'", "'free'", "'spec'"});
      if (t.text == "basic") {
        ParseBasic();
      } else if (t.text == "free") {
        ParseFree();
      } else if (t.text == "spec") {
        ParseSpec(t.loc);
      } else {
        Fail(t, {"'basic'", "'free'", "'spec'"});
      }
    }
    return std::move(file_);
  }

 private:
  const Token& Cur() const { return toks_[pos_]; }
  bool At(Tok k) const { return Cur().kind == k; }
  bool AtWord(std::string_view w) const {
    return At(Tok::kIdent) && Cur().text == w;
  }

  [[noreturn]] void Fail(const Token& t, std::vector<std::string> expected) {
    std::string msg = "unexpected ";
    msg += t.kind == Tok::kEof ? std::string("end of input")
                               : "'" + t.text + "'";
    if (t.kind != Tok::kEof && t.text.empty()) msg = "unexpected " + Describe(t.kind);
    if (!expected.empty()) {
      msg += "; expected ";
      for (size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
      }
    }
    throw ParseError(ParseError::Kind::kSyntax, msg, t.loc, std::move(expected));
  }

  const Token& Expect(Tok k, std::vector<std::string> expected = {}) {
    if (!At(k)) {
      if (expected.empty()) expected.push_back(Describe(k));
      Fail(Cur(), std::move(expected));
    }
    return toks_[pos_++];
  }

  bool Accept(Tok k) {
    if (!At(k)) return false;
    ++pos_;
    return true;
  }

  void ExpectWord(std::string_view w) {
    if (!AtWord(w)) Fail(Cur(), {"'" + std::string(w) + "'"});
    ++pos_;
  }

  const Token& ExpectName(std::string_view what) {
    const Token& t = Expect(Tok::kIdent, {std::string(what)});
    if (Reserved().count(t.text) != 0) {
      throw ParseError(ParseError::Kind::kSyntax,
                       "reserved word '" + t.text + "' used as " +
                           std::string(what),
                       t.loc, {std::string(what)});
    }
    return t;
  }

  void ClaimGlobalName(const Token& t) {
    if (!global_names_.insert(t.text).second || t.text == "x") {
      throw ParseError(ParseError::Kind::kDuplicateName,
                       "name '" + t.text + "' is already declared", t.loc);
    }
  }

  void ParseBasic() {
    do {
      const Token& name = ExpectName("type name");
      ClaimGlobalName(name);
      TypeDecl d;
      d.name = name.text;
      d.is_basic = true;
      d.loc = name.loc;
      file_.types.push_back(d);
      types_[d.name] = file_.types.size() - 1;
    } while (Accept(Tok::kComma));
    Expect(Tok::kSemi);
  }

  void ParseFree() {
    const Token& name = ExpectName("type name");
    ClaimGlobalName(name);
    TypeDecl d;
    d.name = name.text;
    d.is_basic = false;
    d.loc = name.loc;
    Expect(Tok::kDefines);
    do {
      const Token& c = ExpectName("constant name");
      ClaimGlobalName(c);
      d.constants.push_back(c.text);
    } while (Accept(Tok::kBar));
    Expect(Tok::kSemi);
    file_.types.push_back(d);
    types_[d.name] = file_.types.size() - 1;
    const TypeExpr type = file_.types.back().AsType();
    for (const std::string& c : d.constants) constants_.emplace(c, type);
  }

  // ---- types ----

  static bool IsArrow(const Token& t) {
    return t.kind == Tok::kIdent &&
           (t.text == "rel" || t.text == "pfun" || t.text == "fun" ||
            t.text == "ffun");
  }

  bool AtTypeStart() const {
    if (At(Tok::kLParen)) return true;
    if (!At(Tok::kIdent)) return false;
    const std::string& w = Cur().text;
    return w == "NAT" || w == "INT" || w == "P" || w == "seq" ||
           w == "fset" || types_.count(w) != 0;
  }

  TypeExpr ParseType() {
    TypeExpr left = ParseProductType();
    if (IsArrow(Cur())) {
      const std::string op = toks_[pos_++].text;
      TypeExpr right = ParseType();
      SynonymKind kind = op == "rel"    ? SynonymKind::kRel
                         : op == "pfun" ? SynonymKind::kPfun
                         : op == "fun"  ? SynonymKind::kFun
                                        : SynonymKind::kFfun;
      return TypeExpr::Synonym(kind, {std::move(left), std::move(right)});
    }
    return left;
  }

  TypeExpr ParseProductType() {
    TypeExpr t = ParsePrefixType();
    while (AtWord("x")) {
      ++pos_;
      t = TypeExpr::Product(std::move(t), ParsePrefixType());
    }
    return t;
  }

  TypeExpr ParsePrefixType() {
    if (AtWord("P")) {
      ++pos_;
      return TypeExpr::Power(ParsePrefixType());
    }
    if (AtWord("seq")) {
      ++pos_;
      return TypeExpr::Synonym(SynonymKind::kSeq, {ParsePrefixType()});
    }
    if (AtWord("fset")) {
      ++pos_;
      return TypeExpr::Synonym(SynonymKind::kFinset, {ParsePrefixType()});
    }
    return ParseTypeAtom();
  }

  TypeExpr ParseTypeAtom() {
    if (Accept(Tok::kLParen)) {
      TypeExpr t = ParseType();
      Expect(Tok::kRParen);
      return t;
    }
    const Token& t =
        Expect(Tok::kIdent, {"type name", "'NAT'", "'INT'", "'P'", "'('"});
    if (t.text == "NAT") return TypeExpr::Nat();
    if (t.text == "INT") return TypeExpr::Int();
    auto it = types_.find(t.text);
    if (it == types_.end()) {
      if (Reserved().count(t.text) != 0) {
        Fail(t, {"type name", "'NAT'", "'INT'", "'P'", "'('"});
      }
      throw ParseError(ParseError::Kind::kUnknownType,
                       "unknown type '" + t.text + "'", t.loc);
    }
    return file_.types[it->second].AsType();
  }

  // ---- specs ----

  void ParseSpec(SourceLocation loc) {
    const Token& name = ExpectName("schema name");
    if (file_.Find(name.text) != nullptr) {
      throw ParseError(ParseError::Kind::kDuplicateName,
                       "schema '" + name.text + "' is already defined",
                       name.loc);
    }
    if (global_names_.count(name.text) != 0) {
      throw ParseError(ParseError::Kind::kDuplicateName,
                       "name '" + name.text + "' is already declared",
                       name.loc);
    }
    TestSpec spec;
    spec.name = name.text;
    spec.loc = loc;
    scope_.clear();
    Expect(Tok::kLBrace);
    if (!At(Tok::kBar) && !At(Tok::kRBrace)) ParseDeclPart(spec);
    if (Accept(Tok::kBar)) {
      if (!At(Tok::kRBrace)) ParsePredPart(spec);
    }
    Expect(Tok::kRBrace, {"';'", "'|'", "'}'"});
    file_.specs.push_back(std::move(spec));
  }

  void DeclareVar(TestSpec& spec, const Token& name, const TypeExpr& type) {
    if (scope_.count(name.text) != 0) {
      throw ParseError(ParseError::Kind::kDuplicateVariable,
                       "variable '" + name.text + "' is declared twice",
                       name.loc);
    }
    if (global_names_.count(name.text) != 0) {
      throw ParseError(ParseError::Kind::kDuplicateName,
                       "variable '" + name.text +
                           "' clashes with a type or constant name",
                       name.loc);
    }
    scope_.insert(name.text);
    spec.decls.push_back(Decl{name.text, type, name.loc});
  }

  void IncludeSpec(TestSpec& spec, const Token& name) {
    const TestSpec* inc = file_.Find(name.text);
    if (inc == nullptr) {
      throw ParseError(ParseError::Kind::kUnknownInclude,
                       "unknown schema '" + name.text + "' in inclusion",
                       name.loc);
    }
    for (const Decl& d : file_.Flatten(name.text).decls) {
      Token t = name;
      t.text = d.name;
      if (scope_.count(d.name) != 0) {
        throw ParseError(ParseError::Kind::kDuplicateVariable,
                         "variable '" + d.name + "' is declared twice",
                         name.loc);
      }
      scope_.insert(d.name);
    }
    spec.includes.push_back(name.text);
  }

  void ParseDeclPart(TestSpec& spec) {
    do {
      if (At(Tok::kBar) || At(Tok::kRBrace)) break;  // trailing ';'
      std::vector<Token> names;
      names.push_back(ExpectName("variable or schema name"));
      if (!At(Tok::kColon) && !At(Tok::kComma)) {
        IncludeSpec(spec, names.front());
        continue;
      }
      while (Accept(Tok::kComma)) names.push_back(ExpectName("variable name"));
      Expect(Tok::kColon, {"':'", "','"});
      TypeExpr type = ParseType();
      for (const Token& n : names) DeclareVar(spec, n, type);
    } while (Accept(Tok::kSemi));
  }

  void ParsePredPart(TestSpec& spec) {
    do {
      if (At(Tok::kRBrace)) break;
      ParsePredLine(spec);
    } while (Accept(Tok::kSemi));
  }

  std::optional<Pred::Kind> RelOp() const {
    switch (Cur().kind) {
      case Tok::kEq:
        return Pred::Kind::kEqual;
      case Tok::kNeq:
        return Pred::Kind::kNotEqual;
      case Tok::kLt:
        return Pred::Kind::kLt;
      case Tok::kLeq:
        return Pred::Kind::kLeq;
      case Tok::kGt:
        return Pred::Kind::kGt;
      case Tok::kGeq:
        return Pred::Kind::kGeq;
      case Tok::kIdent:
        if (Cur().text == "in") return Pred::Kind::kMemberOf;
        if (Cur().text == "notin") return Pred::Kind::kNotMemberOf;
        if (Cur().text == "subseteq") return Pred::Kind::kSubsetEq;
        if (Cur().text == "notsubseteq") return Pred::Kind::kNotSubsetEq;
        return std::nullopt;
      default:
        return std::nullopt;
    }
  }

  static Pred::Kind Negate(Pred::Kind k, const Token& at) {
    switch (k) {
      case Pred::Kind::kMemberOf:
        return Pred::Kind::kNotMemberOf;
      case Pred::Kind::kEqual:
        return Pred::Kind::kNotEqual;
      case Pred::Kind::kSubsetEq:
        return Pred::Kind::kNotSubsetEq;
      default:
        throw ParseError(ParseError::Kind::kSyntax,
                         "'not' applies only to 'in', '=' and 'subseteq'",
                         at.loc, {"'in'", "'='", "'subseteq'"});
    }
  }

  void ParsePredLine(TestSpec& spec) {
    const Token& start = Cur();
    const bool negated = AtWord("not");
    if (negated) ++pos_;
    Expr lhs = ParseExpr();
    auto op = RelOp();
    if (!op) {
      Fail(Cur(), {"'='", "'!='", "'<'", "'<='", "'>'", "'>='", "'in'",
                   "'notin'", "'subseteq'", "'notsubseteq'"});
    }
    const Token& op_tok = Cur();
    ++pos_;
    Expr rhs = ParseExpr();
    if (negated) {
      spec.preds.push_back(Pred{Negate(*op, op_tok), lhs, rhs, start.loc});
      if (RelOp()) {
        Fail(Cur(), {"';'", "'}'"});
      }
      return;
    }
    spec.preds.push_back(Pred{*op, lhs, rhs, start.loc});
    // `a < b < c` is sugar for `a < b; b < c`.
    while (auto next = RelOp()) {
      SourceLocation loc = Cur().loc;
      ++pos_;
      Expr further = ParseExpr();
      spec.preds.push_back(Pred{*next, rhs, further, loc});
      rhs = std::move(further);
    }
  }

  // ---- expressions ----

  Expr ParseExpr() {
    Expr e = ParseRange();
    while (At(Tok::kMaplet)) {
      SourceLocation loc = Cur().loc;
      ++pos_;
      e = Expr::Tuple(std::move(e), ParseRange(), loc);
    }
    return e;
  }

  Expr ParseRange() {
    Expr e = ParseAdditive();
    if (At(Tok::kDotDot)) {
      SourceLocation loc = Cur().loc;
      ++pos_;
      e = Expr::Range(std::move(e), ParseAdditive(), loc);
    }
    return e;
  }

  Expr ParseAdditive() {
    Expr e = ParseMultiplicative();
    while (true) {
      std::optional<Expr::Kind> k;
      if (At(Tok::kPlus)) k = Expr::Kind::kAdd;
      if (At(Tok::kMinus)) k = Expr::Kind::kSub;
      if (AtWord("cup")) k = Expr::Kind::kUnion;
      if (AtWord("setminus")) k = Expr::Kind::kDiff;
      if (!k) return e;
      SourceLocation loc = Cur().loc;
      ++pos_;
      e = Expr::Binary(*k, std::move(e), ParseMultiplicative(), loc);
    }
  }

  Expr ParseMultiplicative() {
    Expr e = ParseUnary();
    while (true) {
      std::optional<Expr::Kind> k;
      if (At(Tok::kStar)) k = Expr::Kind::kMul;
      if (AtWord("cap")) k = Expr::Kind::kInter;
      if (!k) return e;
      SourceLocation loc = Cur().loc;
      ++pos_;
      e = Expr::Binary(*k, std::move(e), ParseUnary(), loc);
    }
  }

  Expr ParseUnary() {
    SourceLocation loc = Cur().loc;
    if (AtWord("dom")) {
      ++pos_;
      return Expr::Unary(Expr::Kind::kDom, ParseUnary(), loc);
    }
    if (AtWord("ran")) {
      ++pos_;
      return Expr::Unary(Expr::Kind::kRan, ParseUnary(), loc);
    }
    if (Accept(Tok::kHash)) {
      return Expr::Unary(Expr::Kind::kCard, ParseUnary(), loc);
    }
    if (Accept(Tok::kMinus)) {
      if (At(Tok::kInt)) {
        return Expr::IntLit(-ParseIntValue(toks_[pos_++]), loc);
      }
      return Expr::Binary(Expr::Kind::kSub, Expr::IntLit(0, loc), ParseUnary(),
                          loc);
    }
    return ParseApplication();
  }

  Expr ParseApplication() {
    Expr e = ParsePrimary();
    while (At(Tok::kAt)) {
      SourceLocation loc = Cur().loc;
      ++pos_;
      e = Expr::Apply(std::move(e), ParsePrimary(), loc);
    }
    return e;
  }

  static int64_t ParseIntValue(const Token& t) {
    int64_t v = 0;
    auto [ptr, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      throw ParseError(ParseError::Kind::kSyntax,
                       "integer literal out of range: " + t.text, t.loc);
    }
    return v;
  }

  Expr ParsePrimary() {
    const Token& t = Cur();
    switch (t.kind) {
      case Tok::kInt:
        ++pos_;
        return Expr::IntLit(ParseIntValue(t), t.loc);
      case Tok::kIdent:
        ++pos_;
        return Resolve(t);
      case Tok::kLParen: {
        ++pos_;
        Expr e = ParseExpr();
        while (Accept(Tok::kComma)) {
          e = Expr::Tuple(std::move(e), ParseExpr(), t.loc);
        }
        Expect(Tok::kRParen, {"')'", "','"});
        return e;
      }
      case Tok::kLBrace: {
        ++pos_;
        if (Accept(Tok::kRBrace)) {
          std::optional<TypeExpr> elem;
          if (AtTypeStart()) elem = ParsePrefixType();
          return Expr::EmptySet(std::move(elem), t.loc);
        }
        std::vector<Expr> elems;
        do {
          elems.push_back(ParseExpr());
        } while (Accept(Tok::kComma));
        Expect(Tok::kRBrace, {"','", "'}'"});
        return Expr::SetExt(std::move(elems), t.loc);
      }
      default:
        Fail(t, {"expression"});
    }
  }

  Expr Resolve(const Token& t) {
    if (Reserved().count(t.text) != 0) Fail(t, {"expression"});
    if (scope_.count(t.text) != 0) return Expr::Var(t.text, t.loc);
    if (auto it = constants_.find(t.text); it != constants_.end()) {
      return Expr::EnumLit(t.text, it->second, t.loc);
    }
    // Basic-type constants are written <TypeName><k>, e.g. REVENT2.
    size_t digits = t.text.size();
    while (digits > 0 && std::isdigit(static_cast<unsigned char>(t.text[digits - 1]))) {
      --digits;
    }
    if (digits > 0 && digits < t.text.size() && t.text[digits] != '0') {
      auto it = types_.find(t.text.substr(0, digits));
      if (it != types_.end() && file_.types[it->second].is_basic) {
        return Expr::BasicLit(t.text, file_.types[it->second].AsType(), t.loc);
      }
    }
    throw ParseError(ParseError::Kind::kUndeclaredVariable,
                     "undeclared variable '" + t.text + "'", t.loc);
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  SourceFile file_;
  std::map<std::string, size_t, std::less<>> types_;
  std::map<std::string, TypeExpr, std::less<>> constants_;
  std::set<std::string, std::less<>> global_names_;
  std::set<std::string, std::less<>> scope_;
};

// ---- printing ----

// Expression precedence levels, loosest first.
enum Level { kMaplet = 0, kRange, kAdditive, kMultiplicative, kUnary, kApp, kPrimary };

Level LevelOf(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kTuple:
      return kMaplet;
    case Expr::Kind::kRange:
      return kRange;
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
    case Expr::Kind::kUnion:
    case Expr::Kind::kDiff:
      return kAdditive;
    case Expr::Kind::kMul:
    case Expr::Kind::kInter:
      return kMultiplicative;
    case Expr::Kind::kDom:
    case Expr::Kind::kRan:
    case Expr::Kind::kCard:
      return kUnary;
    case Expr::Kind::kIntLit:
      return e.value < 0 ? kUnary : kPrimary;
    case Expr::Kind::kApply:
      return kApp;
    default:
      return kPrimary;
  }
}

void PrintExpr(const Expr& e, Level min, std::string& out);

void PrintBinary(const Expr& e, std::string_view op, Level self,
                 std::string& out) {
  PrintExpr(e.lhs(), self, out);
  out += op;
  PrintExpr(e.rhs(), static_cast<Level>(self + 1), out);
}

void PrintExpr(const Expr& e, Level min, std::string& out) {
  const Level self = LevelOf(e);
  if (self < min) {
    out += '(';
    PrintExpr(e, kMaplet, out);
    out += ')';
    return;
  }
  switch (e.kind) {
    case Expr::Kind::kVar:
    case Expr::Kind::kEnumLit:
    case Expr::Kind::kBasicLit:
      out += e.name;
      return;
    case Expr::Kind::kIntLit:
      out += std::to_string(e.value);
      return;
    case Expr::Kind::kTuple:
      return PrintBinary(e, " |-> ", kMaplet, out);
    case Expr::Kind::kRange:
      PrintExpr(e.lhs(), kAdditive, out);
      out += "..";
      PrintExpr(e.rhs(), kAdditive, out);
      return;
    case Expr::Kind::kAdd:
      return PrintBinary(e, " + ", kAdditive, out);
    case Expr::Kind::kSub:
      return PrintBinary(e, " - ", kAdditive, out);
    case Expr::Kind::kUnion:
      return PrintBinary(e, " cup ", kAdditive, out);
    case Expr::Kind::kDiff:
      return PrintBinary(e, " setminus ", kAdditive, out);
    case Expr::Kind::kMul:
      return PrintBinary(e, " * ", kMultiplicative, out);
    case Expr::Kind::kInter:
      return PrintBinary(e, " cap ", kMultiplicative, out);
    case Expr::Kind::kDom:
      out += "dom ";
      return PrintExpr(e.lhs(), kUnary, out);
    case Expr::Kind::kRan:
      out += "ran ";
      return PrintExpr(e.lhs(), kUnary, out);
    case Expr::Kind::kCard:
      out += "#";
      return PrintExpr(e.lhs(), kUnary, out);
    case Expr::Kind::kApply:
      return PrintBinary(e, " @ ", kApp, out);
    case Expr::Kind::kSetExt: {
      out += '{';
      for (size_t i = 0; i < e.operands.size(); ++i) {
        if (i > 0) out += ", ";
        PrintExpr(e.operands[i], kMaplet, out);
      }
      out += '}';
      return;
    }
    case Expr::Kind::kEmptySet: {
      out += "{}";
      if (e.annotation) {
        const TypeExpr& t = *e.annotation;
        const bool atomic = t.kind != TypeExpr::Kind::kProduct &&
                            !(t.kind == TypeExpr::Kind::kSynonym &&
                              t.args.size() == 2);
        out += atomic ? ToString(t) : "(" + ToString(t) + ")";
      }
      return;
    }
  }
}

}  // namespace

SourceFile ParseFile(std::string_view text, std::string path) {
  return Parser(Lexer(text).Run(), std::move(path)).Run();
}

std::string ToString(const Expr& e) {
  std::string out;
  PrintExpr(e, kMaplet, out);
  return out;
}

std::string ToString(const Pred& p) {
  return ToString(p.lhs) + " " + std::string(PredKeyword(p.kind)) + " " +
         ToString(p.rhs);
}

std::string PrintSpec(const TestSpec& spec) {
  std::string out = "spec " + spec.name + " {\n";
  std::vector<std::string> entries = spec.includes;
  for (const Decl& d : spec.decls) {
    entries.push_back(d.name + " : " + ToString(d.type));
  }
  for (size_t i = 0; i < entries.size(); ++i) {
    out += "  " + entries[i] + (i + 1 < entries.size() ? ";\n" : "\n");
  }
  if (!spec.preds.empty()) {
    out += "|\n";
    for (size_t i = 0; i < spec.preds.size(); ++i) {
      out += "  " + ToString(spec.preds[i]) +
             (i + 1 < spec.preds.size() ? ";\n" : "\n");
    }
  }
  out += "}\n";
  return out;
}

std::string PrintFile(const SourceFile& file) {
  std::string out;
  for (const TypeDecl& t : file.types) {
    if (t.is_basic) {
      out += "basic " + t.name + ";\n";
    } else {
      out += "free " + t.name + " ::= ";
      for (size_t i = 0; i < t.constants.size(); ++i) {
        if (i > 0) out += " | ";
        out += t.constants[i];
      }
      out += ";\n";
    }
  }
  for (const TestSpec& s : file.specs) {
    if (!out.empty()) out += "\n";
    out += PrintSpec(s);
  }
  return out;
}

}  // namespace ztc

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
#include <regex>

#include <gtest/gtest.h>

#include "support/corpus.h"
#include "ztc/error.h"

namespace ztc {
namespace {

using ::ztc::testing::CorpusSpecNamed;
using ::ztc::testing::CorpusSpecs;
using ::ztc::testing::TypedFromText;

bool Has(const SmtScript& s, const std::string& sentence) {
  return std::find(s.sentences.begin(), s.sentences.end(), sentence) != s.sentences.end();
}

::testing::AssertionResult Contains(const SmtScript& s, const std::string& sentence) {
  if (Has(s, sentence)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "missing sentence:\n  " << sentence << "\nin:\n" << s.Text();
}

int Count(const SmtScript& s, ScriptAssert::Origin origin) {
  return static_cast<int>(std::count_if(s.asserts.begin(), s.asserts.end(),
                                        [&](const ScriptAssert& a) { return a.origin == origin; }));
}

const TypedSpec& Reference() { return CorpusSpecNamed("DetectReferenceEvent_NR_18").typed; }

constexpr char kLaunch[] =
    "free REVENT ::= LiftOff | ThrustDrop1E | ThrustDrop2E | ThrustDrop3E;\n"
    "free STATUS ::= normal | abnormal;\n";

TEST(EmitTypeTest, PartialFunctionIsADomLawRecord) {
  SmtScript s = EmitScript(Reference(), Dialect::kYices, false);
  EXPECT_TRUE(Contains(s, "(define ot::(record dom::(-> REVENT bool) law::(-> REVENT nat)))"));
  EXPECT_TRUE(Contains(s, "(define tli::(-> REVENT nat))"));
  EXPECT_TRUE(Contains(s, "(define-type REVENT (scalar LiftOff ThrustDrop1E ThrustDrop2E ThrustDrop3E))"));
  SmtScript c = EmitScript(Reference(), Dialect::kCvc3, false);
  EXPECT_TRUE(Contains(c, "ot: [# dom: ARRAY REVENT OF BITVECTOR(1), law: ARRAY REVENT OF NAT #];"));
  EXPECT_TRUE(Contains(c, "NAT: TYPE = SUBTYPE(LAMBDA (x: INT): 0 <= x);"));
}

TEST(EmitTypeTest, FiniteSetRecordWithItsTwoAxioms) {
  TypedSpec t = TypedFromText("spec S { A : fset INT | #A = 2 }");
  SmtScript c = EmitScript(t, Dialect::kCvc3, false);
  EXPECT_TRUE(Contains(c, "A: [# set: ARRAY INT OF BITVECTOR(1), bij: ARRAY INT OF NAT1, card: NAT #];"));
  EXPECT_TRUE(Contains(c, "ASSERT FORALL (x: INT): A.set[x] = 0bin1 <=> A.bij[x] <= A.card;"));
  EXPECT_TRUE(Contains(c,
      "ASSERT FORALL (n: NAT1, x1, x2: INT): (n <= A.card AND A.set[x1] = 0bin1 AND "
      "A.set[x2] = 0bin1 AND A.bij[x1] = n AND A.bij[x2] = n) => x1 = x2;"));
  EXPECT_EQ(Count(c, ScriptAssert::Origin::kCarrier), 2);
  EXPECT_EQ(Count(c, ScriptAssert::Origin::kPredicate), 1);

  SmtScript y = EmitScript(t, Dialect::kYices, false);
  EXPECT_TRUE(Contains(y, "(define A::(record set::(-> int bool) bij::(-> int nat1) card::nat))"));
  EXPECT_TRUE(Contains(y, "(assert (forall (x::int) (<=> ((select A set) x) (<= ((select A bij) x) (select A card)))))"));
  EXPECT_TRUE(Contains(y, "(define-type nat1 (subtype (n::int) (< 0 n)))"));
}

TEST(EmitTypeTest, VariantBasicTypeIsAThreeConstantDatatype) {
  TypedSpec t = TypedFromText("basic REVENT;\nspec S { e : REVENT; f : REVENT }");
  EXPECT_TRUE(Contains(EmitScript(t, Dialect::kCvc3, true), "DATATYPE REVENT = REVENT1 | REVENT2 | REVENT3 END;"));
  EXPECT_TRUE(Contains(EmitScript(t, Dialect::kYices, true), "(define-type REVENT (scalar REVENT1 REVENT2 REVENT3))"));
  EXPECT_TRUE(Contains(EmitScript(t, Dialect::kCvc3, false), "REVENT: TYPE;"));
  EXPECT_TRUE(Contains(EmitScript(t, Dialect::kYices, false), "(define-type REVENT)"));
}

TEST(EmitOperatorTest, EmptySetAtAProductType) {
  SmtScript s = EmitScript(Reference(), Dialect::kYices, false);
  EXPECT_TRUE(Contains(s, "(define emptysetREVENTxINT::(-> REVENT int bool) (lambda (a::REVENT b::int) false))"));
}

TEST(EmitOperatorTest, SubsetAtIntInCvc3) {
  TypedSpec t = TypedFromText("spec S { A, B : P INT | A subseteq B }");
  SmtScript c = EmitScript(t, Dialect::kCvc3, false);
  EXPECT_TRUE(Contains(c, "subseteqINT: (ARRAY INT OF BITVECTOR(1), ARRAY INT OF BITVECTOR(1)) -> BOOLEAN;"));
  EXPECT_TRUE(Contains(c,
      "ASSERT FORALL (A, B: ARRAY INT OF BITVECTOR(1)): subseteqINT(A, B) <=> "
      "FORALL (x: INT): A[x] = 0bin1 => B[x] = 0bin1;"));
  EXPECT_TRUE(Contains(c, "ASSERT subseteqINT(A, B);"));
  EXPECT_EQ(Count(c, ScriptAssert::Origin::kDefinition), 1);
}

TEST(EmitOperatorTest, IntersectionAtIntInYices) {
  TypedSpec t = TypedFromText("spec S { A, B : P INT | A cap B = {} }");
  SmtScript y = EmitScript(t, Dialect::kYices, false);
  EXPECT_TRUE(Contains(y,
      "(define capINT::(-> (-> int bool) (-> int bool) (-> int bool)) "
      "(lambda (A::(-> int bool) B::(-> int bool)) (lambda (x::int) (and (A x) (B x)))))"));
  EXPECT_TRUE(Contains(y, "(assert (= (capINT A B) emptysetINT))"));
}

TEST(EmitCoercionTest, NonEmptyPartialFunction) {
  SmtScript s = EmitScript(Reference(), Dialect::kYices, false);
  EXPECT_TRUE(Contains(s,
      "(define otSet::(-> REVENT int bool) (lambda (a::REVENT b::int) "
      "(and ((select ot dom) a) (= ((select ot law) a) b))))"));
  EXPECT_TRUE(Contains(s, "(assert (not (= otSet emptysetREVENTxINT)))"));
}

TEST(EmitCoercionTest, PartialFunctionEqualsRelation) {
  TypedSpec t = TypedFromText(std::string(kLaunch) +
                              "spec S { f : REVENT pfun NAT; R : REVENT rel NAT | f = R }");
  EXPECT_TRUE(Contains(EmitScript(t, Dialect::kYices, false), "(assert (= fSet R))"));
}

TEST(EmitCoercionTest, TotalFunctionHasNoDomConjunct) {
  TypedSpec t = TypedFromText(std::string(kLaunch) + "spec S { tli : REVENT fun NAT | tli != {} }");
  SmtScript s = EmitScript(t, Dialect::kYices, false);
  EXPECT_TRUE(Contains(s, "(define tliSet::(-> REVENT int bool) (lambda (a::REVENT b::int) (= (tli a) b)))"));
}

TEST(EmitPredTest, ApplicationOfPartialAndTotalFunctions) {
  TypedSpec pfun = TypedFromText(std::string(kLaunch) +
                                 "spec S { X : REVENT pfun NAT; e? : REVENT; fa : NAT | e? in dom X; X @ e? <= fa }");
  EXPECT_TRUE(Contains(EmitScript(pfun, Dialect::kYices, false), "(assert (<= ((select X law) e_q) fa))"));
  SmtScript total = EmitScript(Reference(), Dialect::kYices, false);
  EXPECT_TRUE(Contains(total, "(assert (<= (X e_q) fa))"));
}

TEST(EmitPredTest, NotInDomain) {
  EXPECT_TRUE(Contains(EmitScript(Reference(), Dialect::kYices, false), "(assert (not ((select ot dom) e_q)))"));
  EXPECT_TRUE(Contains(EmitScript(Reference(), Dialect::kCvc3, false), "ASSERT NOT (ot.dom[e_q] = 0bin1);"));
}

TEST(EmitPredTest, RangeMembershipIsBetaReduced) {
  EXPECT_TRUE(Contains(EmitScript(Reference(), Dialect::kYices, false),
                       "(assert (and (<= (tli e_q) now) (<= now (tls e_q))))"));
  EXPECT_TRUE(Contains(EmitScript(Reference(), Dialect::kCvc3, false),
                       "ASSERT (tli[e_q] <= now AND now <= tls[e_q]);"));
}

TEST(EmitScriptTest, ReferenceSchemaLayout) {
  for (Dialect d : {Dialect::kYices, Dialect::kCvc3}) {
    SmtScript s = EmitScript(Reference(), d, false);
    EXPECT_EQ(s.symbols.size(), 8u);
    EXPECT_EQ(Count(s, ScriptAssert::Origin::kPredicate), 10);
    EXPECT_EQ(s.sentences.back(), d == Dialect::kYices ? "(check)" : "CHECKSAT;");
    EXPECT_NE(std::find(s.aux_defs.begin(), s.aux_defs.end(), "otSet"), s.aux_defs.end());
    // One predicate assert per atomic predicate, in order.
    int next = 0;
    for (const ScriptAssert& a : s.asserts) {
      if (a.origin == ScriptAssert::Origin::kPredicate) {
        EXPECT_EQ(a.pred_index, next++);
      }
    }
    ASSERT_NE(s.FindZ("e?"), nullptr);
    EXPECT_EQ(s.FindZ("e?")->emitted, "e_q");
  }
}

TEST(EmitScriptTest, EmptyPredicatePart) {
  TypedSpec t = TypedFromText("spec S { x : INT }");
  SmtScript y = EmitScript(t, Dialect::kYices, false);
  EXPECT_EQ(y.sentences, (std::vector<std::string>{"(set-evidence! true)", "(define x::int)", "(check)"}));
  EXPECT_TRUE(y.asserts.empty());
  SmtScript c = EmitScript(t, Dialect::kCvc3, false);
  EXPECT_EQ(c.sentences, (std::vector<std::string>{"x: INT;", "CHECKSAT;"}));
}

TEST(EmitScriptTest, AuxiliaryDefinitionsAppearOnce) {
  for (const auto& c : CorpusSpecs()) {
    for (Dialect d : {Dialect::kYices, Dialect::kCvc3}) {
      for (bool variant : {false, true}) {
        SmtScript s = EmitScript(c.typed, d, variant);
        for (const std::string& name : s.aux_defs) {
          std::regex def(d == Dialect::kYices ? "^\\(define " + name + "::" : "^" + name + ":");
          int n = 0;
          for (const std::string& line : s.sentences) n += std::regex_search(line, def) ? 1 : 0;
          EXPECT_EQ(n, 1) << c.typed.spec.name << " " << name;
        }
      }
    }
  }
}

TEST(EmitScriptTest, AssertCountMatchesCarriersAndPredicates) {
  for (const auto& c : CorpusSpecs()) {
    for (Dialect d : {Dialect::kYices, Dialect::kCvc3}) {
      SmtScript s = EmitScript(c.typed, d, false);
      EXPECT_EQ(Count(s, ScriptAssert::Origin::kPredicate), static_cast<int>(c.typed.spec.preds.size()));
      for (const ScriptAssert& a : s.asserts) {
        ASSERT_LT(a.sentence, s.sentences.size());
        const std::string& text = s.sentences[a.sentence];
        EXPECT_TRUE(text.rfind(d == Dialect::kYices ? "(assert " : "ASSERT ", 0) == 0) << text;
        if (a.origin == ScriptAssert::Origin::kCarrier) {
          EXPECT_NE(c.typed.spec.FindDecl(a.variable), nullptr);
        }
      }
      EXPECT_EQ(s.sentences.back(), d == Dialect::kYices ? "(check)" : "CHECKSAT;");
    }
  }
}

TEST(EmitScriptTest, ReadScriptRestoresTheSymbolTable) {
  for (const auto& c : CorpusSpecs()) {
    for (Dialect d : {Dialect::kYices, Dialect::kCvc3}) {
      SmtScript s = EmitScript(c.typed, d, true);
      SmtScript back = ReadScript(s.Text());
      EXPECT_EQ(back.dialect, d);
      EXPECT_TRUE(back.variant);
      EXPECT_EQ(back.spec_name, s.spec_name);
      EXPECT_EQ(back.sentences, s.sentences);
      EXPECT_EQ(back.universe, s.universe);
      EXPECT_EQ(back.int_literals, s.int_literals);
      ASSERT_EQ(back.symbols.size(), s.symbols.size());
      for (size_t i = 0; i < s.symbols.size(); ++i) {
        EXPECT_EQ(back.symbols[i].z_name, s.symbols[i].z_name);
        EXPECT_EQ(back.symbols[i].emitted, s.symbols[i].emitted);
      }
      EXPECT_EQ(back.asserts.size(), s.asserts.size());
      EXPECT_EQ(back.Text(), s.Text());
    }
  }
}

TEST(EmitScriptTest, UnsupportedCardinality) {
  TypedSpec t = TypedFromText(testing::ReadFile(testing::DataPath("fixtures/unsupported.ztc")), "CardOfUnion");
  try {
    EmitScript(t, Dialect::kYices, false);
    FAIL() << "expected an EmitError";
  } catch (const EmitError& e) {
    EXPECT_EQ(e.kind(), EmitError::Kind::kUnsupportedPredicate);
    ASSERT_EQ(e.problems().size(), 1u);
    EXPECT_EQ(e.problems()[0].loc.line, 6);
  }
}

TEST(EmitScriptTest, NestedPowerSetsAreUnsupportedTypes) {
  TypedSpec t = TypedFromText("spec S { s : P P INT | s = {} }");
  try {
    EmitScript(t, Dialect::kCvc3, false);
    FAIL() << "expected an EmitError";
  } catch (const EmitError& e) {
    EXPECT_EQ(e.kind(), EmitError::Kind::kUnsupportedType);
  }
}

TEST(EmitScriptTest, Deterministic) {
  for (const auto& c : CorpusSpecs()) {
    EXPECT_EQ(EmitScript(c.typed, Dialect::kCvc3, true).Text(), EmitScript(c.typed, Dialect::kCvc3, true).Text());
  }
}

}  // namespace
}  // namespace ztc

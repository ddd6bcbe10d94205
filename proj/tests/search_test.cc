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

#include "ztc/search.h"

#include <chrono>
#include <random>

#include <gtest/gtest.h>

#include "support/corpus.h"
#include "support/oracle.h"
#include "ztc/error.h"
#include "ztc/parser.h"

namespace ztc {
namespace {

using ::ztc::testing::CorpusSpecs;
using ::ztc::testing::TypedFromText;

SearchConfig Fss(int fss) {
  SearchConfig cfg;
  cfg.fss = fss;
  return cfg;
}

// The interval formulas, written out independently.
std::vector<int64_t> NatOracle(int fss) {
  std::vector<int64_t> out;
  for (int64_t i = 0; i <= fss - 1; ++i) out.push_back(i);
  return out;
}
std::vector<int64_t> IntOracle(int fss) {
  std::vector<int64_t> out;
  for (int64_t i = -(fss / 2 + (fss % 2 - 1)); i <= fss / 2; ++i) out.push_back(i);
  return out;
}

TEST(NumericSeedTest, FirstLiteralsInTextualOrder) {
  TypedSpec t = TypedFromText("spec S { m, k : NAT | 43 < m + k; m != 0; k = 7 }");
  NumericSeed seed = ComputeNumericSeed(t, Fss(2));
  EXPECT_EQ(seed.nat, (std::vector<int64_t>{43, 0}));
  EXPECT_EQ(seed.integer, (std::vector<int64_t>{43, 0}));
}

TEST(NumericSeedTest, NatSkipsNegativeLiterals) {
  TypedSpec t = TypedFromText("spec S { n : NAT; i : INT | i = -2; n < 5 }");
  NumericSeed seed = ComputeNumericSeed(t, Fss(3));
  EXPECT_EQ(seed.nat, std::vector<int64_t>{5});
  EXPECT_EQ(seed.integer, (std::vector<int64_t>{-2, 5}));
}

TEST(NumericSeedTest, DefaultsWithoutLiterals) {
  TypedSpec t = TypedFromText("spec S { n : NAT; i : INT | n < i }");
  EXPECT_EQ(ComputeNumericSeed(t, Fss(3)).nat, (std::vector<int64_t>{0, 1, 2}));
  EXPECT_EQ(ComputeNumericSeed(t, Fss(3)).integer, (std::vector<int64_t>{-1, 0, 1}));
  EXPECT_EQ(ComputeNumericSeed(t, Fss(2)).integer, (std::vector<int64_t>{0, 1}));
  for (int fss = 1; fss <= 6; ++fss) {
    NumericSeed seed = ComputeNumericSeed(t, Fss(fss));
    EXPECT_EQ(seed.nat, NatOracle(fss)) << fss;
    EXPECT_EQ(seed.integer, IntOracle(fss)) << fss;
    EXPECT_EQ(seed.integer.size(), static_cast<size_t>(fss));
  }
}

TEST(NumericSeedTest, PaddingIsOptIn) {
  TypedSpec t = TypedFromText("spec S { now : NAT | 1 < now; now < 3 }");
  EXPECT_EQ(ComputeNumericSeed(t, Fss(3)).nat, (std::vector<int64_t>{1, 3}));
  SearchConfig pad = Fss(3);
  pad.pad_numeric = true;
  EXPECT_EQ(ComputeNumericSeed(t, pad).nat, (std::vector<int64_t>{1, 3, 0}));
}

TEST(SearchConfigTest, RejectsNonPositiveBounds) {
  SearchConfig cfg;
  cfg.fss = 0;
  EXPECT_THROW(cfg.Validate(), std::invalid_argument);
  cfg.fss = 3;
  cfg.max = 0;
  EXPECT_THROW(cfg.Validate(), std::invalid_argument);
}

TEST(BuildCandidatesTest, PinnedEnumeration) {
  const auto& c = testing::CorpusSpecNamed("DetectReferenceEvent_NR_18");
  CandidateList list = BuildCandidates("sysState", c.typed, SearchConfig{});
  ASSERT_EQ(list.values.size(), 1u);
  EXPECT_EQ(ToString(list.values[0]), "normal");
}

TEST(BuildCandidatesTest, TotalFunctionsOverFourConstants) {
  TypedSpec t = TypedFromText(
      "free REVENT ::= LiftOff | ThrustDrop1E | ThrustDrop2E | ThrustDrop3E;\n"
      "spec S { tli : REVENT fun NAT | tli @ LiftOff = 2; tli @ ThrustDrop1E != 3 }");
  CandidateList list = BuildCandidates("tli", t, Fss(2));
  ASSERT_EQ(list.values.size(), 16u);
  // Every map REVENT -> {2, 3}, enumerated here by counting in base two.
  std::vector<Value> expected;
  for (int code = 0; code < 16; ++code) {
    std::vector<Value> pairs;
    for (int k = 0; k < 4; ++k) {
      pairs.push_back(Value::Tuple(Value::Enum("REVENT", t.spec.decls[0].type.left().constants[k], k),
                                   Value::Int((code >> k) & 1 ? 3 : 2)));
    }
    expected.push_back(Value::Set(pairs));
  }
  for (const Value& e : expected) {
    EXPECT_NE(std::find(list.values.begin(), list.values.end(), e), list.values.end()) << ToString(e);
  }
  for (const Value& v : list.values) EXPECT_TRUE(SatisfiesCarrier(v, t.spec.decls[0].type));
}

TEST(BuildCandidatesTest, UnusedVariableGetsOneValue) {
  TypedSpec t = TypedFromText("spec S { pad : INT; n : NAT | n = 0 }");
  CandidateList list = BuildCandidates("pad", t, SearchConfig{});
  ASSERT_EQ(list.values.size(), 1u);
  EXPECT_EQ(list.values[0], Value::Int(0));
}

TEST(BuildCandidatesTest, PinnedLiteralOutsideTheCarrier) {
  TypedSpec t = TypedFromText("spec S { n : NAT | n = -1 }");
  EXPECT_TRUE(BuildCandidates("n", t, SearchConfig{}).values.empty());
  EXPECT_EQ(Search(t, SearchConfig{}).status, SearchResult::Status::kExhausted);
}

TEST(BuildCandidatesTest, BasicTypeGetsFreshConstants) {
  TypedSpec t = TypedFromText("basic MDATA;\nspec S { d : MDATA; e : MDATA | d != e }");
  CandidateList list = BuildCandidates("d", t, Fss(2));
  ASSERT_EQ(list.values.size(), 2u);
  EXPECT_EQ(ToString(list.values[0]), "MDATA1");
  EXPECT_EQ(ToString(list.values[1]), "MDATA2");
}

TEST(BuildCandidatesTest, PowerSetsBoundedByFss) {
  TypedSpec t = TypedFromText("free C ::= a | b | c | d;\nspec S { s : P C | s != {} }");
  CandidateList list = BuildCandidates("s", t, Fss(2));
  // Subsets of size 0, 1 and 2 of four constants.
  EXPECT_EQ(list.values.size(), 1u + 4u + 6u);
  for (size_t i = 1; i < list.values.size(); ++i) {
    EXPECT_TRUE(CanonicalOrder(list.values[i - 1], list.values[i]) < 0);
  }
}

TEST(BuildCandidatesTest, ListsTruncatedAtMax) {
  TypedSpec t = TypedFromText("free C ::= a | b | c | d;\nspec S { s : P C | s != {} }");
  SearchConfig cfg = Fss(4);
  cfg.max = 5;
  CandidateList list = BuildCandidates("s", t, cfg);
  EXPECT_TRUE(list.truncated);
  EXPECT_LE(list.values.size(), 5u);
}

TEST(SearchTest, NowStrictlyBetweenOneAndThree) {
  TypedSpec t = TypedFromText("spec S { now : NAT | 1 < now; now < 3 }");
  EXPECT_EQ(Search(t, Fss(2)).status, SearchResult::Status::kExhausted);
  EXPECT_EQ(Search(t, Fss(3)).status, SearchResult::Status::kExhausted);
  SearchConfig pad = Fss(3);
  pad.pad_numeric = true;
  SearchResult padded = Search(t, pad);
  EXPECT_EQ(padded.status, SearchResult::Status::kExhausted);
  EXPECT_EQ(padded.explored, 3);
  // Once 2 is among the literals the witness is reachable.
  TypedSpec reachable = TypedFromText("spec S { now : NAT | 1 < now; now < 3; now <= 2 }");
  SearchResult r = Search(reachable, Fss(3));
  ASSERT_EQ(r.status, SearchResult::Status::kWitness);
  EXPECT_EQ(r.witness.at("now"), Value::Int(2));
}

TEST(SearchTest, PinnedEnumerationExploresOneElement) {
  TypedSpec t = TypedFromText("free STATUS ::= normal | abnormal;\nspec S { x : STATUS | x = normal }");
  SearchResult r = Search(t, SearchConfig{});
  ASSERT_EQ(r.status, SearchResult::Status::kWitness);
  EXPECT_EQ(r.explored, 1);
  EXPECT_EQ(ToString(r.witness.at("x")), "normal");
}

TEST(SearchTest, CappedWhenMaxIsTooSmall) {
  TypedSpec t = TypedFromText("spec S { a, b : NAT | a + b = 4; a != 1 }");
  SearchConfig cfg;
  cfg.max = 1;
  SearchResult r = Search(t, cfg);
  EXPECT_EQ(r.status, SearchResult::Status::kCapped);
  EXPECT_EQ(r.explored, 1);
}

TEST(SearchTest, CorpusWitnessesAreSound) {
  int witnesses = 0;
  for (const auto& c : CorpusSpecs()) {
    SearchResult r = Search(c.typed, SearchConfig{});
    EXPECT_LE(r.explored, SearchConfig{}.max);
    for (size_t k = 1; k < r.survivors.size(); ++k) EXPECT_LE(r.survivors[k], r.survivors[k - 1]);
    if (r.status != SearchResult::Status::kWitness) continue;
    ++witnesses;
    Verdict v = CheckSpec(c.typed, r.witness, &r.universe);
    EXPECT_TRUE(v.satisfied()) << c.typed.spec.name << ": " << v.ToString();
  }
  EXPECT_GE(witnesses, 20);
}

TEST(SearchTest, CandidatesSatisfyTheirCarriers) {
  for (const auto& c : CorpusSpecs()) {
    FiniteModel model = BuildFiniteModel(c.typed, SearchConfig{});
    for (size_t i = 0; i < model.vars.size(); ++i) {
      const TypeExpr& declared = c.typed.DeclaredType(model.vars[i]);
      for (const Value& v : model.candidates[i].values) {
        EXPECT_TRUE(SatisfiesCarrier(v, declared, &model.universe))
            << c.typed.spec.name << "." << model.vars[i] << " = " << ToString(v);
      }
    }
  }
}

TEST(SearchTest, Deterministic) {
  for (const auto& c : CorpusSpecs()) {
    SearchResult a = Search(c.typed, SearchConfig{});
    SearchResult b = Search(c.typed, SearchConfig{});
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.explored, b.explored);
    EXPECT_EQ(a.survivors, b.survivors);
  }
}

TEST(SearchProperty, MaxIsNeverExceeded) {
  std::mt19937 rng(99);
  for (int round = 0; round < 200; ++round) {
    TypedSpec t;
    try {
      t = TypedFromText(testing::RandomSpecText(rng));
    } catch (const Error&) {
      continue;
    }
    SearchConfig cfg;
    cfg.max = std::uniform_int_distribution<int>(1, 40)(rng);
    SearchResult r = Search(t, cfg);
    EXPECT_LE(r.explored, cfg.max);
    EXPECT_GE(r.explored, 0);
  }
}

TEST(SearchProperty, AgreesWithBruteForce) {
  std::mt19937 rng(2026);
  int checked = 0, with_witness = 0;
  auto start = std::chrono::steady_clock::now();
  while (checked < 200) {
    std::string text = testing::RandomSpecText(rng);
    TypedSpec t;
    try {
      t = TypedFromText(text);
    } catch (const Error&) {
      continue;
    }
    const SearchConfig cfg;
    auto lists = testing::OracleCandidates(t, cfg.fss);
    if (testing::ProductSize(lists) > 512) continue;
    ++checked;
    // The oracle's candidate lists are the engine's.
    FiniteModel model = BuildFiniteModel(t, cfg);
    for (size_t i = 0; i < lists.size(); ++i) {
      EXPECT_EQ(model.candidates[i].values, lists[i]) << text << model.vars[i];
    }
    auto expected = testing::BruteForce(t, lists);
    SearchResult r = Search(t, cfg);
    EXPECT_EQ(r.status == SearchResult::Status::kWitness, expected.has_value()) << text;
    if (expected && r.status == SearchResult::Status::kWitness) {
      ++with_witness;
      EXPECT_EQ(r.witness, *expected) << text;
      EXPECT_TRUE(CheckSpec(t, r.witness, &r.universe).satisfied()) << text;
    }
  }
  EXPECT_GT(with_witness, 20);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(30));
}

}  // namespace
}  // namespace ztc

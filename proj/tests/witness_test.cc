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


#include "ztc/witness.h"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include "support/corpus.h"
#include "support/model_text.h"
#include "ztc/error.h"
#include "ztc/search.h"

namespace ztc {
namespace {

using ::ztc::testing::CorpusSpecNamed;
using ::ztc::testing::CorpusSpecs;
using ::ztc::testing::DataPath;
using ::ztc::testing::ReadFile;
using ::ztc::testing::TypedFromText;

const TypedSpec& Reference() { return CorpusSpecNamed("DetectReferenceEvent_NR_18").typed; }

Env ReferenceCase() {
  const auto& c = CorpusSpecNamed("DetectReferenceEvent_TC_18");
  return AsTestCase(*c.source, "DetectReferenceEvent_TC_18")->env;
}

SmtScript GoldenScript(const std::string& dir, Dialect d) {
  const std::string suffix = d == Dialect::kYices ? ".yices.ys" : ".cvc3.cvc";
  return ReadScript(ReadFile(DataPath("golden/" + dir + "/DetectReferenceEvent_NR_18" + suffix)));
}

Witness FromModelFile(const std::string& model, Dialect d) {
  SmtScript script = GoldenScript(d == Dialect::kYices ? "yices" : "cvc3", d);
  SolverOutput out = ParseOutput(ReadFile(DataPath("models/" + model)), script);
  return Reconstruct(out, Reference(), script);
}

ReconstructError::Kind ReconstructFailure(const std::string& text, const TypedSpec& spec, Dialect d) {
  SmtScript script = EmitScript(spec, d, false);
  try {
    Reconstruct(ParseOutput(text, script), spec, script);
  } catch (const ReconstructError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ReconstructError for\n" << text;
  return ReconstructError::Kind::kMalformed;
}

TEST(ParseOutputTest, YicesShorthandFieldsBecomeRecordComponents) {
  SmtScript script = GoldenScript("yices", Dialect::kYices);
  SolverOutput out = ParseOutput(ReadFile(DataPath("models/reference.yices.sat")), script);
  ASSERT_EQ(out.status, SolverOutput::Status::kSat);
  ASSERT_TRUE(out.bindings.count("ot.dom"));
  ASSERT_TRUE(out.bindings.count("ot.law"));
  EXPECT_EQ(out.bindings.at("ot.dom").points.size(), 2u);
  EXPECT_EQ(out.bindings.at("now").scalar, GValue::Int(2));
  EXPECT_EQ(out.bindings.at("e_q").scalar, GValue::Const("LiftOff"));
}

TEST(ParseOutputTest, StatusWords) {
  SmtScript yices = GoldenScript("yices", Dialect::kYices);
  SmtScript cvc3 = GoldenScript("cvc3", Dialect::kCvc3);
  EXPECT_EQ(ParseOutput(ReadFile(DataPath("models/reference.yices.unknown")), yices).status,
            SolverOutput::Status::kUnknown);
  EXPECT_EQ(ParseOutput(ReadFile(DataPath("models/reference.cvc3.sat")), cvc3).status,
            SolverOutput::Status::kSat);
  SolverOutput unknown = ParseOutput(ReadFile(DataPath("models/reference.cvc3.unknown")), cvc3);
  EXPECT_EQ(unknown.status, SolverOutput::Status::kUnknown);
  EXPECT_FALSE(unknown.bindings.empty());
  SolverOutput unsat = ParseOutput(ReadFile(DataPath("models/reference.yices.unsat")), yices);
  EXPECT_EQ(unsat.status, SolverOutput::Status::kUnsat);
  EXPECT_TRUE(unsat.bindings.empty());
}

TEST(ParseOutputTest, CvcArrayDefaultIsKept) {
  SolverOutput out =
      ParseOutput(ReadFile(DataPath("models/reference.cvc3.sat")), GoldenScript("cvc3", Dialect::kCvc3));
  const ModelBinding& x = out.bindings.at("X");
  ASSERT_TRUE(x.fallback.has_value());
  EXPECT_EQ(*x.fallback, GValue::Int(9));
  EXPECT_EQ(x.points.size(), 3u);
}

TEST(ParseOutputTest, TruncatedAnswerReportsItsLine) {
  SolverOutput out =
      ParseOutput(ReadFile(DataPath("models/truncated.yices.sat")), GoldenScript("yices", Dialect::kYices));
  EXPECT_EQ(out.status, SolverOutput::Status::kParseFailure);
  EXPECT_EQ(out.error_line, 3);
  EXPECT_FALSE(out.error.empty());
}

TEST(ParseOutputTest, EmptyAnswerIsAParseFailure) {
  EXPECT_EQ(ParseOutput("", GoldenScript("yices", Dialect::kYices)).status,
            SolverOutput::Status::kParseFailure);
}

TEST(ModelGoldenTest, SatModelsRebuildTheTestCase) {
  for (auto [file, d] : {std::pair{"reference.yices.sat", Dialect::kYices},
                         std::pair{"reference.cvc3.sat", Dialect::kCvc3}}) {
    SCOPED_TRACE(file);
    Witness w = FromModelFile(file, d);
    EXPECT_EQ(w.origin, Witness::Origin::kSolverModel);
    EXPECT_TRUE(w.confirmed()) << w.verdict.ToString();
    EXPECT_EQ(w.env, ReferenceCase());
  }
}

TEST(ModelGoldenTest, CvcDefaultsAreRecordedApart) {
  Witness w = FromModelFile("reference.cvc3.sat", Dialect::kCvc3);
  EXPECT_EQ(w.defaults.at("X"), "9");
  EXPECT_EQ(w.defaults.at("ot"), "3");
  EXPECT_EQ(ToString(w.env.at("X")),
            "{LiftOff |-> 3, ThrustDrop1E |-> 5, ThrustDrop2E |-> 7, ThrustDrop3E |-> 9}");
}

TEST(ModelGoldenTest, PotentialWitnessIsOnlyAcceptedWhenItChecks) {
  Witness good = FromModelFile("reference.yices.unknown", Dialect::kYices);
  EXPECT_EQ(good.origin, Witness::Origin::kSolverPotential);
  EXPECT_TRUE(good.confirmed());
  EXPECT_EQ(good.env.at("now"), Value::Int(2));
  EXPECT_EQ(ToString(good.env.at("ot")), "{ThrustDrop2E |-> 0}");

  Witness bad = FromModelFile("reference-wrong.yices.unknown", Dialect::kYices);
  EXPECT_EQ(bad.origin, Witness::Origin::kSolverPotential);
  EXPECT_FALSE(bad.confirmed());
  EXPECT_EQ(bad.verdict.pred_index, 9);
}

TEST(ModelGoldenTest, UnsatAndTruncatedHaveNoWitness) {
  for (const char* file : {"reference.yices.unsat", "truncated.yices.sat"}) {
    try {
      FromModelFile(file, Dialect::kYices);
      ADD_FAILURE() << file;
    } catch (const ReconstructError& e) {
      EXPECT_EQ(e.kind(), ReconstructError::Kind::kMalformed) << file;
    }
  }
}

TEST(ReconstructTest, PartialFunctionFromDomainAndLaw) {
  Witness w = FromModelFile("reference.yices.sat", Dialect::kYices);
  EXPECT_EQ(ToString(w.env.at("ot")), "{ThrustDrop1E |-> 3}");
  EXPECT_EQ(w.env.at("tli").items().size(), 4u);
  EXPECT_EQ(w.order, (std::vector<std::string>{"now", "fa", "ot", "tli", "tls", "X", "sysState", "e?"}));
}

TEST(ReconstructTest, FiniteSetCardinalityMustMatchItsMembers) {
  const TypedSpec& spec = CorpusSpecNamed("Cache_SP_1").typed;
  EXPECT_EQ(ReconstructFailure("sat\n"
                               "(= ((select cache bij) MDATA1) 1)\n"
                               "(= (select cache card) 2)\n"
                               "(= ((select cache set) MDATA1) true)\n"
                               "(= d_q MDATA3)\n",
                               spec, Dialect::kYices),
            ReconstructError::Kind::kCardMismatch);
}

TEST(ReconstructTest, MissingSymbol) {
  const TypedSpec& spec = CorpusSpecNamed("Cache_SP_1").typed;
  EXPECT_EQ(ReconstructFailure("sat\n(= d_q MDATA3)\n", spec, Dialect::kYices),
            ReconstructError::Kind::kMissingBinding);
}

TEST(ReconstructTest, TotalFunctionNeedsEveryPoint) {
  TypedSpec spec = TypedFromText(
      "free C ::= a | b;\n"
      "spec S { f : C fun NAT | f @ a = 1 }\n");
  EXPECT_EQ(ReconstructFailure("sat\n(= (f a) 1)\n", spec, Dialect::kYices),
            ReconstructError::Kind::kMissingBinding);
}

TEST(ReconstructTest, NegativeNat) {
  TypedSpec spec = TypedFromText("spec S { n : NAT | n < 3 }\n");
  EXPECT_EQ(ReconstructFailure("sat\n(= n -1)\n", spec, Dialect::kYices),
            ReconstructError::Kind::kNegativeNat);
  EXPECT_EQ(ReconstructFailure("Satisfiable.\nASSERT (n = -1);\n", spec, Dialect::kCvc3),
            ReconstructError::Kind::kNegativeNat);
}

TEST(ReconstructTest, WrongConstant) {
  TypedSpec spec = TypedFromText(
      "free C ::= a | b;\n"
      "spec S { c : C | c = a }\n");
  EXPECT_EQ(ReconstructFailure("sat\n(= c zz)\n", spec, Dialect::kYices),
            ReconstructError::Kind::kMalformed);
}

TEST(WitnessRenderTest, JsonFields) {
  Witness w = FromModelFile("reference.cvc3.sat", Dialect::kCvc3);
  auto j = nlohmann::json::parse(ToJson(w));
  EXPECT_EQ(j["spec"], "DetectReferenceEvent_NR_18");
  EXPECT_EQ(j["origin"], "solver-model");
  EXPECT_EQ(j["status"], "sat");
  EXPECT_EQ(j["verified"], true);
  EXPECT_EQ(j["verdict"], "satisfied");
  EXPECT_EQ(j["bindings"]["ot"], "{ThrustDrop1E |-> 3}");
  EXPECT_EQ(j["bindings"]["e?"], "LiftOff");
  EXPECT_EQ(j["defaults"]["X"], "9");
  EXPECT_EQ(j["bindings"].size(), 8u);

  Witness yices = FromModelFile("reference.yices.unknown", Dialect::kYices);
  auto k = nlohmann::json::parse(ToJson(yices));
  EXPECT_EQ(k["status"], "unknown");
  EXPECT_FALSE(k.contains("defaults"));
}

TEST(WitnessRenderTest, TestCaseBlockMatchesTheCorpusCase) {
  Witness w = FromModelFile("reference.yices.sat", Dialect::kYices);
  const std::string block = TestCaseBlock(w);
  EXPECT_EQ(block,
            "spec DetectReferenceEvent_TC_18 {\n"
            "  DetectReferenceEvent_NR_18\n"
            "|\n"
            "  now = 2;\n"
            "  fa = 10;\n"
            "  ot = {ThrustDrop1E |-> 3};\n"
            "  tli = {LiftOff |-> 2, ThrustDrop1E |-> 5, ThrustDrop2E |-> 4, ThrustDrop3E |-> 10};\n"
            "  tls = {LiftOff |-> 10, ThrustDrop1E |-> 12, ThrustDrop2E |-> 14, ThrustDrop3E |-> 16};\n"
            "  X = {LiftOff |-> 3, ThrustDrop1E |-> 5, ThrustDrop2E |-> 7, ThrustDrop3E |-> 9};\n"
            "  sysState = normal;\n"
            "  e? = LiftOff\n"
            "}\n");

  // The block parses back, next to its target, into the same bindings.
  std::string text = ReadFile(DataPath("corpus/launch_vehicle.ztc"));
  const std::string renamed = "DetectReferenceEvent_TC_18";
  text.replace(text.find(renamed), renamed.size(), "Original_TC_18");
  SourceFile file = ParseFile(text + "\n" + block, "round.ztc");
  auto tc = AsTestCase(file, renamed);
  ASSERT_TRUE(tc.has_value());
  EXPECT_EQ(tc->target, "DetectReferenceEvent_NR_18");
  EXPECT_EQ(tc->env, w.env);
}

TEST(WitnessRenderTest, UnnumberedSpecGetsPlainSuffix) {
  TypedSpec spec = TypedFromText("spec Plain { n : NAT | n = 1 }\n");
  Witness w = FromSearch(spec, Search(spec, SearchConfig{}));
  EXPECT_EQ(TestCaseBlock(w), "spec Plain_TC {\n  Plain\n|\n  n = 1\n}\n");
}

TEST(AsTestCaseTest, RejectsSpecsThatAreNotTestCases) {
  const auto& c = CorpusSpecNamed("DetectReferenceEvent_NR_18");
  EXPECT_FALSE(AsTestCase(*c.source, "DetectReferenceEvent_NR_18").has_value());
  EXPECT_FALSE(AsTestCase(*c.source, "NoSuchSpec").has_value());
  SourceFile f = ParseFile(
      "spec A { n : NAT | n > 0 }\n"
      "spec B { A | n > 1 }\n",
      "t.ztc");
  EXPECT_FALSE(AsTestCase(f, "B").has_value());
}

TEST(FromSearchTest, KeepsDeclarationOrderAndVerifies) {
  const auto& c = CorpusSpecNamed("SystemStatus_SP_1");
  SearchResult r = Search(c.typed, SearchConfig{});
  ASSERT_EQ(r.status, SearchResult::Status::kWitness);
  Witness w = FromSearch(c.typed, r);
  EXPECT_EQ(w.origin, Witness::Origin::kSearch);
  EXPECT_TRUE(w.confirmed());
  ASSERT_EQ(w.order.size(), c.typed.spec.decls.size());
  for (size_t i = 0; i < w.order.size(); ++i) EXPECT_EQ(w.order[i], c.typed.spec.decls[i].name);
  EXPECT_EQ(nlohmann::json::parse(ToJson(w))["status"], "witness");
}

// Every search witness, printed the way each solver prints a model, comes
// back unchanged and verified.
struct RoundTripCase {
  Dialect dialect;
  bool variant;
  testing::ModelTextOptions text;
  std::string label;
};

void PrintTo(const RoundTripCase& c, std::ostream* os) { *os << c.label; }

class RoundTripTest : public ::testing::TestWithParam<RoundTripCase> {};

TEST_P(RoundTripTest, SearchWitnessesSurviveTheSolverFormat) {
  const RoundTripCase& p = GetParam();
  int witnesses = 0;
  for (const auto& c : CorpusSpecs()) {
    SearchResult r = Search(c.typed, SearchConfig{});
    if (r.status != SearchResult::Status::kWitness) continue;
    ++witnesses;
    SCOPED_TRACE(c.typed.spec.name);
    SmtScript emitted = EmitScript(c.typed, p.dialect, p.variant);
    SmtScript script = ReadScript(emitted.Text());
    SmtModel model = TranslateEnv(c.typed, r.witness, script, &r.universe);
    const std::string text = testing::SynthesizeModel(model, script, p.text);
    SolverOutput out = ParseOutput(text, script);
    ASSERT_EQ(out.status, SolverOutput::Status::kSat) << out.error << "\n" << text;
    Witness w = Reconstruct(out, c.typed, script);
    EXPECT_TRUE(w.confirmed()) << w.verdict.ToString() << "\n" << text;
    EXPECT_EQ(w.env, r.witness) << text;
  }
  EXPECT_GE(witnesses, 20);
}

INSTANTIATE_TEST_SUITE_P(
    Formats, RoundTripTest,
    ::testing::Values(RoundTripCase{Dialect::kYices, false, {}, "yices"},
                      RoundTripCase{Dialect::kYices, false, {"sat", true, false}, "yices_shorthand"},
                      RoundTripCase{Dialect::kYices, true, {}, "yices_variant"},
                      RoundTripCase{Dialect::kCvc3, false, {"Satisfiable.", false, false}, "cvc3"},
                      RoundTripCase{Dialect::kCvc3, false, {"Satisfiable.", false, true}, "cvc3_points"},
                      RoundTripCase{Dialect::kCvc3, true, {"Satisfiable.", false, false}, "cvc3_variant"}),
    [](const auto& info) { return info.param.label; });

}  // namespace
}  // namespace ztc

// Copyright 2026 The AMW Authors.
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

#include "amw/testkit.h"

#include "amw/check.h"
#include "amw/text_format.h"
#include "gtest/gtest.h"
#include "support/brute_matcher.h"
#include "support/random_model.h"
#include "support/samples.h"
#include "support/seed.h"

namespace amw {
namespace {

using ::amw::testing::LoadSample;
using ::amw::testing::ParseOrDie;

TEST(RunTestTest, HotelSuite) {
  // Tests run in document order; acceptance.amw sorts before unit.amw.
  SuiteReport report = RunSuite(LoadSample("hotel"), {});
  EXPECT_EQ(report.RenderLines(),
            "TEST lobby_checkin acceptance PASS\n"
            "TEST desk_checkin unit PASS\n"
            "COVERAGE Guest states 2/2 transitions 3/3\n"
            "SUMMARY tests 2 pass 2 fail 0 error 0\n");
  EXPECT_TRUE(report.AllPass());
}

TEST(RunTestTest, BrokenHotelFailsAtStep) {
  Model m = LoadSample("hotel_broken");
  TestRun run = RunTest(m, *m.FindTest("desk_checkin"));
  EXPECT_EQ(run.verdict.kind, Verdict::Kind::kFail);
  EXPECT_EQ(run.verdict.Detail(), "step 2: expected false, got true");
}

TEST(RunTestTest, LoginSample) {
  Model m = LoadSample("login");
  EXPECT_EQ(RunTest(m, *m.FindTest("accepts_password")).verdict, Verdict::Pass());
  TestRun rejected = RunTest(m, *m.FindTest("rejects_password"));
  EXPECT_EQ(rejected.verdict.kind, Verdict::Kind::kFail);
  EXPECT_EQ(rejected.verdict.Detail(), "step 1: expected true, got false");
  EXPECT_EQ(RenderTrace(rejected.trace),
            "1 call DRIVER->#1 checkPasswd(\"x\")\n2 return DRIVER->#1 checkPasswd(\"x\")=false\n");
}

TEST(RunTestTest, RuntimeErrorIsErrorVerdict) {
  Model m = ParseOrDie(
      "class A { attr r: A; method poke() { call self.r.poke(); } }\n"
      "objects f { object a: A { } }\nsequence d { call a.poke(); }\n"
      "test t category unit { fixture f; driver d; }");
  TestRun run = RunTest(m, m.tests[0]);
  EXPECT_EQ(run.verdict.kind, Verdict::Kind::kError);
  EXPECT_EQ(run.verdict.Detail().rfind("step 1: E_NAV_UNSET", 0), 0u);
}

TEST(RunTestTest, CollectsEveryOracleFailure) {
  Model m = ParseOrDie(
      "class A { attr n: Int; }\nobjects f { object a: A { n = 1; } }\n"
      "pattern p { object x: A { n = 2; } }\nsequence d { }\n"
      "test t category unit { fixture f; driver d; oracle { matches p; assert a.n = 3; assert a.n = 1; } }");
  TestRun run = RunTest(m, m.tests[0]);
  EXPECT_EQ(run.verdict, Verdict::Fail({"pattern p: no object matches 'x: A'", "oracle assert 1: a.n = 3 is false"}));
}

TEST(RunTestTest, FilterByCategoryAndGlob) {
  Model m = LoadSample("hotel");
  SuiteFilter acceptance{{TestCategory::kAcceptance}, std::nullopt};
  EXPECT_EQ(RunSuite(m, acceptance).outcomes.size(), 1u);
  SuiteFilter glob{{}, std::string("desk_*")};
  ASSERT_EQ(RunSuite(m, glob).outcomes.size(), 1u);
  EXPECT_EQ(RunSuite(m, glob).outcomes[0].name, "desk_checkin");
}

Trace Calls(const std::vector<std::tuple<ObjectId, ObjectId, std::string>>& calls) {
  Trace trace;
  std::int64_t seq = 0;
  for (const auto& [from, to, method] : calls) {
    trace.push_back({TraceEvent::Kind::kCall, from, to, method, {}, std::nullopt, {}, ++seq});
    trace.push_back({TraceEvent::Kind::kReturn, from, to, method, {}, std::nullopt, {}, ++seq});
  }
  return trace;
}

SequenceDefinition Expecting(bool strict, const std::vector<std::tuple<std::string, std::string, std::string>>& steps) {
  SequenceDefinition seq;
  seq.strict = strict;
  for (const auto& [from, to, method] : steps) {
    Step s;
    s.kind = Step::Kind::kExpectMessage;
    s.caller = from;
    s.target = to;
    s.method = method;
    seq.steps.push_back(s);
  }
  return seq;
}

TEST(ExpectationsTest, SubsequenceAndStrict) {
  ObjectStore store;
  Model m = ParseOrDie("class A {}");
  store.Name("a", store.Create(m, "A"));
  store.Name("b", store.Create(m, "A"));
  Trace trace = Calls({{kDriver, 1, "go"}, {1, 2, "x"}, {2, 1, "y"}, {1, 2, "z"}});

  EXPECT_TRUE(MatchExpectations(Expecting(false, {{"a", "b", "x"}, {"a", "b", "z"}}), trace, store).ok);
  ExpectationResult out_of_order = MatchExpectations(Expecting(false, {{"a", "b", "z"}, {"a", "b", "x"}}), trace, store);
  EXPECT_FALSE(out_of_order.ok);
  EXPECT_EQ(out_of_order.index, 2u);

  EXPECT_TRUE(MatchExpectations(Expecting(true, {{"a", "b", "x"}, {"b", "a", "y"}, {"a", "b", "z"}}), trace, store).ok);
  ExpectationResult extra = MatchExpectations(Expecting(true, {{"a", "b", "x"}, {"b", "a", "y"}}), trace, store);
  EXPECT_FALSE(extra.ok);
  EXPECT_EQ(extra.index, 3u);
  EXPECT_EQ(extra.reason, "unexpected a -> b : z");
}

TEST(MatchPatternTest, AnchorsAndLinks) {
  Model m = ParseOrDie("class A { attr r: A; attr k: Int; }");
  ObjectStore store;
  for (int i = 0; i < 3; ++i) store.Create(m, "A");
  store.Find(2)->slots["r"] = Value::Ref(3);
  store.Find(3)->slots["k"] = Value::Int(5);
  Model pm = ParseOrDie("class A { attr r: A; attr k: Int; }\npattern p { anchor object a: A { r = b; } object b: A { k = 5; } }");
  const PatternConfiguration& p = pm.patterns[0];
  MatchResult r = MatchPattern(m, p, store, {{"a", 2}});
  ASSERT_TRUE(r.matched);
  EXPECT_EQ(r.witness, (std::map<std::string, ObjectId>{{"a", 2}, {"b", 3}}));
  EXPECT_FALSE(MatchPattern(m, p, store, {{"a", 1}}).matched);
  EXPECT_THROW(MatchPattern(m, p, store, {}), Error);
}

// Property: the backtracking matcher agrees with exhaustive enumeration on
// existence, on the first witness, and on unknown anchors.
TEST(MatchPatternPropertyTest, AgreesWithBruteForce) {
  testing::Rng rng(testing::PropertySeed(2026));
  int matched = 0;
  int unmatched = 0;
  for (int i = 0; i < 3000; ++i) {
    testing::PatternCase c = testing::RandomPatternCase(rng);
    testing::BruteMatch want = testing::BruteForceMatch(c.model, c.pattern, c.store, c.anchors);
    if (want.anchor_unknown) {
      EXPECT_THROW(MatchPattern(c.model, c.pattern, c.store, c.anchors), Error);
      continue;
    }
    MatchResult got = MatchPattern(c.model, c.pattern, c.store, c.anchors);
    ASSERT_EQ(got.matched, want.witness.has_value()) << PrintObjects(c.pattern, true) << c.store.Render();
    if (got.matched) {
      ++matched;
      EXPECT_EQ(got.witness, *want.witness);
      EXPECT_TRUE(testing::SatisfiesPattern(c.model, c.pattern, c.store, c.anchors, got.witness));
    } else {
      ++unmatched;
      EXPECT_FALSE(got.first_failure.empty());
    }
  }
  EXPECT_GT(matched, 300);
  EXPECT_GT(unmatched, 300);
}

// Property: suites over random well-formed models never throw, account for
// every selected test and render identically when re-run.
TEST(SuitePropertyTest, DeterministicReports) {
  testing::Rng rng(testing::PropertySeed(77));
  for (int i = 0; i < 100; ++i) {
    Model m = testing::RandomWellFormedModel(rng);
    SuiteReport first = RunSuite(m, {}, ExecBudget{2000, 32});
    SuiteReport second = RunSuite(m, {}, ExecBudget{2000, 32});
    EXPECT_EQ(first.RenderLines(), second.RenderLines());
    EXPECT_EQ(first.outcomes.size(), m.tests.size());
    EXPECT_EQ(first.Count(Verdict::Kind::kPass) + first.Count(Verdict::Kind::kFail) +
                  first.Count(Verdict::Kind::kError),
              m.tests.size());
    for (const auto& o : first.outcomes) {
      if (o.verdict.kind == Verdict::Kind::kError) {
        EXPECT_EQ(o.verdict.reasons.size(), 1u);
        EXPECT_EQ(o.verdict.Detail().find("internal"), std::string::npos);
        EXPECT_EQ(o.verdict.Detail().find("E_UNBOUND_NAME"), std::string::npos) << o.verdict.Detail();
      }
    }
  }
}

}  // namespace
}  // namespace amw

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

#include "amw/ocl.h"

#include <map>

#include "amw/runtime.h"
#include "amw/text_format.h"
#include "gtest/gtest.h"
#include "support/random_model.h"
#include "support/reference_eval.h"
#include "support/samples.h"
#include "support/seed.h"

namespace amw {
namespace {

using ::amw::testing::Canonical;

class OclTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const Model& m = testing::OclSchema();
    a_ = store_.Create(m, "Node");
    b_ = store_.Create(m, "Leaf");
    store_.Find(a_)->slots["n"] = Value::Int(3);
    store_.Find(a_)->slots["next"] = Value::Ref(b_);
    store_.Find(a_)->slots["kids"] = Value::Set({b_, a_});
    store_.Find(b_)->slots["n"] = Value::Int(INT64_MAX);
    store_.Find(b_)->slots["s"] = Value::String("q");
  }

  std::string Run(const std::string& text) {
    auto expr = ParseExpr(text);
    EXPECT_TRUE(expr.ok()) << text;
    EvalContext context{&testing::OclSchema(), &store_, {}};
    context.Bind("self", Value::Ref(a_));
    context.Bind("u", Value::Undefined());
    return Canonical(Eval(*expr, context));
  }

  ObjectStore store_;
  ObjectId a_ = 0;
  ObjectId b_ = 0;
};

TEST_F(OclTest, Navigation) {
  EXPECT_EQ(Run("self.n"), "int:3");
  EXPECT_EQ(Run("self.next.s"), "str:q");
  EXPECT_EQ(Run("self.next.next"), "undef");
  EXPECT_EQ(Run("self.next.next.n"), "!E_NAV_UNSET");
  EXPECT_EQ(Run("self.next@state"), "str:A");
  EXPECT_EQ(Run("self@state"), "!E_TYPE");
}

TEST_F(OclTest, Arithmetic) {
  EXPECT_EQ(Run("self.n * 2 - 1"), "int:5");
  EXPECT_EQ(Run("self.next.n + 1"), "!E_OVERFLOW");
  EXPECT_EQ(Run("self.next.n - self.n + self.n"), "int:9223372036854775807");
  EXPECT_EQ(Run("-9223372036854775808 * -1"), "!E_OVERFLOW");
}

TEST_F(OclTest, EqualityWithUndefined) {
  EXPECT_EQ(Run("u = u"), "bool:true");
  EXPECT_EQ(Run("self.next.next = u"), "bool:true");
  EXPECT_EQ(Run("self = u"), "bool:false");
  EXPECT_EQ(Run("self <> u"), "bool:true");
  EXPECT_EQ(Run("self.n = u"), "!E_TYPE");
}

TEST_F(OclTest, ShortCircuit) {
  EXPECT_EQ(Run("false and self.next.next.n = 1"), "bool:false");
  EXPECT_EQ(Run("true or zz"), "bool:true");
  EXPECT_EQ(Run("false implies zz"), "bool:true");
  EXPECT_EQ(Run("true and zz"), "!E_UNBOUND_NAME");
}

TEST_F(OclTest, Collections) {
  EXPECT_EQ(Run("self.kids->size()"), "int:2");
  EXPECT_EQ(Run("self.kids->includes(self.next)"), "bool:true");
  EXPECT_EQ(Run("self.kids->includes(u)"), "bool:false");
  EXPECT_EQ(Run("self.kids->forAll(k | k.n > 0)"), "bool:true");
  EXPECT_EQ(Run("self.kids->exists(k | k.s = \"q\")"), "bool:true");
  // Ascending id order: #1 decides before #2 could overflow.
  EXPECT_EQ(Run("self.kids->exists(k | k.n + 1 > 0)"), "bool:true");
  EXPECT_EQ(Run("self.kids->forAll(k | k.n + 1 > 0)"), "!E_OVERFLOW");
  EXPECT_EQ(Run("self.kids->forAll(self | true)"), "!E_TYPE");
}

TEST_F(OclTest, ShadowingPrefersInnermost) {
  EXPECT_EQ(Run("self.kids->exists(k | self.kids->exists(k | k.s = \"q\") and k.n = 3)"), "bool:true");
}

TEST(InvariantTest, HotelFixtures) {
  Model m = testing::LoadSample("hotel");
  ObjectStore store = Instantiate(m, *m.FindConfig("lobby"));
  std::vector<InvariantResult> results = CheckInvariants(m, store);
  ASSERT_EQ(results.size(), 2u);  // alice and bob are both Persons
  EXPECT_EQ(results[0].outcome, InvariantResult::Outcome::kHolds);
  store.Find(1)->slots["name"] = Value::String("");
  results = CheckInvariants(m, store);
  EXPECT_EQ(results[0].outcome, InvariantResult::Outcome::kFails);
  EXPECT_EQ(results[0].object, 1);
}

TEST(InvariantTest, ErrorsAreReported) {
  Model m = testing::ParseOrDie("class A { attr r: A; }\ninv i for A: self.r.r = self;");
  ObjectStore store;
  store.Create(m, "A");
  auto results = CheckInvariants(m, store);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_EQ(results[0].outcome, InvariantResult::Outcome::kError);
  EXPECT_EQ(results[0].reason.rfind("E_NAV_UNSET", 0), 0u);
}

// Property: the library agrees with the naive evaluator on random, possibly
// ill-typed expressions, including which error is raised.
TEST(OclPropertyTest, AgreesWithReferenceEvaluator) {
  testing::Rng rng(testing::PropertySeed(1234));
  std::map<std::string, int> outcome_kinds;
  for (int i = 0; i < 5000; ++i) {
    testing::OclCase c = testing::RandomOclCase(rng);
    EvalContext context{&testing::OclSchema(), &c.store, c.bindings};
    std::string got = Canonical(Eval(c.expr, context));
    std::string want = testing::ReferenceEval(c.expr, c.store, c.bindings);
    ASSERT_EQ(got, want) << PrintExpr(c.expr) << "\n" << c.store.Render();
    ++outcome_kinds[got.substr(0, got.find(':'))];
  }
  // The generator must exercise successes and every error class.
  for (const char* kind : {"bool", "int", "str", "ref", "set", "undef", "!E_NAV_UNSET", "!E_OVERFLOW",
                           "!E_UNBOUND_NAME", "!E_TYPE"}) {
    EXPECT_GT(outcome_kinds[kind], 0) << kind;
  }
}

// Property: evaluation is a pure function of the expression and the store.
TEST(OclPropertyTest, DeterministicAndPure) {
  testing::Rng rng(testing::PropertySeed(99));
  for (int i = 0; i < 500; ++i) {
    testing::OclCase c = testing::RandomOclCase(rng);
    ObjectStore before = c.store;
    EvalContext context{&testing::OclSchema(), &c.store, c.bindings};
    std::string first = Canonical(Eval(c.expr, context));
    EXPECT_EQ(first, Canonical(Eval(c.expr, context)));
    EXPECT_TRUE(before == c.store);
  }
}

// Property: for Bool results, `not not e` evaluates to the same value.
TEST(OclPropertyTest, DoubleNegation) {
  testing::Rng rng(testing::PropertySeed(5));
  for (int i = 0; i < 1000; ++i) {
    testing::OclCase c = testing::RandomOclCase(rng);
    EvalContext context{&testing::OclSchema(), &c.store, c.bindings};
    std::string once = Canonical(Eval(c.expr, context));
    if (once.rfind("bool:", 0) != 0) continue;
    EXPECT_EQ(Canonical(Eval(Expr::Not(Expr::Not(c.expr)), context)), once);
  }
}

}  // namespace
}  // namespace amw

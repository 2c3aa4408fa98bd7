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

// Model-defined tests: an object configuration as test data, a sequence as
// driver and an oracle made of a partial object diagram plus assertions.

#ifndef AMW_TESTKIT_H_
#define AMW_TESTKIT_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "amw/diagnostic.h"
#include "amw/model.h"
#include "amw/runtime.h"
#include "amw/value.h"

namespace amw {

struct Verdict {
  enum class Kind { kPass, kFail, kError };

  Kind kind = Kind::kPass;
  // FAIL: one entry per failed check. ERROR: exactly one entry.
  std::vector<std::string> reasons;

  static Verdict Pass() { return {}; }
  static Verdict Fail(std::vector<std::string> reasons) { return {Kind::kFail, std::move(reasons)}; }
  static Verdict Error(std::string reason) { return {Kind::kError, {std::move(reason)}}; }

  std::string_view name() const;
  std::string Detail() const;  // reasons joined with "; "

  bool operator==(const Verdict&) const = default;
};

struct MatchResult {
  bool matched = false;
  std::map<std::string, ObjectId> witness;  // pattern object -> store id
  std::string first_failure;
};

// Searches for an injective mapping of pattern objects onto store objects.
// Anchored pattern objects (explicit `anchor`, or named like an entry of
// `anchors`) map to anchors[name]. Backtracking visits pattern objects in
// declaration order and candidates in ascending id; the first witness wins.
// Throws Error(E_ANCHOR_UNKNOWN) for an explicit anchor missing from
// `anchors`.
MatchResult MatchPattern(const Model& model, const PatternConfiguration& pattern,
                         const ObjectStore& store, const std::map<std::string, ObjectId>& anchors);

struct ExpectationResult {
  bool ok = true;
  std::size_t index = 0;  // 1-based position of the first divergence
  std::string reason;
};

// Checks the sequence's ExpectMessage steps against calls between model
// objects (DRIVER stimuli are ignored). Non-strict: the expectations must
// occur as a subsequence, and `index` names the first expectation that could
// not be placed. Strict: the calls must equal the expectations exactly, and
// `index` is the first position where they differ.
ExpectationResult MatchExpectations(const SequenceDefinition& sequence, const Trace& trace,
                                    const ObjectStore& store);

struct TestRun {
  Verdict verdict;
  Trace trace;
  ObjectStore store;
  Coverage coverage;
};

// Never throws; problems surface as ERROR verdicts.
TestRun RunTest(const Model& model, const TestCase& test, ExecBudget budget = {});

struct SuiteFilter {
  std::set<TestCategory> categories;  // empty: all
  std::optional<std::string> name_glob;

  bool Accepts(const TestCase& test) const;
};

struct TestOutcome {
  std::string name;
  TestCategory category = TestCategory::kUnit;
  Verdict verdict;
};

struct ChartCoverage {
  std::string chart;
  std::size_t states_total = 0;
  std::size_t transitions_total = 0;
  std::set<std::string> states;
  std::set<std::size_t> transitions;
};

struct SuiteReport {
  std::vector<TestOutcome> outcomes;
  std::vector<ChartCoverage> coverage;  // one per statechart, document order
  double wall_seconds = 0;

  std::size_t Count(Verdict::Kind kind) const;
  std::size_t CountCategory(TestCategory category) const;
  bool AllPass() const { return Count(Verdict::Kind::kPass) == outcomes.size(); }

  // `TEST name category verdict [detail]` per test, then
  // `COVERAGE chart states s/S transitions t/T` per chart and a
  // `SUMMARY` line. Contains no timing, so equal runs render equally.
  std::string RenderLines() const;
  // Human-readable text including wall time.
  std::string RenderText() const;
};

SuiteReport RunSuite(const Model& model, const SuiteFilter& filter, ExecBudget budget = {});

}  // namespace amw

#endif  // AMW_TESTKIT_H_

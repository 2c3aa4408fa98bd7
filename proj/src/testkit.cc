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

#include <fnmatch.h>

#include <chrono>
#include <sstream>

#include "amw/ocl.h"
#include "amw/text_format.h"

namespace amw {

std::string_view Verdict::name() const {
  switch (kind) {
    case Kind::kPass:
      return "PASS";
    case Kind::kFail:
      return "FAIL";
    case Kind::kError:
      return "ERROR";
  }
  return "?";
}

std::string Verdict::Detail() const {
  std::string out;
  for (std::size_t i = 0; i < reasons.size(); ++i) {
    if (i > 0) out += "; ";
    out += reasons[i];
  }
  return out;
}

// --- Pattern matching --------------------------------------------------------

namespace {

class PatternMatcher {
 public:
  PatternMatcher(const Model& model, const PatternConfiguration& pattern, const ObjectStore& store,
                 const std::map<std::string, ObjectId>& anchors)
      : model_(model), pattern_(pattern), store_(store) {
    for (std::size_t i = 0; i < pattern.objects.size(); ++i) index_[pattern.objects[i].name] = i;
    for (const auto& o : pattern.objects) {
      std::optional<ObjectId> anchor;
      auto it = anchors.find(o.name);
      if (it != anchors.end()) {
        anchor = it->second;
      } else if (o.anchor) {
        throw Error("E_ANCHOR_UNKNOWN", "anchored object '" + o.name + "' has no fixture binding",
                    o.loc);
      }
      std::vector<ObjectId> candidates;
      for (const auto& [id, object] : store.objects()) {
        if (anchor && id != *anchor) continue;
        if (LocallyMatches(o, object)) candidates.push_back(id);
      }
      candidates_.push_back(std::move(candidates));
      anchored_.push_back(anchor.has_value());
    }
  }

  MatchResult Run() {
    MatchResult result;
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      if (candidates_[i].empty()) {
        const ObjectDecl& o = pattern_.objects[i];
        result.first_failure = anchored_[i]
                                   ? "anchored object '" + o.name + "' does not satisfy its constraints"
                                   : "no object matches '" + o.name + ": " + o.class_name + "'";
        return result;
      }
    }
    image_.assign(pattern_.objects.size(), 0);
    if (!Search(0)) {
      result.first_failure = "no injective mapping satisfies the links of pattern '" + pattern_.name + "'";
      return result;
    }
    result.matched = true;
    for (std::size_t i = 0; i < image_.size(); ++i) result.witness[pattern_.objects[i].name] = image_[i];
    return result;
  }

 private:
  bool LocallyMatches(const ObjectDecl& o, const RuntimeObject& object) const {
    if (!model_.IsSubclassOf(object.class_name, o.class_name)) return false;
    for (const auto& a : o.assignments) {
      if (a.value.kind != ObjectValue::Kind::kLiteral) continue;
      auto slot = object.slots.find(a.attribute);
      if (slot == object.slots.end() || !(slot->second == Value::FromLiteral(a.value.literal))) {
        return false;
      }
    }
    return true;
  }

  // Index of a referenced pattern object, or npos when it is not declared.
  std::size_t IndexOf(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? std::string::npos : it->second;
  }

  // Checks link constraints that become decidable once objects 0..i are
  // mapped and that involve object i.
  bool LinksHold(std::size_t i) const {
    for (std::size_t j = 0; j <= i; ++j) {
      const ObjectDecl& o = pattern_.objects[j];
      const RuntimeObject& object = *store_.Find(image_[j]);
      for (const auto& a : o.assignments) {
        if (a.value.kind == ObjectValue::Kind::kLiteral) continue;
        std::vector<std::string> names =
            a.value.kind == ObjectValue::Kind::kObject ? std::vector<std::string>{a.value.object} : a.value.set;
        bool involves_i = j == i;
        bool decidable = true;
        std::vector<ObjectId> images;
        for (const auto& name : names) {
          std::size_t k = IndexOf(name);
          if (k == std::string::npos) return false;
          if (k > i) decidable = false;
          if (k == i) involves_i = true;
          if (k <= i) images.push_back(image_[k]);
        }
        if (!decidable || !involves_i) continue;
        auto slot = object.slots.find(a.attribute);
        if (slot == object.slots.end()) return false;
        Value expected = a.value.kind == ObjectValue::Kind::kObject ? Value::Ref(images[0])
                                                                    : Value::Set(images);
        if (!(slot->second == expected)) return false;
      }
    }
    return true;
  }

  bool Search(std::size_t i) {
    if (i == pattern_.objects.size()) return true;
    for (ObjectId id : candidates_[i]) {
      if (used_.count(id)) continue;
      image_[i] = id;
      if (!LinksHold(i)) continue;
      used_.insert(id);
      if (Search(i + 1)) return true;
      used_.erase(id);
    }
    return false;
  }

  const Model& model_;
  const PatternConfiguration& pattern_;
  const ObjectStore& store_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<ObjectId>> candidates_;
  std::vector<bool> anchored_;
  std::vector<ObjectId> image_;
  std::set<ObjectId> used_;
};

}  // namespace

MatchResult MatchPattern(const Model& model, const PatternConfiguration& pattern,
                         const ObjectStore& store, const std::map<std::string, ObjectId>& anchors) {
  return PatternMatcher(model, pattern, store, anchors).Run();
}

// --- Interaction expectations ------------------------------------------------

ExpectationResult MatchExpectations(const SequenceDefinition& sequence, const Trace& trace,
                                    const ObjectStore& store) {
  struct Message {
    std::string caller, callee, method;
    bool operator==(const Message&) const = default;
    std::string ToString() const { return caller + " -> " + callee + " : " + method; }
  };
  std::vector<Message> expected;
  for (const auto& step : sequence.steps) {
    if (step.kind == Step::Kind::kExpectMessage) expected.push_back({step.caller, step.target, step.method});
  }
  std::vector<Message> actual;
  for (const auto& event : trace) {
    if (event.kind != TraceEvent::Kind::kCall || event.caller == kDriver) continue;
    actual.push_back({store.DisplayName(event.caller), store.DisplayName(event.callee), event.method});
  }

  ExpectationResult result;
  if (sequence.strict) {
    std::size_t n = std::max(expected.size(), actual.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (i < expected.size() && i < actual.size() && expected[i] == actual[i]) continue;
      result.ok = false;
      result.index = i + 1;
      if (i >= actual.size()) {
        result.reason = "expected " + expected[i].ToString() + ", but the run ended";
      } else if (i >= expected.size()) {
        result.reason = "unexpected " + actual[i].ToString();
      } else {
        result.reason = "expected " + expected[i].ToString() + ", got " + actual[i].ToString();
      }
      return result;
    }
    return result;
  }
  std::size_t pos = 0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    while (pos < actual.size() && !(actual[pos] == expected[i])) ++pos;
    if (pos == actual.size()) {
      result.ok = false;
      result.index = i + 1;
      result.reason = "expected " + expected[i].ToString() + " not observed in order";
      return result;
    }
    ++pos;
  }
  return result;
}

// --- Test execution ----------------------------------------------------------

namespace {

std::string ErrorText(const Error& error) { return error.code() + ": " + error.what(); }

Verdict Execute(const Model& model, const TestCase& test, ExecBudget budget, TestRun& run) {
  const ObjectConfiguration* fixture = model.FindConfig(test.fixture);
  if (fixture == nullptr) return Verdict::Error("E_UNKNOWN_CONFIG: unknown fixture '" + test.fixture + "'");
  const SequenceDefinition* driver = model.FindSequence(test.driver);
  if (driver == nullptr) return Verdict::Error("E_UNKNOWN_SEQUENCE: unknown driver '" + test.driver + "'");
  const PatternConfiguration* pattern = nullptr;
  if (test.oracle && test.oracle->pattern) {
    pattern = model.FindPattern(*test.oracle->pattern);
    if (pattern == nullptr) {
      return Verdict::Error("E_UNKNOWN_PATTERN: unknown pattern '" + *test.oracle->pattern + "'");
    }
  }

  try {
    run.store = Instantiate(model, *fixture);
  } catch (const Error& error) {
    return Verdict::Error("fixture: " + ErrorText(error));
  }
  Interpreter interpreter(model, run.store, budget);
  struct Finish {
    Interpreter& interpreter;
    TestRun& run;
    ~Finish() {
      run.trace = interpreter.trace();
      run.coverage = interpreter.coverage();
    }
  } finish{interpreter, run};

  std::size_t index = 0;
  for (const auto& step : driver->steps) {
    ++index;
    const std::string at = "step " + std::to_string(index) + ": ";
    if (step.kind == Step::Kind::kExpectMessage) continue;
    if (step.kind == Step::Kind::kAssert) {
      auto value = Eval(step.assertion, ContextWithStoreNames(model, run.store));
      if (!value) return Verdict::Error(at + ErrorText(value.error()));
      if (value->kind() != Value::Kind::kBool) return Verdict::Error(at + "E_TYPE: assertion is not Bool");
      if (!value->as_bool()) return Verdict::Fail({at + "assertion failed: " + PrintExpr(step.assertion)});
      continue;
    }
    auto target = run.store.Lookup(step.target);
    if (!target) return Verdict::Error(at + "E_UNKNOWN_OBJECT: unknown object '" + step.target + "'");
    std::vector<Value> args;
    for (const auto& arg : step.args) {
      if (arg.kind == ObjectValue::Kind::kLiteral) {
        args.push_back(Value::FromLiteral(arg.literal));
      } else if (arg.kind == ObjectValue::Kind::kObject) {
        auto id = run.store.Lookup(arg.object);
        if (!id) return Verdict::Error(at + "E_UNKNOWN_OBJECT: unknown object '" + arg.object + "'");
        args.push_back(Value::Ref(*id));
      } else {
        return Verdict::Error(at + "E_TYPE: set arguments are not supported");
      }
    }
    auto result = interpreter.Invoke(kDriver, *target, step.method, std::move(args));
    if (!result) return Verdict::Error(at + ErrorText(result.error()));
    if (step.expected) {
      Value want = Value::FromLiteral(*step.expected);
      if (!*result) return Verdict::Fail({at + "expected " + want.ToString() + ", got no value"});
      if (!(**result == want)) {
        return Verdict::Fail({at + "expected " + want.ToString() + ", got " + (*result)->ToString()});
      }
    }
  }

  std::vector<std::string> failures;
  ExpectationResult expectations = MatchExpectations(*driver, interpreter.trace(), run.store);
  if (!expectations.ok) {
    failures.push_back("expect " + std::to_string(expectations.index) + ": " + expectations.reason);
  }
  if (pattern != nullptr) {
    try {
      MatchResult match = MatchPattern(model, *pattern, run.store, run.store.name_index());
      if (!match.matched) failures.push_back("pattern " + pattern->name + ": " + match.first_failure);
    } catch (const Error& error) {
      return Verdict::Error("pattern " + pattern->name + ": " + ErrorText(error));
    }
  }
  if (test.oracle) {
    EvalContext context = ContextWithStoreNames(model, run.store);
    for (std::size_t i = 0; i < test.oracle->assertions.size(); ++i) {
      const Expr& assertion = test.oracle->assertions[i];
      const std::string at = "oracle assert " + std::to_string(i + 1) + ": ";
      auto value = Eval(assertion, context);
      if (!value) return Verdict::Error(at + ErrorText(value.error()));
      if (value->kind() != Value::Kind::kBool) return Verdict::Error(at + "E_TYPE: assertion is not Bool");
      if (!value->as_bool()) failures.push_back(at + PrintExpr(assertion) + " is false");
    }
  }
  if (!failures.empty()) return Verdict::Fail(std::move(failures));
  return Verdict::Pass();
}

}  // namespace

TestRun RunTest(const Model& model, const TestCase& test, ExecBudget budget) {
  TestRun run;
  try {
    run.verdict = Execute(model, test, budget, run);
  } catch (const Error& error) {
    run.verdict = Verdict::Error(ErrorText(error));
  } catch (const std::exception& error) {
    run.verdict = Verdict::Error(std::string("internal: ") + error.what());
  }
  return run;
}

// --- Suites ------------------------------------------------------------------

bool SuiteFilter::Accepts(const TestCase& test) const {
  if (!categories.empty() && !categories.count(test.category)) return false;
  if (name_glob && fnmatch(name_glob->c_str(), test.name.c_str(), 0) != 0) return false;
  return true;
}

std::size_t SuiteReport::Count(Verdict::Kind kind) const {
  std::size_t n = 0;
  for (const auto& o : outcomes) n += o.verdict.kind == kind;
  return n;
}

std::size_t SuiteReport::CountCategory(TestCategory category) const {
  std::size_t n = 0;
  for (const auto& o : outcomes) n += o.category == category;
  return n;
}

std::string SuiteReport::RenderLines() const {
  std::ostringstream out;
  for (const auto& o : outcomes) {
    out << "TEST " << o.name << " " << CategoryName(o.category) << " " << o.verdict.name();
    if (!o.verdict.reasons.empty()) out << " " << o.verdict.Detail();
    out << "\n";
  }
  for (const auto& c : coverage) {
    out << "COVERAGE " << c.chart << " states " << c.states.size() << "/" << c.states_total
        << " transitions " << c.transitions.size() << "/" << c.transitions_total << "\n";
  }
  out << "SUMMARY tests " << outcomes.size() << " pass " << Count(Verdict::Kind::kPass) << " fail "
      << Count(Verdict::Kind::kFail) << " error " << Count(Verdict::Kind::kError) << "\n";
  return out.str();
}

std::string SuiteReport::RenderText() const {
  std::ostringstream out;
  for (const auto& o : outcomes) {
    out << o.verdict.name() << (o.verdict.kind == Verdict::Kind::kPass ? "   " : "  ") << o.name
        << " (" << CategoryName(o.category) << ")\n";
    for (const auto& reason : o.verdict.reasons) out << "        " << reason << "\n";
  }
  out << "\n";
  for (TestCategory category :
       {TestCategory::kUnit, TestCategory::kIntegration, TestCategory::kAcceptance}) {
    out << CategoryName(category) << ": " << CountCategory(category) << "  ";
  }
  out << "\n" << Count(Verdict::Kind::kPass) << " passed, " << Count(Verdict::Kind::kFail)
      << " failed, " << Count(Verdict::Kind::kError) << " errors in " << wall_seconds << " s\n";
  for (const auto& c : coverage) {
    out << "statechart " << c.chart << ": states " << c.states.size() << "/" << c.states_total
        << ", transitions " << c.transitions.size() << "/" << c.transitions_total << "\n";
  }
  return out.str();
}

SuiteReport RunSuite(const Model& model, const SuiteFilter& filter, ExecBudget budget) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  Coverage total;
  for (const auto& test : model.tests) {
    if (!filter.Accepts(test)) continue;
    TestRun run = RunTest(model, test, budget);
    total.Merge(run.coverage);
    report.outcomes.push_back({test.name, test.category, std::move(run.verdict)});
  }
  for (const auto& chart : model.statecharts) {
    ChartCoverage c;
    c.chart = chart.owner;
    c.states_total = chart.states.size();
    c.transitions_total = chart.transitions.size();
    if (auto it = total.states.find(chart.owner); it != total.states.end()) c.states = it->second;
    if (auto it = total.transitions.find(chart.owner); it != total.transitions.end()) {
      c.transitions = it->second;
    }
    report.coverage.push_back(std::move(c));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace amw

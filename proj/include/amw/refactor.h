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

// Model refactorings with context conditions, co-transformation of
// glass-box tests and regression verification against acceptance tests.
//
// Rules and their arguments:
//   pull_up_attribute  Super,attr                      (default value required for primitive types)
//   pull_up_method     Super,method,override,Donor | Super,method,abstract | Super,method,unify
//   rename_class       Old,New
//   rename_attribute   Owner,old,new
//   rename_method      Owner,old,new
//
// Every rule is a pure function of the model. A request either yields
// violations and no model, or a well-formed model and no violations.

#ifndef AMW_REFACTOR_H_
#define AMW_REFACTOR_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amw/diagnostic.h"
#include "amw/model.h"
#include "amw/runtime.h"
#include "amw/testkit.h"

namespace amw {

struct RefactoringRequest {
  std::string rule;
  std::vector<std::string> args;
  // Literal text for attributes added to existing objects. For String
  // attributes text that is not a quoted literal is taken verbatim.
  std::optional<std::string> default_value;
  // One cloned glass-box test per value, using it instead of the default.
  std::vector<std::string> clone_values;
  bool allow_published = false;
};

const std::vector<std::string>& RefactoringRules();

struct ContextViolation {
  std::string code;
  std::string subject;
  std::string message;

  bool operator==(const ContextViolation&) const = default;
};

struct TestChange {
  std::string test;
  // "patched", "patched-not-constrained", "cloned-from <test>" or
  // "obsoleted-warning".
  std::string kind;

  bool operator==(const TestChange&) const = default;
};

struct PreservationResult {
  SuiteReport before;
  SuiteReport after;
  bool preserved = true;   // same acceptance tests with the same verdict kinds
  DiagnosticList warnings;  // W_NO_OBSERVERS, W_ACCEPTANCE_CHANGED
};

struct RefactoringReport {
  std::string rule;
  bool applied = false;
  std::vector<ContextViolation> violations;
  std::optional<Model> model_after;
  std::vector<TestChange> test_changes;
  std::optional<PreservationResult> preservation;

  // `RULE rule applied|rejected`, `VIOLATION code subject`,
  // `TESTCHANGE name kind`, and `PRESERVED true|false` once verified.
  std::string RenderLines() const;
  std::string RenderText() const;
};

// Evaluates the rule's context conditions without changing anything.
std::vector<ContextViolation> CheckContext(const Model& model, const RefactoringRequest& request);

RefactoringReport ApplyRefactoring(const Model& model, const RefactoringRequest& request);

// Runs the acceptance suite on both models.
PreservationResult VerifyPreservation(const Model& before, const Model& after, ExecBudget budget = {});

struct ObsoleteWarning {
  std::string test;
  std::string reason;

  bool operator==(const ObsoleteWarning&) const = default;
};

// Tests whose fixture, driver or oracle reference missing elements, and
// generated tests whose goal no longer exists in their statechart.
std::vector<ObsoleteWarning> ReportObsolete(const Model& model);

// Canonical text of each acceptance test together with its fixture, driver
// and pattern, keyed by test name.
std::map<std::string, std::string> AcceptanceSnapshot(const Model& model);

}  // namespace amw

#endif  // AMW_REFACTOR_H_

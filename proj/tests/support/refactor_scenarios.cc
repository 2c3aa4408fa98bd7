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

#include "support/refactor_scenarios.h"

#include "amw/text_format.h"
#include "support/samples.h"

namespace amw::testing {

namespace {

RefactorScenario Scenario(std::string name, std::string sample, std::string rule, std::vector<std::string> args) {
  RefactorScenario s;
  s.name = std::move(name);
  s.sample = std::move(sample);
  s.request.rule = std::move(rule);
  s.request.args = std::move(args);
  return s;
}

}  // namespace

std::vector<RefactorScenario> HotelScenarios() {
  std::vector<RefactorScenario> out;
  out.push_back(Scenario("pull_up_passwd", "hotel", "pull_up_attribute", {"Person", "passwd"}));
  out.back().request.default_value = "";
  out.push_back(Scenario("pull_up_passwd_clones", "hotel", "pull_up_attribute", {"Person", "passwd"}));
  out.back().request.default_value = "";
  out.back().request.clone_values = {"\"v1\"", "\"v2\""};
  out.push_back(Scenario("pull_up_passwd_clash", "hotel_clash", "pull_up_attribute", {"Person", "passwd"}));
  out.back().request.default_value = "";
  out.push_back(Scenario("pull_up_passwd_no_default", "hotel", "pull_up_attribute", {"Person", "passwd"}));
  out.push_back(Scenario("pull_up_check_passwd", "hotel", "pull_up_method", {"Person", "checkPasswd", "unify"}));
  out.push_back(Scenario("pull_up_describe_abstract", "hotel", "pull_up_method", {"Person", "describe", "abstract"}));
  out.push_back(
      Scenario("pull_up_describe_override", "hotel", "pull_up_method", {"Person", "describe", "override", "Staff"}));
  out.push_back(Scenario("pull_up_describe_unify", "hotel", "pull_up_method", {"Person", "describe", "unify"}));
  out.push_back(Scenario("rename_visitor", "hotel", "rename_class", {"Visitor", "Caller"}));
  out.push_back(Scenario("rename_guest", "hotel", "rename_class", {"Guest", "Lodger"}));
  out.push_back(Scenario("rename_guest_allowed", "hotel", "rename_class", {"Guest", "Lodger"}));
  out.back().request.allow_published = true;
  out.push_back(Scenario("rename_badge", "hotel", "rename_attribute", {"Visitor", "badge", "pass"}));
  return out;
}

std::string RenderScenario(const RefactorScenario& scenario) {
  Model before = LoadSample(scenario.sample);
  RefactoringReport report = ApplyRefactoring(before, scenario.request);
  if (report.applied) report.preservation = VerifyPreservation(before, *report.model_after);
  std::string out = report.RenderText();
  if (report.applied) out += "--- model after ---\n" + PrintModel(*report.model_after);
  return out;
}

}  // namespace amw::testing

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

// Named hotel refactorings whose complete reports are kept as golden files
// under golden/refactor/.

#ifndef AMW_TESTS_SUPPORT_REFACTOR_SCENARIOS_H_
#define AMW_TESTS_SUPPORT_REFACTOR_SCENARIOS_H_

#include <string>
#include <vector>

#include "amw/refactor.h"

namespace amw::testing {

struct RefactorScenario {
  std::string name;
  std::string sample;
  RefactoringRequest request;
};

std::vector<RefactorScenario> HotelScenarios();

// Report with preservation check, followed by the canonical model after
// the refactoring when it applied.
std::string RenderScenario(const RefactorScenario& scenario);

}  // namespace amw::testing

#endif  // AMW_TESTS_SUPPORT_REFACTOR_SCENARIOS_H_

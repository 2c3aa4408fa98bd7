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

// Systematic refactoring requests over a model, for exhaustive checks.

#ifndef AMW_TESTS_SUPPORT_REFACTOR_CANDIDATES_H_
#define AMW_TESTS_SUPPORT_REFACTOR_CANDIDATES_H_

#include <string>
#include <vector>

#include "amw/model.h"
#include "amw/refactor.h"

namespace amw::testing {

// Every pull-up the class structure suggests (attributes declared in a
// direct subclass, methods declared in two or more) in all variants, plus
// a rename of each class, attribute and method to `<name>Renamed`.
// Primitive pull-ups carry the type's default literal.
std::vector<RefactoringRequest> CandidateRequests(const Model& model, bool allow_published = false);

std::string DescribeRequest(const RefactoringRequest& request);

}  // namespace amw::testing

#endif  // AMW_TESTS_SUPPORT_REFACTOR_CANDIDATES_H_

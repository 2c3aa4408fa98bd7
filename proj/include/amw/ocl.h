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

// Evaluation of constraint expressions and named invariants over an object
// store.
//
// Evaluation is strict, left to right, except that `and`, `or` and `implies`
// skip their right operand once the left one decides the result, and
// `forAll` / `exists` stop at the first element that decides theirs.
// Quantifiers visit set elements in ascending id order.
//
// Error codes:
//   E_NAV_UNSET     navigation or @state through an unset reference
//   E_OVERFLOW      64-bit arithmetic overflow
//   E_UNBOUND_NAME  free name without a binding
//   E_TYPE          operand of the wrong kind (only reachable for
//                   expressions that did not pass the type checker)

#ifndef AMW_OCL_H_
#define AMW_OCL_H_

#include <string>
#include <utility>
#include <vector>

#include "amw/diagnostic.h"
#include "amw/model.h"
#include "amw/value.h"

namespace amw {

struct EvalContext {
  const Model* model = nullptr;
  const ObjectStore* store = nullptr;
  // Later entries shadow earlier ones.
  std::vector<std::pair<std::string, Value>> bindings;

  void Bind(std::string name, Value value) { bindings.emplace_back(std::move(name), std::move(value)); }
};

Expected<Value> Eval(const Expr& expr, const EvalContext& context);

// Binds every fixture name of the store to its object.
EvalContext ContextWithStoreNames(const Model& model, const ObjectStore& store);

struct InvariantResult {
  enum class Outcome { kHolds, kFails, kError };

  std::string invariant;
  ObjectId object = 0;
  Outcome outcome = Outcome::kHolds;
  std::string reason;  // kError only: "E_CODE: message"

  bool operator==(const InvariantResult&) const = default;
};

std::string_view OutcomeName(InvariantResult::Outcome outcome);

// One result per (invariant, object) pair where the object's class is the
// invariant's context class or a descendant; invariants in document order,
// objects in ascending id order.
std::vector<InvariantResult> CheckInvariants(const Model& model, const ObjectStore& store);

}  // namespace amw

#endif  // AMW_OCL_H_

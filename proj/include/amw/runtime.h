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

// Direct execution of models: fixtures become object stores, method calls
// run action bodies or fire statechart transitions, and every call and
// return is recorded in a trace.

#ifndef AMW_RUNTIME_H_
#define AMW_RUNTIME_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "amw/diagnostic.h"
#include "amw/model.h"
#include "amw/ocl.h"
#include "amw/value.h"

namespace amw {

struct ExecBudget {
  std::int64_t max_steps = 100000;
  int max_depth = 256;
};

struct TraceEvent {
  enum class Kind { kCall, kReturn };

  Kind kind = Kind::kCall;
  ObjectId caller = kDriver;
  ObjectId callee = 0;
  std::string method;
  std::vector<Value> args;
  std::optional<Value> result;  // kReturn of a method with a value
  std::string error;            // kReturn that failed: the error code
  std::int64_t seq = 0;

  bool operator==(const TraceEvent&) const = default;
};

using Trace = std::vector<TraceEvent>;

// `SEQ kind caller->callee method(args)[=result]`, e.g.
//   1 call DRIVER->#1 checkPasswd("x")
//   2 return DRIVER->#1 checkPasswd("x")=true
// A failed call returns `=!E_CODE`.
std::string RenderTraceEvent(const TraceEvent& event);
std::string RenderTrace(const Trace& trace);

// States entered and transitions fired, per statechart (keyed by owner).
struct Coverage {
  std::map<std::string, std::set<std::string>> states;
  std::map<std::string, std::set<std::size_t>> transitions;  // indices into the chart

  void Merge(const Coverage& other);
  bool operator==(const Coverage&) const = default;
};

// One object per declaration, in declaration order (ids 1, 2, ...), with
// assigned slots set and the rest defaulted. Throws Error with
// E_ABSTRACT_INSTANTIATION, E_UNKNOWN_CLASS, E_UNKNOWN_MEMBER or
// E_UNKNOWN_OBJECT for configurations the checker would reject.
ObjectStore Instantiate(const Model& model, const ObjectConfiguration& config);

// Runs calls against one store. Dispatch on the receiver's class:
//   - a method with a body executes it;
//   - a body-less method that triggers transitions of the governing
//     statechart fires the single transition enabled in the current state
//     (E_NO_TRANSITION for none, E_NONDETERMINISM for several);
//   - any other body-less method does nothing and returns its type default.
// A method that ends without `return` also yields its type's default.
class Interpreter {
 public:
  Interpreter(const Model& model, ObjectStore& store, ExecBudget budget = {});

  // Result is nullopt for methods without a return type. Errors carry the
  // runtime codes above plus E_NAV_UNSET, E_OVERFLOW, E_BUDGET, E_ARITY,
  // E_UNKNOWN_MEMBER and E_TYPE.
  Expected<std::optional<Value>> Invoke(ObjectId caller, ObjectId target, const std::string& method,
                                        std::vector<Value> args);

  const Trace& trace() const { return trace_; }
  const Coverage& coverage() const { return coverage_; }
  ObjectStore& store() { return store_; }

 private:
  std::optional<Value> Dispatch(ObjectId caller, ObjectId target, const std::string& method,
                                std::vector<Value> args, const SourceLoc& loc);
  std::optional<Value> RunBody(const MethodDef& method, ObjectId self, std::vector<Value> args);
  std::optional<Value> FireTransition(const Statechart& chart, const MethodDef& method,
                                      ObjectId self, std::vector<Value> args, const SourceLoc& loc);
  // Returns true when a `return` statement ran; its value goes to `result`.
  bool Execute(const Block& block, EvalContext& frame, std::optional<Value>& result);
  Value Evaluate(const Expr& expr, const EvalContext& frame);
  void Tick(const SourceLoc& loc);

  const Model& model_;
  ObjectStore& store_;
  ExecBudget budget_;
  Trace trace_;
  Coverage coverage_;
  std::int64_t seq_ = 0;
  std::int64_t steps_ = 0;
  int depth_ = 0;
};

}  // namespace amw

#endif  // AMW_RUNTIME_H_

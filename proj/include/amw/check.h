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

// Static semantics: typing of constraint/action expressions and the
// well-formedness checker every other module relies on.

#ifndef AMW_CHECK_H_
#define AMW_CHECK_H_

#include <functional>
#include <map>
#include <string>

#include "amw/diagnostic.h"
#include "amw/model.h"

namespace amw {

struct TypeScope {
  const Model* model = nullptr;
  std::map<std::string, TypeRef> names;
};

// Typing rules:
//   literals                  their type
//   name                      looked up in the scope (E_UNKNOWN_NAME)
//   e.a                       e : C, a attribute of C or an ancestor
//   e@state                   e : C, C governed by a statechart -> String
//   not e, and/or/implies     Bool operands -> Bool
//   = <>                      comparable operands -> Bool
//   < <= > >=                 Int operands -> Bool
//   + - *                     Int operands -> Int
//   e->size()                 e : set<C> -> Int
//   e->includes(x)            e : set<C>, x : D, C and D related -> Bool
//   e->forAll/exists(v | b)   e : set<C>, b : Bool with v : C -> Bool
// "Related" and "comparable" mean one class inherits from the other.
Expected<TypeRef, Diagnostic> TypeOf(const Expr& expr, const TypeScope& scope);

bool IsAssignable(const Model& model, const TypeRef& target, const TypeRef& value);
bool IsComparable(const Model& model, const TypeRef& a, const TypeRef& b);

// Calls `visit` for every attribute navigation in `expr` whose base has a
// class type, passing the navigation node and the static class of its base.
// Subexpressions that do not type-check are skipped.
void ForEachNavigation(const Expr& expr, const TypeScope& scope,
                       const std::function<void(const Expr& nav, const std::string& base_class)>& visit);

// Every violation of the model's static invariants, in document order
// (file, line, column). An empty list means the model is well-formed.
DiagnosticList CheckWellformed(const Model& model);

}  // namespace amw

#endif  // AMW_CHECK_H_

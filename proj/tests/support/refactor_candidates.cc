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

#include "support/refactor_candidates.h"

#include <map>
#include <optional>
#include <set>

namespace amw::testing {

namespace {

std::optional<std::string> DefaultText(const TypeRef& type) {
  switch (type.kind) {
    case TypeRef::Kind::kInt:
      return "0";
    case TypeRef::Kind::kBool:
      return "false";
    case TypeRef::Kind::kString:
      return "\"\"";
    default:
      return std::nullopt;
  }
}

}  // namespace

std::vector<RefactoringRequest> CandidateRequests(const Model& model, bool allow_published) {
  std::vector<RefactoringRequest> out;
  auto add = [&](std::string rule, std::vector<std::string> args,
                 std::optional<std::string> default_value = std::nullopt) {
    RefactoringRequest r;
    r.rule = std::move(rule);
    r.args = std::move(args);
    r.default_value = std::move(default_value);
    r.allow_published = allow_published;
    out.push_back(std::move(r));
  };
  for (const ClassDef& super : model.classes) {
    std::map<std::string, TypeRef> attributes;  // first declaration wins
    std::map<std::string, std::vector<std::string>> methods;
    for (const ClassDef* sub : model.DirectSubclasses(super.name)) {
      for (const AttributeDef& a : sub->attributes) attributes.emplace(a.name, a.type);
      for (const MethodDef& m : sub->methods) methods[m.name].push_back(sub->name);
    }
    for (const auto& [name, type] : attributes) {
      add("pull_up_attribute", {super.name, name}, DefaultText(type));
    }
    for (const auto& [name, owners] : methods) {
      if (owners.size() < 2) continue;
      add("pull_up_method", {super.name, name, "abstract"});
      add("pull_up_method", {super.name, name, "unify"});
      for (const std::string& donor : owners) {
        add("pull_up_method", {super.name, name, "override", donor});
      }
    }
  }
  for (const ClassDef& c : model.classes) {
    add("rename_class", {c.name, c.name + "Renamed"});
    for (const AttributeDef& a : c.attributes) {
      add("rename_attribute", {c.name, a.name, a.name + "Renamed"});
    }
    for (const MethodDef& m : c.methods) {
      add("rename_method", {c.name, m.name, m.name + "Renamed"});
    }
  }
  return out;
}

std::string DescribeRequest(const RefactoringRequest& request) {
  std::string s = request.rule + "(";
  for (std::size_t i = 0; i < request.args.size(); ++i) {
    if (i > 0) s += ",";
    s += request.args[i];
  }
  s += ")";
  if (request.default_value) s += " default " + *request.default_value;
  if (request.allow_published) s += " allow-published";
  return s;
}

}  // namespace amw::testing

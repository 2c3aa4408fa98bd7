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

#include "amw/model.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

namespace amw {

std::string TypeRef::ToString() const {
  switch (kind) {
    case Kind::kInt:
      return "Int";
    case Kind::kBool:
      return "Bool";
    case Kind::kString:
      return "String";
    case Kind::kClass:
      return class_name;
    case Kind::kSet:
      return "set<" + class_name + ">";
  }
  return "?";
}

TypeRef Literal::type() const {
  switch (kind) {
    case Kind::kInt:
      return TypeRef::Int();
    case Kind::kBool:
      return TypeRef::Bool();
    case Kind::kString:
      return TypeRef::String();
  }
  return TypeRef::Int();
}

std::string Literal::ToString() const {
  switch (kind) {
    case Kind::kInt:
      return std::to_string(int_value);
    case Kind::kBool:
      return bool_value ? "true" : "false";
    case Kind::kString: {
      std::string out = "\"";
      for (char c : string_value) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
      out += '"';
      return out;
    }
  }
  return {};
}

std::string_view BinaryOpSymbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::kImplies:
      return "implies";
    case BinaryOp::kOr:
      return "or";
    case BinaryOp::kAnd:
      return "and";
    case BinaryOp::kEq:
      return "=";
    case BinaryOp::kNe:
      return "<>";
    case BinaryOp::kLt:
      return "<";
    case BinaryOp::kLe:
      return "<=";
    case BinaryOp::kGt:
      return ">";
    case BinaryOp::kGe:
      return ">=";
    case BinaryOp::kAdd:
      return "+";
    case BinaryOp::kSub:
      return "-";
    case BinaryOp::kMul:
      return "*";
  }
  return "?";
}

Expr Expr::Lit(Literal value, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kLiteral;
  e.literal = std::move(value);
  e.loc = std::move(loc);
  return e;
}

Expr Expr::Name(std::string name, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kName;
  e.text = std::move(name);
  e.loc = std::move(loc);
  return e;
}

Expr Expr::Nav(Expr base, std::string attribute, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kNav;
  e.text = std::move(attribute);
  e.args.push_back(std::move(base));
  e.loc = std::move(loc);
  return e;
}

Expr Expr::State(Expr base, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kState;
  e.args.push_back(std::move(base));
  e.loc = std::move(loc);
  return e;
}

Expr Expr::Not(Expr operand, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kNot;
  e.args.push_back(std::move(operand));
  e.loc = std::move(loc);
  return e;
}

Expr Expr::Binary(BinaryOp op, Expr lhs, Expr rhs, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kBinary;
  e.op = op;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  e.loc = std::move(loc);
  return e;
}

Expr Expr::Size(Expr base, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kSize;
  e.args.push_back(std::move(base));
  e.loc = std::move(loc);
  return e;
}

Expr Expr::Includes(Expr base, Expr element, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kIncludes;
  e.args.push_back(std::move(base));
  e.args.push_back(std::move(element));
  e.loc = std::move(loc);
  return e;
}

Expr Expr::ForAll(Expr base, std::string var, Expr body, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kForAll;
  e.text = std::move(var);
  e.args.push_back(std::move(base));
  e.args.push_back(std::move(body));
  e.loc = std::move(loc);
  return e;
}

Expr Expr::Exists(Expr base, std::string var, Expr body, SourceLoc loc) {
  Expr e = ForAll(std::move(base), std::move(var), std::move(body), std::move(loc));
  e.kind = Kind::kExists;
  return e;
}

const AttributeDef* ClassDef::FindAttribute(std::string_view attr) const {
  for (const auto& a : attributes) {
    if (a.name == attr) return &a;
  }
  return nullptr;
}

const MethodDef* ClassDef::FindMethod(std::string_view method) const {
  for (const auto& m : methods) {
    if (m.name == method) return &m;
  }
  return nullptr;
}

bool Statechart::HasState(std::string_view state) const {
  return std::find(states.begin(), states.end(), state) != states.end();
}

std::string ObjectValue::ToString() const {
  switch (kind) {
    case Kind::kLiteral:
      return literal.ToString();
    case Kind::kObject:
      return object;
    case Kind::kSet: {
      std::string out = "{";
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (i > 0) out += ", ";
        out += set[i];
      }
      return out + "}";
    }
  }
  return {};
}

const SlotAssignment* ObjectDecl::FindAssignment(std::string_view attribute) const {
  for (const auto& a : assignments) {
    if (a.attribute == attribute) return &a;
  }
  return nullptr;
}

const ObjectDecl* ObjectDiagram::FindObject(std::string_view object) const {
  for (const auto& o : objects) {
    if (o.name == object) return &o;
  }
  return nullptr;
}

std::string_view CategoryName(TestCategory category) {
  switch (category) {
    case TestCategory::kUnit:
      return "unit";
    case TestCategory::kIntegration:
      return "integration";
    case TestCategory::kAcceptance:
      return "acceptance";
  }
  return "unit";
}

std::optional<TestCategory> ParseCategory(std::string_view text) {
  if (text == "unit") return TestCategory::kUnit;
  if (text == "integration") return TestCategory::kIntegration;
  if (text == "acceptance") return TestCategory::kAcceptance;
  return std::nullopt;
}

namespace {

template <typename Vec>
auto FindByName(Vec& items, std::string_view name) -> decltype(&items[0]) {
  for (auto& item : items) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

}  // namespace

const ClassDef* Model::FindClass(std::string_view name) const { return FindByName(classes, name); }
ClassDef* Model::FindClass(std::string_view name) { return FindByName(classes, name); }

const Statechart* Model::FindStatechart(std::string_view owner) const {
  for (const auto& chart : statecharts) {
    if (chart.owner == owner) return &chart;
  }
  return nullptr;
}

const ObjectConfiguration* Model::FindConfig(std::string_view name) const {
  return FindByName(configs, name);
}
const PatternConfiguration* Model::FindPattern(std::string_view name) const {
  return FindByName(patterns, name);
}
const SequenceDefinition* Model::FindSequence(std::string_view name) const {
  return FindByName(sequences, name);
}
const TestCase* Model::FindTest(std::string_view name) const { return FindByName(tests, name); }

std::vector<const ClassDef*> Model::Ancestry(std::string_view name) const {
  std::vector<const ClassDef*> chain;
  std::set<std::string_view> seen;
  const ClassDef* current = FindClass(name);
  while (current != nullptr && seen.insert(current->name).second) {
    chain.push_back(current);
    if (!current->superclass) break;
    current = FindClass(*current->superclass);
  }
  return chain;
}

bool Model::IsSubclassOf(std::string_view derived, std::string_view base) const {
  for (const ClassDef* c : Ancestry(derived)) {
    if (c->name == base) return true;
  }
  return false;
}

std::vector<const ClassDef*> Model::DirectSubclasses(std::string_view name) const {
  std::vector<const ClassDef*> out;
  for (const auto& c : classes) {
    if (c.superclass && *c.superclass == name) out.push_back(&c);
  }
  return out;
}

const Statechart* Model::StatechartFor(std::string_view class_name) const {
  for (const ClassDef* c : Ancestry(class_name)) {
    if (const Statechart* chart = FindStatechart(c->name)) return chart;
  }
  return nullptr;
}

std::vector<const AttributeDef*> Model::AllAttributes(std::string_view class_name) const {
  std::vector<const ClassDef*> chain = Ancestry(class_name);
  std::vector<const AttributeDef*> out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    for (const auto& a : (*it)->attributes) out.push_back(&a);
  }
  return out;
}

bool IsReservedWord(std::string_view word) {
  static constexpr std::array<std::string_view, 30> kReserved = {
      "published", "abstract", "class",  "extends", "attr",     "method",
      "var",       "return",   "if",     "else",    "call",     "statechart",
      "trans",     "objects",  "pattern", "object", "anchor",   "sequence",
      "expect",    "assert",   "inv",    "test",    "and",      "or",
      "implies",   "not",      "true",   "false",   "returns",  "project",
  };
  return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

bool IsIdentifier(std::string_view text) {
  if (text.empty()) return false;
  auto head = static_cast<unsigned char>(text[0]);
  if (!(std::isalpha(head) || head == '_')) return false;
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || u == '_')) return false;
  }
  return !IsReservedWord(text);
}

const AttributeDef* FindAttributeInHierarchy(const Model& model, std::string_view class_name,
                                             std::string_view attribute,
                                             std::string* defining_class) {
  for (const ClassDef* c : model.Ancestry(class_name)) {
    if (const AttributeDef* a = c->FindAttribute(attribute)) {
      if (defining_class != nullptr) *defining_class = c->name;
      return a;
    }
  }
  return nullptr;
}

const MethodDef* FindMethodInHierarchy(const Model& model, std::string_view class_name,
                                       std::string_view method, std::string* defining_class) {
  for (const ClassDef* c : model.Ancestry(class_name)) {
    if (const MethodDef* m = c->FindMethod(method)) {
      if (defining_class != nullptr) *defining_class = c->name;
      return m;
    }
  }
  return nullptr;
}

MemberResolution LookupMember(const Model& model, std::string_view class_name,
                              std::string_view member,
                              std::optional<std::string_view> relative_to) {
  if (model.FindClass(class_name) == nullptr) {
    throw Error("E_UNKNOWN_CLASS", "unknown class '" + std::string(class_name) + "'");
  }
  MemberResolution result;
  if (const AttributeDef* a =
          FindAttributeInHierarchy(model, class_name, member, &result.defining_class)) {
    result.attribute = a;
  } else if (const MethodDef* m =
                 FindMethodInHierarchy(model, class_name, member, &result.defining_class)) {
    result.method = m;
  } else {
    throw Error("E_UNKNOWN_MEMBER", "class '" + std::string(class_name) + "' has no member '" +
                                        std::string(member) + "'");
  }
  if (relative_to) {
    result.subclass_only = !model.IsSubclassOf(*relative_to, result.defining_class);
  }
  return result;
}

PublishedSurface ComputePublishedSurface(const Model& model) {
  PublishedSurface surface;
  for (const auto& c : model.classes) {
    auto check = [&](const std::string& member, bool published, const SourceLoc& loc) {
      if (!published) return;
      if (!c.published) {
        throw Error("E_PUBLISHED_MEMBER_IN_UNPUBLISHED_CLASS",
                    "published member '" + c.name + "." + member +
                        "' in unpublished class '" + c.name + "'",
                    loc);
      }
      surface.members.emplace(c.name, member);
    };
    if (c.published) surface.classes.insert(c.name);
    for (const auto& a : c.attributes) check(a.name, a.published, a.loc);
    for (const auto& m : c.methods) check(m.name, m.published, m.loc);
  }
  return surface;
}

}  // namespace amw

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

// In-memory model of every notation the workbench understands: class
// definitions with action bodies, flat statecharts, object diagrams (used as
// fixtures and as partial patterns), sequence definitions, invariants and
// test cases.
//
// All element types are plain values. Structural equality (operator==) ignores
// source positions, which is what the round-trip law of the text format is
// stated against.

#ifndef AMW_MODEL_H_
#define AMW_MODEL_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "amw/diagnostic.h"

namespace amw {

struct TypeRef {
  enum class Kind { kInt, kBool, kString, kClass, kSet };

  Kind kind = Kind::kInt;
  std::string class_name;  // kClass and kSet only

  static TypeRef Int() { return {Kind::kInt, {}}; }
  static TypeRef Bool() { return {Kind::kBool, {}}; }
  static TypeRef String() { return {Kind::kString, {}}; }
  static TypeRef Class(std::string name) { return {Kind::kClass, std::move(name)}; }
  static TypeRef Set(std::string name) { return {Kind::kSet, std::move(name)}; }

  bool is_primitive() const {
    return kind == Kind::kInt || kind == Kind::kBool || kind == Kind::kString;
  }
  std::string ToString() const;

  bool operator==(const TypeRef&) const = default;
};

struct Literal {
  enum class Kind { kInt, kBool, kString };

  Kind kind = Kind::kInt;
  std::int64_t int_value = 0;
  bool bool_value = false;
  std::string string_value;

  static Literal Int(std::int64_t v) { return {Kind::kInt, v, false, {}}; }
  static Literal Bool(bool v) { return {Kind::kBool, 0, v, {}}; }
  static Literal String(std::string v) { return {Kind::kString, 0, false, std::move(v)}; }

  TypeRef type() const;
  std::string ToString() const;  // canonical concrete syntax

  bool operator==(const Literal&) const = default;
};

enum class BinaryOp {
  kImplies,
  kOr,
  kAnd,
  kEq,
  kNe,
  kLt,
  kLe,
  kGt,
  kGe,
  kAdd,
  kSub,
  kMul,
};

std::string_view BinaryOpSymbol(BinaryOp op);

// Constraint / action-language expression tree.
//
//   kLiteral   literal
//   kName      text
//   kNav       args[0] . text
//   kState     args[0] @state
//   kNot       not args[0]
//   kBinary    args[0] op args[1]
//   kSize      args[0] ->size()
//   kIncludes  args[0] ->includes(args[1])
//   kForAll    args[0] ->forAll(text | args[1])
//   kExists    args[0] ->exists(text | args[1])
struct Expr {
  enum class Kind {
    kLiteral,
    kName,
    kNav,
    kState,
    kNot,
    kBinary,
    kSize,
    kIncludes,
    kForAll,
    kExists,
  };

  Kind kind = Kind::kLiteral;
  Literal literal;
  BinaryOp op = BinaryOp::kEq;
  std::string text;
  std::vector<Expr> args;
  SourceLoc loc;

  static Expr Lit(Literal value, SourceLoc loc = {});
  static Expr Name(std::string name, SourceLoc loc = {});
  static Expr Nav(Expr base, std::string attribute, SourceLoc loc = {});
  static Expr State(Expr base, SourceLoc loc = {});
  static Expr Not(Expr operand, SourceLoc loc = {});
  static Expr Binary(BinaryOp op, Expr lhs, Expr rhs, SourceLoc loc = {});
  static Expr Size(Expr base, SourceLoc loc = {});
  static Expr Includes(Expr base, Expr element, SourceLoc loc = {});
  static Expr ForAll(Expr base, std::string var, Expr body, SourceLoc loc = {});
  static Expr Exists(Expr base, std::string var, Expr body, SourceLoc loc = {});

  bool operator==(const Expr&) const = default;
};

// Action-language statement.
//
//   kVarDecl   var name = value;
//   kAssign    path = value;          (path[0] is a local, param or self)
//   kIf        if (value) then_block else else_block
//   kReturn    return value;
//   kCall      call path . name(args);
struct Stmt {
  enum class Kind { kVarDecl, kAssign, kIf, kReturn, kCall };

  Kind kind = Kind::kReturn;
  std::string name;
  std::vector<std::string> path;
  Expr value;
  std::vector<Expr> args;
  std::vector<Stmt> then_block;
  std::vector<Stmt> else_block;
  bool has_else = false;
  SourceLoc loc;

  bool operator==(const Stmt&) const = default;
};

using Block = std::vector<Stmt>;

struct Param {
  std::string name;
  TypeRef type;

  bool operator==(const Param&) const = default;
};

struct AttributeDef {
  std::string name;
  TypeRef type;
  bool published = false;
  SourceLoc loc;

  bool operator==(const AttributeDef&) const = default;
};

struct MethodDef {
  std::string name;
  std::vector<Param> params;
  std::optional<TypeRef> return_type;
  std::optional<Block> body;
  bool abstract = false;
  bool published = false;
  SourceLoc loc;

  bool operator==(const MethodDef&) const = default;
};

struct ClassDef {
  std::string name;
  std::optional<std::string> superclass;
  bool abstract = false;
  bool published = false;
  std::vector<AttributeDef> attributes;
  std::vector<MethodDef> methods;
  SourceLoc loc;

  const AttributeDef* FindAttribute(std::string_view attr) const;
  const MethodDef* FindMethod(std::string_view method) const;

  bool operator==(const ClassDef&) const = default;
};

struct TransitionDef {
  std::string source;
  std::string target;
  std::string trigger;
  std::vector<Param> params;
  std::optional<Expr> guard;
  std::optional<Block> actions;
  std::optional<Expr> result;
  SourceLoc loc;

  bool operator==(const TransitionDef&) const = default;
};

// A flat state machine attached to a class. Its name is the owner's name.
struct Statechart {
  std::string owner;
  std::string initial;
  std::vector<std::string> states;
  std::vector<TransitionDef> transitions;
  SourceLoc loc;

  bool HasState(std::string_view state) const;

  bool operator==(const Statechart&) const = default;
};

// Right-hand side of an object-diagram slot assignment, and argument of a
// driver stimulus.
struct ObjectValue {
  enum class Kind { kLiteral, kObject, kSet };

  Kind kind = Kind::kLiteral;
  Literal literal;
  std::string object;
  std::vector<std::string> set;

  static ObjectValue Lit(Literal value) { return {Kind::kLiteral, std::move(value), {}, {}}; }
  static ObjectValue Object(std::string name) { return {Kind::kObject, {}, std::move(name), {}}; }
  static ObjectValue Set(std::vector<std::string> names) {
    return {Kind::kSet, {}, {}, std::move(names)};
  }

  std::string ToString() const;

  bool operator==(const ObjectValue&) const = default;
};

struct SlotAssignment {
  std::string attribute;
  ObjectValue value;
  SourceLoc loc;

  bool operator==(const SlotAssignment&) const = default;
};

struct ObjectDecl {
  std::string name;
  std::string class_name;
  bool anchor = false;  // patterns only
  std::vector<SlotAssignment> assignments;
  SourceLoc loc;

  const SlotAssignment* FindAssignment(std::string_view attribute) const;

  bool operator==(const ObjectDecl&) const = default;
};

// Object diagram. As a fixture (`objects`) it is a complete configuration;
// as a pattern it is a partial property description.
struct ObjectDiagram {
  std::string name;
  std::vector<ObjectDecl> objects;
  SourceLoc loc;

  const ObjectDecl* FindObject(std::string_view object) const;

  bool operator==(const ObjectDiagram&) const = default;
};

using ObjectConfiguration = ObjectDiagram;
using PatternConfiguration = ObjectDiagram;

struct Step {
  enum class Kind { kStimulus, kExpectMessage, kAssert };

  Kind kind = Kind::kStimulus;
  // kStimulus: target.method(args) [expect expected]
  std::string target;
  std::string method;
  std::vector<ObjectValue> args;
  std::optional<Literal> expected;
  // kExpectMessage: caller -> target : method
  std::string caller;
  // kAssert
  Expr assertion;
  SourceLoc loc;

  bool operator==(const Step&) const = default;
};

struct SequenceDefinition {
  std::string name;
  bool strict = false;
  std::vector<Step> steps;
  SourceLoc loc;

  bool operator==(const SequenceDefinition&) const = default;
};

enum class TestCategory { kUnit, kIntegration, kAcceptance };

std::string_view CategoryName(TestCategory category);
std::optional<TestCategory> ParseCategory(std::string_view text);

struct Oracle {
  std::optional<std::string> pattern;
  std::vector<Expr> assertions;

  bool operator==(const Oracle&) const = default;
};

struct TestCase {
  std::string name;
  TestCategory category = TestCategory::kUnit;
  std::string fixture;
  std::string driver;
  std::optional<Oracle> oracle;
  SourceLoc loc;

  bool operator==(const TestCase&) const = default;
};

struct NamedInvariant {
  std::string name;
  std::string context;
  Expr expr;
  SourceLoc loc;

  bool operator==(const NamedInvariant&) const = default;
};

struct ProjectManifest {
  std::string name;
  std::vector<std::string> files;  // glob patterns
  SourceLoc loc;

  bool operator==(const ProjectManifest&) const = default;
};

struct Model {
  std::string name;
  std::optional<ProjectManifest> manifest;
  std::vector<ClassDef> classes;
  std::vector<Statechart> statecharts;
  std::vector<ObjectConfiguration> configs;
  std::vector<PatternConfiguration> patterns;
  std::vector<SequenceDefinition> sequences;
  std::vector<NamedInvariant> invariants;
  std::vector<TestCase> tests;

  const ClassDef* FindClass(std::string_view name) const;
  ClassDef* FindClass(std::string_view name);
  const Statechart* FindStatechart(std::string_view owner) const;
  const ObjectConfiguration* FindConfig(std::string_view name) const;
  const PatternConfiguration* FindPattern(std::string_view name) const;
  const SequenceDefinition* FindSequence(std::string_view name) const;
  const TestCase* FindTest(std::string_view name) const;

  // Chain from `name` upward: the class itself first, then its superclass,
  // and so on. Stops at unresolved names and at the first repeated class, so
  // it is safe on models with inheritance cycles.
  std::vector<const ClassDef*> Ancestry(std::string_view name) const;

  // True when `derived` equals `base` or inherits from it.
  bool IsSubclassOf(std::string_view derived, std::string_view base) const;

  std::vector<const ClassDef*> DirectSubclasses(std::string_view name) const;

  // The statechart governing instances of `class_name`: the one owned by the
  // class or by the nearest ancestor.
  const Statechart* StatechartFor(std::string_view class_name) const;

  // All attributes visible in the class, ancestors' first.
  std::vector<const AttributeDef*> AllAttributes(std::string_view class_name) const;

  bool operator==(const Model& other) const {
    return manifest == other.manifest && classes == other.classes &&
           statecharts == other.statecharts && configs == other.configs &&
           patterns == other.patterns && sequences == other.sequences &&
           invariants == other.invariants && tests == other.tests;
  }
};

// Reserved words of the concrete syntax; never valid as identifiers.
bool IsReservedWord(std::string_view word);
bool IsIdentifier(std::string_view text);

// --- Member lookup -----------------------------------------------------------

struct MemberResolution {
  std::string defining_class;
  const AttributeDef* attribute = nullptr;
  const MethodDef* method = nullptr;
  // Only meaningful when LookupMember was given an ancestor: true when the
  // member is defined strictly below that ancestor, i.e. not available there.
  bool subclass_only = false;
};

// Walks the inheritance chain from `class_name` upward and returns the first
// attribute or method named `member` (attributes win on a name collision).
// Throws Error(E_UNKNOWN_MEMBER) when nothing matches.
MemberResolution LookupMember(const Model& model, std::string_view class_name,
                              std::string_view member,
                              std::optional<std::string_view> relative_to = std::nullopt);

const AttributeDef* FindAttributeInHierarchy(const Model& model, std::string_view class_name,
                                             std::string_view attribute,
                                             std::string* defining_class = nullptr);
const MethodDef* FindMethodInHierarchy(const Model& model, std::string_view class_name,
                                       std::string_view method,
                                       std::string* defining_class = nullptr);

// --- Published interface -----------------------------------------------------

struct PublishedSurface {
  std::set<std::string> classes;
  std::set<std::pair<std::string, std::string>> members;  // (class, member)

  bool empty() const { return classes.empty() && members.empty(); }
  bool operator==(const PublishedSurface&) const = default;
};

// Throws Error(E_PUBLISHED_MEMBER_IN_UNPUBLISHED_CLASS) when a published
// member sits in a class that is not itself published.
PublishedSurface ComputePublishedSurface(const Model& model);

}  // namespace amw

#endif  // AMW_MODEL_H_

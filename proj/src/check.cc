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

#include "amw/check.h"

#include <algorithm>
#include <set>
#include <tuple>

namespace amw {

namespace {

Diagnostic Diag(std::string code, const SourceLoc& loc, std::string message) {
  return Diagnostic{std::move(code), Severity::kError, loc, std::move(message)};
}

bool ClassesRelated(const Model& model, const std::string& a, const std::string& b) {
  return model.IsSubclassOf(a, b) || model.IsSubclassOf(b, a);
}

}  // namespace

bool IsAssignable(const Model& model, const TypeRef& target, const TypeRef& value) {
  if (target.is_primitive() || value.is_primitive()) return target == value;
  if (target.kind != value.kind) return false;
  return model.IsSubclassOf(value.class_name, target.class_name);
}

bool IsComparable(const Model& model, const TypeRef& a, const TypeRef& b) {
  if (a.is_primitive() || b.is_primitive()) return a == b;
  if (a.kind != b.kind) return false;
  return ClassesRelated(model, a.class_name, b.class_name);
}

Expected<TypeRef, Diagnostic> TypeOf(const Expr& e, const TypeScope& scope) {
  const Model& model = *scope.model;
  auto sub = [&](const Expr& child) { return TypeOf(child, scope); };
  auto type_error = [&](const std::string& message) {
    return Diag("E_TYPE", e.loc, message);
  };

  switch (e.kind) {
    case Expr::Kind::kLiteral:
      return e.literal.type();
    case Expr::Kind::kName: {
      auto it = scope.names.find(e.text);
      if (it == scope.names.end()) {
        return Diag("E_UNKNOWN_NAME", e.loc, "unknown name '" + e.text + "'");
      }
      return it->second;
    }
    case Expr::Kind::kNav: {
      auto base = sub(e.args[0]);
      if (!base) return base;
      if (base->kind != TypeRef::Kind::kClass) {
        return type_error("cannot navigate '." + e.text + "' on a value of type " +
                          base->ToString());
      }
      const AttributeDef* attr = FindAttributeInHierarchy(model, base->class_name, e.text);
      if (attr == nullptr) {
        return Diag("E_UNKNOWN_MEMBER", e.loc,
                    "class '" + base->class_name + "' has no attribute '" + e.text + "'");
      }
      return attr->type;
    }
    case Expr::Kind::kState: {
      auto base = sub(e.args[0]);
      if (!base) return base;
      if (base->kind != TypeRef::Kind::kClass || model.StatechartFor(base->class_name) == nullptr) {
        return type_error("@state requires an object whose class has a statechart, got " +
                          base->ToString());
      }
      return TypeRef::String();
    }
    case Expr::Kind::kNot: {
      auto operand = sub(e.args[0]);
      if (!operand) return operand;
      if (*operand != TypeRef::Bool()) return type_error("'not' expects Bool, got " + operand->ToString());
      return TypeRef::Bool();
    }
    case Expr::Kind::kBinary: {
      auto lhs = sub(e.args[0]);
      if (!lhs) return lhs;
      auto rhs = sub(e.args[1]);
      if (!rhs) return rhs;
      std::string sym(BinaryOpSymbol(e.op));
      auto mismatch = [&] {
        return type_error("operator '" + sym + "' cannot combine " + lhs->ToString() + " and " +
                          rhs->ToString());
      };
      switch (e.op) {
        case BinaryOp::kAnd:
        case BinaryOp::kOr:
        case BinaryOp::kImplies:
          if (*lhs != TypeRef::Bool() || *rhs != TypeRef::Bool()) return mismatch();
          return TypeRef::Bool();
        case BinaryOp::kEq:
        case BinaryOp::kNe:
          if (!IsComparable(model, *lhs, *rhs)) return mismatch();
          return TypeRef::Bool();
        case BinaryOp::kLt:
        case BinaryOp::kLe:
        case BinaryOp::kGt:
        case BinaryOp::kGe:
          if (*lhs != TypeRef::Int() || *rhs != TypeRef::Int()) return mismatch();
          return TypeRef::Bool();
        case BinaryOp::kAdd:
        case BinaryOp::kSub:
        case BinaryOp::kMul:
          if (*lhs != TypeRef::Int() || *rhs != TypeRef::Int()) return mismatch();
          return TypeRef::Int();
      }
      return mismatch();
    }
    case Expr::Kind::kSize: {
      auto base = sub(e.args[0]);
      if (!base) return base;
      if (base->kind != TypeRef::Kind::kSet) return type_error("->size() on non-set type " + base->ToString());
      return TypeRef::Int();
    }
    case Expr::Kind::kIncludes: {
      auto base = sub(e.args[0]);
      if (!base) return base;
      if (base->kind != TypeRef::Kind::kSet) {
        return type_error("->includes() on non-set type " + base->ToString());
      }
      auto element = sub(e.args[1]);
      if (!element) return element;
      if (element->kind != TypeRef::Kind::kClass ||
          !ClassesRelated(model, base->class_name, element->class_name)) {
        return type_error("->includes() argument of type " + element->ToString() +
                          " does not fit " + base->ToString());
      }
      return TypeRef::Bool();
    }
    case Expr::Kind::kForAll:
    case Expr::Kind::kExists: {
      auto base = sub(e.args[0]);
      if (!base) return base;
      if (base->kind != TypeRef::Kind::kSet) {
        return type_error("quantifier over non-set type " + base->ToString());
      }
      if (e.text == "self") return type_error("cannot rebind 'self' as an iterator variable");
      TypeScope inner = scope;
      inner.names[e.text] = TypeRef::Class(base->class_name);
      auto body = TypeOf(e.args[1], inner);
      if (!body) return body;
      if (*body != TypeRef::Bool()) return type_error("quantifier body must be Bool, got " + body->ToString());
      return TypeRef::Bool();
    }
  }
  return type_error("unsupported expression");
}

void ForEachNavigation(const Expr& e, const TypeScope& scope,
                       const std::function<void(const Expr&, const std::string&)>& visit) {
  if (e.kind == Expr::Kind::kForAll || e.kind == Expr::Kind::kExists) {
    ForEachNavigation(e.args[0], scope, visit);
    auto base = TypeOf(e.args[0], scope);
    if (!base || base->kind != TypeRef::Kind::kSet) return;
    TypeScope inner = scope;
    inner.names[e.text] = TypeRef::Class(base->class_name);
    ForEachNavigation(e.args[1], inner, visit);
    return;
  }
  for (const auto& child : e.args) ForEachNavigation(child, scope, visit);
  if (e.kind == Expr::Kind::kNav) {
    auto base = TypeOf(e.args[0], scope);
    if (base && base->kind == TypeRef::Kind::kClass) visit(e, base->class_name);
  }
}

namespace {

class Checker {
 public:
  explicit Checker(const Model& model) : model_(model) {}

  DiagnosticList Run() {
    CheckUniqueness();
    for (const auto& c : model_.classes) CheckClass(c);
    for (const auto& chart : model_.statecharts) CheckStatechart(chart);
    for (const auto& config : model_.configs) CheckDiagram(config, false);
    for (const auto& pattern : model_.patterns) CheckDiagram(pattern, true);
    for (const auto& inv : model_.invariants) CheckInvariant(inv);
    for (const auto& test : model_.tests) CheckTest(test);
    CheckPublishedClosure();

    // Document order; identical diagnostics from shared sequences collapse.
    std::stable_sort(out_.begin(), out_.end(), [](const Diagnostic& a, const Diagnostic& b) {
      return std::tie(a.loc.file, a.loc.line, a.loc.column) <
             std::tie(b.loc.file, b.loc.line, b.loc.column);
    });
    DiagnosticList unique;
    std::set<std::tuple<std::string, std::string, int, int, std::string>> seen;
    for (auto& d : out_) {
      if (seen.emplace(d.code, d.loc.file, d.loc.line, d.loc.column, d.message).second) {
        unique.push_back(std::move(d));
      }
    }
    return unique;
  }

 private:
  void Report(std::string code, const SourceLoc& loc, std::string message) {
    out_.push_back(Diag(std::move(code), loc, std::move(message)));
  }

  template <typename Items, typename Key>
  void CheckUnique(const Items& items, Key key, const char* kind) {
    std::set<std::string> seen;
    for (const auto& item : items) {
      if (!seen.insert(key(item)).second) {
        Report("E_DUPLICATE", item.loc, std::string("duplicate ") + kind + " '" + key(item) + "'");
      }
    }
  }

  void CheckUniqueness() {
    auto by_name = [](const auto& item) { return item.name; };
    CheckUnique(model_.classes, by_name, "class");
    CheckUnique(model_.statecharts, [](const Statechart& s) { return s.owner; }, "statechart for");
    CheckUnique(model_.configs, by_name, "object configuration");
    CheckUnique(model_.patterns, by_name, "pattern");
    CheckUnique(model_.sequences, by_name, "sequence");
    CheckUnique(model_.invariants, by_name, "invariant");
    CheckUnique(model_.tests, by_name, "test");
  }

  bool CheckType(const TypeRef& type, const SourceLoc& loc) {
    switch (type.kind) {
      case TypeRef::Kind::kInt:
      case TypeRef::Kind::kBool:
      case TypeRef::Kind::kString:
        return true;
      case TypeRef::Kind::kSet:
        if (type.class_name == "Int" || type.class_name == "Bool" || type.class_name == "String") {
          Report("E_SET_OF_PRIMITIVE", loc, "sets hold class instances only: " + type.ToString());
          return false;
        }
        [[fallthrough]];
      case TypeRef::Kind::kClass:
        if (model_.FindClass(type.class_name) == nullptr) {
          Report("E_UNKNOWN_TYPE", loc, "unknown type '" + type.class_name + "'");
          return false;
        }
        return true;
    }
    return false;
  }

  bool InCycle(const ClassDef& c) const {
    std::set<std::string> seen{c.name};
    const ClassDef* current = &c;
    while (current->superclass) {
      if (*current->superclass == c.name) return true;
      current = model_.FindClass(*current->superclass);
      if (current == nullptr || !seen.insert(current->name).second) return false;
    }
    return false;
  }

  static bool SameSignature(const MethodDef& a, const MethodDef& b) {
    if (a.params.size() != b.params.size() || a.return_type != b.return_type) return false;
    for (std::size_t i = 0; i < a.params.size(); ++i) {
      if (a.params[i].type != b.params[i].type) return false;
    }
    return true;
  }

  void CheckClass(const ClassDef& c) {
    if (c.name == "Int" || c.name == "Bool" || c.name == "String") {
      Report("E_RESERVED_NAME", c.loc, "'" + c.name + "' names a primitive type");
    }
    bool hierarchy_ok = true;
    if (c.superclass) {
      if (model_.FindClass(*c.superclass) == nullptr) {
        Report("E_UNKNOWN_CLASS", c.loc, "unknown superclass '" + *c.superclass + "'");
        hierarchy_ok = false;
      } else if (InCycle(c)) {
        Report("E_INHERIT_CYCLE", c.loc, "inheritance cycle through '" + c.name + "'");
        hierarchy_ok = false;
      }
    }
    std::vector<const ClassDef*> ancestors = model_.Ancestry(c.name);
    ancestors.erase(ancestors.begin());

    std::set<std::string> attr_names;
    for (const auto& a : c.attributes) {
      if (!attr_names.insert(a.name).second) {
        Report("E_DUPLICATE", a.loc, "duplicate attribute '" + a.name + "' in '" + c.name + "'");
      }
      CheckType(a.type, a.loc);
      if (hierarchy_ok) {
        for (const ClassDef* anc : ancestors) {
          if (anc->FindAttribute(a.name) != nullptr) {
            Report("E_SHADOWED_ATTR", a.loc,
                   "attribute '" + a.name + "' already declared in ancestor '" + anc->name + "'");
            break;
          }
        }
      }
    }

    std::set<std::string> method_names;
    const Statechart* chart = hierarchy_ok ? model_.StatechartFor(c.name) : nullptr;
    for (const auto& m : c.methods) {
      if (!method_names.insert(m.name).second) {
        Report("E_DUPLICATE", m.loc, "duplicate method '" + m.name + "' in '" + c.name + "'");
      }
      std::set<std::string> param_names;
      for (const auto& p : m.params) {
        if (p.name == "self" || !param_names.insert(p.name).second) {
          Report("E_DUPLICATE", m.loc, "duplicate parameter '" + p.name + "' in '" + m.name + "'");
        }
        CheckType(p.type, m.loc);
      }
      if (m.return_type) CheckType(*m.return_type, m.loc);
      if (m.abstract && m.body) {
        Report("E_ABSTRACT_WITH_BODY", m.loc, "abstract method '" + m.name + "' has a body");
      }
      if (m.abstract && !c.abstract) {
        Report("E_ABSTRACT_IN_CONCRETE", m.loc,
               "abstract method '" + m.name + "' in non-abstract class '" + c.name + "'");
      }
      if (hierarchy_ok) {
        for (const ClassDef* anc : ancestors) {
          if (const MethodDef* base = anc->FindMethod(m.name)) {
            if (!SameSignature(*base, m)) {
              Report("E_OVERRIDE_SIGNATURE", m.loc,
                     "'" + c.name + "." + m.name + "' does not match the signature in '" +
                         anc->name + "'");
            }
            break;
          }
        }
      }
      if (m.body && chart != nullptr) {
        for (const auto& t : chart->transitions) {
          if (t.trigger == m.name) {
            Report("E_BEHAVIOR_CONFLICT", m.loc,
                   "'" + c.name + "." + m.name + "' has a body and is a statechart trigger");
            break;
          }
        }
      }
      if (m.body && hierarchy_ok) {
        TypeScope scope{&model_, {{"self", TypeRef::Class(c.name)}}};
        for (const auto& p : m.params) scope.names[p.name] = p.type;
        CheckBlock(*m.body, scope, m.return_type ? &*m.return_type : nullptr, true);
      }
    }

    if (!c.abstract && hierarchy_ok) {
      // Inherited abstract methods must be overridden somewhere below.
      std::set<std::string> concrete;
      for (const ClassDef* k : model_.Ancestry(c.name)) {
        for (const auto& m : k->methods) {
          if (concrete.count(m.name)) continue;
          if (m.abstract && k != &c) {
            Report("E_ABSTRACT_IN_CONCRETE", c.loc,
                   "non-abstract class '" + c.name + "' does not implement '" + k->name + "." +
                       m.name + "'");
          }
          concrete.insert(m.name);
        }
      }
    }
  }

  // `return_type` null means a return statement is an error; `allow_return`
  // false marks transition actions.
  void CheckBlock(const Block& block, TypeScope scope, const TypeRef* return_type,
                  bool allow_return) {
    for (const auto& s : block) {
      switch (s.kind) {
        case Stmt::Kind::kVarDecl: {
          auto type = TypeOf(s.value, scope);
          if (!type) {
            out_.push_back(type.error());
            break;
          }
          if (scope.names.count(s.name)) {
            Report("E_DUPLICATE", s.loc, "'" + s.name + "' is already defined");
            break;
          }
          scope.names[s.name] = *type;
          break;
        }
        case Stmt::Kind::kAssign: {
          auto target = TypeOfPath(s.path, scope, s.loc);
          if (!target) break;
          if (s.path.size() == 1 && s.path[0] == "self") {
            Report("E_TYPE", s.loc, "cannot assign to 'self'");
            break;
          }
          auto value = TypeOf(s.value, scope);
          if (!value) {
            out_.push_back(value.error());
          } else if (!IsAssignable(model_, *target, *value)) {
            Report("E_TYPE", s.loc, "cannot assign " + value->ToString() + " to " +
                                        target->ToString());
          }
          break;
        }
        case Stmt::Kind::kIf: {
          auto cond = TypeOf(s.value, scope);
          if (!cond) {
            out_.push_back(cond.error());
          } else if (*cond != TypeRef::Bool()) {
            Report("E_TYPE", s.loc, "if condition must be Bool, got " + cond->ToString());
          }
          CheckBlock(s.then_block, scope, return_type, allow_return);
          if (s.has_else) CheckBlock(s.else_block, scope, return_type, allow_return);
          break;
        }
        case Stmt::Kind::kReturn: {
          if (!allow_return) {
            Report("E_RETURN_IN_ACTION", s.loc, "transition actions cannot return");
            break;
          }
          if (return_type == nullptr) {
            Report("E_TYPE", s.loc, "return with a value in a method without a return type");
            break;
          }
          auto value = TypeOf(s.value, scope);
          if (!value) {
            out_.push_back(value.error());
          } else if (!IsAssignable(model_, *return_type, *value)) {
            Report("E_TYPE", s.loc, "cannot return " + value->ToString() + " from a method returning " +
                                        return_type->ToString());
          }
          break;
        }
        case Stmt::Kind::kCall: {
          auto receiver = TypeOfPath(s.path, scope, s.loc);
          if (!receiver) break;
          if (receiver->kind != TypeRef::Kind::kClass) {
            Report("E_TYPE", s.loc, "call receiver must be an object, got " + receiver->ToString());
            break;
          }
          const MethodDef* m = FindMethodInHierarchy(model_, receiver->class_name, s.name);
          if (m == nullptr) {
            Report("E_UNKNOWN_MEMBER", s.loc,
                   "class '" + receiver->class_name + "' has no method '" + s.name + "'");
            break;
          }
          if (m->params.size() != s.args.size()) {
            Report("E_ARITY", s.loc, "'" + s.name + "' expects " + std::to_string(m->params.size()) +
                                         " argument(s), got " + std::to_string(s.args.size()));
            break;
          }
          for (std::size_t i = 0; i < s.args.size(); ++i) {
            auto arg = TypeOf(s.args[i], scope);
            if (!arg) {
              out_.push_back(arg.error());
            } else if (!IsAssignable(model_, m->params[i].type, *arg)) {
              Report("E_TYPE", s.args[i].loc, "argument " + std::to_string(i + 1) + " of '" +
                                                  s.name + "' must be " +
                                                  m->params[i].type.ToString());
            }
          }
          break;
        }
      }
    }
  }

  std::optional<TypeRef> TypeOfPath(const std::vector<std::string>& path, const TypeScope& scope,
                                    const SourceLoc& loc) {
    Expr e = Expr::Name(path[0], loc);
    for (std::size_t i = 1; i < path.size(); ++i) e = Expr::Nav(std::move(e), path[i], loc);
    auto type = TypeOf(e, scope);
    if (!type) {
      out_.push_back(type.error());
      return std::nullopt;
    }
    return *type;
  }

  void CheckBoolExpr(const Expr& e, const TypeScope& scope, const char* what) {
    auto type = TypeOf(e, scope);
    if (!type) {
      out_.push_back(type.error());
    } else if (*type != TypeRef::Bool()) {
      Report("E_TYPE", e.loc, std::string(what) + " must be Bool, got " + type->ToString());
    }
  }

  void CheckStatechart(const Statechart& chart) {
    const ClassDef* owner = model_.FindClass(chart.owner);
    if (owner == nullptr) {
      Report("E_UNKNOWN_CLASS", chart.loc, "statechart for unknown class '" + chart.owner + "'");
      return;
    }
    auto ancestry = model_.Ancestry(chart.owner);
    for (std::size_t i = 1; i < ancestry.size(); ++i) {
      if (model_.FindStatechart(ancestry[i]->name) != nullptr) {
        Report("E_CHART_CONFLICT", chart.loc,
               "'" + chart.owner + "' inherits the statechart of '" + ancestry[i]->name + "'");
        break;
      }
    }
    std::set<std::string> states;
    for (const auto& s : chart.states) {
      if (!states.insert(s).second) Report("E_DUPLICATE", chart.loc, "duplicate state '" + s + "'");
    }
    if (!states.count(chart.initial)) {
      Report("E_UNKNOWN_STATE", chart.loc, "initial state '" + chart.initial + "' is not declared");
    }
    for (const auto& t : chart.transitions) {
      for (const auto* s : {&t.source, &t.target}) {
        if (!states.count(*s)) Report("E_UNKNOWN_STATE", t.loc, "unknown state '" + *s + "'");
      }
      const MethodDef* m = FindMethodInHierarchy(model_, chart.owner, t.trigger);
      if (m == nullptr) {
        Report("E_UNKNOWN_MEMBER", t.loc,
               "class '" + chart.owner + "' has no method '" + t.trigger + "'");
        continue;
      }
      if (m->body || m->abstract) {
        Report("E_BAD_TRIGGER", t.loc,
               "trigger '" + t.trigger + "' must be a body-less, non-abstract method");
      }
      bool params_ok = m->params.size() == t.params.size();
      for (std::size_t i = 0; params_ok && i < t.params.size(); ++i) {
        params_ok = m->params[i].type == t.params[i].type;
      }
      if (!params_ok) {
        Report("E_TRIGGER_SIGNATURE", t.loc,
               "transition parameters do not match '" + t.trigger + "(" + ")' signature");
        continue;
      }
      TypeScope scope{&model_, {{"self", TypeRef::Class(chart.owner)}}};
      bool names_ok = true;
      for (const auto& p : t.params) {
        if (p.name == "self" || scope.names.count(p.name)) {
          Report("E_DUPLICATE", t.loc, "duplicate parameter '" + p.name + "'");
          names_ok = false;
        }
        scope.names[p.name] = p.type;
      }
      if (!names_ok) continue;
      if (t.guard) CheckBoolExpr(*t.guard, scope, "guard");
      if (t.actions) CheckBlock(*t.actions, scope, nullptr, false);
      if (t.result) {
        auto type = TypeOf(*t.result, scope);
        if (!type) {
          out_.push_back(type.error());
        } else if (!m->return_type) {
          Report("E_TYPE", t.loc, "'" + t.trigger + "' has no return type but the transition returns");
        } else if (!IsAssignable(model_, *m->return_type, *type)) {
          Report("E_TYPE", t.result->loc, "transition result " + type->ToString() +
                                              " does not match return type " +
                                              m->return_type->ToString());
        }
      }
    }
  }

  void CheckDiagram(const ObjectDiagram& d, bool pattern) {
    std::map<std::string, const ObjectDecl*> objects;
    for (const auto& o : d.objects) {
      if (!objects.emplace(o.name, &o).second) {
        Report("E_DUPLICATE", o.loc, "duplicate object '" + o.name + "' in '" + d.name + "'");
      }
    }
    for (const auto& o : d.objects) {
      const ClassDef* cls = model_.FindClass(o.class_name);
      if (cls == nullptr) {
        Report("E_UNKNOWN_CLASS", o.loc, "unknown class '" + o.class_name + "'");
        continue;
      }
      if (cls->abstract && !pattern) {
        Report("E_ABSTRACT_INSTANTIATION", o.loc,
               "object '" + o.name + "' instantiates abstract class '" + o.class_name + "'");
      }
      std::set<std::string> assigned;
      for (const auto& a : o.assignments) {
        if (!assigned.insert(a.attribute).second) {
          Report("E_DUPLICATE", a.loc, "attribute '" + a.attribute + "' assigned twice");
          continue;
        }
        const AttributeDef* attr = FindAttributeInHierarchy(model_, o.class_name, a.attribute);
        if (attr == nullptr) {
          Report("E_UNKNOWN_MEMBER", a.loc,
                 "class '" + o.class_name + "' has no attribute '" + a.attribute + "'");
          continue;
        }
        CheckObjectValue(a.value, attr->type, objects, a.loc);
      }
    }
  }

  void CheckObjectValue(const ObjectValue& v, const TypeRef& type,
                        const std::map<std::string, const ObjectDecl*>& objects,
                        const SourceLoc& loc) {
    auto check_object = [&](const std::string& name, const std::string& cls) {
      auto it = objects.find(name);
      if (it == objects.end()) {
        Report("E_UNKNOWN_OBJECT", loc, "unknown object '" + name + "'");
      } else if (!model_.IsSubclassOf(it->second->class_name, cls)) {
        Report("E_VALUE_TYPE", loc, "object '" + name + "' of class '" + it->second->class_name +
                                        "' does not fit " + type.ToString());
      }
    };
    switch (v.kind) {
      case ObjectValue::Kind::kLiteral:
        if (v.literal.type() != type) {
          Report("E_VALUE_TYPE", loc, "value " + v.literal.ToString() + " does not fit " + type.ToString());
        }
        break;
      case ObjectValue::Kind::kObject:
        if (type.kind != TypeRef::Kind::kClass) {
          Report("E_VALUE_TYPE", loc, "object '" + v.object + "' does not fit " + type.ToString());
        } else {
          check_object(v.object, type.class_name);
        }
        break;
      case ObjectValue::Kind::kSet: {
        if (type.kind != TypeRef::Kind::kSet) {
          Report("E_VALUE_TYPE", loc, "set value does not fit " + type.ToString());
          break;
        }
        std::set<std::string> seen;
        for (const auto& name : v.set) {
          if (!seen.insert(name).second) Report("E_DUPLICATE", loc, "'" + name + "' listed twice in set");
          check_object(name, type.class_name);
        }
        break;
      }
    }
  }

  void CheckInvariant(const NamedInvariant& inv) {
    if (model_.FindClass(inv.context) == nullptr) {
      Report("E_UNKNOWN_CLASS", inv.loc, "invariant context '" + inv.context + "' is unknown");
      return;
    }
    TypeScope scope{&model_, {{"self", TypeRef::Class(inv.context)}}};
    CheckBoolExpr(inv.expr, scope, "invariant");
  }

  TypeScope FixtureScope(const ObjectConfiguration& fixture) const {
    TypeScope scope{&model_, {}};
    for (const auto& o : fixture.objects) {
      if (model_.FindClass(o.class_name) != nullptr) {
        scope.names[o.name] = TypeRef::Class(o.class_name);
      }
    }
    return scope;
  }

  void RequirePublished(bool published, const std::string& what, const SourceLoc& loc,
                        const TestCase& test) {
    if (!published) {
      Report("E_UNPUBLISHED_IN_ACCEPTANCE", loc,
             "acceptance test '" + test.name + "' uses unpublished " + what);
    }
  }

  void RequirePublishedDiagram(const ObjectDiagram& d, const TestCase& test) {
    for (const auto& o : d.objects) {
      const ClassDef* cls = model_.FindClass(o.class_name);
      if (cls == nullptr) continue;
      RequirePublished(cls->published, "class '" + o.class_name + "'", o.loc, test);
      for (const auto& a : o.assignments) {
        std::string owner;
        if (const AttributeDef* attr =
                FindAttributeInHierarchy(model_, o.class_name, a.attribute, &owner)) {
          RequirePublished(attr->published, "attribute '" + owner + "." + a.attribute + "'", a.loc,
                           test);
        }
      }
    }
  }

  void RequirePublishedExpr(const Expr& e, const TypeScope& scope, const TestCase& test) {
    ForEachNavigation(e, scope, [&](const Expr& nav, const std::string& base) {
      std::string owner;
      if (const AttributeDef* attr = FindAttributeInHierarchy(model_, base, nav.text, &owner)) {
        RequirePublished(attr->published, "attribute '" + owner + "." + nav.text + "'", nav.loc,
                         test);
      }
    });
  }

  void CheckTest(const TestCase& test) {
    const ObjectConfiguration* fixture = model_.FindConfig(test.fixture);
    const SequenceDefinition* driver = model_.FindSequence(test.driver);
    const PatternConfiguration* pattern = nullptr;
    if (fixture == nullptr) {
      Report("E_UNKNOWN_CONFIG", test.loc, "unknown fixture '" + test.fixture + "'");
    }
    if (driver == nullptr) {
      Report("E_UNKNOWN_SEQUENCE", test.loc, "unknown driver '" + test.driver + "'");
    }
    if (test.oracle && test.oracle->pattern) {
      pattern = model_.FindPattern(*test.oracle->pattern);
      if (pattern == nullptr) {
        Report("E_UNKNOWN_PATTERN", test.loc, "unknown pattern '" + *test.oracle->pattern + "'");
      }
    }
    if (fixture == nullptr) return;
    const bool acceptance = test.category == TestCategory::kAcceptance;
    TypeScope scope = FixtureScope(*fixture);
    if (acceptance) RequirePublishedDiagram(*fixture, test);

    if (driver != nullptr) CheckDriver(*driver, *fixture, scope, test, acceptance);
    if (pattern != nullptr) {
      for (const auto& o : pattern->objects) {
        if (o.anchor && fixture->FindObject(o.name) == nullptr) {
          Report("E_ANCHOR_UNKNOWN", o.loc,
                 "anchored object '" + o.name + "' is not declared in fixture '" + fixture->name + "'");
        }
      }
      if (acceptance) RequirePublishedDiagram(*pattern, test);
    }
    if (test.oracle) {
      for (const auto& a : test.oracle->assertions) {
        CheckBoolExpr(a, scope, "oracle assertion");
        if (acceptance) RequirePublishedExpr(a, scope, test);
      }
    }
  }

  void CheckDriver(const SequenceDefinition& seq, const ObjectConfiguration& fixture,
                   const TypeScope& scope, const TestCase& test, bool acceptance) {
    auto object_class = [&](const std::string& name, const SourceLoc& loc) -> const ClassDef* {
      const ObjectDecl* o = fixture.FindObject(name);
      if (o == nullptr) {
        Report("E_UNKNOWN_OBJECT", loc,
               "object '" + name + "' is not declared in fixture '" + fixture.name + "'");
        return nullptr;
      }
      return model_.FindClass(o->class_name);
    };
    auto method_of = [&](const ClassDef* cls, const std::string& method,
                         const SourceLoc& loc) -> const MethodDef* {
      std::string owner;
      const MethodDef* m = FindMethodInHierarchy(model_, cls->name, method, &owner);
      if (m == nullptr) {
        Report("E_UNKNOWN_MEMBER", loc, "class '" + cls->name + "' has no method '" + method + "'");
      } else if (acceptance) {
        RequirePublished(m->published, "method '" + owner + "." + method + "'", loc, test);
      }
      return m;
    };

    for (const auto& step : seq.steps) {
      switch (step.kind) {
        case Step::Kind::kStimulus: {
          const ClassDef* cls = object_class(step.target, step.loc);
          if (cls == nullptr) break;
          const MethodDef* m = method_of(cls, step.method, step.loc);
          if (m == nullptr) break;
          if (m->params.size() != step.args.size()) {
            Report("E_ARITY", step.loc, "'" + step.method + "' expects " +
                                            std::to_string(m->params.size()) + " argument(s)");
            break;
          }
          for (std::size_t i = 0; i < step.args.size(); ++i) {
            const ObjectValue& arg = step.args[i];
            const TypeRef& want = m->params[i].type;
            bool ok = false;
            if (arg.kind == ObjectValue::Kind::kLiteral) {
              ok = arg.literal.type() == want;
            } else if (arg.kind == ObjectValue::Kind::kObject) {
              const ObjectDecl* o = fixture.FindObject(arg.object);
              if (o == nullptr) {
                Report("E_UNKNOWN_OBJECT", step.loc, "unknown object '" + arg.object + "'");
                continue;
              }
              ok = want.kind == TypeRef::Kind::kClass &&
                   model_.IsSubclassOf(o->class_name, want.class_name);
            }
            if (!ok) {
              Report("E_TYPE", step.loc, "argument " + std::to_string(i + 1) + " of '" +
                                             step.method + "' must be " + want.ToString());
            }
          }
          if (step.expected) {
            if (!m->return_type) {
              Report("E_TYPE", step.loc, "'" + step.method + "' returns nothing to expect");
            } else if (*m->return_type != step.expected->type()) {
              Report("E_TYPE", step.loc, "expected " + step.expected->ToString() + " does not fit " +
                                             m->return_type->ToString());
            }
          }
          break;
        }
        case Step::Kind::kExpectMessage: {
          object_class(step.caller, step.loc);
          if (const ClassDef* cls = object_class(step.target, step.loc)) {
            method_of(cls, step.method, step.loc);
          }
          break;
        }
        case Step::Kind::kAssert:
          CheckBoolExpr(step.assertion, scope, "assertion");
          if (acceptance) RequirePublishedExpr(step.assertion, scope, test);
          break;
      }
    }
  }

  void CheckPublishedClosure() {
    for (const auto& c : model_.classes) {
      if (c.published) continue;
      auto report = [&](const std::string& member, const SourceLoc& loc) {
        Report("E_PUBLISHED_MEMBER_IN_UNPUBLISHED_CLASS", loc,
               "published member '" + c.name + "." + member + "' in unpublished class");
      };
      for (const auto& a : c.attributes) {
        if (a.published) report(a.name, a.loc);
      }
      for (const auto& m : c.methods) {
        if (m.published) report(m.name, m.loc);
      }
    }
  }

  const Model& model_;
  DiagnosticList out_;
};

}  // namespace

DiagnosticList CheckWellformed(const Model& model) { return Checker(model).Run(); }

}  // namespace amw

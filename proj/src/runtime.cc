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

#include "amw/runtime.h"

namespace amw {

namespace {

std::string Party(ObjectId id) { return id == kDriver ? "DRIVER" : "#" + std::to_string(id); }

}  // namespace

std::string RenderTraceEvent(const TraceEvent& event) {
  std::string out = std::to_string(event.seq);
  out += event.kind == TraceEvent::Kind::kCall ? " call " : " return ";
  out += Party(event.caller) + "->" + Party(event.callee) + " " + event.method + "(";
  for (std::size_t i = 0; i < event.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += event.args[i].ToString();
  }
  out += ")";
  if (!event.error.empty()) {
    out += "=!" + event.error;
  } else if (event.result) {
    out += "=" + event.result->ToString();
  }
  return out;
}

std::string RenderTrace(const Trace& trace) {
  std::string out;
  for (const auto& event : trace) out += RenderTraceEvent(event) + "\n";
  return out;
}

void Coverage::Merge(const Coverage& other) {
  for (const auto& [chart, set] : other.states) states[chart].insert(set.begin(), set.end());
  for (const auto& [chart, set] : other.transitions) {
    transitions[chart].insert(set.begin(), set.end());
  }
}

ObjectStore Instantiate(const Model& model, const ObjectConfiguration& config) {
  ObjectStore store;
  for (const auto& decl : config.objects) {
    const ClassDef* cls = model.FindClass(decl.class_name);
    if (cls == nullptr) {
      throw Error("E_UNKNOWN_CLASS", "unknown class '" + decl.class_name + "'", decl.loc);
    }
    if (cls->abstract) {
      throw Error("E_ABSTRACT_INSTANTIATION",
                  "object '" + decl.name + "' instantiates abstract class '" + decl.class_name + "'",
                  decl.loc);
    }
    store.Name(decl.name, store.Create(model, decl.class_name));
  }
  auto resolve = [&](const std::string& name, const SourceLoc& loc) {
    auto id = store.Lookup(name);
    if (!id) throw Error("E_UNKNOWN_OBJECT", "unknown object '" + name + "'", loc);
    return *id;
  };
  for (const auto& decl : config.objects) {
    RuntimeObject* object = store.Find(*store.Lookup(decl.name));
    for (const auto& a : decl.assignments) {
      auto slot = object->slots.find(a.attribute);
      if (slot == object->slots.end()) {
        throw Error("E_UNKNOWN_MEMBER",
                    "class '" + decl.class_name + "' has no attribute '" + a.attribute + "'", a.loc);
      }
      switch (a.value.kind) {
        case ObjectValue::Kind::kLiteral:
          slot->second = Value::FromLiteral(a.value.literal);
          break;
        case ObjectValue::Kind::kObject:
          slot->second = Value::Ref(resolve(a.value.object, a.loc));
          break;
        case ObjectValue::Kind::kSet: {
          std::vector<ObjectId> ids;
          for (const auto& name : a.value.set) ids.push_back(resolve(name, a.loc));
          slot->second = Value::Set(std::move(ids));
          break;
        }
      }
    }
  }
  return store;
}

Interpreter::Interpreter(const Model& model, ObjectStore& store, ExecBudget budget)
    : model_(model), store_(store), budget_(budget) {
  for (const auto& [id, object] : store_.objects()) {
    if (!object.state) continue;
    if (const Statechart* chart = model_.StatechartFor(object.class_name)) {
      coverage_.states[chart->owner].insert(*object.state);
    }
  }
}

Expected<std::optional<Value>> Interpreter::Invoke(ObjectId caller, ObjectId target,
                                                   const std::string& method,
                                                   std::vector<Value> args) {
  steps_ = 0;
  depth_ = 0;
  try {
    return Dispatch(caller, target, method, std::move(args), SourceLoc{});
  } catch (const Error& error) {
    return error;
  }
}

void Interpreter::Tick(const SourceLoc& loc) {
  if (++steps_ > budget_.max_steps) {
    throw Error("E_BUDGET", "step budget of " + std::to_string(budget_.max_steps) + " exhausted",
                loc);
  }
}

std::optional<Value> Interpreter::Dispatch(ObjectId caller, ObjectId target,
                                           const std::string& method, std::vector<Value> args,
                                           const SourceLoc& loc) {
  TraceEvent call{TraceEvent::Kind::kCall, caller, target, method, args, std::nullopt, {}, ++seq_};
  trace_.push_back(call);
  TraceEvent ret = call;
  ret.kind = TraceEvent::Kind::kReturn;
  try {
    Tick(loc);
    if (depth_ >= budget_.max_depth) {
      throw Error("E_BUDGET", "call depth limit of " + std::to_string(budget_.max_depth) + " exceeded",
                  loc);
    }
    const RuntimeObject* object = store_.Find(target);
    if (object == nullptr) throw Error("E_NAV_UNSET", "call '" + method + "' on a missing object", loc);
    const MethodDef* m = FindMethodInHierarchy(model_, object->class_name, method);
    if (m == nullptr) {
      throw Error("E_UNKNOWN_MEMBER",
                  "class '" + object->class_name + "' has no method '" + method + "'", loc);
    }
    if (m->params.size() != args.size()) {
      throw Error("E_ARITY", "'" + method + "' expects " + std::to_string(m->params.size()) +
                                 " argument(s), got " + std::to_string(args.size()),
                  loc);
    }
    if (m->abstract) throw Error("E_UNKNOWN_MEMBER", "'" + method + "' is abstract", loc);

    ++depth_;
    std::optional<Value> result;
    try {
      if (m->body) {
        result = RunBody(*m, target, std::move(args));
      } else if (const Statechart* chart = model_.StatechartFor(object->class_name)) {
        result = FireTransition(*chart, *m, target, std::move(args), loc);
      } else if (m->return_type) {
        result = Value::Default(*m->return_type);
      }
    } catch (...) {
      --depth_;
      throw;
    }
    --depth_;
    ret.seq = ++seq_;
    ret.result = result;
    trace_.push_back(std::move(ret));
    return result;
  } catch (const Error& error) {
    ret.seq = ++seq_;
    ret.error = error.code();
    trace_.push_back(std::move(ret));
    throw;
  }
}

std::optional<Value> Interpreter::RunBody(const MethodDef& method, ObjectId self,
                                          std::vector<Value> args) {
  EvalContext frame{&model_, &store_, {}};
  frame.Bind("self", Value::Ref(self));
  for (std::size_t i = 0; i < args.size(); ++i) frame.Bind(method.params[i].name, std::move(args[i]));
  std::optional<Value> result;
  Execute(*method.body, frame, result);
  if (!method.return_type) return std::nullopt;
  if (!result) return Value::Default(*method.return_type);
  return result;
}

std::optional<Value> Interpreter::FireTransition(const Statechart& chart, const MethodDef& method,
                                                 ObjectId self, std::vector<Value> args,
                                                 const SourceLoc& loc) {
  const std::string state = *store_.Find(self)->state;
  bool triggers_anything = false;
  std::vector<std::size_t> enabled;
  std::vector<EvalContext> frames;
  for (std::size_t i = 0; i < chart.transitions.size(); ++i) {
    const TransitionDef& t = chart.transitions[i];
    if (t.trigger != method.name) continue;
    triggers_anything = true;
    if (t.source != state) continue;
    EvalContext frame{&model_, &store_, {}};
    frame.Bind("self", Value::Ref(self));
    for (std::size_t p = 0; p < args.size(); ++p) frame.Bind(t.params[p].name, args[p]);
    if (t.guard) {
      Value guard = Evaluate(*t.guard, frame);
      if (guard.kind() != Value::Kind::kBool) throw Error("E_TYPE", "guard is not Bool", t.loc);
      if (!guard.as_bool()) continue;
    }
    enabled.push_back(i);
    frames.push_back(std::move(frame));
  }
  if (!triggers_anything) {
    return method.return_type ? std::optional<Value>(Value::Default(*method.return_type))
                              : std::nullopt;
  }
  if (enabled.empty()) {
    throw Error("E_NO_TRANSITION",
                "no transition on '" + method.name + "' enabled in state '" + state + "'", loc);
  }
  if (enabled.size() > 1) {
    throw Error("E_NONDETERMINISM",
                std::to_string(enabled.size()) + " transitions on '" + method.name +
                    "' enabled in state '" + state + "'",
                loc);
  }
  const TransitionDef& t = chart.transitions[enabled[0]];
  coverage_.transitions[chart.owner].insert(enabled[0]);
  EvalContext& frame = frames[0];
  if (t.actions) {
    std::optional<Value> ignored;
    Execute(*t.actions, frame, ignored);
  }
  store_.Find(self)->state = t.target;
  coverage_.states[chart.owner].insert(t.target);
  if (!method.return_type) return std::nullopt;
  if (t.result) return Evaluate(*t.result, frame);
  return Value::Default(*method.return_type);
}

Value Interpreter::Evaluate(const Expr& expr, const EvalContext& frame) {
  auto value = Eval(expr, frame);
  if (!value) throw value.error();
  return *value;
}

bool Interpreter::Execute(const Block& block, EvalContext& frame, std::optional<Value>& result) {
  const std::size_t scope_size = frame.bindings.size();
  auto close_scope = [&] { frame.bindings.resize(scope_size); };
  for (const Stmt& s : block) {
    Tick(s.loc);
    switch (s.kind) {
      case Stmt::Kind::kVarDecl:
        frame.Bind(s.name, Evaluate(s.value, frame));
        break;
      case Stmt::Kind::kAssign: {
        Value value = Evaluate(s.value, frame);
        if (s.path.size() == 1) {
          bool found = false;
          for (auto it = frame.bindings.rbegin(); it != frame.bindings.rend(); ++it) {
            if (it->first == s.path[0]) {
              it->second = std::move(value);
              found = true;
              break;
            }
          }
          if (!found) throw Error("E_UNBOUND_NAME", "no binding for '" + s.path[0] + "'", s.loc);
          break;
        }
        Expr base = Expr::Name(s.path[0], s.loc);
        for (std::size_t i = 1; i + 1 < s.path.size(); ++i) base = Expr::Nav(std::move(base), s.path[i], s.loc);
        Value target = Evaluate(base, frame);
        if (target.is_undefined()) {
          throw Error("E_NAV_UNSET", "assignment through an unset reference", s.loc);
        }
        if (target.kind() != Value::Kind::kRef) throw Error("E_TYPE", "assignment target is not an object", s.loc);
        RuntimeObject* object = store_.Find(target.as_ref());
        if (object == nullptr) throw Error("E_NAV_UNSET", "assignment to a missing object", s.loc);
        auto slot = object->slots.find(s.path.back());
        if (slot == object->slots.end()) {
          throw Error("E_TYPE", "class '" + object->class_name + "' has no attribute '" + s.path.back() + "'",
                      s.loc);
        }
        slot->second = std::move(value);
        break;
      }
      case Stmt::Kind::kIf: {
        Value cond = Evaluate(s.value, frame);
        if (cond.kind() != Value::Kind::kBool) throw Error("E_TYPE", "if condition is not Bool", s.loc);
        const Block* branch = cond.as_bool() ? &s.then_block : (s.has_else ? &s.else_block : nullptr);
        if (branch != nullptr && Execute(*branch, frame, result)) {
          close_scope();
          return true;
        }
        break;
      }
      case Stmt::Kind::kReturn:
        result = Evaluate(s.value, frame);
        close_scope();
        return true;
      case Stmt::Kind::kCall: {
        Expr receiver = Expr::Name(s.path[0], s.loc);
        for (std::size_t i = 1; i < s.path.size(); ++i) receiver = Expr::Nav(std::move(receiver), s.path[i], s.loc);
        Value target = Evaluate(receiver, frame);
        if (target.is_undefined()) throw Error("E_NAV_UNSET", "call on an unset reference", s.loc);
        if (target.kind() != Value::Kind::kRef) throw Error("E_TYPE", "call receiver is not an object", s.loc);
        std::vector<Value> args;
        for (const auto& a : s.args) args.push_back(Evaluate(a, frame));
        ObjectId self = frame.bindings.front().second.as_ref();
        Dispatch(self, target.as_ref(), s.name, std::move(args), s.loc);
        break;
      }
    }
  }
  close_scope();
  return false;
}

}  // namespace amw

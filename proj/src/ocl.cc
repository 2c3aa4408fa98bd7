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

#include "amw/ocl.h"

#include "amw/text_format.h"

namespace amw {

namespace {

class Evaluator {
 public:
  explicit Evaluator(const EvalContext& context) : context_(context) {}

  Value Run(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::kLiteral:
        return Value::FromLiteral(e.literal);
      case Expr::Kind::kName:
        return Lookup(e);
      case Expr::Kind::kNav: {
        const RuntimeObject& object = Deref(Run(e.args[0]), e, "." + e.text);
        auto it = object.slots.find(e.text);
        if (it == object.slots.end()) {
          throw Error("E_TYPE", "object #" + std::to_string(object.id) + " of class '" +
                                    object.class_name + "' has no attribute '" + e.text + "'",
                      e.loc);
        }
        return it->second;
      }
      case Expr::Kind::kState: {
        const RuntimeObject& object = Deref(Run(e.args[0]), e, "@state");
        if (!object.state) {
          throw Error("E_TYPE", "object #" + std::to_string(object.id) + " has no statechart", e.loc);
        }
        return Value::String(*object.state);
      }
      case Expr::Kind::kNot:
        return Value::Bool(!RunBool(e.args[0]));
      case Expr::Kind::kBinary:
        return RunBinary(e);
      case Expr::Kind::kSize:
        return Value::Int(static_cast<std::int64_t>(RunSet(e.args[0]).size()));
      case Expr::Kind::kIncludes: {
        std::vector<ObjectId> set = RunSet(e.args[0]);
        Value element = Run(e.args[1]);
        if (element.is_undefined()) return Value::Bool(false);
        if (element.kind() != Value::Kind::kRef) throw TypeError(e, "->includes() expects an object", element);
        for (ObjectId id : set) {
          if (id == element.as_ref()) return Value::Bool(true);
        }
        return Value::Bool(false);
      }
      case Expr::Kind::kForAll:
      case Expr::Kind::kExists: {
        std::vector<ObjectId> set = RunSet(e.args[0]);
        if (e.text == "self") throw Error("E_TYPE", "cannot rebind 'self'", e.loc);
        const bool for_all = e.kind == Expr::Kind::kForAll;
        for (ObjectId id : set) {
          locals_.emplace_back(e.text, Value::Ref(id));
          bool holds;
          try {
            holds = RunBool(e.args[1]);
          } catch (...) {
            locals_.pop_back();
            throw;
          }
          locals_.pop_back();
          if (holds != for_all) return Value::Bool(!for_all);
        }
        return Value::Bool(for_all);
      }
    }
    throw Error("E_TYPE", "unsupported expression", e.loc);
  }

 private:
  static Error TypeError(const Expr& e, const std::string& what, const Value& got) {
    return Error("E_TYPE", what + ", got " + std::string(ValueKindName(got.kind())), e.loc);
  }

  Value Lookup(const Expr& e) const {
    for (auto it = locals_.rbegin(); it != locals_.rend(); ++it) {
      if (it->first == e.text) return it->second;
    }
    for (auto it = context_.bindings.rbegin(); it != context_.bindings.rend(); ++it) {
      if (it->first == e.text) return it->second;
    }
    throw Error("E_UNBOUND_NAME", "no binding for '" + e.text + "'", e.loc);
  }

  const RuntimeObject& Deref(const Value& base, const Expr& e, const std::string& what) const {
    if (base.is_undefined()) {
      throw Error("E_NAV_UNSET", "'" + what + "' applied to an unset reference (" +
                                     PrintExpr(e.args[0]) + ")",
                  e.loc);
    }
    if (base.kind() != Value::Kind::kRef) throw TypeError(e, "'" + what + "' expects an object", base);
    const RuntimeObject* object = context_.store->Find(base.as_ref());
    if (object == nullptr) {
      throw Error("E_NAV_UNSET", "dangling reference #" + std::to_string(base.as_ref()), e.loc);
    }
    return *object;
  }

  bool RunBool(const Expr& e) {
    Value v = Run(e);
    if (v.kind() != Value::Kind::kBool) throw TypeError(e, "expected Bool", v);
    return v.as_bool();
  }

  std::int64_t RunInt(const Expr& e) {
    Value v = Run(e);
    if (v.kind() != Value::Kind::kInt) throw TypeError(e, "expected Int", v);
    return v.as_int();
  }

  std::vector<ObjectId> RunSet(const Expr& e) {
    Value v = Run(e);
    if (v.kind() != Value::Kind::kSet) throw TypeError(e, "expected a set", v);
    return v.as_set();
  }

  static bool ObjectLike(const Value& v) {
    return v.kind() == Value::Kind::kRef || v.is_undefined();
  }

  Value RunBinary(const Expr& e) {
    const Expr& lhs = e.args[0];
    const Expr& rhs = e.args[1];
    switch (e.op) {
      case BinaryOp::kAnd:
        return Value::Bool(RunBool(lhs) && RunBool(rhs));
      case BinaryOp::kOr:
        return Value::Bool(RunBool(lhs) || RunBool(rhs));
      case BinaryOp::kImplies:
        return Value::Bool(!RunBool(lhs) || RunBool(rhs));
      case BinaryOp::kEq:
      case BinaryOp::kNe: {
        Value a = Run(lhs);
        Value b = Run(rhs);
        if (a.kind() != b.kind() && !(ObjectLike(a) && ObjectLike(b))) {
          throw Error("E_TYPE", "cannot compare " + std::string(ValueKindName(a.kind())) + " with " +
                                    std::string(ValueKindName(b.kind())),
                      e.loc);
        }
        return Value::Bool((a == b) == (e.op == BinaryOp::kEq));
      }
      case BinaryOp::kLt:
      case BinaryOp::kLe:
      case BinaryOp::kGt:
      case BinaryOp::kGe: {
        std::int64_t a = RunInt(lhs);
        std::int64_t b = RunInt(rhs);
        switch (e.op) {
          case BinaryOp::kLt:
            return Value::Bool(a < b);
          case BinaryOp::kLe:
            return Value::Bool(a <= b);
          case BinaryOp::kGt:
            return Value::Bool(a > b);
          default:
            return Value::Bool(a >= b);
        }
      }
      case BinaryOp::kAdd:
      case BinaryOp::kSub:
      case BinaryOp::kMul: {
        std::int64_t a = RunInt(lhs);
        std::int64_t b = RunInt(rhs);
        std::int64_t r = 0;
        bool overflow = e.op == BinaryOp::kAdd   ? __builtin_add_overflow(a, b, &r)
                        : e.op == BinaryOp::kSub ? __builtin_sub_overflow(a, b, &r)
                                                 : __builtin_mul_overflow(a, b, &r);
        if (overflow) {
          throw Error("E_OVERFLOW", std::to_string(a) + " " + std::string(BinaryOpSymbol(e.op)) + " " +
                                        std::to_string(b) + " overflows",
                      e.loc);
        }
        return Value::Int(r);
      }
    }
    throw Error("E_TYPE", "unsupported operator", e.loc);
  }

  const EvalContext& context_;
  std::vector<std::pair<std::string, Value>> locals_;
};

}  // namespace

Expected<Value> Eval(const Expr& expr, const EvalContext& context) {
  try {
    return Evaluator(context).Run(expr);
  } catch (const Error& error) {
    return error;
  }
}

EvalContext ContextWithStoreNames(const Model& model, const ObjectStore& store) {
  EvalContext context{&model, &store, {}};
  for (const auto& [name, id] : store.name_index()) context.Bind(name, Value::Ref(id));
  return context;
}

std::string_view OutcomeName(InvariantResult::Outcome outcome) {
  switch (outcome) {
    case InvariantResult::Outcome::kHolds:
      return "holds";
    case InvariantResult::Outcome::kFails:
      return "fails";
    case InvariantResult::Outcome::kError:
      return "error";
  }
  return "?";
}

std::vector<InvariantResult> CheckInvariants(const Model& model, const ObjectStore& store) {
  std::vector<InvariantResult> results;
  for (const auto& inv : model.invariants) {
    for (const auto& [id, object] : store.objects()) {
      if (!model.IsSubclassOf(object.class_name, inv.context)) continue;
      EvalContext context{&model, &store, {}};
      context.Bind("self", Value::Ref(id));
      InvariantResult result{inv.name, id, InvariantResult::Outcome::kHolds, {}};
      auto value = Eval(inv.expr, context);
      if (!value) {
        result.outcome = InvariantResult::Outcome::kError;
        result.reason = value.error().code() + ": " + value.error().what();
      } else if (value->kind() != Value::Kind::kBool) {
        result.outcome = InvariantResult::Outcome::kError;
        result.reason = "E_TYPE: invariant yields " + std::string(ValueKindName(value->kind()));
      } else if (!value->as_bool()) {
        result.outcome = InvariantResult::Outcome::kFails;
      }
      results.push_back(std::move(result));
    }
  }
  return results;
}

}  // namespace amw

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

#include "support/random_model.h"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

#include "amw/check.h"
#include "amw/text_format.h"

namespace amw::testing {

namespace {

int Uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool Chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& Pick(Rng& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(Uniform(rng, 0, static_cast<int>(items.size()) - 1))];
}

template <typename T>
void Shuffle(Rng& rng, std::vector<T>& items) {
  std::shuffle(items.begin(), items.end(), rng);
}

std::string RandomString(Rng& rng) {
  static const std::vector<char> kAlphabet = {'a', 'b', ' ', 'x', '"', '\\', '_'};
  std::string s;
  int n = Uniform(rng, 0, 3);
  for (int i = 0; i < n; ++i) s += Pick(rng, kAlphabet);
  return s;
}

Literal RandomLiteral(Rng& rng, const TypeRef& type) {
  switch (type.kind) {
    case TypeRef::Kind::kInt: {
      int r = Uniform(rng, 0, 19);
      if (r == 0) return Literal::Int(INT64_MIN);
      if (r == 1) return Literal::Int(INT64_MAX);
      return Literal::Int(Uniform(rng, -20, 20));
    }
    case TypeRef::Kind::kBool:
      return Literal::Bool(Chance(rng, 0.5));
    default:
      return Literal::String(RandomString(rng));
  }
}

TypeRef RandomPrimitive(Rng& rng) {
  switch (Uniform(rng, 0, 2)) {
    case 0:
      return TypeRef::Int();
    case 1:
      return TypeRef::Bool();
    default:
      return TypeRef::String();
  }
}

// --- Well-formed models ------------------------------------------------------

class ModelGenerator {
 public:
  explicit ModelGenerator(Rng& rng) : rng_(rng) {}

  Model Build() {
    if (Chance(rng_, 0.2)) {
      m_.manifest = ProjectManifest{Fresh("P"), {"*.amw"}, {}};
      if (Chance(rng_, 0.5)) m_.manifest->files.push_back("sub/*.amw");
      m_.name = m_.manifest->name;
    }
    GenClassSkeletons();
    GenAttributes();
    GenMethodSignatures();
    GenCharts();
    GenAbstractOverrides();
    GenBodies();
    GenTransitionDetails();
    GenConfigs(m_.configs, false);
    GenConfigs(m_.patterns, true);
    GenInvariants();
    GenTests();
    Repair();
    return m_;
  }

 private:
  using Scope = std::map<std::string, TypeRef>;

  std::string Fresh(const std::string& prefix) { return prefix + std::to_string(++counter_); }

  void GenClassSkeletons() {
    int n = Uniform(rng_, 1, 4);
    for (int i = 0; i < n; ++i) {
      ClassDef c;
      c.name = Fresh("K");
      if (i > 0 && Chance(rng_, 0.5)) c.superclass = m_.classes[Uniform(rng_, 0, i - 1)].name;
      c.abstract = Chance(rng_, 0.3);
      c.published = Chance(rng_, 0.6);
      m_.classes.push_back(std::move(c));
    }
  }

  TypeRef RandomType() {
    int r = Uniform(rng_, 0, 9);
    if (r < 6) return RandomPrimitive(rng_);
    const std::string& cls = Pick(rng_, m_.classes).name;
    return r < 8 ? TypeRef::Class(cls) : TypeRef::Set(cls);
  }

  void GenAttributes() {
    for (auto& c : m_.classes) {
      int n = Uniform(rng_, 0, 3);
      for (int i = 0; i < n; ++i) {
        c.attributes.push_back({Fresh("a"), RandomType(), c.published && Chance(rng_, 0.6), {}});
      }
    }
  }

  void GenMethodSignatures() {
    for (auto& c : m_.classes) {
      int n = Uniform(rng_, 0, 3);
      for (int i = 0; i < n; ++i) {
        MethodDef m;
        m.name = Fresh("m");
        int params = Uniform(rng_, 0, 2);
        for (int p = 0; p < params; ++p) m.params.push_back({Fresh("p"), RandomType()});
        if (Chance(rng_, 0.6)) m.return_type = Chance(rng_, 0.8) ? RandomPrimitive(rng_) : RandomType();
        m.published = c.published && Chance(rng_, 0.6);
        m.abstract = c.abstract && Chance(rng_, 0.3);
        if (!m.abstract && Chance(rng_, 0.6)) m.body = Block{};  // filled in later
        c.methods.push_back(std::move(m));
      }
    }
  }

  bool Related(const std::string& a, const std::string& b) const {
    return m_.IsSubclassOf(a, b) || m_.IsSubclassOf(b, a);
  }

  void GenCharts() {
    std::vector<std::string> owners;
    for (const auto& c : m_.classes) {
      if (!Chance(rng_, 0.5)) continue;
      bool clash = std::any_of(owners.begin(), owners.end(),
                               [&](const std::string& o) { return Related(o, c.name); });
      if (clash) continue;
      owners.push_back(c.name);
      Statechart chart;
      chart.owner = c.name;
      int states = Uniform(rng_, 1, 4);
      for (int s = 1; s <= states; ++s) chart.states.push_back("S" + std::to_string(s));
      chart.initial = Pick(rng_, chart.states);
      std::vector<const MethodDef*> triggers;
      for (const ClassDef* k : m_.Ancestry(c.name)) {
        for (const auto& m : k->methods) {
          if (!m.body && !m.abstract) triggers.push_back(&m);
        }
      }
      if (!triggers.empty()) {
        int transitions = Uniform(rng_, 0, 5);
        for (int t = 0; t < transitions; ++t) {
          const MethodDef* m = Pick(rng_, triggers);
          TransitionDef def;
          def.source = Pick(rng_, chart.states);
          def.target = Pick(rng_, chart.states);
          def.trigger = m->name;
          def.params = m->params;
          chart.transitions.push_back(std::move(def));
        }
      }
      m_.statecharts.push_back(std::move(chart));
    }
  }

  void GenAbstractOverrides() {
    for (auto& c : m_.classes) {
      if (c.abstract) continue;
      std::vector<MethodDef> needed;
      std::set<std::string> seen;
      for (const ClassDef* k : m_.Ancestry(c.name)) {
        for (const auto& m : k->methods) {
          if (!seen.insert(m.name).second) continue;
          if (m.abstract) {
            MethodDef impl = m;
            impl.abstract = false;
            impl.published = m.published && c.published;
            impl.body = Block{};
            needed.push_back(std::move(impl));
          }
        }
      }
      for (auto& m : needed) c.methods.push_back(std::move(m));
    }
  }

  // --- typed expressions ---

  std::vector<std::pair<std::string, const AttributeDef*>> AttributesOfType(const TypeRef& type) const {
    std::vector<std::pair<std::string, const AttributeDef*>> out;
    for (const auto& c : m_.classes) {
      for (const auto& a : c.attributes) {
        if (a.type == type) out.emplace_back(c.name, &a);
      }
    }
    return out;
  }

  std::optional<Expr> GenExpr(const TypeRef& type, int depth, const Scope& scope) {
    std::vector<std::function<std::optional<Expr>()>> options;
    if (type.is_primitive()) {
      options.push_back([&]() -> std::optional<Expr> { return Expr::Lit(RandomLiteral(rng_, type)); });
    }
    options.push_back([&]() -> std::optional<Expr> {
      std::vector<std::string> names;
      for (const auto& [name, t] : scope) {
        if (t == type) names.push_back(name);
      }
      if (names.empty()) return std::nullopt;
      return Expr::Name(Pick(rng_, names));
    });
    if (depth > 0) {
      options.push_back([&]() -> std::optional<Expr> {
        auto attrs = AttributesOfType(type);
        Shuffle(rng_, attrs);
        for (const auto& [owner, attr] : attrs) {
          if (auto base = GenExpr(TypeRef::Class(owner), depth - 1, scope)) {
            return Expr::Nav(std::move(*base), attr->name);
          }
        }
        return std::nullopt;
      });
    }
    if (depth > 0 && type == TypeRef::Int()) {
      options.push_back([&]() -> std::optional<Expr> {
        static const std::vector<BinaryOp> kOps = {BinaryOp::kAdd, BinaryOp::kSub, BinaryOp::kMul};
        auto lhs = GenExpr(TypeRef::Int(), depth - 1, scope);
        auto rhs = GenExpr(TypeRef::Int(), depth - 1, scope);
        if (!lhs || !rhs) return std::nullopt;
        return Expr::Binary(Pick(rng_, kOps), std::move(*lhs), std::move(*rhs));
      });
      options.push_back([&]() -> std::optional<Expr> {
        if (auto set = GenAnySet(depth - 1, scope)) return Expr::Size(std::move(set->first));
        return std::nullopt;
      });
    }
    if (depth > 0 && type == TypeRef::Bool()) AddBoolOptions(options, depth, scope);
    Shuffle(rng_, options);
    for (auto& option : options) {
      if (auto e = option()) return e;
    }
    return std::nullopt;
  }

  // A set-typed expression and its element class.
  std::optional<std::pair<Expr, std::string>> GenAnySet(int depth, const Scope& scope) {
    std::vector<std::string> classes;
    for (const auto& c : m_.classes) classes.push_back(c.name);
    Shuffle(rng_, classes);
    for (const auto& cls : classes) {
      if (auto e = GenExpr(TypeRef::Set(cls), depth, scope)) return std::make_pair(std::move(*e), cls);
    }
    return std::nullopt;
  }

  void AddBoolOptions(std::vector<std::function<std::optional<Expr>()>>& options, int depth,
                      const Scope& scope) {
    options.push_back([&, depth]() -> std::optional<Expr> {
      auto operand = GenExpr(TypeRef::Bool(), depth - 1, scope);
      if (!operand) return std::nullopt;
      return Expr::Not(std::move(*operand));
    });
    options.push_back([&, depth]() -> std::optional<Expr> {
      static const std::vector<BinaryOp> kOps = {BinaryOp::kAnd, BinaryOp::kOr, BinaryOp::kImplies};
      auto lhs = GenExpr(TypeRef::Bool(), depth - 1, scope);
      auto rhs = GenExpr(TypeRef::Bool(), depth - 1, scope);
      if (!lhs || !rhs) return std::nullopt;
      return Expr::Binary(Pick(rng_, kOps), std::move(*lhs), std::move(*rhs));
    });
    options.push_back([&, depth]() -> std::optional<Expr> {
      static const std::vector<BinaryOp> kOps = {BinaryOp::kLt, BinaryOp::kLe, BinaryOp::kGt,
                                                 BinaryOp::kGe, BinaryOp::kEq, BinaryOp::kNe};
      auto lhs = GenExpr(TypeRef::Int(), depth - 1, scope);
      auto rhs = GenExpr(TypeRef::Int(), depth - 1, scope);
      if (!lhs || !rhs) return std::nullopt;
      return Expr::Binary(Pick(rng_, kOps), std::move(*lhs), std::move(*rhs));
    });
    options.push_back([&, depth]() -> std::optional<Expr> {
      std::vector<TypeRef> types = {TypeRef::String(), TypeRef::Bool()};
      for (const auto& c : m_.classes) types.push_back(TypeRef::Class(c.name));
      TypeRef t = Pick(rng_, types);
      auto lhs = GenExpr(t, depth - 1, scope);
      auto rhs = GenExpr(t, depth - 1, scope);
      if (!lhs || !rhs) return std::nullopt;
      return Expr::Binary(Chance(rng_, 0.5) ? BinaryOp::kEq : BinaryOp::kNe, std::move(*lhs),
                          std::move(*rhs));
    });
    options.push_back([&, depth]() -> std::optional<Expr> {
      auto set = GenAnySet(depth - 1, scope);
      if (!set) return std::nullopt;
      auto element = GenExpr(TypeRef::Class(set->second), depth - 1, scope);
      if (!element) return std::nullopt;
      return Expr::Includes(std::move(set->first), std::move(*element));
    });
    options.push_back([&, depth]() -> std::optional<Expr> {
      auto set = GenAnySet(depth - 1, scope);
      if (!set) return std::nullopt;
      Scope inner = scope;
      std::string var = Fresh("v");
      inner[var] = TypeRef::Class(set->second);
      auto body = GenExpr(TypeRef::Bool(), depth - 1, inner);
      if (!body) return std::nullopt;
      return Chance(rng_, 0.5) ? Expr::ForAll(std::move(set->first), var, std::move(*body))
                               : Expr::Exists(std::move(set->first), var, std::move(*body));
    });
    options.push_back([&, depth]() -> std::optional<Expr> {
      std::vector<const Statechart*> charts;
      for (const auto& s : m_.statecharts) charts.push_back(&s);
      if (charts.empty()) return std::nullopt;
      const Statechart* chart = Pick(rng_, charts);
      auto base = GenExpr(TypeRef::Class(chart->owner), depth - 1, scope);
      if (!base) return std::nullopt;
      return Expr::Binary(BinaryOp::kEq, Expr::State(std::move(*base)),
                          Expr::Lit(Literal::String(Pick(rng_, chart->states))));
    });
  }

  Expr GenExprOrLiteral(const TypeRef& type, int depth, const Scope& scope) {
    if (auto e = GenExpr(type, depth, scope)) return std::move(*e);
    return Expr::Lit(RandomLiteral(rng_, type));
  }

  // --- statements ---

  Block GenBlock(const std::string& self_class, Scope scope, int nesting, bool allow_return,
                 const std::optional<TypeRef>& return_type) {
    Block block;
    int n = Uniform(rng_, 0, 3);
    for (int i = 0; i < n; ++i) {
      Stmt s;
      switch (Uniform(rng_, 0, 3)) {
        case 0: {
          s.kind = Stmt::Kind::kVarDecl;
          s.name = Fresh("l");
          TypeRef t = RandomPrimitive(rng_);
          s.value = GenExprOrLiteral(t, 2, scope);
          scope[s.name] = t;
          break;
        }
        case 1: {
          std::vector<const AttributeDef*> attrs = m_.AllAttributes(self_class);
          std::vector<std::string> locals;
          for (const auto& [name, t] : scope) {
            if (name != "self" && t.is_primitive()) locals.push_back(name);
          }
          if (!attrs.empty() && (locals.empty() || Chance(rng_, 0.6))) {
            const AttributeDef* a = Pick(rng_, attrs);
            auto value = GenExpr(a->type, 2, scope);
            if (!value) continue;
            s.kind = Stmt::Kind::kAssign;
            s.path = {"self", a->name};
            s.value = std::move(*value);
          } else if (!locals.empty()) {
            const std::string& local = Pick(rng_, locals);
            s.kind = Stmt::Kind::kAssign;
            s.path = {local};
            s.value = GenExprOrLiteral(scope.at(local), 2, scope);
          } else {
            continue;
          }
          break;
        }
        case 2: {
          if (nesting >= 1) continue;
          s.kind = Stmt::Kind::kIf;
          s.value = GenExprOrLiteral(TypeRef::Bool(), 2, scope);
          s.then_block = GenBlock(self_class, scope, nesting + 1, allow_return, return_type);
          s.has_else = Chance(rng_, 0.5);
          if (s.has_else) s.else_block = GenBlock(self_class, scope, nesting + 1, allow_return, return_type);
          break;
        }
        default: {
          std::vector<std::pair<std::vector<std::string>, const MethodDef*>> targets;
          auto add_methods = [&](const std::vector<std::string>& path, const std::string& cls) {
            std::set<std::string> seen;
            for (const ClassDef* k : m_.Ancestry(cls)) {
              for (const auto& m : k->methods) {
                if (seen.insert(m.name).second) targets.emplace_back(path, &m);
              }
            }
          };
          add_methods({"self"}, self_class);
          for (const AttributeDef* a : m_.AllAttributes(self_class)) {
            if (a->type.kind == TypeRef::Kind::kClass) add_methods({"self", a->name}, a->type.class_name);
          }
          if (targets.empty()) continue;
          const auto& [path, m] = Pick(rng_, targets);
          s.kind = Stmt::Kind::kCall;
          s.path = path;
          s.name = m->name;
          bool ok = true;
          for (const auto& p : m->params) {
            auto arg = p.type.is_primitive() ? std::optional<Expr>(GenExprOrLiteral(p.type, 1, scope))
                                             : GenExpr(p.type, 1, scope);
            if (!arg) {
              ok = false;
              break;
            }
            s.args.push_back(std::move(*arg));
          }
          if (!ok) continue;
          break;
        }
      }
      block.push_back(std::move(s));
    }
    if (allow_return && return_type && nesting == 0 && Chance(rng_, 0.8)) {
      auto value = GenExpr(*return_type, 2, scope);
      if (value) {
        Stmt r;
        r.kind = Stmt::Kind::kReturn;
        r.value = std::move(*value);
        block.push_back(std::move(r));
      }
    } else if (allow_return && return_type && nesting > 0 && Chance(rng_, 0.3)) {
      if (auto value = GenExpr(*return_type, 1, scope)) {
        Stmt r;
        r.kind = Stmt::Kind::kReturn;
        r.value = std::move(*value);
        block.push_back(std::move(r));
      }
    }
    return block;
  }

  void GenBodies() {
    for (auto& c : m_.classes) {
      for (auto& m : c.methods) {
        if (!m.body) continue;
        Scope scope{{"self", TypeRef::Class(c.name)}};
        for (const auto& p : m.params) scope[p.name] = p.type;
        m.body = GenBlock(c.name, scope, 0, true, m.return_type);
      }
    }
  }

  void GenTransitionDetails() {
    for (auto& chart : m_.statecharts) {
      for (auto& t : chart.transitions) {
        Scope scope{{"self", TypeRef::Class(chart.owner)}};
        for (const auto& p : t.params) scope[p.name] = p.type;
        if (Chance(rng_, 0.6)) t.guard = GenExprOrLiteral(TypeRef::Bool(), 3, scope);
        if (Chance(rng_, 0.4)) t.actions = GenBlock(chart.owner, scope, 0, false, std::nullopt);
        const MethodDef* m = FindMethodInHierarchy(m_, chart.owner, t.trigger);
        if (m->return_type && Chance(rng_, 0.7)) t.result = GenExpr(*m->return_type, 2, scope);
      }
    }
  }

  // --- object diagrams ---

  void GenConfigs(std::vector<ObjectDiagram>& out, bool pattern) {
    int n = Uniform(rng_, pattern ? 0 : 1, 2);
    for (int i = 0; i < n; ++i) {
      ObjectDiagram d;
      d.name = Fresh(pattern ? "pat" : "cfg");
      std::vector<std::string> classes;
      for (const auto& c : m_.classes) {
        if (pattern || !c.abstract) classes.push_back(c.name);
      }
      int objects = classes.empty() ? 0 : Uniform(rng_, 0, 4);
      for (int o = 0; o < objects; ++o) {
        ObjectDecl decl;
        decl.name = Fresh("o");
        decl.class_name = Pick(rng_, classes);
        decl.anchor = pattern && Chance(rng_, 0.3);
        d.objects.push_back(std::move(decl));
      }
      for (auto& decl : d.objects) {
        for (const AttributeDef* a : m_.AllAttributes(decl.class_name)) {
          if (!Chance(rng_, pattern ? 0.4 : 0.7)) continue;
          if (a->type.is_primitive()) {
            decl.assignments.push_back({a->name, ObjectValue::Lit(RandomLiteral(rng_, a->type)), {}});
            continue;
          }
          std::vector<std::string> fits;
          for (const auto& other : d.objects) {
            if (m_.IsSubclassOf(other.class_name, a->type.class_name)) fits.push_back(other.name);
          }
          if (a->type.kind == TypeRef::Kind::kClass) {
            if (fits.empty()) continue;
            decl.assignments.push_back({a->name, ObjectValue::Object(Pick(rng_, fits)), {}});
          } else {
            std::vector<std::string> members;
            for (const auto& f : fits) {
              if (Chance(rng_, 0.5)) members.push_back(f);
            }
            decl.assignments.push_back({a->name, ObjectValue::Set(std::move(members)), {}});
          }
        }
      }
      out.push_back(std::move(d));
    }
  }

  void GenInvariants() {
    int n = Uniform(rng_, 0, 2);
    for (int i = 0; i < n; ++i) {
      const ClassDef& c = Pick(rng_, m_.classes);
      Scope scope{{"self", TypeRef::Class(c.name)}};
      m_.invariants.push_back({Fresh("inv"), c.name, GenExprOrLiteral(TypeRef::Bool(), 3, scope), {}});
    }
  }

  std::vector<Step> GenSteps(const ObjectDiagram& fixture, const Scope& scope) {
    std::vector<Step> steps;
    if (fixture.objects.empty()) return steps;
    int n = Uniform(rng_, 0, 4);
    for (int i = 0; i < n; ++i) {
      Step step;
      int kind = Uniform(rng_, 0, 2);
      const ObjectDecl& target = Pick(rng_, fixture.objects);
      std::vector<const MethodDef*> methods;
      std::set<std::string> seen;
      for (const ClassDef* k : m_.Ancestry(target.class_name)) {
        for (const auto& m : k->methods) {
          if (seen.insert(m.name).second) methods.push_back(&m);
        }
      }
      if (kind == 2) {
        step.kind = Step::Kind::kAssert;
        step.assertion = GenExprOrLiteral(TypeRef::Bool(), 3, scope);
      } else if (methods.empty()) {
        continue;
      } else if (kind == 1) {
        step.kind = Step::Kind::kExpectMessage;
        step.caller = Pick(rng_, fixture.objects).name;
        step.target = target.name;
        step.method = Pick(rng_, methods)->name;
      } else {
        const MethodDef* m = Pick(rng_, methods);
        step.kind = Step::Kind::kStimulus;
        step.target = target.name;
        step.method = m->name;
        bool ok = true;
        for (const auto& p : m->params) {
          if (p.type.is_primitive()) {
            step.args.push_back(ObjectValue::Lit(RandomLiteral(rng_, p.type)));
            continue;
          }
          std::vector<std::string> fits;
          if (p.type.kind == TypeRef::Kind::kClass) {
            for (const auto& o : fixture.objects) {
              if (m_.IsSubclassOf(o.class_name, p.type.class_name)) fits.push_back(o.name);
            }
          }
          if (fits.empty()) {
            ok = false;
            break;
          }
          step.args.push_back(ObjectValue::Object(Pick(rng_, fits)));
        }
        if (!ok) continue;
        if (m->return_type && m->return_type->is_primitive() && Chance(rng_, 0.5)) {
          step.expected = RandomLiteral(rng_, *m->return_type);
        }
      }
      steps.push_back(std::move(step));
    }
    return steps;
  }

  void GenTests() {
    int n = Uniform(rng_, 0, 3);
    for (int i = 0; i < n; ++i) {
      const ObjectDiagram& fixture = Pick(rng_, m_.configs);
      Scope scope;
      for (const auto& o : fixture.objects) scope[o.name] = TypeRef::Class(o.class_name);
      SequenceDefinition seq;
      seq.name = Fresh("seq");
      seq.strict = Chance(rng_, 0.3);
      seq.steps = GenSteps(fixture, scope);
      TestCase test;
      test.name = Fresh("t");
      test.category = static_cast<TestCategory>(Uniform(rng_, 0, 2));
      test.fixture = fixture.name;
      test.driver = seq.name;
      if (Chance(rng_, 0.6)) {
        Oracle oracle;
        std::vector<std::string> usable;
        for (const auto& p : m_.patterns) {
          bool anchors_ok = std::all_of(p.objects.begin(), p.objects.end(), [&](const ObjectDecl& o) {
            return !o.anchor || fixture.FindObject(o.name) != nullptr;
          });
          if (anchors_ok) usable.push_back(p.name);
        }
        if (!usable.empty() && Chance(rng_, 0.5)) oracle.pattern = Pick(rng_, usable);
        int asserts = Uniform(rng_, 0, 2);
        for (int a = 0; a < asserts; ++a) oracle.assertions.push_back(GenExprOrLiteral(TypeRef::Bool(), 3, scope));
        test.oracle = std::move(oracle);
      }
      m_.sequences.push_back(std::move(seq));
      m_.tests.push_back(std::move(test));
    }
  }

  // Acceptance tests that reach unpublished elements become unit tests.
  void Repair() {
    DiagnosticList diagnostics = CheckWellformed(m_);
    bool changed = false;
    for (const auto& d : diagnostics) {
      if (d.code != "E_UNPUBLISHED_IN_ACCEPTANCE") continue;
      for (auto& t : m_.tests) {
        if (t.category == TestCategory::kAcceptance &&
            d.message.find("'" + t.name + "'") != std::string::npos) {
          t.category = TestCategory::kUnit;
          changed = true;
        }
      }
    }
    if (changed) diagnostics = CheckWellformed(m_);
    if (!diagnostics.empty()) {
      throw std::logic_error("random model is ill-formed:\n" + FormatDiagnostics(diagnostics) +
                             PrintModel(m_));
    }
  }

  Rng& rng_;
  Model m_;
  int counter_ = 0;
};

// --- Evaluation cases --------------------------------------------------------

enum class Hint { kInt, kBool, kString, kObject, kSet };

class OclGenerator {
 public:
  explicit OclGenerator(Rng& rng) : rng_(rng) {}

  Expr Gen(Hint hint, int depth) {
    if (Chance(rng_, 0.1)) hint = static_cast<Hint>(Uniform(rng_, 0, 4));
    if (depth <= 1) return Leaf(hint);
    switch (hint) {
      case Hint::kInt:
        switch (Uniform(rng_, 0, 4)) {
          case 0:
            return Leaf(hint);
          case 1:
            return Expr::Nav(Gen(Hint::kObject, depth - 1), Chance(rng_, 0.7) ? "n" : "m");
          case 2:
            return Expr::Size(Gen(Hint::kSet, depth - 1));
          default: {
            static const std::vector<BinaryOp> kOps = {BinaryOp::kAdd, BinaryOp::kSub, BinaryOp::kMul};
            return Expr::Binary(Pick(rng_, kOps), Gen(Hint::kInt, depth - 1), Gen(Hint::kInt, depth - 1));
          }
        }
      case Hint::kBool:
        switch (Uniform(rng_, 0, 9)) {
          case 0:
            return Leaf(hint);
          case 1:
            return Expr::Nav(Gen(Hint::kObject, depth - 1), "b");
          case 2:
            return Expr::Not(Gen(Hint::kBool, depth - 1));
          case 3: {
            static const std::vector<BinaryOp> kOps = {BinaryOp::kAnd, BinaryOp::kOr, BinaryOp::kImplies};
            return Expr::Binary(Pick(rng_, kOps), Gen(Hint::kBool, depth - 1), Gen(Hint::kBool, depth - 1));
          }
          case 4: {
            static const std::vector<BinaryOp> kOps = {BinaryOp::kLt, BinaryOp::kLe, BinaryOp::kGt,
                                                       BinaryOp::kGe};
            return Expr::Binary(Pick(rng_, kOps), Gen(Hint::kInt, depth - 1), Gen(Hint::kInt, depth - 1));
          }
          case 5: {
            Hint operand = static_cast<Hint>(Uniform(rng_, 0, 4));
            return Expr::Binary(Chance(rng_, 0.5) ? BinaryOp::kEq : BinaryOp::kNe, Gen(operand, depth - 1),
                                Gen(operand, depth - 1));
          }
          case 6:
            return Expr::Includes(Gen(Hint::kSet, depth - 1), Gen(Hint::kObject, depth - 1));
          case 7:
          case 8: {
            static const std::vector<std::string> kVars = {"v", "w", "v", "w", "self"};
            std::string var = Pick(rng_, kVars);
            Expr set = Gen(Hint::kSet, depth - 1);
            Expr body = Gen(Hint::kBool, depth - 1);
            return Chance(rng_, 0.5) ? Expr::ForAll(std::move(set), var, std::move(body))
                                     : Expr::Exists(std::move(set), var, std::move(body));
          }
          default:
            return Expr::Binary(BinaryOp::kEq, Expr::State(Gen(Hint::kObject, depth - 1)),
                                Expr::Lit(Literal::String(Chance(rng_, 0.5) ? "A" : "B")));
        }
      case Hint::kString:
        switch (Uniform(rng_, 0, 2)) {
          case 0:
            return Leaf(hint);
          case 1:
            return Expr::Nav(Gen(Hint::kObject, depth - 1), "s");
          default:
            return Expr::State(Gen(Hint::kObject, depth - 1));
        }
      case Hint::kObject:
        if (Chance(rng_, 0.5)) return Leaf(hint);
        return Expr::Nav(Gen(Hint::kObject, depth - 1), Chance(rng_, 0.9) ? "next" : "zz");
      case Hint::kSet:
        return Expr::Nav(Gen(Hint::kObject, depth - 1), "kids");
    }
    return Leaf(hint);
  }

 private:
  Expr Leaf(Hint hint) {
    switch (hint) {
      case Hint::kInt: {
        if (Chance(rng_, 0.2)) return Expr::Name("y");
        int r = Uniform(rng_, 0, 9);
        if (r == 0) return Expr::Lit(Literal::Int(INT64_MAX));
        if (r == 1) return Expr::Lit(Literal::Int(INT64_MIN));
        return Expr::Lit(Literal::Int(Uniform(rng_, -4, 4)));
      }
      case Hint::kBool:
        return Expr::Lit(Literal::Bool(Chance(rng_, 0.5)));
      case Hint::kString:
        return Expr::Lit(Literal::String(Chance(rng_, 0.5) ? "" : "a"));
      case Hint::kObject:
      case Hint::kSet: {
        static const std::vector<std::string> kNames = {"self", "self", "x", "v", "w", "zz"};
        return Expr::Name(Pick(rng_, kNames));
      }
    }
    return Expr::Lit(Literal::Bool(true));
  }

  Rng& rng_;
};

}  // namespace

Model RandomWellFormedModel(Rng& rng) { return ModelGenerator(rng).Build(); }

const Model& OclSchema() {
  static const Model* schema = [] {
    auto m = ParseModelText(
        "class Node {\n"
        "  attr n: Int;\n  attr b: Bool;\n  attr s: String;\n"
        "  attr next: Node;\n  attr kids: set<Node>;\n"
        "  method poke();\n"
        "}\n"
        "class Leaf extends Node {\n  attr m: Int;\n}\n"
        "statechart for Leaf {\n  initial A;\n  state A;\n  state B;\n}\n");
    return new Model(*m);
  }();
  return *schema;
}

OclCase RandomOclCase(Rng& rng, int max_depth, int max_objects) {
  OclCase c;
  const Model& schema = OclSchema();
  int n = Uniform(rng, 1, max_objects);
  std::vector<ObjectId> ids;
  for (int i = 0; i < n; ++i) ids.push_back(c.store.Create(schema, Chance(rng, 0.5) ? "Node" : "Leaf"));
  auto random_int = [&]() -> std::int64_t {
    int r = Uniform(rng, 0, 9);
    if (r == 0) return INT64_MAX - Uniform(rng, 0, 2);
    if (r == 1) return INT64_MIN + Uniform(rng, 0, 2);
    return Uniform(rng, -5, 5);
  };
  for (ObjectId id : ids) {
    RuntimeObject* o = c.store.Find(id);
    o->slots["n"] = Value::Int(random_int());
    o->slots["b"] = Value::Bool(Chance(rng, 0.5));
    o->slots["s"] = Value::String(Chance(rng, 0.5) ? "" : "a");
    o->slots["next"] = Chance(rng, 0.3) ? Value::Undefined() : Value::Ref(Pick(rng, ids));
    std::vector<ObjectId> kids;
    for (ObjectId k : ids) {
      if (Chance(rng, 0.4)) kids.push_back(k);
    }
    o->slots["kids"] = Value::Set(kids);
    if (o->class_name == "Leaf") {
      o->slots["m"] = Value::Int(random_int());
      o->state = Chance(rng, 0.5) ? "A" : "B";
    }
  }
  c.bindings.emplace_back("self", Value::Ref(Pick(rng, ids)));
  c.bindings.emplace_back("x", Chance(rng, 0.3) ? Value::Undefined() : Value::Ref(Pick(rng, ids)));
  c.bindings.emplace_back("y", Value::Int(random_int()));
  OclGenerator gen(rng);
  static const std::vector<Hint> kTop = {Hint::kBool, Hint::kBool, Hint::kBool, Hint::kInt, Hint::kString,
                                         Hint::kObject, Hint::kSet};
  c.expr = gen.Gen(Pick(rng, kTop), Uniform(rng, 1, max_depth));
  return c;
}

PatternCase RandomPatternCase(Rng& rng, int max_pattern, int max_store) {
  static const Model* schema = [] {
    auto m = ParseModelText(
        "abstract class P {\n  attr k: Int;\n  attr f: Bool;\n  attr r: P;\n  attr rs: set<P>;\n}\n"
        "class Q extends P {\n}\n"
        "class R extends P {\n  attr t: String;\n}\n"
        "class S extends R {\n}\n");
    return new Model(*m);
  }();
  PatternCase c;
  c.model = *schema;
  static const std::vector<std::string> kConcrete = {"Q", "R", "S"};
  static const std::vector<std::string> kAll = {"P", "Q", "R", "S"};

  int n = Uniform(rng, 1, max_store);
  std::vector<ObjectId> ids;
  for (int i = 0; i < n; ++i) ids.push_back(c.store.Create(c.model, Pick(rng, kConcrete)));
  for (ObjectId id : ids) {
    RuntimeObject* o = c.store.Find(id);
    o->slots["k"] = Value::Int(Uniform(rng, 0, 2));
    o->slots["f"] = Value::Bool(Chance(rng, 0.5));
    o->slots["r"] = Chance(rng, 0.3) ? Value::Undefined() : Value::Ref(Pick(rng, ids));
    std::vector<ObjectId> members;
    for (ObjectId k : ids) {
      if (Chance(rng, 0.3)) members.push_back(k);
    }
    o->slots["rs"] = Value::Set(members);
    if (o->slots.count("t")) o->slots["t"] = Value::String(Chance(rng, 0.5) ? "" : "a");
  }

  int p = Uniform(rng, 1, std::min(max_pattern, n + 1));
  c.pattern.name = "pat";
  // Pattern objects are derived from distinct store objects half the time so
  // that matches are common; the rest are random.
  std::vector<ObjectId> shuffled = ids;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const bool derived = Chance(rng, 0.5);
  std::map<ObjectId, std::string> name_of;
  for (int i = 0; i < p; ++i) {
    ObjectDecl decl;
    decl.name = "p" + std::to_string(i + 1);
    if (derived && i < static_cast<int>(shuffled.size())) {
      const RuntimeObject* source = c.store.Find(shuffled[i]);
      decl.class_name = Chance(rng, 0.3) ? "P" : source->class_name;
      name_of[shuffled[i]] = decl.name;
    } else {
      decl.class_name = Pick(rng, kAll);
    }
    c.pattern.objects.push_back(std::move(decl));
  }
  for (int i = 0; i < p; ++i) {
    ObjectDecl& decl = c.pattern.objects[i];
    const RuntimeObject* source =
        derived && i < static_cast<int>(shuffled.size()) ? c.store.Find(shuffled[i]) : nullptr;
    auto literal_of = [&](const std::string& attr, Literal random) {
      if (source != nullptr && source->slots.count(attr) && Chance(rng, 0.8)) {
        const Value& v = source->slots.at(attr);
        if (v.kind() == Value::Kind::kInt) return Literal::Int(v.as_int());
        if (v.kind() == Value::Kind::kBool) return Literal::Bool(v.as_bool());
        if (v.kind() == Value::Kind::kString) return Literal::String(v.as_string());
      }
      return random;
    };
    if (Chance(rng, 0.4)) decl.assignments.push_back({"k", ObjectValue::Lit(literal_of("k", Literal::Int(Uniform(rng, 0, 2)))), {}});
    if (Chance(rng, 0.3)) decl.assignments.push_back({"f", ObjectValue::Lit(literal_of("f", Literal::Bool(Chance(rng, 0.5)))), {}});
    if ((decl.class_name == "R" || decl.class_name == "S") && Chance(rng, 0.3)) {
      decl.assignments.push_back({"t", ObjectValue::Lit(literal_of("t", Literal::String(Chance(rng, 0.5) ? "" : "a"))), {}});
    }
    if (Chance(rng, 0.3)) {
      std::string target = c.pattern.objects[Uniform(rng, 0, p - 1)].name;
      if (source != nullptr) {
        const Value& r = source->slots.at("r");
        if (r.kind() == Value::Kind::kRef && name_of.count(r.as_ref()) && Chance(rng, 0.8)) {
          target = name_of[r.as_ref()];
        }
      }
      decl.assignments.push_back({"r", ObjectValue::Object(target), {}});
    }
    if (Chance(rng, 0.2)) {
      std::vector<std::string> members;
      if (source != nullptr && Chance(rng, 0.7)) {
        bool representable = true;
        for (ObjectId id : source->slots.at("rs").as_set()) {
          if (!name_of.count(id)) representable = false;
          else members.push_back(name_of[id]);
        }
        if (!representable) members.clear();
      } else {
        for (const auto& o : c.pattern.objects) {
          if (Chance(rng, 0.3)) members.push_back(o.name);
        }
      }
      decl.assignments.push_back({"rs", ObjectValue::Set(members), {}});
    }
    if (Chance(rng, 0.25)) {
      ObjectId anchor = source != nullptr && Chance(rng, 0.7) ? source->id : Pick(rng, ids);
      c.anchors[decl.name] = anchor;
      decl.anchor = Chance(rng, 0.5);
    } else if (Chance(rng, 0.03)) {
      decl.anchor = true;  // explicit anchor without a binding
    }
  }
  // Fixture names that are not pattern objects are ignored by the matcher.
  if (Chance(rng, 0.3)) c.anchors["bystander"] = Pick(rng, ids);
  return c;
}

}  // namespace amw::testing

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

#include "amw/refactor.h"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "amw/check.h"
#include "amw/text_format.h"

namespace amw {

const std::vector<std::string>& RefactoringRules() {
  static const std::vector<std::string> rules = {"pull_up_attribute", "pull_up_method",
                                                 "rename_class", "rename_attribute",
                                                 "rename_method"};
  return rules;
}

namespace {

std::string Quote(const std::string& s) { return "'" + s + "'"; }

// --- Typed traversal ---------------------------------------------------------

// Callbacks of a traversal that tracks the static type of every navigation
// base and call receiver. Callbacks run before the node's children are
// visited, so they may rename the node without disturbing typing.
class Visitor {
 public:
  virtual ~Visitor() = default;
  virtual void Nav(Expr& /*nav*/, const std::string& /*base_class*/) {}
  virtual void PathStep(std::string& /*attribute*/, const std::string& /*base_class*/) {}
  virtual void Call(Stmt& /*call*/, const std::string& /*receiver_class*/) {}
};

void WalkExpr(Expr& e, const TypeScope& scope, Visitor& v) {
  switch (e.kind) {
    case Expr::Kind::kNav: {
      auto base = TypeOf(e.args[0], scope);
      if (base.ok() && base->kind == TypeRef::Kind::kClass) v.Nav(e, base->class_name);
      WalkExpr(e.args[0], scope, v);
      return;
    }
    case Expr::Kind::kForAll:
    case Expr::Kind::kExists: {
      auto collection = TypeOf(e.args[0], scope);
      WalkExpr(e.args[0], scope, v);
      TypeScope inner = scope;
      if (collection.ok() && collection->kind == TypeRef::Kind::kSet) {
        inner.names[e.text] = TypeRef::Class(collection->class_name);
      } else {
        inner.names.erase(e.text);
      }
      WalkExpr(e.args[1], inner, v);
      return;
    }
    default:
      for (Expr& arg : e.args) WalkExpr(arg, scope, v);
  }
}

// Visits path[1..] as navigations; returns the static type of the path.
std::optional<TypeRef> WalkPath(std::vector<std::string>& path, const TypeScope& scope,
                                Visitor& v) {
  if (path.empty()) return std::nullopt;
  auto it = scope.names.find(path[0]);
  if (it == scope.names.end()) return std::nullopt;
  TypeRef type = it->second;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (type.kind != TypeRef::Kind::kClass) return std::nullopt;
    const std::string base = type.class_name;
    const AttributeDef* attr = FindAttributeInHierarchy(*scope.model, base, path[i]);
    v.PathStep(path[i], base);
    if (attr == nullptr) return std::nullopt;
    type = attr->type;
  }
  return type;
}

void WalkBlock(Block& block, TypeScope scope, Visitor& v) {
  for (Stmt& s : block) {
    switch (s.kind) {
      case Stmt::Kind::kVarDecl: {
        auto type = TypeOf(s.value, scope);
        WalkExpr(s.value, scope, v);
        if (type.ok()) {
          scope.names[s.name] = *type;
        } else {
          scope.names.erase(s.name);
        }
        break;
      }
      case Stmt::Kind::kAssign:
        WalkPath(s.path, scope, v);
        WalkExpr(s.value, scope, v);
        break;
      case Stmt::Kind::kIf:
        WalkExpr(s.value, scope, v);
        WalkBlock(s.then_block, scope, v);
        WalkBlock(s.else_block, scope, v);
        break;
      case Stmt::Kind::kReturn:
        WalkExpr(s.value, scope, v);
        break;
      case Stmt::Kind::kCall: {
        auto receiver = WalkPath(s.path, scope, v);
        if (receiver && receiver->kind == TypeRef::Kind::kClass) v.Call(s, receiver->class_name);
        for (Expr& arg : s.args) WalkExpr(arg, scope, v);
        break;
      }
    }
  }
}

TypeScope SelfScope(const Model& model, const std::string& self_class,
                    const std::vector<Param>& params) {
  TypeScope scope{&model, {}};
  scope.names["self"] = TypeRef::Class(self_class);
  for (const Param& p : params) scope.names[p.name] = p.type;
  return scope;
}

std::map<std::string, std::string> FixtureClasses(const Model& model, const std::string& fixture) {
  std::map<std::string, std::string> classes;
  if (const ObjectConfiguration* config = model.FindConfig(fixture)) {
    for (const ObjectDecl& o : config->objects) classes[o.name] = o.class_name;
  }
  return classes;
}

TypeScope FixtureScope(const Model& model, const std::string& fixture) {
  TypeScope scope{&model, {}};
  for (const auto& [name, cls] : FixtureClasses(model, fixture)) {
    scope.names[name] = TypeRef::Class(cls);
  }
  return scope;
}

// A sequence is typed against the fixture of the first test driving it.
std::string FixtureOfSequence(const Model& model, const std::string& sequence) {
  for (const TestCase& t : model.tests) {
    if (t.driver == sequence) return t.fixture;
  }
  return "";
}

// Walks every expression and statement of `target`, a copy of `original`
// with the same shape, typing against `original`.
void WalkModel(const Model& original, Model& target, Visitor& v) {
  for (ClassDef& cls : target.classes) {
    for (MethodDef& m : cls.methods) {
      if (m.body) WalkBlock(*m.body, SelfScope(original, cls.name, m.params), v);
    }
  }
  for (Statechart& chart : target.statecharts) {
    for (TransitionDef& t : chart.transitions) {
      TypeScope scope = SelfScope(original, chart.owner, t.params);
      if (t.guard) WalkExpr(*t.guard, scope, v);
      if (t.actions) WalkBlock(*t.actions, scope, v);
      if (t.result) WalkExpr(*t.result, scope, v);
    }
  }
  for (NamedInvariant& inv : target.invariants) {
    WalkExpr(inv.expr, SelfScope(original, inv.context, {}), v);
  }
  for (SequenceDefinition& seq : target.sequences) {
    TypeScope scope = FixtureScope(original, FixtureOfSequence(original, seq.name));
    for (Step& step : seq.steps) {
      if (step.kind == Step::Kind::kAssert) WalkExpr(step.assertion, scope, v);
    }
  }
  for (TestCase& test : target.tests) {
    if (!test.oracle) continue;
    TypeScope scope = FixtureScope(original, test.fixture);
    for (Expr& e : test.oracle->assertions) WalkExpr(e, scope, v);
  }
}

// --- Shared helpers ----------------------------------------------------------

struct Attempt {
  std::vector<ContextViolation> violations;
  std::optional<Model> model;
  std::set<std::string> not_constrained;           // tests whose patterns now under-specify
  std::map<std::string, std::string> cloned_from;  // clone test -> original
};

void AddViolation(std::vector<ContextViolation>& out, std::string code, std::string subject,
                  std::string message) {
  ContextViolation v{std::move(code), std::move(subject), std::move(message)};
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
}

std::vector<std::string> Descendants(const Model& model, const std::string& cls) {
  std::vector<std::string> out;
  for (const ClassDef& c : model.classes) {
    if (c.name != cls && model.IsSubclassOf(c.name, cls)) out.push_back(c.name);
  }
  return out;
}

std::set<std::string> AcceptanceFixtures(const Model& model) {
  std::set<std::string> out;
  for (const TestCase& t : model.tests) {
    if (t.category == TestCategory::kAcceptance) out.insert(t.fixture);
  }
  return out;
}

bool IsGlassBox(const TestCase& t) { return t.category != TestCategory::kAcceptance; }

// Converts default/clone text for an attribute of type `type`.
std::optional<Literal> ConvertLiteral(const std::string& text, const TypeRef& type) {
  auto parsed = ParseLiteral(text);
  if (parsed.ok() && parsed->type() == type) return *parsed;
  if (type.kind == TypeRef::Kind::kString) return Literal::String(text);
  return std::nullopt;
}

void CheckNewName(const std::string& name, std::vector<ContextViolation>& out) {
  if (!IsIdentifier(name) || IsReservedWord(name)) {
    AddViolation(out, "E_BAD_NAME", name, Quote(name) + " is not a valid identifier");
  }
}

// Reports members named `name` in the ancestry and descendants of `cls`.
void CheckMemberClash(const Model& model, const std::string& cls, const std::string& name,
                      std::vector<ContextViolation>& out) {
  std::vector<std::string> related;
  for (const ClassDef* c : model.Ancestry(cls)) related.push_back(c->name);
  for (const std::string& d : Descendants(model, cls)) related.push_back(d);
  for (const std::string& r : related) {
    const ClassDef* c = model.FindClass(r);
    if (c->FindAttribute(name) || c->FindMethod(name)) {
      AddViolation(out, "E_NAME_CLASH", r, Quote(r) + " already has a member named " + Quote(name));
    }
  }
}

// Flags navigations and calls a body makes that `super` cannot resolve.
class SubclassUseCheck : public Visitor {
 public:
  SubclassUseCheck(const Model& model, std::string super, std::string method,
                   std::vector<ContextViolation>& out)
      : model_(model), super_(std::move(super)), method_(std::move(method)), out_(out) {}

  void Nav(Expr& nav, const std::string& base) override { Attribute(nav.text, base); }
  void PathStep(std::string& attribute, const std::string& base) override {
    Attribute(attribute, base);
  }
  void Call(Stmt& call, const std::string& receiver) override {
    if (call.name == method_ && model_.IsSubclassOf(super_, receiver)) return;
    if (FindMethodInHierarchy(model_, receiver, call.name) == nullptr) {
      AddViolation(out_, "E_SUBCLASS_METHOD_USE", receiver + "." + call.name,
                   "the body calls " + Quote(call.name) + ", which " + Quote(receiver) +
                       " does not provide");
    }
  }

 private:
  void Attribute(const std::string& attribute, const std::string& base) {
    if (FindAttributeInHierarchy(model_, base, attribute) == nullptr) {
      AddViolation(out_, "E_SUBCLASS_ATTR_USE", base + "." + attribute,
                   "the body reads " + Quote(attribute) + ", which " + Quote(base) +
                       " does not have");
    }
  }

  const Model& model_;
  std::string super_;
  std::string method_;
  std::vector<ContextViolation>& out_;
};

// --- pull_up_attribute -------------------------------------------------------

Attempt PullUpAttribute(const Model& model, const RefactoringRequest& request) {
  Attempt attempt;
  auto& out = attempt.violations;
  if (request.args.size() != 2) {
    AddViolation(out, "E_BAD_ARGS", request.rule, "expected Super,attr");
    return attempt;
  }
  const std::string& super = request.args[0];
  const std::string& attr = request.args[1];
  const ClassDef* super_def = model.FindClass(super);
  if (super_def == nullptr) {
    AddViolation(out, "E_UNKNOWN_CLASS", super, "no class " + Quote(super));
    return attempt;
  }
  std::vector<const ClassDef*> sources;
  for (const ClassDef* sub : model.DirectSubclasses(super)) {
    if (sub->FindAttribute(attr)) sources.push_back(sub);
  }
  if (sources.empty()) {
    AddViolation(out, "E_NO_SOURCE", super + "." + attr,
                 "no direct subclass of " + Quote(super) + " declares " + Quote(attr));
    return attempt;
  }
  std::string owner;
  if (FindAttributeInHierarchy(model, super, attr, &owner) || FindMethodInHierarchy(model, super, attr, &owner)) {
    AddViolation(out, "E_NAME_CLASH", owner, Quote(owner) + " already has a member named " + Quote(attr));
  }
  const TypeRef type = sources[0]->FindAttribute(attr)->type;
  for (const std::string& d : Descendants(model, super)) {
    const ClassDef* c = model.FindClass(d);
    const bool is_source = std::find(sources.begin(), sources.end(), c) != sources.end();
    if (const AttributeDef* a = c->FindAttribute(attr)) {
      if (!is_source || a->type != type) {
        AddViolation(out, "E_NAME_CLASH", d,
                     Quote(d) + " declares " + Quote(attr) + " as " + PrintType(a->type) +
                         (is_source ? ", other subclasses as " + PrintType(type) : " below the pulled-up one"));
      }
    } else if (c->FindMethod(attr)) {
      AddViolation(out, "E_NAME_CLASH", d, Quote(d) + " has a method named " + Quote(attr));
    }
  }
  std::optional<Literal> default_value;
  std::vector<Literal> clone_values;
  if (type.is_primitive()) {
    if (!request.default_value) {
      AddViolation(out, "E_MISSING_DEFAULT", super + "." + attr,
                   "a default value is required for " + PrintType(type) + " attributes");
    } else if (!(default_value = ConvertLiteral(*request.default_value, type))) {
      AddViolation(out, "E_DEFAULT_TYPE", super + "." + attr,
                   Quote(*request.default_value) + " is not a " + PrintType(type) + " value");
    }
    for (const std::string& text : request.clone_values) {
      auto lit = ConvertLiteral(text, type);
      if (!lit) {
        AddViolation(out, "E_DEFAULT_TYPE", super + "." + attr,
                     Quote(text) + " is not a " + PrintType(type) + " value");
      } else {
        clone_values.push_back(*lit);
      }
    }
  } else if (request.default_value || !request.clone_values.empty()) {
    AddViolation(out, "E_DEFAULT_TYPE", super + "." + attr,
                 "reference attributes take no default value");
  }
  bool published = false;
  for (const ClassDef* s : sources) published = published || s->FindAttribute(attr)->published;
  if (published && !super_def->published) {
    AddViolation(out, "E_PUBLISHED_IMPACT", super,
                 "published attribute " + Quote(attr) + " cannot move into unpublished " + Quote(super));
  }
  if (!out.empty()) return attempt;

  // Classes whose instances gain the attribute.
  std::set<std::string> affected;
  std::set<std::string> source_names;
  for (const ClassDef* s : sources) source_names.insert(s->name);
  for (const ClassDef& c : model.classes) {
    if (!model.IsSubclassOf(c.name, super)) continue;
    bool had = std::any_of(source_names.begin(), source_names.end(),
                           [&](const std::string& s) { return model.IsSubclassOf(c.name, s); });
    if (!had) affected.insert(c.name);
  }

  Model after = model;
  ClassDef* target = after.FindClass(super);
  AttributeDef pulled = *sources[0]->FindAttribute(attr);
  pulled.published = published;
  target->attributes.push_back(pulled);
  for (const std::string& s : source_names) {
    auto& attrs = after.FindClass(s)->attributes;
    attrs.erase(std::remove_if(attrs.begin(), attrs.end(),
                               [&](const AttributeDef& a) { return a.name == attr; }),
                attrs.end());
  }

  // Patch glass-box fixtures; remember the objects touched.
  const std::set<std::string> acceptance = AcceptanceFixtures(model);
  std::map<std::string, std::vector<std::size_t>> patched;  // config -> object indices
  if (default_value) {
    for (ObjectConfiguration& config : after.configs) {
      if (acceptance.count(config.name)) continue;
      for (std::size_t i = 0; i < config.objects.size(); ++i) {
        ObjectDecl& o = config.objects[i];
        if (!affected.count(o.class_name) || o.FindAssignment(attr)) continue;
        o.assignments.push_back({attr, ObjectValue::Lit(*default_value), o.loc});
        patched[config.name].push_back(i);
      }
    }
  }
  for (const TestCase& t : model.tests) {
    if (!IsGlassBox(t) || !t.oracle || !t.oracle->pattern) continue;
    const PatternConfiguration* p = model.FindPattern(*t.oracle->pattern);
    if (p == nullptr) continue;
    for (const ObjectDecl& o : p->objects) {
      bool touches = std::any_of(affected.begin(), affected.end(), [&](const std::string& a) {
        return model.IsSubclassOf(a, o.class_name);
      });
      if (touches) attempt.not_constrained.insert(t.name);
    }
  }

  // One cloned fixture and test per clone value.
  if (!clone_values.empty()) {
    auto suffix = [](std::size_t i) { return "_clone" + std::to_string(i + 1); };
    std::vector<ObjectConfiguration> configs;
    for (const ObjectConfiguration& config : after.configs) {
      configs.push_back(config);
      auto it = patched.find(config.name);
      if (it == patched.end()) continue;
      for (std::size_t i = 0; i < clone_values.size(); ++i) {
        ObjectConfiguration clone = config;
        clone.name += suffix(i);
        for (std::size_t index : it->second) {
          for (SlotAssignment& a : clone.objects[index].assignments) {
            if (a.attribute == attr) a.value = ObjectValue::Lit(clone_values[i]);
          }
        }
        if (model.FindConfig(clone.name) || model.FindPattern(clone.name)) {
          AddViolation(out, "E_NAME_CLASH", clone.name, "a configuration named " + Quote(clone.name) + " exists");
        }
        configs.push_back(std::move(clone));
      }
    }
    std::vector<TestCase> tests;
    for (const TestCase& t : after.tests) {
      tests.push_back(t);
      if (!IsGlassBox(t) || !patched.count(t.fixture)) continue;
      for (std::size_t i = 0; i < clone_values.size(); ++i) {
        TestCase clone = t;
        clone.name += suffix(i);
        clone.fixture += suffix(i);
        if (model.FindTest(clone.name)) {
          AddViolation(out, "E_NAME_CLASH", clone.name, "a test named " + Quote(clone.name) + " exists");
        }
        attempt.cloned_from[clone.name] = t.name;
        tests.push_back(std::move(clone));
      }
    }
    after.configs = std::move(configs);
    after.tests = std::move(tests);
    if (!out.empty()) return attempt;
  }
  attempt.model = std::move(after);
  return attempt;
}

// --- pull_up_method ----------------------------------------------------------

std::string Signature(const MethodDef& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.params.size(); ++i) {
    if (i > 0) s += ", ";
    s += PrintType(m.params[i].type);
  }
  s += ")";
  if (m.return_type) s += ": " + PrintType(*m.return_type);
  return s;
}

Attempt PullUpMethod(const Model& model, const RefactoringRequest& request) {
  Attempt attempt;
  auto& out = attempt.violations;
  const auto& args = request.args;
  const bool arity_ok = (args.size() == 3 && (args[2] == "abstract" || args[2] == "unify")) ||
                        (args.size() == 4 && args[2] == "override");
  if (!arity_ok) {
    AddViolation(out, "E_BAD_ARGS", request.rule,
                 "expected Super,method,override,Donor or Super,method,abstract|unify");
    return attempt;
  }
  const std::string& super = args[0];
  const std::string& method = args[1];
  const std::string& variant = args[2];
  const ClassDef* super_def = model.FindClass(super);
  if (super_def == nullptr) {
    AddViolation(out, "E_UNKNOWN_CLASS", super, "no class " + Quote(super));
    return attempt;
  }
  std::vector<const ClassDef*> sources;
  for (const ClassDef* sub : model.DirectSubclasses(super)) {
    if (sub->FindMethod(method)) sources.push_back(sub);
  }
  if (sources.size() < 2) {
    AddViolation(out, "E_NO_SOURCE", super + "." + method,
                 "fewer than two direct subclasses of " + Quote(super) + " declare " + Quote(method));
    return attempt;
  }
  std::string owner;
  if (FindMethodInHierarchy(model, super, method, &owner) ||
      FindAttributeInHierarchy(model, super, method, &owner)) {
    AddViolation(out, "E_NAME_CLASH", owner, Quote(owner) + " already has a member named " + Quote(method));
  }
  const MethodDef& first = *sources[0]->FindMethod(method);
  for (const std::string& d : Descendants(model, super)) {
    const ClassDef* c = model.FindClass(d);
    if (const MethodDef* m = c->FindMethod(method); m && Signature(*m) != Signature(first)) {
      AddViolation(out, "E_SIGNATURE_MISMATCH", d,
                   Quote(d + "." + method) + " has signature " + Signature(*m) + ", expected " +
                       Signature(first));
    }
    if (c->FindAttribute(method)) {
      AddViolation(out, "E_NAME_CLASH", d, Quote(d) + " has an attribute named " + Quote(method));
    }
  }
  if (!out.empty()) return attempt;

  bool published = false;
  for (const ClassDef* s : sources) published = published || s->FindMethod(method)->published;
  if (published && !super_def->published) {
    AddViolation(out, "E_PUBLISHED_IMPACT", super,
                 "published method " + Quote(method) + " cannot move into unpublished " + Quote(super));
  }

  MethodDef pulled = first;
  pulled.published = published;
  std::vector<std::string> removed_from;
  if (variant == "abstract") {
    pulled.body.reset();
    pulled.abstract = true;
    if (!super_def->abstract) {
      for (const ObjectConfiguration& config : model.configs) {
        for (const ObjectDecl& o : config.objects) {
          if (o.class_name == super) {
            AddViolation(out, "E_ABSTRACT_INSTANCES", config.name + "." + o.name,
                         Quote(super) + " would become abstract but is instantiated here");
          }
        }
      }
    }
    for (const ClassDef& c : model.classes) {
      if (c.abstract || !model.IsSubclassOf(c.name, super) || c.name == super) continue;
      const MethodDef* impl = FindMethodInHierarchy(model, c.name, method);
      if (impl == nullptr || impl->abstract) {
        AddViolation(out, "E_MISSING_IMPLEMENTATION", c.name,
                     Quote(c.name) + " would inherit " + Quote(method) + " without implementing it");
      }
    }
  } else {
    const MethodDef* body_source = nullptr;
    if (variant == "override") {
      const std::string& donor = args[3];
      for (const ClassDef* s : sources) {
        if (s->name == donor) body_source = s->FindMethod(method);
      }
      if (body_source == nullptr) {
        AddViolation(out, "E_BAD_ARGS", donor,
                     Quote(donor) + " is not a direct subclass of " + Quote(super) + " declaring " + Quote(method));
        return attempt;
      }
      removed_from.push_back(donor);
    } else {
      body_source = &first;
      // Publication is merged separately, so it does not count as a difference.
      auto unpublished = [](MethodDef m) {
        m.published = false;
        return PrintMethod(m, 0);
      };
      const std::string reference = unpublished(first);
      for (const ClassDef* s : sources) {
        if (unpublished(*s->FindMethod(method)) != reference) {
          AddViolation(out, "E_BODIES_DIFFER", s->name,
                       Quote(s->name + "." + method) + " differs from " + Quote(sources[0]->name + "." + method));
        }
        removed_from.push_back(s->name);
      }
    }
    if (!body_source->body) {
      AddViolation(out, "E_NO_BODY", variant == "override" ? args[3] : sources[0]->name,
                   Quote(method) + " has no body to pull up");
    } else {
      pulled = *body_source;
      pulled.published = published;
      Block body = *body_source->body;
      SubclassUseCheck check(model, super, method, out);
      WalkBlock(body, SelfScope(model, super, body_source->params), check);
    }
  }
  if (!out.empty()) return attempt;

  Model after = model;
  ClassDef* target = after.FindClass(super);
  if (variant == "abstract") target->abstract = true;
  target->methods.push_back(pulled);
  for (const std::string& s : removed_from) {
    auto& methods = after.FindClass(s)->methods;
    methods.erase(std::remove_if(methods.begin(), methods.end(),
                                 [&](const MethodDef& m) { return m.name == method; }),
                  methods.end());
  }
  attempt.model = std::move(after);
  return attempt;
}

// --- renames -----------------------------------------------------------------

void RenameTypeRef(TypeRef& type, const std::string& from, const std::string& to) {
  if ((type.kind == TypeRef::Kind::kClass || type.kind == TypeRef::Kind::kSet) && type.class_name == from) {
    type.class_name = to;
  }
}

Attempt RenameClass(const Model& model, const RefactoringRequest& request) {
  Attempt attempt;
  auto& out = attempt.violations;
  if (request.args.size() != 2) {
    AddViolation(out, "E_BAD_ARGS", request.rule, "expected Old,New");
    return attempt;
  }
  const std::string& from = request.args[0];
  const std::string& to = request.args[1];
  const ClassDef* cls = model.FindClass(from);
  if (cls == nullptr) {
    AddViolation(out, "E_UNKNOWN_CLASS", from, "no class " + Quote(from));
    return attempt;
  }
  if (from == to) AddViolation(out, "E_SAME_NAME", from, "old and new names are equal");
  CheckNewName(to, out);
  if (from != to && model.FindClass(to)) {
    AddViolation(out, "E_NAME_CLASH", to, "a class named " + Quote(to) + " exists");
  }
  if (cls->published && !request.allow_published) {
    AddViolation(out, "E_PUBLISHED_IMPACT", from, Quote(from) + " is published");
  }
  if (!out.empty()) return attempt;

  Model after = model;
  for (ClassDef& c : after.classes) {
    if (c.name == from) c.name = to;
    if (c.superclass == from) c.superclass = to;
    for (AttributeDef& a : c.attributes) RenameTypeRef(a.type, from, to);
    for (MethodDef& m : c.methods) {
      for (Param& p : m.params) RenameTypeRef(p.type, from, to);
      if (m.return_type) RenameTypeRef(*m.return_type, from, to);
    }
  }
  for (Statechart& chart : after.statecharts) {
    if (chart.owner == from) chart.owner = to;
    for (TransitionDef& t : chart.transitions) {
      for (Param& p : t.params) RenameTypeRef(p.type, from, to);
    }
  }
  for (auto* diagrams : {&after.configs, &after.patterns}) {
    for (ObjectDiagram& d : *diagrams) {
      for (ObjectDecl& o : d.objects) {
        if (o.class_name == from) o.class_name = to;
      }
    }
  }
  for (NamedInvariant& inv : after.invariants) {
    if (inv.context == from) inv.context = to;
  }
  attempt.model = std::move(after);
  return attempt;
}

class RenameAttributeVisitor : public Visitor {
 public:
  RenameAttributeVisitor(const Model& model, std::string owner, std::string from, std::string to)
      : model_(model), owner_(std::move(owner)), from_(std::move(from)), to_(std::move(to)) {}

  void Nav(Expr& nav, const std::string& base) override { Rename(nav.text, base); }
  void PathStep(std::string& attribute, const std::string& base) override { Rename(attribute, base); }

 private:
  void Rename(std::string& name, const std::string& base) {
    if (name == from_ && model_.IsSubclassOf(base, owner_)) name = to_;
  }

  const Model& model_;
  std::string owner_, from_, to_;
};

class RenameMethodVisitor : public Visitor {
 public:
  RenameMethodVisitor(const Model& model, std::string owner, std::string from, std::string to)
      : model_(model), owner_(std::move(owner)), from_(std::move(from)), to_(std::move(to)) {}

  void Call(Stmt& call, const std::string& receiver) override {
    if (call.name == from_ && model_.IsSubclassOf(receiver, owner_)) call.name = to_;
  }

 private:
  const Model& model_;
  std::string owner_, from_, to_;
};

Attempt RenameMember(const Model& model, const RefactoringRequest& request, bool attribute) {
  Attempt attempt;
  auto& out = attempt.violations;
  if (request.args.size() != 3) {
    AddViolation(out, "E_BAD_ARGS", request.rule, "expected Owner,old,new");
    return attempt;
  }
  const std::string& owner = request.args[0];
  const std::string& from = request.args[1];
  const std::string& to = request.args[2];
  const ClassDef* cls = model.FindClass(owner);
  if (cls == nullptr) {
    AddViolation(out, "E_UNKNOWN_CLASS", owner, "no class " + Quote(owner));
    return attempt;
  }
  const bool declared = attribute ? cls->FindAttribute(from) != nullptr : cls->FindMethod(from) != nullptr;
  if (!declared) {
    AddViolation(out, "E_UNKNOWN_MEMBER", owner + "." + from,
                 Quote(owner) + " declares no " + (attribute ? "attribute " : "method ") + Quote(from));
    return attempt;
  }
  if (from == to) AddViolation(out, "E_SAME_NAME", owner + "." + from, "old and new names are equal");
  CheckNewName(to, out);
  if (from != to) CheckMemberClash(model, owner, to, out);
  bool published = false;
  if (attribute) {
    published = cls->FindAttribute(from)->published;
  } else {
    for (const ClassDef* a : model.Ancestry(owner)) {
      if (a->name != owner && a->FindMethod(from)) {
        AddViolation(out, "E_OVERRIDE_CHAIN", a->name,
                     Quote(owner + "." + from) + " overrides " + Quote(a->name + "." + from));
      }
    }
    published = cls->FindMethod(from)->published;
    for (const std::string& d : Descendants(model, owner)) {
      const MethodDef* m = model.FindClass(d)->FindMethod(from);
      published = published || (m && m->published);
    }
  }
  if (published && !request.allow_published) {
    AddViolation(out, "E_PUBLISHED_IMPACT", owner + "." + from, Quote(owner + "." + from) + " is published");
  }
  if (!out.empty()) return attempt;

  Model after = model;
  if (attribute) {
    for (AttributeDef& a : after.FindClass(owner)->attributes) {
      if (a.name == from) a.name = to;
    }
    RenameAttributeVisitor visitor(model, owner, from, to);
    WalkModel(model, after, visitor);
    for (auto* diagrams : {&after.configs, &after.patterns}) {
      for (ObjectDiagram& d : *diagrams) {
        for (ObjectDecl& o : d.objects) {
          if (!model.IsSubclassOf(o.class_name, owner)) continue;
          for (SlotAssignment& s : o.assignments) {
            if (s.attribute == from) s.attribute = to;
          }
        }
      }
    }
  } else {
    for (ClassDef& c : after.classes) {
      if (!model.IsSubclassOf(c.name, owner)) continue;
      for (MethodDef& m : c.methods) {
        if (m.name == from) m.name = to;
      }
    }
    RenameMethodVisitor visitor(model, owner, from, to);
    WalkModel(model, after, visitor);
    for (Statechart& chart : after.statecharts) {
      if (!model.IsSubclassOf(chart.owner, owner)) continue;
      for (TransitionDef& t : chart.transitions) {
        if (t.trigger == from) t.trigger = to;
      }
    }
    for (SequenceDefinition& seq : after.sequences) {
      auto classes = FixtureClasses(model, FixtureOfSequence(model, seq.name));
      for (Step& step : seq.steps) {
        if (step.kind == Step::Kind::kAssert || step.method != from) continue;
        auto it = classes.find(step.target);
        if (it != classes.end() && model.IsSubclassOf(it->second, owner)) step.method = to;
      }
    }
  }
  attempt.model = std::move(after);
  return attempt;
}

Attempt Dispatch(const Model& model, const RefactoringRequest& request) {
  if (request.rule == "pull_up_attribute") return PullUpAttribute(model, request);
  if (request.rule == "pull_up_method") return PullUpMethod(model, request);
  if (request.rule == "rename_class") return RenameClass(model, request);
  if (request.rule == "rename_attribute") return RenameMember(model, request, true);
  if (request.rule == "rename_method") return RenameMember(model, request, false);
  Attempt attempt;
  AddViolation(attempt.violations, "E_UNKNOWN_RULE", request.rule, "no rule " + Quote(request.rule));
  return attempt;
}

// Runs the rule, then rejects results that are ill-formed or that change an
// acceptance test without permission.
Attempt Run(const Model& model, const RefactoringRequest& request) {
  DiagnosticList input = CheckWellformed(model);
  if (!input.empty()) {
    Attempt attempt;
    AddViolation(attempt.violations, "E_ILLFORMED_MODEL", input[0].code, FormatDiagnostic(input[0]));
    return attempt;
  }
  Attempt attempt = Dispatch(model, request);
  if (!attempt.violations.empty()) {
    attempt.model.reset();
    return attempt;
  }
  DiagnosticList result = CheckWellformed(*attempt.model);
  if (!result.empty()) {
    AddViolation(attempt.violations, "E_RESULT_ILLFORMED", result[0].code, FormatDiagnostic(result[0]));
  }
  if (!request.allow_published) {
    auto before = AcceptanceSnapshot(model);
    auto after = AcceptanceSnapshot(*attempt.model);
    for (const auto& [name, text] : before) {
      auto it = after.find(name);
      if (it == after.end() || it->second != text) {
        AddViolation(attempt.violations, "E_PUBLISHED_IMPACT", name,
                     "acceptance test " + Quote(name) + " would change");
      }
    }
  }
  if (!attempt.violations.empty()) attempt.model.reset();
  return attempt;
}

}  // namespace

std::vector<ContextViolation> CheckContext(const Model& model, const RefactoringRequest& request) {
  return Run(model, request).violations;
}

RefactoringReport ApplyRefactoring(const Model& model, const RefactoringRequest& request) {
  Attempt attempt = Run(model, request);
  RefactoringReport report;
  report.rule = request.rule;
  report.violations = attempt.violations;
  if (!attempt.model) return report;
  report.applied = true;
  const Model& after = *attempt.model;
  for (const TestCase& t : after.tests) {
    if (auto it = attempt.cloned_from.find(t.name); it != attempt.cloned_from.end()) {
      report.test_changes.push_back({t.name, "cloned-from " + it->second});
      continue;
    }
    const TestCase* old = model.FindTest(t.name);
    if (old && PrintTestBundle(model, *old) != PrintTestBundle(after, t)) {
      report.test_changes.push_back({t.name, "patched"});
    }
    if (attempt.not_constrained.count(t.name)) {
      report.test_changes.push_back({t.name, "patched-not-constrained"});
    }
  }
  auto before_obsolete = ReportObsolete(model);
  std::set<std::string> reported;
  for (const ObsoleteWarning& w : ReportObsolete(after)) {
    bool known = std::find(before_obsolete.begin(), before_obsolete.end(), w) != before_obsolete.end();
    if (!known && reported.insert(w.test).second) {
      report.test_changes.push_back({w.test, "obsoleted-warning"});
    }
  }
  report.model_after = std::move(attempt.model);
  return report;
}

PreservationResult VerifyPreservation(const Model& before, const Model& after, ExecBudget budget) {
  PreservationResult result;
  SuiteFilter filter;
  filter.categories = {TestCategory::kAcceptance};
  result.before = RunSuite(before, filter, budget);
  result.after = RunSuite(after, filter, budget);
  const auto& a = result.before.outcomes;
  const auto& b = result.after.outcomes;
  result.preserved = a.size() == b.size();
  for (std::size_t i = 0; result.preserved && i < a.size(); ++i) {
    result.preserved = a[i].name == b[i].name && a[i].verdict.kind == b[i].verdict.kind;
  }
  if (a.empty()) {
    result.warnings.push_back({"W_NO_OBSERVERS", Severity::kWarning, {},
                               "no acceptance tests; preservation is vacuous"});
  }
  if (AcceptanceSnapshot(before) != AcceptanceSnapshot(after)) {
    result.warnings.push_back({"W_ACCEPTANCE_CHANGED", Severity::kWarning, {},
                               "acceptance tests differ between the two models"});
  }
  return result;
}

namespace {

std::vector<std::string> SplitGenerated(const std::string& name) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = name.find("__", start);
    parts.push_back(name.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 2;
  }
  return parts;
}

// Reason a generated test's goal is gone, or "".
std::string GeneratedGoalGone(const Model& model, const std::string& name) {
  std::vector<std::string> p = SplitGenerated(name);
  if (p.size() < 3 || p[0] != "gen") return "";
  const Statechart* chart = model.FindStatechart(p[1]);
  if (chart == nullptr) return "statechart " + Quote(p[1]) + " no longer exists";
  if (p[2] == "state" && p.size() == 4 && !chart->HasState(p[3])) {
    return "state " + Quote(p[3]) + " no longer exists in " + Quote(p[1]);
  }
  if (p[2] == "trans" && (p.size() == 6 || p.size() == 7)) {
    std::size_t wanted = p.size() == 7 ? std::strtoul(p[6].c_str(), nullptr, 10) : 1;
    std::size_t found = 0;
    for (const TransitionDef& t : chart->transitions) {
      if (t.source == p[3] && t.target == p[4] && t.trigger == p[5]) ++found;
    }
    if (found < wanted) {
      return "transition " + p[3] + " -> " + p[4] + " on " + p[5] + " no longer exists in " + Quote(p[1]);
    }
  }
  return "";
}

}  // namespace

std::vector<ObsoleteWarning> ReportObsolete(const Model& model) {
  std::vector<ObsoleteWarning> out;
  for (const TestCase& test : model.tests) {
    auto warn = [&](std::string reason) { out.push_back({test.name, std::move(reason)}); };
    const ObjectConfiguration* fixture = model.FindConfig(test.fixture);
    std::map<std::string, std::string> classes;
    if (fixture == nullptr) {
      warn("fixture " + Quote(test.fixture) + " no longer exists");
    } else {
      for (const ObjectDecl& o : fixture->objects) {
        classes[o.name] = o.class_name;
        if (model.FindClass(o.class_name) == nullptr) {
          warn("fixture " + Quote(test.fixture) + " instantiates missing class " + Quote(o.class_name));
          continue;
        }
        for (const SlotAssignment& s : o.assignments) {
          if (FindAttributeInHierarchy(model, o.class_name, s.attribute) == nullptr) {
            warn("fixture " + Quote(test.fixture) + " sets missing attribute " +
                 Quote(o.class_name + "." + s.attribute));
          }
        }
      }
    }
    const SequenceDefinition* driver = model.FindSequence(test.driver);
    if (driver == nullptr) {
      warn("driver " + Quote(test.driver) + " no longer exists");
    } else {
      for (const Step& step : driver->steps) {
        if (step.kind == Step::Kind::kAssert) continue;
        auto it = classes.find(step.target);
        if (it == classes.end()) {
          if (fixture) warn("driver " + Quote(test.driver) + " addresses missing object " + Quote(step.target));
          continue;
        }
        if (model.FindClass(it->second) && FindMethodInHierarchy(model, it->second, step.method) == nullptr) {
          warn("driver " + Quote(test.driver) + " calls missing method " + Quote(it->second + "." + step.method));
        }
      }
    }
    if (test.oracle && test.oracle->pattern) {
      const PatternConfiguration* pattern = model.FindPattern(*test.oracle->pattern);
      if (pattern == nullptr) {
        warn("pattern " + Quote(*test.oracle->pattern) + " no longer exists");
      } else {
        for (const ObjectDecl& o : pattern->objects) {
          if (model.FindClass(o.class_name) == nullptr) {
            warn("pattern " + Quote(pattern->name) + " uses missing class " + Quote(o.class_name));
          }
        }
      }
    }
    if (std::string gone = GeneratedGoalGone(model, test.name); !gone.empty()) warn(gone);
  }
  return out;
}

std::map<std::string, std::string> AcceptanceSnapshot(const Model& model) {
  std::map<std::string, std::string> out;
  for (const TestCase& t : model.tests) {
    if (t.category == TestCategory::kAcceptance) out[t.name] = PrintTestBundle(model, t);
  }
  return out;
}

std::string RefactoringReport::RenderLines() const {
  std::ostringstream out;
  out << "RULE " << rule << (applied ? " applied" : " rejected") << "\n";
  for (const ContextViolation& v : violations) out << "VIOLATION " << v.code << " " << v.subject << "\n";
  for (const TestChange& c : test_changes) out << "TESTCHANGE " << c.test << " " << c.kind << "\n";
  if (preservation) out << "PRESERVED " << (preservation->preserved ? "true" : "false") << "\n";
  return out.str();
}

std::string RefactoringReport::RenderText() const {
  std::ostringstream out;
  out << rule << ": " << (applied ? "applied" : "rejected") << "\n";
  for (const ContextViolation& v : violations) {
    out << "  " << v.code << " at " << v.subject << ": " << v.message << "\n";
  }
  for (const TestChange& c : test_changes) out << "  test " << c.test << ": " << c.kind << "\n";
  if (preservation) {
    out << "acceptance tests before:\n" << preservation->before.RenderLines();
    out << "acceptance tests after:\n" << preservation->after.RenderLines();
    for (const Diagnostic& w : preservation->warnings) out << "warning " << w.code << ": " << w.message << "\n";
    out << "behavior " << (preservation->preserved ? "preserved" : "NOT preserved") << "\n";
  }
  return out.str();
}

}  // namespace amw

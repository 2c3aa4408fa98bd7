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

#include "amw/codegen.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <variant>

#include "amw/text_format.h"

namespace amw {

namespace {

// --- Template syntax tree ----------------------------------------------------

struct Node {
  enum class Kind { kText, kSubst, kForeach, kIf, kFile };

  static Node Text(std::string text) {
    Node n;
    n.text = std::move(text);
    return n;
  }

  Kind kind = Kind::kText;
  std::string text;                  // kText literal, kSubst path, kForeach kind, kIf path
  std::vector<std::string> filters;  // kSubst
  std::string var;                   // kForeach
  bool negate = false;               // kIf
  std::vector<Node> body;            // kForeach, kIf (then), kFile (path template)
  std::vector<Node> else_body;       // kIf
  bool has_else = false;
  SourceLoc loc;
};

const std::set<std::string>& Kinds() {
  static const std::set<std::string> kinds = {"class", "attribute", "method", "param",
                                              "state", "transition", "test", "step",
                                              "assertion", "invariant"};
  return kinds;
}

const std::set<std::string>& Filters() {
  static const std::set<std::string> filters = {"upper", "lower", "md"};
  return filters;
}

std::string Trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> Words(const std::string& s) {
  std::vector<std::string> out;
  std::string word;
  for (char c : s + " ") {
    if (c == ' ' || c == '\t') {
      if (!word.empty()) out.push_back(std::move(word));
      word.clear();
    } else {
      word += c;
    }
  }
  return out;
}

class TemplateParser {
 public:
  TemplateParser(const std::string& name, const std::string& text) : name_(name), text_(text) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text_.size(); ++i) {
      if (text_[i] == '\n') line_starts_.push_back(i + 1);
    }
  }

  std::vector<Node> Parse() {
    struct Open {
      Node node;
      bool in_else = false;
    };
    std::vector<Open> stack;
    std::vector<Node> root;
    auto sink = [&]() -> std::vector<Node>& {
      if (stack.empty()) return root;
      Open& top = stack.back();
      return top.in_else ? top.node.else_body : top.node.body;
    };
    std::string buffer;
    auto flush = [&] {
      if (buffer.empty()) return;
      Node n;
      n.kind = Node::Kind::kText;
      n.text = std::move(buffer);
      sink().push_back(std::move(n));
      buffer.clear();
    };

    std::size_t i = 0;
    while (i < text_.size()) {
      const char c = text_[i];
      if (c == '$' && i + 1 < text_.size() && text_[i + 1] == '$') {
        buffer += '$';
        i += 2;
        continue;
      }
      if (c == '$' && i + 1 < text_.size() && text_[i + 1] == '{') {
        flush();
        std::size_t close = text_.find('}', i + 2);
        if (close == std::string::npos) Fail(i, "unterminated ${");
        sink().push_back(Substitution(text_.substr(i + 2, close - i - 2), i));
        i = close + 1;
        continue;
      }
      std::string keyword = c == '@' ? KeywordAt(i + 1) : "";
      if (keyword.empty()) {
        buffer += c;
        ++i;
        continue;
      }
      std::size_t close = text_.find('@', i + 1 + keyword.size());
      std::size_t eol = text_.find('\n', i);
      if (close == std::string::npos || (eol != std::string::npos && close > eol)) {
        Fail(i, "unterminated @" + keyword + " directive");
      }
      const std::string arg = Trim(text_.substr(i + 1 + keyword.size(), close - i - 1 - keyword.size()));
      // A directive alone on its line takes the line with it.
      std::size_t line_start = line_starts_[LineIndex(i)];
      std::size_t after = close + 1;
      std::size_t k = after;
      while (k < text_.size() && (text_[k] == ' ' || text_[k] == '\t' || text_[k] == '\r')) ++k;
      bool prefix_blank = text_.find_first_not_of(" \t", line_start) >= i;
      if (prefix_blank && (k == text_.size() || text_[k] == '\n')) {
        buffer.resize(buffer.size() - (i - line_start));
        after = k == text_.size() ? k : k + 1;
      }
      flush();
      const std::size_t at = i;
      i = after;

      if (keyword == "foreach") {
        auto words = Words(arg);
        if (words.size() != 2) Fail(at, "expected @foreach KIND var@");
        if (!Kinds().count(words[0])) Fail(at, "unknown element kind '" + words[0] + "'");
        Node n;
        n.kind = Node::Kind::kForeach;
        n.text = words[0];
        n.var = words[1];
        n.loc = Loc(at);
        stack.push_back({std::move(n)});
      } else if (keyword == "if") {
        auto words = Words(arg);
        Node n;
        n.kind = Node::Kind::kIf;
        n.loc = Loc(at);
        if (words.size() == 2 && words[0] == "not") {
          n.negate = true;
          words.erase(words.begin());
        }
        if (words.size() != 1) Fail(at, "expected @if [not] path@");
        n.text = words[0];
        stack.push_back({std::move(n)});
      } else if (keyword == "else") {
        if (!arg.empty()) Fail(at, "@else takes no argument");
        if (stack.empty() || stack.back().node.kind != Node::Kind::kIf || stack.back().in_else) {
          Fail(at, "@else without @if");
        }
        stack.back().in_else = true;
        stack.back().node.has_else = true;
      } else if (keyword == "end") {
        if (!arg.empty()) Fail(at, "@end takes no argument");
        if (stack.empty()) Fail(at, "@end without an open block");
        Node done = std::move(stack.back().node);
        stack.pop_back();
        sink().push_back(std::move(done));
      } else {  // file
        if (arg.empty()) Fail(at, "@file needs a path");
        Node n;
        n.kind = Node::Kind::kFile;
        n.loc = Loc(at);
        n.body = PathTemplate(arg, at);
        sink().push_back(std::move(n));
      }
    }
    flush();
    if (!stack.empty()) {
      const Node& open = stack.back().node;
      throw Error("E_TEMPLATE",
                  std::string(open.kind == Node::Kind::kIf ? "@if" : "@foreach") + " is never closed",
                  open.loc);
    }
    return root;
  }

 private:
  std::string KeywordAt(std::size_t pos) const {
    for (const char* kw : {"foreach", "if", "else", "end", "file"}) {
      std::string k(kw);
      if (text_.compare(pos, k.size(), k) == 0 && pos + k.size() < text_.size()) {
        char next = text_[pos + k.size()];
        if (next == ' ' || next == '@') return k;
      }
    }
    return "";
  }

  Node Substitution(const std::string& inner, std::size_t at) const {
    Node n;
    n.kind = Node::Kind::kSubst;
    n.loc = Loc(at);
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      std::size_t bar = inner.find('|', start);
      parts.push_back(Trim(inner.substr(start, bar - start)));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    n.text = parts[0];
    if (n.text.empty()) Fail(at, "empty ${}");
    for (std::size_t p = 1; p < parts.size(); ++p) {
      if (!Filters().count(parts[p])) Fail(at, "unknown filter '" + parts[p] + "'");
      n.filters.push_back(parts[p]);
    }
    return n;
  }

  std::vector<Node> PathTemplate(const std::string& arg, std::size_t at) const {
    std::vector<Node> out;
    std::string literal;
    std::size_t i = 0;
    while (i < arg.size()) {
      if (arg.compare(i, 2, "${") == 0) {
        std::size_t close = arg.find('}', i + 2);
        if (close == std::string::npos) Fail(at, "unterminated ${ in @file path");
        if (!literal.empty()) out.push_back(Node::Text(literal));
        literal.clear();
        out.push_back(Substitution(arg.substr(i + 2, close - i - 2), at));
        i = close + 1;
      } else {
        literal += arg[i++];
      }
    }
    if (!literal.empty()) out.push_back(Node::Text(literal));
    return out;
  }

  std::size_t LineIndex(std::size_t offset) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    return static_cast<std::size_t>(it - line_starts_.begin()) - 1;
  }

  SourceLoc Loc(std::size_t offset) const {
    std::size_t line = LineIndex(offset);
    return SourceLoc{name_, static_cast<int>(line + 1), static_cast<int>(offset - line_starts_[line] + 1)};
  }

  [[noreturn]] void Fail(std::size_t offset, const std::string& message) const {
    throw Error("E_TEMPLATE", message, Loc(offset));
  }

  std::string name_;
  const std::string& text_;
  std::vector<std::size_t> line_starts_;
};

// --- Model view ----------------------------------------------------------------

using Field = std::variant<std::string, bool, std::int64_t>;

struct Element {
  std::string kind;
  std::map<std::string, Field> fields;
  const ClassDef* cls = nullptr;
  const MethodDef* method = nullptr;
  const TransitionDef* transition = nullptr;
  const TestCase* test = nullptr;
};

std::string StepText(const Step& step) {
  SequenceDefinition one;
  one.steps = {step};
  std::string printed = PrintSequence(one);
  std::size_t begin = printed.find('\n') + 1;
  std::size_t end = printed.rfind(";\n}");
  return Trim(printed.substr(begin, end - begin));
}

class Renderer {
 public:
  Renderer(const Model& model, const std::string& name) : model_(model), default_path_(name + ".out") {
    current_ = default_path_;
  }

  GenOutput Run(const std::vector<Node>& nodes) {
    Element m;
    m.kind = "model";
    m.fields["name"] = model_.name;
    scope_.push_back({"model", m, std::nullopt});
    Emit(nodes);
    GenOutput out;
    for (const std::string& path : order_) {
      if (!files_[path].empty()) out.push_back({path, files_[path]});
    }
    return out;
  }

 private:
  struct Binding {
    std::string name;
    std::optional<Element> element;
    std::optional<Field> value;
  };

  void Emit(const std::vector<Node>& nodes) {
    for (const Node& n : nodes) {
      switch (n.kind) {
        case Node::Kind::kText:
          Write(n.text);
          break;
        case Node::Kind::kSubst:
          Write(Substitute(n));
          break;
        case Node::Kind::kIf: {
          bool truth = Truthy(Lookup(n.text, n.loc)) != n.negate;
          Emit(truth ? n.body : n.else_body);
          break;
        }
        case Node::Kind::kForeach: {
          std::vector<Element> items = Collect(n.text, n.loc);
          for (std::size_t i = 0; i < items.size(); ++i) {
            scope_.push_back({n.var, items[i], std::nullopt});
            scope_.push_back({n.var + "_index", std::nullopt, Field(static_cast<std::int64_t>(i + 1))});
            scope_.push_back({n.var + "_first", std::nullopt, Field(i == 0)});
            scope_.push_back({n.var + "_last", std::nullopt, Field(i + 1 == items.size())});
            Emit(n.body);
            scope_.resize(scope_.size() - 4);
          }
          break;
        }
        case Node::Kind::kFile: {
          std::string path;
          for (const Node& part : n.body) path += part.kind == Node::Kind::kText ? part.text : Substitute(part);
          CheckPath(path, n.loc);
          current_ = path;
          break;
        }
      }
    }
  }

  void Write(const std::string& text) {
    if (text.empty()) return;
    if (!files_.count(current_)) order_.push_back(current_);
    files_[current_] += text;
  }

  static void CheckPath(const std::string& path, const SourceLoc& loc) {
    bool bad = path.empty() || path[0] == '/' || path.back() == '/';
    std::size_t start = 0;
    while (!bad) {
      std::size_t slash = path.find('/', start);
      std::string part = path.substr(start, slash - start);
      bad = part.empty() || part == "." || part == ".." || part.find('\\') != std::string::npos;
      if (slash == std::string::npos) break;
      start = slash + 1;
    }
    if (bad) throw Error("E_TEMPLATE", "output path '" + path + "' is not a relative path inside the output root", loc);
  }

  static std::string ToText(const Field& f) {
    if (const auto* s = std::get_if<std::string>(&f)) return *s;
    if (const auto* b = std::get_if<bool>(&f)) return *b ? "true" : "false";
    return std::to_string(std::get<std::int64_t>(f));
  }

  static bool Truthy(const Field& f) {
    if (const auto* s = std::get_if<std::string>(&f)) return !s->empty();
    if (const auto* b = std::get_if<bool>(&f)) return *b;
    return std::get<std::int64_t>(f) != 0;
  }

  std::string Substitute(const Node& n) const {
    std::string s = ToText(Lookup(n.text, n.loc));
    for (const std::string& filter : n.filters) {
      if (filter == "upper") {
        for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      } else if (filter == "lower") {
        for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      } else {  // md
        std::string escaped;
        for (char c : s) {
          if (c == '|') escaped += '\\';
          escaped += c;
        }
        s = std::move(escaped);
      }
    }
    return s;
  }

  const Binding* Find(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->name == name) return &*it;
    }
    return nullptr;
  }

  Field Lookup(const std::string& path, const SourceLoc& loc) const {
    std::size_t dot = path.find('.');
    std::string var = path.substr(0, dot);
    const Binding* b = Find(var);
    if (b == nullptr) throw Error("E_TEMPLATE", "unknown variable '" + var + "'", loc);
    if (dot == std::string::npos) {
      if (!b->value) throw Error("E_TEMPLATE", "'" + var + "' is a " + b->element->kind + ", name one of its fields", loc);
      return *b->value;
    }
    std::string field = path.substr(dot + 1);
    if (!b->element) throw Error("E_TEMPLATE", "'" + var + "' has no fields", loc);
    auto it = b->element->fields.find(field);
    if (it == b->element->fields.end()) {
      throw Error("E_TEMPLATE", "unknown field '" + field + "' of " + b->element->kind + " '" + var + "'", loc);
    }
    return it->second;
  }

  // Innermost bound element satisfying `pred`.
  template <typename Pred>
  const Element* Innermost(Pred pred) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->element && pred(*it->element)) return &*it->element;
    }
    return nullptr;
  }

  std::vector<Element> Collect(const std::string& kind, const SourceLoc& loc) const {
    std::vector<Element> out;
    auto require = [&](const Element* e, const char* what) {
      if (e == nullptr) throw Error("E_TEMPLATE", "@foreach " + kind + " must be inside a " + what + " loop", loc);
      return e;
    };
    if (kind == "class") {
      for (const ClassDef& c : model_.classes) out.push_back(ClassElement(c));
    } else if (kind == "attribute") {
      const Element* c = require(Innermost([](const Element& e) { return e.kind == "class"; }), "class");
      for (const AttributeDef& a : c->cls->attributes) out.push_back(AttributeElement(*c->cls, a));
    } else if (kind == "method") {
      const Element* c = require(Innermost([](const Element& e) { return e.kind == "class"; }), "class");
      for (const MethodDef& m : c->cls->methods) out.push_back(MethodElement(*c->cls, m));
    } else if (kind == "param") {
      const Element* owner = require(Innermost([](const Element& e) {
        return e.kind == "method" || e.kind == "transition";
      }), "method or transition");
      const auto& params = owner->method ? owner->method->params : owner->transition->params;
      for (const Param& p : params) {
        Element e;
        e.kind = "param";
        e.fields = {{"name", p.name}, {"type", PrintType(p.type)}};
        out.push_back(std::move(e));
      }
    } else if (kind == "state" || kind == "transition") {
      const Element* c = Innermost([](const Element& e) { return e.kind == "class"; });
      for (const Statechart& chart : model_.statecharts) {
        if (c != nullptr && chart.owner != c->cls->name) continue;
        if (kind == "state") {
          for (const std::string& s : chart.states) {
            Element e;
            e.kind = "state";
            e.fields = {{"name", s}, {"initial", s == chart.initial}, {"chart", chart.owner}};
            out.push_back(std::move(e));
          }
        } else {
          for (const TransitionDef& t : chart.transitions) out.push_back(TransitionElement(chart, t));
        }
      }
    } else if (kind == "test") {
      for (const TestCase& t : model_.tests) out.push_back(TestElement(t));
    } else if (kind == "step" || kind == "assertion") {
      const Element* t = require(Innermost([](const Element& e) { return e.kind == "test"; }), "test");
      if (kind == "step") {
        if (const SequenceDefinition* seq = model_.FindSequence(t->test->driver)) {
          for (const Step& s : seq->steps) out.push_back(StepElement(s));
        }
      } else if (t->test->oracle) {
        for (const Expr& a : t->test->oracle->assertions) {
          Element e;
          e.kind = "assertion";
          e.fields = {{"text", PrintExpr(a)}};
          out.push_back(std::move(e));
        }
      }
    } else {  // invariant
      const Element* c = Innermost([](const Element& e) { return e.kind == "class"; });
      for (const NamedInvariant& inv : model_.invariants) {
        if (c != nullptr && inv.context != c->cls->name) continue;
        Element e;
        e.kind = "invariant";
        e.fields = {{"name", inv.name}, {"context", inv.context}, {"expr", PrintExpr(inv.expr)}};
        out.push_back(std::move(e));
      }
    }
    return out;
  }

  Element ClassElement(const ClassDef& c) const {
    Element e;
    e.kind = "class";
    e.cls = &c;
    std::string subclasses;
    for (const ClassDef* sub : model_.DirectSubclasses(c.name)) {
      subclasses += (subclasses.empty() ? "" : ", ") + sub->name;
    }
    const Statechart* chart = model_.FindStatechart(c.name);
    e.fields = {{"name", c.name},
                {"superclass", c.superclass.value_or("")},
                {"has_superclass", c.superclass.has_value()},
                {"abstract", c.abstract},
                {"published", c.published},
                {"subclasses", subclasses},
                {"has_statechart", chart != nullptr},
                {"initial", chart ? chart->initial : ""}};
    return e;
  }

  Element AttributeElement(const ClassDef& owner, const AttributeDef& a) const {
    Element e;
    e.kind = "attribute";
    e.fields = {{"name", a.name}, {"type", PrintType(a.type)}, {"published", a.published}, {"owner", owner.name}};
    return e;
  }

  Element MethodElement(const ClassDef& owner, const MethodDef& m) const {
    Element e;
    e.kind = "method";
    e.method = &m;
    std::string ret = m.return_type ? PrintType(*m.return_type) : "";
    bool trigger = false;
    if (const Statechart* chart = model_.StatechartFor(owner.name)) {
      for (const TransitionDef& t : chart->transitions) trigger = trigger || t.trigger == m.name;
    }
    e.fields = {{"name", m.name},
                {"params", PrintParams(m.params)},
                {"return_type", ret},
                {"has_return", m.return_type.has_value()},
                {"signature", m.name + "(" + PrintParams(m.params) + ")" + (ret.empty() ? "" : ": " + ret)},
                {"has_body", m.body.has_value()},
                {"abstract", m.abstract},
                {"published", m.published},
                {"is_trigger", trigger},
                {"owner", owner.name}};
    return e;
  }

  static Element TransitionElement(const Statechart& chart, const TransitionDef& t) {
    Element e;
    e.kind = "transition";
    e.transition = &t;
    e.fields = {{"source", t.source},
                {"target", t.target},
                {"trigger", t.trigger},
                {"params", PrintParams(t.params)},
                {"guard", t.guard ? PrintExpr(*t.guard) : ""},
                {"has_guard", t.guard.has_value()},
                {"has_actions", t.actions.has_value()},
                {"result", t.result ? PrintExpr(*t.result) : ""},
                {"has_result", t.result.has_value()},
                {"chart", chart.owner}};
    return e;
  }

  static Element TestElement(const TestCase& t) {
    Element e;
    e.kind = "test";
    e.test = &t;
    std::string pattern = t.oracle && t.oracle->pattern ? *t.oracle->pattern : "";
    e.fields = {{"name", t.name},
                {"category", std::string(CategoryName(t.category))},
                {"fixture", t.fixture},
                {"driver", t.driver},
                {"pattern", pattern},
                {"has_pattern", !pattern.empty()}};
    return e;
  }

  static Element StepElement(const Step& s) {
    Element e;
    e.kind = "step";
    static const char* kinds[] = {"call", "expect", "assert"};
    e.fields = {{"kind", std::string(kinds[static_cast<int>(s.kind)])},
                {"text", StepText(s)},
                {"target", s.target},
                {"method", s.method},
                {"caller", s.caller},
                {"expected", s.expected ? s.expected->ToString() : ""},
                {"has_expected", s.expected.has_value()}};
    return e;
  }

  const Model& model_;
  std::string default_path_;
  std::string current_;
  std::vector<Binding> scope_;
  std::map<std::string, std::string> files_;
  std::vector<std::string> order_;
};

// --- Built-in templates --------------------------------------------------------

constexpr const char kDocTemplate[] = R"(@foreach class c@
@file ${c.name}.md@
# @if c.abstract@Abstract class@else@Class@end@ ${c.name}

@if c.has_superclass@
- Extends ${c.superclass}.
@end@
@if c.published@
- Part of the published interface.
@end@
@if c.subclasses@
- Subclasses: ${c.subclasses}.
@end@

## Attributes

| Name | Type | Published |
| --- | --- | --- |
@foreach attribute a@
| ${a.name} | ${a.type|md} | ${a.published} |
@end@

## Methods

| Signature | Abstract | Published |
| --- | --- | --- |
@foreach method m@
| ${m.signature|md} | ${m.abstract} | ${m.published} |
@end@
@if c.has_statechart@

## Statechart

Initial state: ${c.initial}

| Source | Target | Trigger | Guard |
| --- | --- | --- | --- |
@foreach transition t@
| ${t.source} | ${t.target} | ${t.trigger} | ${t.guard|md} |
@end@
@end@
@foreach invariant i@

Invariant ${i.name}: `${i.expr}`
@end@
@end@
)";

constexpr const char kSkeletonTemplate[] = R"(@foreach class c@
@file classes/${c.name}.txt@
@if c.abstract@abstract @end@class ${c.name}@if c.has_superclass@ extends ${c.superclass}@end@

@foreach attribute a@
  field ${a.name}: ${a.type}
@end@
@foreach method m@

  operation ${m.signature}
@if m.abstract@
    abstract
@else@
@if m.is_trigger@
    dispatch ${m.name} to the statechart of ${c.name}
@else@
    TODO: implement ${c.name}.${m.name}
@end@
@end@
  end
@end@
@if c.has_statechart@

  statechart starting in ${c.initial}
@foreach transition t@
    on ${t.trigger}(${t.params}) from ${t.source} to ${t.target}@if t.has_guard@ when ${t.guard}@end@
@end@
  end
@end@
end
@end@
@foreach test t@
@file tests/${t.name}.txt@
test ${t.name} (${t.category})
  given fixture ${t.fixture}
@foreach step s@
  step ${s_index}: ${s.text}
@end@
@if t.has_pattern@
  then the final state matches ${t.pattern}
@end@
@foreach assertion a@
  then ${a.text}
@end@
  TODO: bind ${t.name} to the target test framework
end
@end@
)";

}  // namespace

Expected<GenOutput, DiagnosticList> Render(const Model& model, const Template& tmpl) {
  try {
    std::vector<Node> nodes = TemplateParser(tmpl.name, tmpl.text).Parse();
    return Renderer(model, tmpl.name).Run(nodes);
  } catch (const Error& error) {
    return DiagnosticList{error.ToDiagnostic()};
  }
}

const std::vector<Template>& BuiltinTemplates() {
  static const std::vector<Template> templates = {{"doc", kDocTemplate}, {"skeleton", kSkeletonTemplate}};
  return templates;
}

std::optional<Template> FindBuiltinTemplate(const std::string& name) {
  for (const Template& t : BuiltinTemplates()) {
    if (t.name == name) return t;
  }
  return std::nullopt;
}

}  // namespace amw

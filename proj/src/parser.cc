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

// Recursive-descent parser for `.amw` sources. One token of lookahead plus
// keyword dispatch is enough everywhere; the only two-token peek is
// distinguishing a statement-level assignment target from other statements,
// which keywords already settle.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>

#include "amw/text_format.h"
#include "lexer.h"

namespace amw {

namespace {

using internal::Token;

struct SyntaxError {
  Diagnostic diagnostic;
};

bool IsItemStart(const Token& t) {
  if (t.kind != Token::Kind::kKeyword) return false;
  return t.text == "class" || t.text == "statechart" || t.text == "objects" ||
         t.text == "pattern" || t.text == "sequence" || t.text == "inv" || t.text == "test" ||
         t.text == "project";
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string path, DiagnosticList& diagnostics)
      : tokens_(std::move(tokens)), path_(std::move(path)), diagnostics_(diagnostics) {}

  void ParseItems(Model& model) {
    while (!AtEnd()) {
      std::size_t start = pos_;
      depth_ = 0;
      try {
        ParseItem(model);
      } catch (const SyntaxError& error) {
        diagnostics_.push_back(error.diagnostic);
        Recover(start);
      }
    }
  }

  Expr ParseStandaloneExpr() {
    Expr e = ParseExpression();
    if (!AtEnd()) Fail("unexpected '" + Peek().text + "' after expression");
    return e;
  }

  Literal ParseStandaloneLiteral() {
    Literal lit = ParseLiteralToken();
    if (!AtEnd()) Fail("unexpected '" + Peek().text + "' after literal");
    return lit;
  }

 private:
  // --- token helpers ---------------------------------------------------------

  const Token& Peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  bool AtEnd() const { return Peek().kind == Token::Kind::kEnd; }

  SourceLoc Loc(const Token& t) const { return SourceLoc{path_, t.line, t.column}; }
  SourceLoc Here() const { return Loc(Peek()); }

  [[noreturn]] void Fail(const std::string& message) const {
    throw SyntaxError{Diagnostic{"E_SYNTAX", Severity::kError, Here(), message}};
  }

  static std::string Describe(const Token& t) {
    switch (t.kind) {
      case Token::Kind::kEnd:
        return "end of input";
      case Token::Kind::kString:
        return "string literal";
      case Token::Kind::kInt:
        return "integer '" + t.text + "'";
      default:
        return "'" + t.text + "'";
    }
  }

  const Token& Next() {
    const Token& t = Peek();
    if (t.kind == Token::Kind::kPunct) {
      if (t.text == "{") ++depth_;
      if (t.text == "}") --depth_;
    }
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  bool IsPunct(std::string_view p, std::size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind == Token::Kind::kPunct && t.text == p;
  }
  bool IsKeyword(std::string_view k, std::size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind == Token::Kind::kKeyword && t.text == k;
  }
  // Contextual words are ordinary identifiers outside their slot.
  bool IsWord(std::string_view w) const {
    const Token& t = Peek();
    return t.kind == Token::Kind::kIdent && t.text == w;
  }

  bool AcceptPunct(std::string_view p) {
    if (!IsPunct(p)) return false;
    Next();
    return true;
  }
  bool AcceptKeyword(std::string_view k) {
    if (!IsKeyword(k)) return false;
    Next();
    return true;
  }

  void ExpectPunct(std::string_view p) {
    if (!AcceptPunct(p)) Fail("expected '" + std::string(p) + "' but found " + Describe(Peek()));
  }
  void ExpectKeyword(std::string_view k) {
    if (!AcceptKeyword(k)) Fail("expected '" + std::string(k) + "' but found " + Describe(Peek()));
  }
  void ExpectWord(std::string_view w) {
    if (!IsWord(w)) Fail("expected '" + std::string(w) + "' but found " + Describe(Peek()));
    Next();
  }
  std::string ExpectIdent(std::string_view what = "identifier") {
    if (Peek().kind != Token::Kind::kIdent) {
      Fail("expected " + std::string(what) + " but found " + Describe(Peek()));
    }
    return Next().text;
  }

  // Skips to the next token that can start an item. Unambiguous item keywords
  // stop the scan anywhere; `published`/`abstract` only outside braces.
  void Recover(std::size_t start) {
    if (pos_ == start) Next();
    while (!AtEnd()) {
      const Token& t = Peek();
      if (IsItemStart(t)) return;
      if (depth_ <= 0 && t.kind == Token::Kind::kKeyword &&
          (t.text == "published" || t.text == "abstract")) {
        return;
      }
      Next();
    }
  }

  // --- items -----------------------------------------------------------------

  void ParseItem(Model& model) {
    const Token& t = Peek();
    if (t.kind != Token::Kind::kKeyword) Fail("expected a declaration but found " + Describe(t));
    if (t.text == "published" || t.text == "abstract" || t.text == "class") {
      model.classes.push_back(ParseClass());
    } else if (t.text == "statechart") {
      model.statecharts.push_back(ParseStatechart());
    } else if (t.text == "objects") {
      model.configs.push_back(ParseObjectDiagram(false));
    } else if (t.text == "pattern") {
      model.patterns.push_back(ParseObjectDiagram(true));
    } else if (t.text == "sequence") {
      model.sequences.push_back(ParseSequence());
    } else if (t.text == "inv") {
      model.invariants.push_back(ParseInvariant());
    } else if (t.text == "test") {
      model.tests.push_back(ParseTest());
    } else if (t.text == "project") {
      ProjectManifest manifest = ParseManifest();
      if (model.manifest) {
        throw SyntaxError{Diagnostic{"E_DUPLICATE", Severity::kError, manifest.loc,
                                     "duplicate project manifest"}};
      }
      model.manifest = std::move(manifest);
    } else {
      Fail("expected a declaration but found " + Describe(t));
    }
  }

  ProjectManifest ParseManifest() {
    ProjectManifest manifest;
    manifest.loc = Here();
    ExpectKeyword("project");
    manifest.name = ExpectIdent("project name");
    ExpectPunct("{");
    while (!AcceptPunct("}")) {
      ExpectWord("files");
      if (Peek().kind != Token::Kind::kString) Fail("expected a file glob string");
      manifest.files.push_back(Next().text);
      ExpectPunct(";");
    }
    return manifest;
  }

  ClassDef ParseClass() {
    ClassDef cls;
    cls.loc = Here();
    cls.published = AcceptKeyword("published");
    cls.abstract = AcceptKeyword("abstract");
    ExpectKeyword("class");
    cls.name = ExpectIdent("class name");
    if (AcceptKeyword("extends")) cls.superclass = ExpectIdent("superclass name");
    ExpectPunct("{");
    while (!AcceptPunct("}")) {
      SourceLoc loc = Here();
      bool published = AcceptKeyword("published");
      if (AcceptKeyword("attr")) {
        AttributeDef attr;
        attr.loc = loc;
        attr.published = published;
        attr.name = ExpectIdent("attribute name");
        ExpectPunct(":");
        attr.type = ParseType();
        ExpectPunct(";");
        cls.attributes.push_back(std::move(attr));
        continue;
      }
      MethodDef method;
      method.loc = loc;
      method.published = published;
      method.abstract = AcceptKeyword("abstract");
      if (!AcceptKeyword("method")) Fail("expected 'attr' or 'method' but found " + Describe(Peek()));
      method.name = ExpectIdent("method name");
      method.params = ParseParams();
      if (AcceptPunct(":")) method.return_type = ParseType();
      if (!AcceptPunct(";")) method.body = ParseBlock();
      cls.methods.push_back(std::move(method));
    }
    return cls;
  }

  TypeRef ParseType() {
    if (IsWord("Int")) return Next(), TypeRef::Int();
    if (IsWord("Bool")) return Next(), TypeRef::Bool();
    if (IsWord("String")) return Next(), TypeRef::String();
    if (IsWord("set") && IsPunct("<", 1)) {
      Next();
      Next();
      std::string element = ExpectIdent("class name");
      ExpectPunct(">");
      return TypeRef::Set(element);
    }
    return TypeRef::Class(ExpectIdent("type"));
  }

  std::vector<Param> ParseParams() {
    std::vector<Param> params;
    ExpectPunct("(");
    if (AcceptPunct(")")) return params;
    do {
      Param p;
      p.name = ExpectIdent("parameter name");
      ExpectPunct(":");
      p.type = ParseType();
      params.push_back(std::move(p));
    } while (AcceptPunct(","));
    ExpectPunct(")");
    return params;
  }

  Block ParseBlock() {
    Block block;
    ExpectPunct("{");
    while (!AcceptPunct("}")) block.push_back(ParseStatement());
    return block;
  }

  std::vector<std::string> ParseNavPath() {
    std::vector<std::string> path{ExpectIdent()};
    while (AcceptPunct(".")) path.push_back(ExpectIdent("attribute name"));
    return path;
  }

  std::vector<Expr> ParseArgs() {
    std::vector<Expr> args;
    ExpectPunct("(");
    if (AcceptPunct(")")) return args;
    do {
      args.push_back(ParseExpression());
    } while (AcceptPunct(","));
    ExpectPunct(")");
    return args;
  }

  Stmt ParseStatement() {
    Stmt stmt;
    stmt.loc = Here();
    if (AcceptKeyword("var")) {
      stmt.kind = Stmt::Kind::kVarDecl;
      stmt.name = ExpectIdent("variable name");
      ExpectPunct("=");
      stmt.value = ParseExpression();
      ExpectPunct(";");
    } else if (AcceptKeyword("return")) {
      stmt.kind = Stmt::Kind::kReturn;
      stmt.value = ParseExpression();
      ExpectPunct(";");
    } else if (AcceptKeyword("if")) {
      stmt.kind = Stmt::Kind::kIf;
      ExpectPunct("(");
      stmt.value = ParseExpression();
      ExpectPunct(")");
      stmt.then_block = ParseBlock();
      if (AcceptKeyword("else")) {
        stmt.has_else = true;
        stmt.else_block = ParseBlock();
      }
    } else if (AcceptKeyword("call")) {
      stmt.kind = Stmt::Kind::kCall;
      std::vector<std::string> path = ParseNavPath();
      if (path.size() < 2) Fail("expected 'receiver.method' after 'call'");
      stmt.name = path.back();
      path.pop_back();
      stmt.path = std::move(path);
      stmt.args = ParseArgs();
      ExpectPunct(";");
    } else if (Peek().kind == Token::Kind::kIdent) {
      stmt.kind = Stmt::Kind::kAssign;
      stmt.path = ParseNavPath();
      ExpectPunct("=");
      stmt.value = ParseExpression();
      ExpectPunct(";");
    } else {
      Fail("expected a statement but found " + Describe(Peek()));
    }
    return stmt;
  }

  Statechart ParseStatechart() {
    Statechart chart;
    chart.loc = Here();
    ExpectKeyword("statechart");
    ExpectWord("for");
    chart.owner = ExpectIdent("class name");
    ExpectPunct("{");
    ExpectWord("initial");
    chart.initial = ExpectIdent("state name");
    ExpectPunct(";");
    while (IsWord("state")) {
      Next();
      chart.states.push_back(ExpectIdent("state name"));
      ExpectPunct(";");
    }
    while (IsKeyword("trans")) chart.transitions.push_back(ParseTransition());
    ExpectPunct("}");
    return chart;
  }

  TransitionDef ParseTransition() {
    TransitionDef t;
    t.loc = Here();
    ExpectKeyword("trans");
    t.source = ExpectIdent("source state");
    ExpectPunct("->");
    t.target = ExpectIdent("target state");
    ExpectWord("on");
    t.trigger = ExpectIdent("trigger method");
    t.params = ParseParams();
    if (AcceptPunct("[")) {
      t.guard = ParseExpression();
      ExpectPunct("]");
    }
    if (AcceptPunct("/")) t.actions = ParseBlock();
    if (AcceptKeyword("returns")) t.result = ParseExpression();
    ExpectPunct(";");
    return t;
  }

  ObjectValue ParseObjectValue() {
    if (Peek().kind == Token::Kind::kIdent) return ObjectValue::Object(Next().text);
    if (AcceptPunct("{")) {
      std::vector<std::string> names;
      if (!AcceptPunct("}")) {
        do {
          names.push_back(ExpectIdent("object name"));
        } while (AcceptPunct(","));
        ExpectPunct("}");
      }
      return ObjectValue::Set(std::move(names));
    }
    return ObjectValue::Lit(ParseLiteralToken());
  }

  ObjectDiagram ParseObjectDiagram(bool pattern) {
    ObjectDiagram diagram;
    diagram.loc = Here();
    ExpectKeyword(pattern ? "pattern" : "objects");
    diagram.name = ExpectIdent("diagram name");
    ExpectPunct("{");
    while (!AcceptPunct("}")) {
      ObjectDecl obj;
      obj.loc = Here();
      if (pattern) obj.anchor = AcceptKeyword("anchor");
      ExpectKeyword("object");
      obj.name = ExpectIdent("object name");
      ExpectPunct(":");
      obj.class_name = ExpectIdent("class name");
      ExpectPunct("{");
      while (!AcceptPunct("}")) {
        SlotAssignment slot;
        slot.loc = Here();
        slot.attribute = ExpectIdent("attribute name");
        ExpectPunct("=");
        slot.value = ParseObjectValue();
        ExpectPunct(";");
        obj.assignments.push_back(std::move(slot));
      }
      diagram.objects.push_back(std::move(obj));
    }
    return diagram;
  }

  SequenceDefinition ParseSequence() {
    SequenceDefinition seq;
    seq.loc = Here();
    ExpectKeyword("sequence");
    seq.name = ExpectIdent("sequence name");
    if (IsWord("strict")) {
      Next();
      seq.strict = true;
    }
    ExpectPunct("{");
    while (!AcceptPunct("}")) {
      Step step;
      step.loc = Here();
      if (AcceptKeyword("call")) {
        step.kind = Step::Kind::kStimulus;
        step.target = ExpectIdent("object name");
        ExpectPunct(".");
        step.method = ExpectIdent("method name");
        ExpectPunct("(");
        if (!AcceptPunct(")")) {
          do {
            ObjectValue arg = ParseObjectValue();
            if (arg.kind == ObjectValue::Kind::kSet) {
              throw SyntaxError{Diagnostic{"E_SYNTAX", Severity::kError, step.loc,
                                           "set values are not valid stimulus arguments"}};
            }
            step.args.push_back(std::move(arg));
          } while (AcceptPunct(","));
          ExpectPunct(")");
        }
        if (AcceptKeyword("expect")) step.expected = ParseLiteralToken();
      } else if (AcceptKeyword("expect")) {
        step.kind = Step::Kind::kExpectMessage;
        step.caller = ExpectIdent("caller object");
        ExpectPunct("->");
        step.target = ExpectIdent("callee object");
        ExpectPunct(":");
        step.method = ExpectIdent("method name");
      } else if (AcceptKeyword("assert")) {
        step.kind = Step::Kind::kAssert;
        step.assertion = ParseExpression();
      } else {
        Fail("expected 'call', 'expect' or 'assert' but found " + Describe(Peek()));
      }
      ExpectPunct(";");
      seq.steps.push_back(std::move(step));
    }
    return seq;
  }

  NamedInvariant ParseInvariant() {
    NamedInvariant inv;
    inv.loc = Here();
    ExpectKeyword("inv");
    inv.name = ExpectIdent("invariant name");
    ExpectWord("for");
    inv.context = ExpectIdent("class name");
    ExpectPunct(":");
    inv.expr = ParseExpression();
    ExpectPunct(";");
    return inv;
  }

  TestCase ParseTest() {
    TestCase test;
    test.loc = Here();
    ExpectKeyword("test");
    test.name = ExpectIdent("test name");
    ExpectWord("category");
    std::optional<TestCategory> category;
    if (Peek().kind == Token::Kind::kIdent) category = ParseCategory(Peek().text);
    if (!category) Fail("expected 'unit', 'integration' or 'acceptance'");
    Next();
    test.category = *category;
    ExpectPunct("{");
    ExpectWord("fixture");
    test.fixture = ExpectIdent("configuration name");
    ExpectPunct(";");
    ExpectWord("driver");
    test.driver = ExpectIdent("sequence name");
    ExpectPunct(";");
    if (IsWord("oracle")) {
      Next();
      Oracle oracle;
      ExpectPunct("{");
      if (IsWord("matches")) {
        Next();
        oracle.pattern = ExpectIdent("pattern name");
        ExpectPunct(";");
      }
      while (AcceptKeyword("assert")) {
        oracle.assertions.push_back(ParseExpression());
        ExpectPunct(";");
      }
      ExpectPunct("}");
      test.oracle = std::move(oracle);
    }
    ExpectPunct("}");
    return test;
  }

  // --- literals and expressions ---------------------------------------------

  std::int64_t ParseIntDigits(const std::string& digits, bool negative) {
    std::uint64_t magnitude = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), magnitude);
    const std::uint64_t limit =
        static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + (negative ? 1 : 0);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || magnitude > limit) {
      Fail("integer literal out of range");
    }
    if (negative) {
      return magnitude == limit ? std::numeric_limits<std::int64_t>::min()
                                : -static_cast<std::int64_t>(magnitude);
    }
    return static_cast<std::int64_t>(magnitude);
  }

  Literal ParseLiteralToken() {
    const Token& t = Peek();
    if (t.kind == Token::Kind::kInt) return Literal::Int(ParseIntDigits(Next().text, false));
    if (IsPunct("-") && Peek(1).kind == Token::Kind::kInt) {
      Next();
      return Literal::Int(ParseIntDigits(Next().text, true));
    }
    if (t.kind == Token::Kind::kString) return Literal::String(Next().text);
    if (AcceptKeyword("true")) return Literal::Bool(true);
    if (AcceptKeyword("false")) return Literal::Bool(false);
    Fail("expected a literal but found " + Describe(t));
  }

  Expr ParseExpression() { return ParseImplies(); }

  Expr ParseImplies() {
    Expr lhs = ParseOr();
    while (IsKeyword("implies")) {
      SourceLoc loc = Here();
      Next();
      lhs = Expr::Binary(BinaryOp::kImplies, std::move(lhs), ParseOr(), loc);
    }
    return lhs;
  }

  Expr ParseOr() {
    Expr lhs = ParseAnd();
    while (IsKeyword("or")) {
      SourceLoc loc = Here();
      Next();
      lhs = Expr::Binary(BinaryOp::kOr, std::move(lhs), ParseAnd(), loc);
    }
    return lhs;
  }

  Expr ParseAnd() {
    Expr lhs = ParseNot();
    while (IsKeyword("and")) {
      SourceLoc loc = Here();
      Next();
      lhs = Expr::Binary(BinaryOp::kAnd, std::move(lhs), ParseNot(), loc);
    }
    return lhs;
  }

  Expr ParseNot() {
    if (IsKeyword("not")) {
      SourceLoc loc = Here();
      Next();
      return Expr::Not(ParseNot(), loc);
    }
    return ParseComparison();
  }

  std::optional<BinaryOp> PeekComparison() const {
    if (Peek().kind != Token::Kind::kPunct) return std::nullopt;
    const std::string& p = Peek().text;
    if (p == "=") return BinaryOp::kEq;
    if (p == "<>") return BinaryOp::kNe;
    if (p == "<") return BinaryOp::kLt;
    if (p == "<=") return BinaryOp::kLe;
    if (p == ">") return BinaryOp::kGt;
    if (p == ">=") return BinaryOp::kGe;
    return std::nullopt;
  }

  Expr ParseComparison() {
    Expr lhs = ParseAdditive();
    while (auto op = PeekComparison()) {
      SourceLoc loc = Here();
      Next();
      lhs = Expr::Binary(*op, std::move(lhs), ParseAdditive(), loc);
    }
    return lhs;
  }

  Expr ParseAdditive() {
    Expr lhs = ParseMultiplicative();
    while (IsPunct("+") || IsPunct("-")) {
      SourceLoc loc = Here();
      BinaryOp op = Next().text == "+" ? BinaryOp::kAdd : BinaryOp::kSub;
      lhs = Expr::Binary(op, std::move(lhs), ParseMultiplicative(), loc);
    }
    return lhs;
  }

  Expr ParseMultiplicative() {
    Expr lhs = ParsePostfix();
    while (IsPunct("*")) {
      SourceLoc loc = Here();
      Next();
      lhs = Expr::Binary(BinaryOp::kMul, std::move(lhs), ParsePostfix(), loc);
    }
    return lhs;
  }

  Expr ParsePostfix() {
    Expr e = ParsePrimary();
    while (true) {
      SourceLoc loc = Here();
      if (AcceptPunct(".")) {
        e = Expr::Nav(std::move(e), ExpectIdent("attribute name"), loc);
      } else if (AcceptPunct("@")) {
        ExpectWord("state");
        e = Expr::State(std::move(e), loc);
      } else if (AcceptPunct("->")) {
        std::string op = ExpectIdent("collection operation");
        ExpectPunct("(");
        if (op == "size") {
          ExpectPunct(")");
          e = Expr::Size(std::move(e), loc);
        } else if (op == "includes") {
          Expr element = ParseExpression();
          ExpectPunct(")");
          e = Expr::Includes(std::move(e), std::move(element), loc);
        } else if (op == "forAll" || op == "exists") {
          std::string var = ExpectIdent("iterator variable");
          ExpectPunct("|");
          Expr body = ParseExpression();
          ExpectPunct(")");
          e = op == "forAll" ? Expr::ForAll(std::move(e), var, std::move(body), loc)
                             : Expr::Exists(std::move(e), var, std::move(body), loc);
        } else {
          throw SyntaxError{Diagnostic{"E_SYNTAX", Severity::kError, loc,
                                       "unknown collection operation '" + op + "'"}};
        }
      } else {
        return e;
      }
    }
  }

  Expr ParsePrimary() {
    SourceLoc loc = Here();
    const Token& t = Peek();
    if (t.kind == Token::Kind::kIdent) return Expr::Name(Next().text, loc);
    if (AcceptPunct("(")) {
      Expr e = ParseExpression();
      ExpectPunct(")");
      return e;
    }
    if (t.kind == Token::Kind::kInt || t.kind == Token::Kind::kString || IsKeyword("true") ||
        IsKeyword("false") || (IsPunct("-") && Peek(1).kind == Token::Kind::kInt)) {
      return Expr::Lit(ParseLiteralToken(), loc);
    }
    Fail("expected an expression but found " + Describe(t));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::string path_;
  DiagnosticList& diagnostics_;
};

}  // namespace

Expected<Model, DiagnosticList> ParseModel(std::vector<SourceUnit> sources) {
  std::stable_sort(sources.begin(), sources.end(),
                   [](const SourceUnit& a, const SourceUnit& b) { return a.path < b.path; });
  Model model;
  DiagnosticList diagnostics;
  for (const auto& unit : sources) {
    auto tokens = internal::Tokenize(unit.text, unit.path, diagnostics);
    Parser(std::move(tokens), unit.path, diagnostics).ParseItems(model);
  }
  if (!diagnostics.empty()) return diagnostics;
  if (model.manifest) model.name = model.manifest->name;
  return model;
}

Expected<Model, DiagnosticList> ParseModelText(std::string_view text, std::string path) {
  return ParseModel({SourceUnit{std::move(path), std::string(text)}});
}

Expected<Expr, DiagnosticList> ParseExpr(std::string_view text) {
  DiagnosticList diagnostics;
  auto tokens = internal::Tokenize(text, "<expr>", diagnostics);
  if (!diagnostics.empty()) return diagnostics;
  try {
    return Parser(std::move(tokens), "<expr>", diagnostics).ParseStandaloneExpr();
  } catch (const SyntaxError& error) {
    return DiagnosticList{error.diagnostic};
  }
}

Expected<Literal, DiagnosticList> ParseLiteral(std::string_view text) {
  DiagnosticList diagnostics;
  auto tokens = internal::Tokenize(text, "<literal>", diagnostics);
  if (!diagnostics.empty()) return diagnostics;
  try {
    return Parser(std::move(tokens), "<literal>", diagnostics).ParseStandaloneLiteral();
  } catch (const SyntaxError& error) {
    return DiagnosticList{error.diagnostic};
  }
}

}  // namespace amw

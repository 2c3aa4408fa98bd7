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

#include <sstream>

#include "amw/text_format.h"

namespace amw {

namespace {

// Binding strength, loosest first. Binary operators are left-associative.
enum Precedence {
  kPrecImplies = 1,
  kPrecOr,
  kPrecAnd,
  kPrecNot,
  kPrecComparison,
  kPrecAdditive,
  kPrecMultiplicative,
  kPrecPostfix,
};

int PrecedenceOf(BinaryOp op) {
  switch (op) {
    case BinaryOp::kImplies:
      return kPrecImplies;
    case BinaryOp::kOr:
      return kPrecOr;
    case BinaryOp::kAnd:
      return kPrecAnd;
    case BinaryOp::kAdd:
    case BinaryOp::kSub:
      return kPrecAdditive;
    case BinaryOp::kMul:
      return kPrecMultiplicative;
    default:
      return kPrecComparison;
  }
}

int PrecedenceOf(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kBinary:
      return PrecedenceOf(e.op);
    case Expr::Kind::kNot:
      return kPrecNot;
    default:
      return kPrecPostfix;
  }
}

void PrintExprTo(const Expr& e, int min_prec, std::string& out) {
  const bool parens = PrecedenceOf(e) < min_prec;
  if (parens) out += '(';
  switch (e.kind) {
    case Expr::Kind::kLiteral:
      out += e.literal.ToString();
      break;
    case Expr::Kind::kName:
      out += e.text;
      break;
    case Expr::Kind::kNav:
      PrintExprTo(e.args[0], kPrecPostfix, out);
      out += '.';
      out += e.text;
      break;
    case Expr::Kind::kState:
      PrintExprTo(e.args[0], kPrecPostfix, out);
      out += "@state";
      break;
    case Expr::Kind::kNot:
      out += "not ";
      PrintExprTo(e.args[0], kPrecNot, out);
      break;
    case Expr::Kind::kBinary: {
      int p = PrecedenceOf(e.op);
      PrintExprTo(e.args[0], p, out);
      out += ' ';
      out += BinaryOpSymbol(e.op);
      out += ' ';
      PrintExprTo(e.args[1], p + 1, out);
      break;
    }
    case Expr::Kind::kSize:
      PrintExprTo(e.args[0], kPrecPostfix, out);
      out += "->size()";
      break;
    case Expr::Kind::kIncludes:
      PrintExprTo(e.args[0], kPrecPostfix, out);
      out += "->includes(";
      PrintExprTo(e.args[1], 0, out);
      out += ')';
      break;
    case Expr::Kind::kForAll:
    case Expr::Kind::kExists:
      PrintExprTo(e.args[0], kPrecPostfix, out);
      out += e.kind == Expr::Kind::kForAll ? "->forAll(" : "->exists(";
      out += e.text;
      out += " | ";
      PrintExprTo(e.args[1], 0, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

std::string Indent(int level) { return std::string(static_cast<std::size_t>(level) * 2, ' '); }

std::string JoinPath(const std::vector<std::string>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += '.';
    out += path[i];
  }
  return out;
}

void PrintStmtTo(const Stmt& s, int indent, std::string& out) {
  out += Indent(indent);
  switch (s.kind) {
    case Stmt::Kind::kVarDecl:
      out += "var " + s.name + " = " + PrintExpr(s.value) + ";\n";
      break;
    case Stmt::Kind::kAssign:
      out += JoinPath(s.path) + " = " + PrintExpr(s.value) + ";\n";
      break;
    case Stmt::Kind::kReturn:
      out += "return " + PrintExpr(s.value) + ";\n";
      break;
    case Stmt::Kind::kCall: {
      out += "call " + JoinPath(s.path) + "." + s.name + "(";
      for (std::size_t i = 0; i < s.args.size(); ++i) {
        if (i > 0) out += ", ";
        out += PrintExpr(s.args[i]);
      }
      out += ");\n";
      break;
    }
    case Stmt::Kind::kIf:
      out += "if (" + PrintExpr(s.value) + ") " + PrintBlock(s.then_block, indent);
      if (s.has_else) out += " else " + PrintBlock(s.else_block, indent);
      out += '\n';
      break;
  }
}

}  // namespace

std::string PrintExpr(const Expr& expr) {
  std::string out;
  PrintExprTo(expr, 0, out);
  return out;
}

std::string PrintType(const TypeRef& type) { return type.ToString(); }

// Renders "{", the statements one level deeper, and the closing brace at
// `indent`, without a trailing newline.
std::string PrintBlock(const Block& block, int indent) {
  std::string out = "{\n";
  for (const auto& s : block) PrintStmtTo(s, indent + 1, out);
  out += Indent(indent) + "}";
  return out;
}

std::string PrintParams(const std::vector<Param>& params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ", ";
    out += params[i].name + ": " + PrintType(params[i].type);
  }
  return out;
}

std::string PrintMethod(const MethodDef& m, int indent) {
  std::string out = Indent(indent);
  if (m.published) out += "published ";
  if (m.abstract) out += "abstract ";
  out += "method " + m.name + "(" + PrintParams(m.params) + ")";
  if (m.return_type) out += ": " + PrintType(*m.return_type);
  if (m.body) {
    out += " " + PrintBlock(*m.body, indent) + "\n";
  } else {
    out += ";\n";
  }
  return out;
}

std::string PrintClass(const ClassDef& c) {
  std::string out;
  if (c.published) out += "published ";
  if (c.abstract) out += "abstract ";
  out += "class " + c.name;
  if (c.superclass) out += " extends " + *c.superclass;
  out += " {\n";
  for (const auto& a : c.attributes) {
    out += Indent(1);
    if (a.published) out += "published ";
    out += "attr " + a.name + ": " + PrintType(a.type) + ";\n";
  }
  for (const auto& m : c.methods) out += PrintMethod(m, 1);
  out += "}\n";
  return out;
}

std::string PrintStatechart(const Statechart& chart) {
  std::string out = "statechart for " + chart.owner + " {\n";
  out += Indent(1) + "initial " + chart.initial + ";\n";
  for (const auto& s : chart.states) out += Indent(1) + "state " + s + ";\n";
  for (const auto& t : chart.transitions) {
    out += Indent(1) + "trans " + t.source + " -> " + t.target + " on " + t.trigger + "(" +
           PrintParams(t.params) + ")";
    if (t.guard) out += " [" + PrintExpr(*t.guard) + "]";
    if (t.actions) out += " / " + PrintBlock(*t.actions, 1);
    if (t.result) out += " returns " + PrintExpr(*t.result);
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string PrintObjects(const ObjectDiagram& diagram, bool pattern) {
  std::string out = std::string(pattern ? "pattern " : "objects ") + diagram.name + " {\n";
  for (const auto& o : diagram.objects) {
    out += Indent(1);
    if (pattern && o.anchor) out += "anchor ";
    out += "object " + o.name + ": " + o.class_name + " {\n";
    for (const auto& a : o.assignments) {
      out += Indent(2) + a.attribute + " = " + a.value.ToString() + ";\n";
    }
    out += Indent(1) + "}\n";
  }
  out += "}\n";
  return out;
}

std::string PrintSequence(const SequenceDefinition& seq) {
  std::string out = "sequence " + seq.name + (seq.strict ? " strict" : "") + " {\n";
  for (const auto& step : seq.steps) {
    out += Indent(1);
    switch (step.kind) {
      case Step::Kind::kStimulus:
        out += "call " + step.target + "." + step.method + "(";
        for (std::size_t i = 0; i < step.args.size(); ++i) {
          if (i > 0) out += ", ";
          out += step.args[i].ToString();
        }
        out += ")";
        if (step.expected) out += " expect " + step.expected->ToString();
        break;
      case Step::Kind::kExpectMessage:
        out += "expect " + step.caller + " -> " + step.target + " : " + step.method;
        break;
      case Step::Kind::kAssert:
        out += "assert " + PrintExpr(step.assertion);
        break;
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string PrintInvariant(const NamedInvariant& inv) {
  return "inv " + inv.name + " for " + inv.context + ": " + PrintExpr(inv.expr) + ";\n";
}

std::string PrintTest(const TestCase& test) {
  std::string out = "test " + test.name + " category " + std::string(CategoryName(test.category)) +
                    " {\n";
  out += Indent(1) + "fixture " + test.fixture + ";\n";
  out += Indent(1) + "driver " + test.driver + ";\n";
  if (test.oracle) {
    out += Indent(1) + "oracle {\n";
    if (test.oracle->pattern) out += Indent(2) + "matches " + *test.oracle->pattern + ";\n";
    for (const auto& a : test.oracle->assertions) {
      out += Indent(2) + "assert " + PrintExpr(a) + ";\n";
    }
    out += Indent(1) + "}\n";
  }
  out += "}\n";
  return out;
}

std::string PrintModel(const Model& model) {
  std::vector<std::string> items;
  if (model.manifest) {
    std::string m = "project " + model.manifest->name + " {\n";
    for (const auto& f : model.manifest->files) {
      m += Indent(1) + "files " + Literal::String(f).ToString() + ";\n";
    }
    items.push_back(m + "}\n");
  }
  for (const auto& c : model.classes) items.push_back(PrintClass(c));
  for (const auto& s : model.statecharts) items.push_back(PrintStatechart(s));
  for (const auto& c : model.configs) items.push_back(PrintObjects(c, false));
  for (const auto& p : model.patterns) items.push_back(PrintObjects(p, true));
  for (const auto& s : model.sequences) items.push_back(PrintSequence(s));
  for (const auto& i : model.invariants) items.push_back(PrintInvariant(i));
  for (const auto& t : model.tests) items.push_back(PrintTest(t));
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += '\n';
    out += items[i];
  }
  return out;
}

std::string PrintTestBundle(const Model& model, const TestCase& test) {
  std::string out = PrintTest(test);
  if (const auto* fixture = model.FindConfig(test.fixture)) out += PrintObjects(*fixture, false);
  if (const auto* driver = model.FindSequence(test.driver)) out += PrintSequence(*driver);
  if (test.oracle && test.oracle->pattern) {
    if (const auto* pattern = model.FindPattern(*test.oracle->pattern)) {
      out += PrintObjects(*pattern, true);
    }
  }
  return out;
}

}  // namespace amw

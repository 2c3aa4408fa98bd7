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

// Concrete syntax of `.amw` files: parser and canonical printer.

#ifndef AMW_TEXT_FORMAT_H_
#define AMW_TEXT_FORMAT_H_

#include <string>
#include <string_view>
#include <vector>

#include "amw/diagnostic.h"
#include "amw/model.h"

namespace amw {

struct SourceUnit {
  std::string path;
  std::string text;
};

// Parses all sources into one model. Units are merged in lexicographic path
// order, then document order. Returns every syntax diagnostic on failure;
// after an error the parser resumes at the next top-level keyword.
Expected<Model, DiagnosticList> ParseModel(std::vector<SourceUnit> sources);
Expected<Model, DiagnosticList> ParseModelText(std::string_view text,
                                               std::string path = "<input>");

Expected<Expr, DiagnosticList> ParseExpr(std::string_view text);
Expected<Literal, DiagnosticList> ParseLiteral(std::string_view text);

// Canonical rendering: two-space indentation, one member per line, sections
// ordered manifest, classes, statecharts, configurations, patterns,
// sequences, invariants, tests; declaration order inside each section.
std::string PrintModel(const Model& model);

std::string PrintExpr(const Expr& expr);
std::string PrintType(const TypeRef& type);
std::string PrintBlock(const Block& block, int indent);
std::string PrintClass(const ClassDef& cls);
std::string PrintMethod(const MethodDef& method, int indent);
std::string PrintStatechart(const Statechart& chart);
std::string PrintObjects(const ObjectDiagram& diagram, bool pattern);
std::string PrintSequence(const SequenceDefinition& sequence);
std::string PrintInvariant(const NamedInvariant& invariant);
std::string PrintTest(const TestCase& test);
std::string PrintParams(const std::vector<Param>& params);

// Text of a test together with the fixture, driver and pattern it uses.
// Two models agree on a test exactly when this text is byte-identical.
std::string PrintTestBundle(const Model& model, const TestCase& test);

}  // namespace amw

#endif  // AMW_TEXT_FORMAT_H_

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

// Template-driven text generation from models.
//
// Template syntax:
//   ${var.field}            value of a field; `|upper` and `|lower` filters
//   $$                      a literal `$`
//   @foreach KIND var@ ... @end@
//   @if [not] var.field@ ... [@else@ ...] @end@
//   @file path@             later text goes to `path` (which may use ${})
//
// KIND is class, attribute, method, param, state, transition, test, step,
// assertion or invariant. attribute and method iterate the innermost
// enclosing class; param the innermost method or transition; state and
// transition the innermost class's own statechart, or every chart outside
// a class; step and assertion the innermost test. Loops also bind
// `var_index` (from 1), `var_first` and `var_last`.
//
// A directive alone on its line consumes the whole line. Text before the
// first @file goes to `<template name>.out`. Empty files are omitted.

#ifndef AMW_CODEGEN_H_
#define AMW_CODEGEN_H_

#include <optional>
#include <string>
#include <vector>

#include "amw/diagnostic.h"
#include "amw/model.h"

namespace amw {

struct Template {
  std::string name;
  std::string text;
};

struct GenFile {
  std::string path;  // relative, never escapes the output root
  std::string text;

  bool operator==(const GenFile&) const = default;
};

// Files in order of first creation; paths are unique.
using GenOutput = std::vector<GenFile>;

// Errors are E_TEMPLATE diagnostics located in the template.
Expected<GenOutput, DiagnosticList> Render(const Model& model, const Template& tmpl);

// `doc` and `skeleton`.
const std::vector<Template>& BuiltinTemplates();
std::optional<Template> FindBuiltinTemplate(const std::string& name);

}  // namespace amw

#endif  // AMW_CODEGEN_H_

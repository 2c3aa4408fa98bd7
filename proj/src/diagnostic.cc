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

#include "amw/diagnostic.h"

namespace amw {

std::string FormatDiagnostic(const Diagnostic& d) {
  std::string out;
  if (!d.loc.file.empty()) out += d.loc.file + ":";
  out += std::to_string(d.loc.line) + ":" + std::to_string(d.loc.column) + ": ";
  out += d.severity == Severity::kError ? "error " : "warning ";
  out += d.code + ": " + d.message;
  return out;
}

std::string FormatDiagnostics(const DiagnosticList& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) out += FormatDiagnostic(d) + "\n";
  return out;
}

bool HasErrors(const DiagnosticList& diagnostics) {
  for (const auto& d : diagnostics) {
    if (d.severity == Severity::kError) return true;
  }
  return false;
}

}  // namespace amw

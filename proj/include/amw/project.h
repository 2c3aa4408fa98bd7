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

// Project directories on disk.
//
// A project is a directory of `.amw` files. Without a manifest every `.amw`
// file directly inside the directory belongs to it. A `project.amw` holding
// `project NAME { files "glob"; }` instead selects files by glob, matched
// against paths relative to the directory (subdirectories included).

#ifndef AMW_PROJECT_H_
#define AMW_PROJECT_H_

#include <map>
#include <string>
#include <vector>

#include "amw/diagnostic.h"
#include "amw/model.h"
#include "amw/text_format.h"

namespace amw {

// Source paths are relative to `dir`, sorted.
Expected<std::vector<SourceUnit>, DiagnosticList> ReadProjectSources(const std::string& dir);

struct Project {
  std::string dir;
  std::vector<SourceUnit> sources;
  Model model;
};

// Reads and parses; the model name defaults to the directory's base name
// when no manifest names it.
Expected<Project, DiagnosticList> LoadProject(const std::string& dir);

// Throws Error(E_IO).
std::string ReadFile(const std::string& path);

// Writes every file to a temporary sibling first and renames them into place
// only once all temporaries exist. Throws Error(E_IO).
void WriteFilesAtomically(const std::map<std::string, std::string>& files);

// Canonical reprint of one file. Comment lines directly above a top-level
// item, and a leading file comment followed by a blank line, are kept;
// other comments are dropped. Regions between `// GEN-BEGIN` and
// `// GEN-END` lines are generated output and stay verbatim.
Expected<std::string, DiagnosticList> FormatSource(const std::string& text,
                                                   const std::string& path);

// Canonical text of every project file whose elements differ between the
// project's model and `after`, keyed by path relative to the project
// directory. Elements belong to the file named in their source position;
// elements without one go to the first non-manifest file. Unchanged files
// are left out, and a rewritten file keeps its leading comment.
std::map<std::string, std::string> RenderChangedFiles(const Project& project, const Model& after);

}  // namespace amw

#endif  // AMW_PROJECT_H_

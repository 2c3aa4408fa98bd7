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

#include "amw/project.h"

#include <fnmatch.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace amw {

namespace fs = std::filesystem;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("E_IO", "cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void WriteFilesAtomically(const std::map<std::string, std::string>& files) {
  std::vector<std::pair<fs::path, fs::path>> staged;
  auto discard = [&] {
    std::error_code ignored;
    for (const auto& [temp, target] : staged) fs::remove(temp, ignored);
  };
  for (const auto& [path, text] : files) {
    fs::path target(path);
    fs::path temp = target;
    temp += ".amw-tmp";
    std::error_code ec;
    if (target.has_parent_path()) fs::create_directories(target.parent_path(), ec);
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << text;
    out.close();
    if (!out) {
      discard();
      throw Error("E_IO", "cannot write '" + path + "'");
    }
    staged.emplace_back(temp, target);
  }
  for (const auto& [temp, target] : staged) {
    std::error_code ec;
    fs::rename(temp, target, ec);
    if (ec) {
      discard();
      throw Error("E_IO", "cannot replace '" + target.string() + "': " + ec.message());
    }
  }
}

Expected<std::vector<SourceUnit>, DiagnosticList> ReadProjectSources(const std::string& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    return DiagnosticList{Diagnostic{"E_IO", Severity::kError, SourceLoc{dir, 1, 1},
                                     "not a project directory"}};
  }
  std::vector<SourceUnit> sources;
  try {
    const fs::path root(dir);
    const fs::path manifest_path = root / "project.amw";
    std::vector<std::string> globs;
    if (fs::exists(manifest_path)) {
      std::string text = ReadFile(manifest_path.string());
      auto manifest = ParseModelText(text, "project.amw");
      if (!manifest) return manifest.error();
      if (manifest->manifest) globs = manifest->manifest->files;
      sources.push_back({"project.amw", std::move(text)});
    }
    if (globs.empty() && sources.empty()) {
      for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_regular_file() && entry.path().extension() == ".amw") {
          sources.push_back({entry.path().filename().string(), ReadFile(entry.path().string())});
        }
      }
    } else {
      for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".amw") continue;
        std::string rel = fs::relative(entry.path(), root).generic_string();
        if (rel == "project.amw") continue;
        bool selected = std::any_of(globs.begin(), globs.end(), [&](const std::string& g) {
          return fnmatch(g.c_str(), rel.c_str(), FNM_PATHNAME) == 0;
        });
        if (selected) sources.push_back({rel, ReadFile(entry.path().string())});
      }
    }
  } catch (const Error& error) {
    return DiagnosticList{error.ToDiagnostic()};
  } catch (const fs::filesystem_error& error) {
    return DiagnosticList{Diagnostic{"E_IO", Severity::kError, SourceLoc{dir, 1, 1}, error.what()}};
  }
  std::sort(sources.begin(), sources.end(),
            [](const SourceUnit& a, const SourceUnit& b) { return a.path < b.path; });
  return sources;
}

Expected<Project, DiagnosticList> LoadProject(const std::string& dir) {
  auto sources = ReadProjectSources(dir);
  if (!sources) return sources.error();
  auto model = ParseModel(*sources);
  if (!model) return model.error();
  Project project{dir, *sources, *model};
  if (project.model.name.empty()) {
    project.model.name = fs::path(dir).lexically_normal().filename().string();
    if (project.model.name.empty()) {
      project.model.name = fs::path(dir).lexically_normal().parent_path().filename().string();
    }
  }
  return project;
}

// --- fmt ---------------------------------------------------------------------

namespace {

std::vector<std::string> SplitLines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  for (char c : text) {
    if (c == '\n') {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
      line.clear();
    } else {
      line += c;
    }
  }
  if (!line.empty()) {
    if (line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::string Trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

bool IsComment(const std::string& line) { return Trim(line).rfind("//", 0) == 0; }

// Formats lines [begin, end) of a file; other lines are blanked so that
// positions stay those of the original file.
Expected<std::string, DiagnosticList> FormatSegment(const std::vector<std::string>& lines,
                                                    std::size_t begin, std::size_t end,
                                                    bool keep_header, const std::string& path) {
  std::string text;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i >= begin && i < end) text += lines[i];
    text += '\n';
  }
  auto parsed = ParseModelText(text, path);
  if (!parsed) return parsed.error();
  const Model& m = *parsed;

  std::vector<std::pair<int, std::string>> items;  // (1-based line, canonical text)
  if (m.manifest) {
    Model only;
    only.manifest = m.manifest;
    items.emplace_back(m.manifest->loc.line, PrintModel(only));
  }
  for (const auto& c : m.classes) items.emplace_back(c.loc.line, PrintClass(c));
  for (const auto& s : m.statecharts) items.emplace_back(s.loc.line, PrintStatechart(s));
  for (const auto& c : m.configs) items.emplace_back(c.loc.line, PrintObjects(c, false));
  for (const auto& p : m.patterns) items.emplace_back(p.loc.line, PrintObjects(p, true));
  for (const auto& s : m.sequences) items.emplace_back(s.loc.line, PrintSequence(s));
  for (const auto& i : m.invariants) items.emplace_back(i.loc.line, PrintInvariant(i));
  for (const auto& t : m.tests) items.emplace_back(t.loc.line, PrintTest(t));

  std::vector<std::string> parts;
  std::size_t header_end = begin;
  if (keep_header) {
    std::size_t i = begin;
    while (i < end && IsComment(lines[i])) ++i;
    bool followed_by_blank = i < end ? Trim(lines[i]).empty() : i > begin;
    if (i > begin && followed_by_blank) {
      std::string header;
      for (std::size_t k = begin; k < i; ++k) header += Trim(lines[k]) + "\n";
      parts.push_back(header);
      header_end = i;
    }
  }
  for (const auto& [line, item] : items) {
    std::size_t first = static_cast<std::size_t>(line - 1);
    std::size_t k = first;
    while (k > header_end && k - 1 >= begin && IsComment(lines[k - 1])) --k;
    std::string comment;
    for (std::size_t c = k; c < first; ++c) comment += Trim(lines[c]) + "\n";
    parts.push_back(comment + item);
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += '\n';
    out += parts[i];
  }
  return out;
}

template <typename T>
void KeepInFile(std::vector<T>& items, const std::string& file, const std::string& fallback) {
  items.erase(std::remove_if(items.begin(), items.end(),
                             [&](const T& item) {
                               const std::string& f = item.loc.file.empty() ? fallback : item.loc.file;
                               return f != file;
                             }),
              items.end());
}

Model ElementsInFile(const Model& model, const std::string& file, const std::string& fallback) {
  Model part = model;
  if (part.manifest && (part.manifest->loc.file.empty() ? fallback : part.manifest->loc.file) != file) {
    part.manifest.reset();
  }
  KeepInFile(part.classes, file, fallback);
  KeepInFile(part.statecharts, file, fallback);
  KeepInFile(part.configs, file, fallback);
  KeepInFile(part.patterns, file, fallback);
  KeepInFile(part.sequences, file, fallback);
  KeepInFile(part.invariants, file, fallback);
  KeepInFile(part.tests, file, fallback);
  return part;
}

std::string LeadingComment(const std::string& text) {
  std::vector<std::string> lines = SplitLines(text);
  std::size_t i = 0;
  while (i < lines.size() && IsComment(lines[i])) ++i;
  if (i == 0 || i == lines.size() || !Trim(lines[i]).empty()) return "";
  std::string header;
  for (std::size_t k = 0; k < i; ++k) header += Trim(lines[k]) + "\n";
  return header;
}

}  // namespace

std::map<std::string, std::string> RenderChangedFiles(const Project& project, const Model& after) {
  std::string fallback = "model.amw";
  for (const SourceUnit& unit : project.sources) {
    if (unit.path != "project.amw") {
      fallback = unit.path;
      break;
    }
  }
  std::set<std::string> files;
  for (const SourceUnit& unit : project.sources) files.insert(unit.path);
  files.insert(fallback);
  std::map<std::string, std::string> out;
  for (const std::string& file : files) {
    std::string before = PrintModel(ElementsInFile(project.model, file, fallback));
    std::string now = PrintModel(ElementsInFile(after, file, fallback));
    if (before == now) continue;
    std::string header;
    for (const SourceUnit& unit : project.sources) {
      if (unit.path == file) header = LeadingComment(unit.text);
    }
    out[file] = header.empty() ? now : header + "\n" + now;
  }
  return out;
}

Expected<std::string, DiagnosticList> FormatSource(const std::string& text, const std::string& path) {
  std::vector<std::string> lines = SplitLines(text);
  std::vector<std::string> parts;
  DiagnosticList diagnostics;
  std::size_t pos = 0;
  bool first = true;
  while (pos <= lines.size()) {
    std::size_t region = pos;
    while (region < lines.size() && Trim(lines[region]) != "// GEN-BEGIN") ++region;
    auto segment = FormatSegment(lines, pos, region, first, path);
    first = false;
    if (!segment) {
      diagnostics.insert(diagnostics.end(), segment.error().begin(), segment.error().end());
    } else if (!segment->empty()) {
      parts.push_back(*segment);
    }
    if (region == lines.size()) break;
    std::size_t stop = region + 1;
    while (stop < lines.size() && Trim(lines[stop]) != "// GEN-END") ++stop;
    std::string verbatim;
    for (std::size_t i = region; i < std::min(stop + 1, lines.size()); ++i) verbatim += lines[i] + "\n";
    parts.push_back(verbatim);
    pos = stop + 1;
  }
  if (!diagnostics.empty()) return diagnostics;
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += '\n';
    out += parts[i];
  }
  return out;
}

}  // namespace amw

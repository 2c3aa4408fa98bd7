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

#include "amw/cli.h"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "amw/check.h"
#include "amw/codegen.h"
#include "amw/project.h"
#include "amw/refactor.h"
#include "amw/testgen.h"
#include "amw/testkit.h"
#include "amw/text_format.h"

namespace amw {

namespace {

namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string InDir(const std::string& dir, const std::string& path) {
  return (fs::path(dir) / path).lexically_normal().generic_string();
}

void PrintDiagnostics(const std::string& dir, DiagnosticList diagnostics, std::ostream& out) {
  for (Diagnostic& d : diagnostics) {
    if (!d.loc.file.empty() && d.loc.file != dir) d.loc.file = InDir(dir, d.loc.file);
    out << FormatDiagnostic(d) << "\n";
  }
}

// Loads a project and requires it to be well-formed.
std::optional<Project> LoadChecked(const std::string& dir, std::ostream& out) {
  auto project = LoadProject(dir);
  if (!project) {
    PrintDiagnostics(dir, project.error(), out);
    return std::nullopt;
  }
  DiagnosticList diagnostics = CheckWellformed(project->model);
  if (HasErrors(diagnostics)) {
    PrintDiagnostics(dir, diagnostics, out);
    return std::nullopt;
  }
  return *project;
}

void WriteUnder(const std::string& dir, const std::map<std::string, std::string>& files, std::ostream& out) {
  std::map<std::string, std::string> absolute;
  for (const auto& [path, text] : files) absolute[InDir(dir, path)] = text;
  WriteFilesAtomically(absolute);
  for (const auto& [path, text] : absolute) out << "WROTE " << path << "\n";
}

struct Options {
  std::string dir;
  std::string other_dir;
  // test
  std::vector<std::string> categories;
  std::string filter;
  std::string report;
  // testgen
  std::string chart;
  std::string coverage = "transition";
  int k = 3;
  std::int64_t int_bound = 8;
  std::string seed_config;
  // refactor
  std::string rule;
  std::vector<std::string> args;
  std::optional<std::string> default_value;
  std::vector<std::string> clones;
  bool allow_published = false;
  bool dry_run = false;
  bool verify = false;
  // generate
  std::string template_name;
  std::string out_dir;
  // fmt
  bool check_only = false;
};

int Check(const Options& o, std::ostream& out) {
  auto project = LoadProject(o.dir);
  if (!project) {
    PrintDiagnostics(o.dir, project.error(), out);
    return kFailed;
  }
  DiagnosticList diagnostics = CheckWellformed(project->model);
  PrintDiagnostics(o.dir, diagnostics, out);
  return HasErrors(diagnostics) ? kFailed : kOk;
}

int Test(const Options& o, std::ostream& out) {
  auto project = LoadChecked(o.dir, out);
  if (!project) return kFailed;
  SuiteFilter filter;
  for (const std::string& c : o.categories) filter.categories.insert(*ParseCategory(c));
  if (!o.filter.empty()) filter.name_glob = o.filter;
  SuiteReport report = RunSuite(project->model, filter);
  out << report.RenderText();
  if (!o.report.empty()) WriteFilesAtomically({{o.report, report.RenderLines()}});
  return report.AllPass() ? kOk : kFailed;
}

int Testgen(const Options& o, std::ostream& out, std::ostream& err) {
  auto project = LoadChecked(o.dir, out);
  if (!project) return kFailed;
  TestgenOptions options;
  options.kind = *ParseCoverageKind(o.coverage);
  options.k = o.k;
  options.int_bound = o.int_bound;
  if (!o.seed_config.empty()) options.seed_config = o.seed_config;
  auto result = Derive(project->model, o.chart, options);
  if (!result) {
    err << result.error().code() << ": " << result.error().what() << "\n";
    return kFailed;
  }
  const std::string file = GeneratedFileName(o.chart);
  std::string existing;
  std::vector<SourceUnit> sources;
  for (const SourceUnit& unit : project->sources) {
    if (unit.path == file) {
      existing = unit.text;
    } else {
      sources.push_back(unit);
    }
  }
  if (existing.empty() && fs::exists(InDir(o.dir, file))) existing = ReadFile(InDir(o.dir, file));
  std::string merged = MergeGeneratedRegion(existing, result->region, o.chart);
  // The previous generated file is replaced, not merged, so regenerating
  // never clashes with its own earlier output.
  sources.push_back({file, merged});
  auto model = ParseModel(sources);
  if (!model || HasErrors(CheckWellformed(*model))) {
    err << "E_TESTGEN: generated tests do not integrate with the project\n";
    if (model) PrintDiagnostics(o.dir, CheckWellformed(*model), err);
    return kFailed;
  }
  std::size_t coverable = 0;
  for (const GeneratedTest& t : result->tests) coverable += t.coverable ? 1 : 0;
  for (const Diagnostic& w : result->warnings) err << "warning " << w.code << ": " << w.message << "\n";
  for (const GeneratedTest& t : result->tests) {
    if (!t.coverable) out << "UNCOVERABLE " << t.name << " " << t.reason << "\n";
  }
  out << "GENERATED " << coverable << " of " << result->tests.size() << " goals\n";
  WriteUnder(o.dir, {{file, merged}}, out);
  auto selected = ReadProjectSources(o.dir);
  if (selected && std::none_of(selected->begin(), selected->end(),
                               [&](const SourceUnit& unit) { return unit.path == file; })) {
    err << "warning W_NOT_IN_MANIFEST: " << file << " is not selected by project.amw\n";
  }
  return kOk;
}

int Refactor(const Options& o, std::ostream& out, std::ostream& err) {
  auto project = LoadChecked(o.dir, out);
  if (!project) return kFailed;
  RefactoringRequest request;
  request.rule = o.rule;
  request.args = o.args;
  request.default_value = o.default_value;
  request.clone_values = o.clones;
  request.allow_published = o.allow_published;
  RefactoringReport report = ApplyRefactoring(project->model, request);
  if (report.applied && o.verify) {
    report.preservation = VerifyPreservation(project->model, *report.model_after);
  }
  out << report.RenderLines();
  for (const ContextViolation& v : report.violations) {
    err << v.code << " at " << v.subject << ": " << v.message << "\n";
  }
  if (report.preservation) {
    for (const Diagnostic& w : report.preservation->warnings) err << "warning " << w.code << ": " << w.message << "\n";
  }
  if (!report.applied) return kFailed;
  if (report.preservation && !report.preservation->preserved) {
    err << "acceptance verdicts changed; nothing written\n"
        << "before:\n" << report.preservation->before.RenderLines()
        << "after:\n" << report.preservation->after.RenderLines();
    return kFailed;
  }
  if (!o.dry_run) WriteUnder(o.dir, RenderChangedFiles(*project, *report.model_after), out);
  return kOk;
}

std::optional<Template> ResolveTemplate(const std::string& dir, const std::string& name) {
  for (const std::string& candidate : {InDir(dir, "templates/" + name + ".amt"), name}) {
    if (fs::is_regular_file(candidate)) {
      return Template{fs::path(candidate).stem().string(), ReadFile(candidate)};
    }
  }
  return FindBuiltinTemplate(name);
}

int Generate(const Options& o, std::ostream& out, std::ostream& err) {
  auto project = LoadChecked(o.dir, out);
  if (!project) return kFailed;
  std::optional<Template> tmpl = ResolveTemplate(o.dir, o.template_name);
  if (!tmpl) {
    err << "E_TEMPLATE: no template named '" << o.template_name << "'\n";
    return kFailed;
  }
  auto rendered = Render(project->model, *tmpl);
  if (!rendered) {
    PrintDiagnostics("", rendered.error(), out);
    return kFailed;
  }
  std::string root = o.out_dir.empty() ? InDir(o.dir, "gen/" + tmpl->name) : o.out_dir;
  std::map<std::string, std::string> files;
  for (const GenFile& f : *rendered) files[f.path] = f.text;
  WriteUnder(root, files, out);
  return kOk;
}

int Fmt(const Options& o, std::ostream& out) {
  auto sources = ReadProjectSources(o.dir);
  if (!sources) {
    PrintDiagnostics(o.dir, sources.error(), out);
    return kFailed;
  }
  std::map<std::string, std::string> changed;
  DiagnosticList diagnostics;
  for (const SourceUnit& unit : *sources) {
    auto formatted = FormatSource(unit.text, unit.path);
    if (!formatted) {
      diagnostics.insert(diagnostics.end(), formatted.error().begin(), formatted.error().end());
    } else if (*formatted != unit.text) {
      changed[unit.path] = *formatted;
    }
  }
  if (!diagnostics.empty()) {
    PrintDiagnostics(o.dir, diagnostics, out);
    return kFailed;
  }
  if (o.check_only) {
    for (const auto& [path, text] : changed) out << "UNFORMATTED " << InDir(o.dir, path) << "\n";
    return changed.empty() ? kOk : kFailed;
  }
  WriteUnder(o.dir, changed, out);
  return kOk;
}

int Verify(const Options& o, std::ostream& out, std::ostream& err) {
  auto before = LoadChecked(o.dir, out);
  auto after = LoadChecked(o.other_dir, out);
  if (!before || !after) return kFailed;
  PreservationResult result = VerifyPreservation(before->model, after->model);
  for (const Diagnostic& w : result.warnings) err << "warning " << w.code << ": " << w.message << "\n";
  out << "before:\n" << result.before.RenderLines() << "after:\n" << result.after.RenderLines();
  out << "PRESERVED " << (result.preserved ? "true" : "false") << "\n";
  return result.preserved ? kOk : kFailed;
}

int Obsolete(const Options& o, std::ostream& out) {
  auto project = LoadProject(o.dir);
  if (!project) {
    PrintDiagnostics(o.dir, project.error(), out);
    return kFailed;
  }
  for (const ObsoleteWarning& w : ReportObsolete(project->model)) {
    out << "OBSOLETE " << w.test << ": " << w.reason << "\n";
  }
  return kOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Model-based testing and refactoring workbench"};
  app.name("amw");
  app.require_subcommand(1, 1);

  auto* check = app.add_subcommand("check", "Parse and check a project");
  check->add_option("dir", o.dir, "Project directory")->required();

  auto* test = app.add_subcommand("test", "Run the project's tests");
  test->add_option("dir", o.dir, "Project directory")->required();
  test->add_option("--category", o.categories, "unit, integration or acceptance")
      ->delimiter(',')
      ->check(CLI::IsMember({"unit", "integration", "acceptance"}));
  test->add_option("--filter", o.filter, "Test name glob");
  test->add_option("--report", o.report, "Write machine-readable results to FILE");

  auto* testgen = app.add_subcommand("testgen", "Derive tests from a statechart");
  testgen->add_option("dir", o.dir, "Project directory")->required();
  testgen->add_option("--chart", o.chart, "Statechart (owner class name)")->required();
  testgen->add_option("--coverage", o.coverage, "state, transition or path")
      ->check(CLI::IsMember({"state", "transition", "path"}));
  testgen->add_option("--k", o.k, "Path length bound")->check(CLI::PositiveNumber);
  testgen->add_option("--int-bound", o.int_bound, "Int parameters range over [-B, B]")
      ->check(CLI::NonNegativeNumber);
  testgen->add_option("--seed-config", o.seed_config, "Configuration holding the chart's object");

  auto* refactor = app.add_subcommand("refactor", "Apply a refactoring");
  refactor->add_option("dir", o.dir, "Project directory")->required();
  refactor->add_option("--rule", o.rule, "Rule name")->required();
  refactor->add_option("--args", o.args, "Comma-separated rule arguments")->delimiter(',')->required();
  refactor->add_option("--default", o.default_value, "Value for slots the rule adds");
  refactor->add_option("--clone", o.clones, "Clone glass-box tests once per value")->delimiter(',');
  refactor->add_flag("--allow-published", o.allow_published, "Permit changes to acceptance tests");
  refactor->add_flag("--dry-run", o.dry_run, "Print the report without writing");
  refactor->add_flag("--verify", o.verify, "Require unchanged acceptance verdicts");

  auto* generate = app.add_subcommand("generate", "Render a template");
  generate->add_option("dir", o.dir, "Project directory")->required();
  generate->add_option("--template", o.template_name, "Template name or .amt file")->required();
  generate->add_option("--out", o.out_dir, "Output directory (default DIR/gen/NAME)");

  auto* fmt = app.add_subcommand("fmt", "Reprint files canonically");
  fmt->add_option("dir", o.dir, "Project directory")->required();
  fmt->add_flag("--check", o.check_only, "List unformatted files instead of writing");

  auto* verify = app.add_subcommand("verify", "Compare acceptance verdicts of two projects");
  verify->add_option("before", o.dir, "Project before the change")->required();
  verify->add_option("after", o.other_dir, "Project after the change")->required();

  auto* obsolete = app.add_subcommand("obsolete", "List tests referring to missing elements");
  obsolete->add_option("dir", o.dir, "Project directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return Check(o, out);
    if (*test) return Test(o, out);
    if (*testgen) return Testgen(o, out, err);
    if (*refactor) return Refactor(o, out, err);
    if (*generate) return Generate(o, out, err);
    if (*fmt) return Fmt(o, out);
    if (*verify) return Verify(o, out, err);
    return Obsolete(o, out);
  } catch (const Error& e) {
    err << e.code() << ": " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace amw

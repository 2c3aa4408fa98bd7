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

#ifndef AMW_DIAGNOSTIC_H_
#define AMW_DIAGNOSTIC_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace amw {

// Position of a construct in its source file. Positions never take part in
// structural equality of model elements, so every SourceLoc compares equal.
struct SourceLoc {
  std::string file;
  int line = 0;
  int column = 0;

  friend bool operator==(const SourceLoc&, const SourceLoc&) { return true; }
};

enum class Severity { kError, kWarning };

struct Diagnostic {
  std::string code;
  Severity severity = Severity::kError;
  SourceLoc loc;
  std::string message;
};

using DiagnosticList = std::vector<Diagnostic>;

// "file:line:col: error CODE: message"
std::string FormatDiagnostic(const Diagnostic& diagnostic);
std::string FormatDiagnostics(const DiagnosticList& diagnostics);
bool HasErrors(const DiagnosticList& diagnostics);

// A coded failure. Codes follow the E_XXX convention used in diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, SourceLoc loc = {})
      : std::runtime_error(message), code_(std::move(code)), loc_(std::move(loc)) {}

  const std::string& code() const { return code_; }
  const SourceLoc& loc() const { return loc_; }

  Diagnostic ToDiagnostic() const {
    return Diagnostic{code_, Severity::kError, loc_, what()};
  }

 private:
  std::string code_;
  SourceLoc loc_;
};

// Minimal value-or-error holder for operations whose failures are part of
// their contract rather than exceptional.
template <typename T, typename E = Error>
class Expected {
 public:
  Expected(T value) : data_(std::move(value)) {}  // NOLINT
  Expected(E error) : data_(std::move(error)) {}  // NOLINT

  bool ok() const { return data_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw std::get<1>(data_);
    return std::get<0>(data_);
  }
  T& value() & {
    if (!ok()) throw std::get<1>(data_);
    return std::get<0>(data_);
  }
  T&& value() && {
    if (!ok()) throw std::get<1>(data_);
    return std::get<0>(std::move(data_));
  }
  const E& error() const { return std::get<1>(data_); }

  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

 private:
  std::variant<T, E> data_;
};

}  // namespace amw

#endif  // AMW_DIAGNOSTIC_H_

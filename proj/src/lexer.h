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

#ifndef AMW_SRC_LEXER_H_
#define AMW_SRC_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

#include "amw/diagnostic.h"

namespace amw::internal {

struct Token {
  enum class Kind { kIdent, kKeyword, kInt, kString, kPunct, kEnd };

  Kind kind = Kind::kEnd;
  std::string text;  // identifier/keyword/punctuation text, decoded string, digits
  int line = 1;
  int column = 1;
};

// Splits `text` into tokens. Lexical errors are appended to `diagnostics`
// and the offending characters skipped. The result always ends in kEnd.
std::vector<Token> Tokenize(std::string_view text, const std::string& path,
                            DiagnosticList& diagnostics);

}  // namespace amw::internal

#endif  // AMW_SRC_LEXER_H_

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

#include "lexer.h"

#include <cctype>

#include "amw/model.h"

namespace amw::internal {

namespace {

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  Lexer(std::string_view text, const std::string& path, DiagnosticList& diagnostics)
      : text_(text), path_(path), diagnostics_(diagnostics) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (true) {
      SkipTrivia();
      if (pos_ >= text_.size()) break;
      Token token;
      token.line = line_;
      token.column = column_;
      char c = text_[pos_];
      if (IsIdentStart(c)) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && IsIdentChar(text_[pos_])) Advance();
        token.text = std::string(text_.substr(start, pos_ - start));
        token.kind = IsReservedWord(token.text) ? Token::Kind::kKeyword : Token::Kind::kIdent;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          Advance();
        }
        token.kind = Token::Kind::kInt;
        token.text = std::string(text_.substr(start, pos_ - start));
      } else if (c == '"') {
        if (!LexString(token)) continue;
      } else if (!LexPunct(token)) {
        Report(token.line, token.column,
               std::string("unexpected character '") + c + "'");
        Advance();
        continue;
      }
      tokens.push_back(std::move(token));
    }
    Token end;
    end.kind = Token::Kind::kEnd;
    end.line = line_;
    end.column = column_;
    tokens.push_back(end);
    return tokens;
  }

 private:
  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipTrivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        Advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
      } else {
        break;
      }
    }
  }

  bool LexString(Token& token) {
    Advance();  // opening quote
    std::string value;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n' || text_[pos_] == '\r') {
        Report(token.line, token.column, "unterminated string literal");
        return false;
      }
      char c = text_[pos_];
      if (c == '"') {
        Advance();
        break;
      }
      if (c == '\\') {
        int line = line_;
        int column = column_;
        Advance();
        if (pos_ < text_.size() && (text_[pos_] == '"' || text_[pos_] == '\\')) {
          value += text_[pos_];
          Advance();
        } else {
          Report(line, column, "invalid escape sequence in string literal");
        }
        continue;
      }
      value += c;
      Advance();
    }
    token.kind = Token::Kind::kString;
    token.text = std::move(value);
    return true;
  }

  bool LexPunct(Token& token) {
    static constexpr std::string_view kTwoChar[] = {"->", "<>", "<=", ">="};
    for (std::string_view p : kTwoChar) {
      if (text_.substr(pos_, 2) == p) {
        token.kind = Token::Kind::kPunct;
        token.text = std::string(p);
        Advance();
        Advance();
        return true;
      }
    }
    static constexpr std::string_view kOneChar = "{}()[];:,.=<>+-*|/@";
    if (kOneChar.find(text_[pos_]) == std::string_view::npos) return false;
    token.kind = Token::Kind::kPunct;
    token.text = std::string(1, text_[pos_]);
    Advance();
    return true;
  }

  void Report(int line, int column, std::string message) {
    diagnostics_.push_back(
        Diagnostic{"E_SYNTAX", Severity::kError, SourceLoc{path_, line, column}, std::move(message)});
  }

  std::string_view text_;
  const std::string& path_;
  DiagnosticList& diagnostics_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::vector<Token> Tokenize(std::string_view text, const std::string& path,
                            DiagnosticList& diagnostics) {
  return Lexer(text, path, diagnostics).Run();
}

}  // namespace amw::internal

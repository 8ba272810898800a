// Copyright 2026 The scverify Authors
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

#include "scv/frontend/lexer.hpp"

#include <algorithm>
#include <cctype>

namespace scv::frontend {

namespace {

constexpr std::string_view kKeywords[] = {
    "contract", "library", "interface", "function", "modifier", "mapping",
    "returns", "return", "if", "else", "while", "for", "do", "break", "continue",
    "public", "private", "internal", "external", "payable", "view", "pure",
    "constant", "true", "false", "pragma", "import", "struct", "enum", "event",
    "emit", "assembly", "new", "using", "is", "throw", "delete", "var",
    "storage", "memory", "calldata", "constructor", "string", "bytes"};

// Longest first so that maximal munch works by prefix test.
constexpr std::string_view kPuncts[] = {
    ">>=", "<<=", "**", "++", "--", "+=", "-=", "*=", "/=", "%=", "|=", "&=", "^=",
    "==", "!=", "<=", ">=", "&&", "||", "<<", ">>", "=>", "+", "-", "*", "/", "%",
    "=", "<", ">", "!", "&", "|", "^", "~", "(", ")", "{", "}", "[", "]", ";", ",", "."};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

class Lexer {
 public:
  Lexer(const SourceFilePtr& file, std::size_t begin, std::size_t end, bool annotation)
      : file_(file), src_(file->text()), pos_(begin), end_(end), annotation_(annotation) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    at_line_start_ = true;
    for (;;) {
      skip_space_and_comments(out);
      if (pos_ >= end_) break;
      out.push_back(next());
      at_line_start_ = false;
    }
    Token end;
    end.kind = TokenKind::End;
    end.span = SourceSpan::make(file_, end_, end_);
    out.push_back(end);
    return out;
  }

 private:
  char peek(std::size_t k = 0) const { return pos_ + k < end_ ? src_[pos_ + k] : '\0'; }

  [[noreturn]] void fail(std::size_t at, const std::string& msg) {
    raise(ErrorKind::LexError, SourceSpan::make(file_, at, std::min(at + 1, end_)), msg);
  }

  void skip_space_and_comments(std::vector<Token>& out) {
    while (pos_ < end_) {
      char c = peek();
      if (c == '\n') {
        at_line_start_ = true;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (annotation_ && at_line_start_ && c == '/' && peek(1) == '/' && peek(2) == '/') {
        pos_ += 3;  // continuation of a `///` doc comment
        at_line_start_ = false;
      } else if (annotation_ && c == '*' && at_line_start_ && peek(1) != '*') {
        ++pos_;  // continuation marker inside a block doc comment
        at_line_start_ = false;
      } else if (!annotation_ && c == '/' && peek(1) == '/' && peek(2) == '/' && peek(3) != '/') {
        doc_lines(out);
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < end_ && peek() != '\n') ++pos_;
      } else if (!annotation_ && c == '/' && peek(1) == '*' && peek(2) == '*' && peek(3) != '/') {
        doc_block(out);
      } else if (c == '/' && peek(1) == '*') {
        std::size_t start = pos_;
        auto close = src_.find("*/", pos_ + 2);
        if (close == std::string::npos || close + 2 > end_) fail(start, "unterminated comment");
        pos_ = close + 2;
      } else {
        return;
      }
    }
  }

  void doc_block(std::vector<Token>& out) {
    std::size_t start = pos_;
    auto close = src_.find("*/", pos_ + 3);
    if (close == std::string::npos || close + 2 > end_) fail(start, "unterminated comment");
    Token t;
    t.kind = TokenKind::DocComment;
    t.span = SourceSpan::make(file_, start, close + 2);
    std::size_t body = start + 3;
    t.text = src_.substr(body, close - body);
    for (std::size_t line = body; line <= close;) {
      std::size_t nl = src_.find('\n', line);
      std::size_t stop = std::min(nl == std::string::npos ? close : nl, close);
      std::size_t b = line;
      while (b < stop && (src_[b] == ' ' || src_[b] == '\t')) ++b;
      if (line != body && b < stop && src_[b] == '*') ++b;
      t.body_lines.emplace_back(b, stop);
      if (stop == close) break;
      line = stop + 1;
    }
    out.push_back(std::move(t));
    pos_ = close + 2;
  }

  void doc_lines(std::vector<Token>& out) {
    Token t;
    t.kind = TokenKind::DocComment;
    std::size_t start = pos_;
    std::size_t last_end = pos_;
    for (;;) {
      std::size_t body = pos_ + 3;
      std::size_t nl = src_.find('\n', pos_);
      std::size_t stop = nl == std::string::npos || nl > end_ ? end_ : nl;
      t.body_lines.emplace_back(body, stop);
      t.text += src_.substr(body, stop - body) + "\n";
      last_end = stop;
      pos_ = stop;
      // Continue with an immediately following `///` line.
      std::size_t look = pos_;
      while (look < end_ && std::isspace(static_cast<unsigned char>(src_[look]))) ++look;
      if (src_.compare(look, 3, "///") == 0 && src_.compare(look, 4, "////") != 0) {
        pos_ = look;
        continue;
      }
      break;
    }
    t.span = SourceSpan::make(file_, start, last_end);
    out.push_back(std::move(t));
  }

  Token next() {
    std::size_t start = pos_;
    char c = peek();
    Token t;
    if (ident_start(c)) {
      while (pos_ < end_ && ident_char(peek())) ++pos_;
      t.text = src_.substr(start, pos_ - start);
      t.kind = is_keyword(t.text) ? TokenKind::Keyword : TokenKind::Identifier;
      if (!annotation_ && t.text == "pragma") {
        // Version directives are ignored; their text is not Solidity tokens.
        t.span = SourceSpan::make(file_, start, pos_);
        auto semi = src_.find(';', pos_);
        if (semi == std::string::npos || semi > end_) fail(start, "unterminated pragma");
        pos_ = semi;
        return t;
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (c == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
        pos_ += 2;
        while (pos_ < end_ && std::isxdigit(static_cast<unsigned char>(peek()))) ++pos_;
      } else {
        while (pos_ < end_ && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        if (peek() == '.' || peek() == 'e' || peek() == 'E') {
          fail(pos_, "fractional and exponent literals are not supported");
        }
      }
      if (pos_ < end_ && ident_char(peek())) fail(pos_, "malformed number");
      t.kind = TokenKind::Number;
      t.text = src_.substr(start, pos_ - start);
    } else if (c == '"' || c == '\'') {
      ++pos_;
      while (pos_ < end_ && peek() != c && peek() != '\n') {
        if (peek() == '\\') ++pos_;
        ++pos_;
      }
      if (peek() != c) fail(start, "unterminated string");
      ++pos_;
      t.kind = TokenKind::String;
      t.text = src_.substr(start + 1, pos_ - start - 2);
    } else {
      for (auto p : kPuncts) {
        if (src_.compare(pos_, p.size(), p) == 0 && pos_ + p.size() <= end_) {
          t.kind = TokenKind::Punct;
          t.text = std::string(p);
          pos_ += p.size();
          break;
        }
      }
      if (t.kind != TokenKind::Punct) {
        if (c == '?' || c == ':') {
          t.kind = TokenKind::Punct;
          t.text = std::string(1, c);
          ++pos_;
        } else {
          fail(start, std::string("illegal character '") + c + "'");
        }
      }
    }
    t.span = SourceSpan::make(file_, start, pos_);
    return t;
  }

  SourceFilePtr file_;
  const std::string& src_;
  std::size_t pos_;
  std::size_t end_;
  bool annotation_;
  bool at_line_start_ = true;
};

}  // namespace

bool is_keyword(std::string_view word) {
  return std::find(std::begin(kKeywords), std::end(kKeywords), word) != std::end(kKeywords);
}

std::vector<Token> tokenize(const SourceFilePtr& file) {
  return Lexer(file, 0, file->text().size(), false).run();
}

std::vector<Token> tokenize_range(const SourceFilePtr& file, std::size_t begin,
                                  std::size_t end) {
  return Lexer(file, begin, end, true).run();
}

}  // namespace scv::frontend

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

#pragma once

#include "scv/support/source.hpp"

#include <string>
#include <vector>

namespace scv::frontend {

enum class TokenKind {
  Identifier,
  Keyword,
  Number,
  String,
  Punct,
  DocComment,  // text of `/** ... */` or a run of `///` lines
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;  // lexeme; for doc comments the raw comment body
  SourceSpan span;
  /// For doc comments: byte ranges (into the file) of the comment body,
  /// one per physical line, with comment markers removed.
  std::vector<std::pair<std::size_t, std::size_t>> body_lines;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_punct(std::string_view t) const { return is(TokenKind::Punct, t); }
  bool is_keyword(std::string_view t) const { return is(TokenKind::Keyword, t); }
};

/// Splits a source file into tokens. Ordinary comments are dropped;
/// documentation comments become DocComment tokens. Throws
/// CompileError(LexError) on an illegal character or an unterminated
/// comment or string.
std::vector<Token> tokenize(const SourceFilePtr& file);

/// Tokenizes the byte range [begin, end) of `file` as expression text,
/// ignoring a leading `*` on each line (the `/** */` continuation).
std::vector<Token> tokenize_range(const SourceFilePtr& file, std::size_t begin,
                                  std::size_t end);

bool is_keyword(std::string_view word);

}  // namespace scv::frontend

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

#include "scv/support/source.hpp"

#include <algorithm>

namespace scv {

SourceFile::SourceFile(std::string path, std::string text)
    : path_(std::move(path)), text_(std::move(text)) {
  line_starts_.push_back(0);
  for (std::size_t i = 0; i < text_.size(); ++i) {
    if (text_[i] == '\n') line_starts_.push_back(i + 1);
  }
}

std::pair<unsigned, unsigned> SourceFile::line_col(std::size_t offset) const {
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
  auto line = static_cast<unsigned>(it - line_starts_.begin());
  auto column = static_cast<unsigned>(offset - line_starts_[line - 1]) + 1;
  return {line, column};
}

SourceSpan SourceSpan::make(const SourceFilePtr& file, std::size_t begin,
                            std::size_t end) {
  SourceSpan span;
  span.file = file;
  span.begin = begin;
  span.end = end;
  if (file) {
    auto [line, column] = file->line_col(begin);
    span.line = line;
    span.column = column;
  }
  return span;
}

SourceSpan SourceSpan::merge(const SourceSpan& a, const SourceSpan& b) {
  if (!a.valid()) return b;
  if (!b.valid() || a.file != b.file) return a;
  return make(a.file, std::min(a.begin, b.begin), std::max(a.end, b.end));
}

std::string SourceSpan::to_string() const {
  if (!file) return "<unknown>";
  return file->path() + ":" + std::to_string(line) + ":" +
         std::to_string(column);
}

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LexError: return "LexError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnsupportedFeature: return "UnsupportedFeature";
    case ErrorKind::AnnotationError: return "AnnotationError";
    case ErrorKind::ScopeError: return "ScopeError";
    case ErrorKind::NameError: return "NameError";
    case ErrorKind::TypeError: return "TypeError";
    case ErrorKind::SumError: return "SumError";
    case ErrorKind::TranslationError: return "TranslationError";
    case ErrorKind::UnsupportedOperation: return "UnsupportedOperation";
    case ErrorKind::RecursionError: return "RecursionError";
    case ErrorKind::EmitError: return "EmitError";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::DomainTooLarge: return "DomainTooLarge";
  }
  return "Error";
}

CompileError::CompileError(ErrorKind kind, SourceSpan span,
                           const std::string& message)
    : std::runtime_error(span.to_string() + ": " +
                         std::string(error_kind_name(kind)) + ": " + message),
      kind_(kind),
      span_(std::move(span)),
      detail_(message) {}

void raise(ErrorKind kind, const SourceSpan& span, const std::string& message) {
  throw CompileError(kind, span, message);
}

}  // namespace scv

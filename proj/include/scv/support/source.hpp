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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scv {

/// An input file held in memory, with a line-start table for span lookup.
class SourceFile {
 public:
  SourceFile(std::string path, std::string text);

  const std::string& path() const { return path_; }
  const std::string& text() const { return text_; }

  /// 1-based line and column of a byte offset.
  std::pair<unsigned, unsigned> line_col(std::size_t offset) const;

 private:
  std::string path_;
  std::string text_;
  std::vector<std::size_t> line_starts_;
};

using SourceFilePtr = std::shared_ptr<const SourceFile>;

/// Half-open byte range in a source file plus its 1-based start position.
struct SourceSpan {
  SourceFilePtr file;
  std::size_t begin = 0;
  std::size_t end = 0;
  unsigned line = 0;
  unsigned column = 0;

  static SourceSpan make(const SourceFilePtr& file, std::size_t begin,
                         std::size_t end);
  /// Smallest span covering both; falls back to `a` across files.
  static SourceSpan merge(const SourceSpan& a, const SourceSpan& b);

  bool valid() const { return file != nullptr; }
  std::string file_name() const { return file ? file->path() : std::string(); }
  std::string to_string() const;
};

/// Error classes raised by the pipeline. The kind names match the
/// categories users see in reports.
enum class ErrorKind {
  LexError,
  ParseError,
  UnsupportedFeature,
  AnnotationError,
  ScopeError,
  NameError,
  TypeError,
  SumError,
  TranslationError,
  UnsupportedOperation,
  RecursionError,
  EmitError,
  ConfigError,
  DomainTooLarge,
};

std::string_view error_kind_name(ErrorKind kind);

class CompileError : public std::runtime_error {
 public:
  CompileError(ErrorKind kind, SourceSpan span, const std::string& message);

  ErrorKind kind() const { return kind_; }
  const SourceSpan& span() const { return span_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  SourceSpan span_;
  std::string detail_;
};

[[noreturn]] void raise(ErrorKind kind, const SourceSpan& span,
                        const std::string& message);

}  // namespace scv

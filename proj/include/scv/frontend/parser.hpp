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

#include "scv/frontend/ast.hpp"
#include "scv/frontend/lexer.hpp"

#include <string>
#include <vector>

namespace scv::frontend {

/// The declaration a documentation comment is attached to.
enum class AnnotationScope { Contract, Function, Loop, Statement };

/// Parses one token stream into an unresolved unit. Node ids start at
/// `next_id` and the counter is advanced, so that several files can share
/// one id space.
CompilationUnit parse(const std::vector<Token>& tokens, int& next_id);
CompilationUnit parse(const std::vector<Token>& tokens);

/// Tokenizes and parses each file into one unit.
CompilationUnit parse_sources(const std::vector<SourceFilePtr>& files);

/// Extracts `@notice invariant|precondition|postcondition E` entries from a
/// doc comment token. Other NatSpec text is ignored. Throws
/// AnnotationError for a malformed or effectful expression and ScopeError
/// for a kind that does not fit `scope`.
std::vector<Annotation> parse_annotations(const Token& doc, AnnotationScope scope,
                                          int& next_id);

/// Parses a standalone expression (used for tests and annotation payloads).
ExprPtr parse_expression(const std::vector<Token>& tokens, int& next_id);

}  // namespace scv::frontend

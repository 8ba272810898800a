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

#include <string>
#include <vector>

namespace scv::frontend {

struct ResolveOptions {
  /// Width given to unsized `int` / `uint`.
  unsigned default_bits = 256;
  /// Lets tiny widths through so the concrete oracle can enumerate them.
  bool allow_small_widths = false;
};

/// Binds names, assigns types and checks the static rules of the subset.
/// Rewrites the tree in place: literal subexpressions are folded, `sum(m)`
/// becomes a Sum node, conversions become Conversion nodes and implicit
/// widenings are made explicit. Throws CompileError on the first problem.
void resolve(CompilationUnit& unit, const ResolveOptions& options = {});

/// Parses and resolves the given files.
CompilationUnit load(const std::vector<SourceFilePtr>& files, const ResolveOptions& options = {});

}  // namespace scv::frontend

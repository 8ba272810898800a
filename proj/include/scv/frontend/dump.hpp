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

namespace scv::frontend {

struct DumpOptions {
  bool spans = false;  // append `@line:col` to every node
};

/// Deterministic tree dump. After resolve() it also shows types and
/// bindings; node ids are never printed.
std::string dump_ast(const CompilationUnit& unit, const DumpOptions& options = {});

/// Pretty-prints an unresolved unit back to source, annotations included.
std::string to_solidity(const CompilationUnit& unit);
std::string to_solidity(const Expr& expr);

}  // namespace scv::frontend

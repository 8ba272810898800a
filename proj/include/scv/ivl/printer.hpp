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

#include "scv/ivl/stmt.hpp"

#include <string>

namespace scv::ivl {

/// Deterministic Boogie-like text. parse_program() accepts this output.
std::string print_expr(const ExprPtr& e);
std::string print_stmt(const StmtPtr& s, int indent = 0);
std::string print_procedure(const Procedure& p);
std::string print_program(const Program& p);

/// Parse the textual form. Intended for tests and hand-written oracle
/// programs; translated contracts never go through text.
Program parse_program(const std::string& text,
                      const std::string& path = "<ivl>");

}  // namespace scv::ivl

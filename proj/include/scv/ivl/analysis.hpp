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

#include <set>
#include <string>
#include <vector>

namespace scv::ivl {

/// Name of the overflow accumulator; its assignments are checked for the
/// accumulate-then-reset discipline.
inline constexpr const char* kOverflowFlag = "__oc";

/// Typing, name resolution, label uniqueness and overflow-flag
/// discipline. Returns an empty list when the program is well formed.
std::vector<std::string> well_formed(const Program& program);

/// Every variable that may be written by `s` (assignments and havocs).
std::set<std::string> modified_vars(const StmtPtr& s);

/// Free variables of an expression.
std::set<std::string> free_vars(const ExprPtr& e);

}  // namespace scv::ivl

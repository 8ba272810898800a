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
#include "scv/ivl/stmt.hpp"
#include "scv/support/mode.hpp"

namespace scv::translator {

inline constexpr const char* kThis = "__this";
inline constexpr const char* kSender = "__msg_sender";
inline constexpr const char* kValue = "__msg_value";
inline constexpr const char* kBalance = "__balance";
inline constexpr const char* kAddressZero = "__address0";
inline constexpr const char* kSumPrefix = "__sum_";

/// Lowers a resolved unit to one IVL program: state variables become
/// `[address]T` globals, every entry point of every contract becomes a
/// procedure, internal and library calls are inlined or spec-expanded.
ivl::Program translate_unit(const frontend::CompilationUnit& unit, ArithMode mode);

}  // namespace scv::translator

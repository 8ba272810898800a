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

#include "scv/support/mode.hpp"
#include "scv/vcgen/vcgen.hpp"

#include <optional>
#include <string>

namespace scv::smt {

struct EmitOptions {
  std::optional<std::string> logic;  // overrides the computed logic
  bool produce_models = false;
};

/// Most specific quantifier-free logic covering the formula, or "ALL"
/// when integers and bitvectors are mixed.
std::string select_logic(const vcgen::VerificationCondition& vc);

/// Complete SMT-LIB2 script. Subterms shared in the formula DAG are
/// emitted once as `define-fun`. Throws CompileError(EmitError) when a
/// node has no encoding in `mode` (bitvector nodes outside bv mode).
std::string emit_smtlib(const vcgen::VerificationCondition& vc, ArithMode mode,
                        const EmitOptions& options = {});

/// SMT-LIB2 rendering of a sort.
std::string sort_name(const ivl::Type& type);

}  // namespace scv::smt

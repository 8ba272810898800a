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
#include <vector>

namespace scv::vcgen {

/// Loop-free, assignment-free form: only assume, assert, if and seq over
/// versioned symbols (`x@0`, `x@1`, ...).
struct PassiveProcedure {
  std::string name;
  std::vector<ivl::VarDecl> symbols;  // every version, in creation order
  std::vector<ivl::ExprPtr> entry_assumptions;
  ivl::StmtPtr body;
};

struct VerificationCondition {
  std::string procedure;
  ivl::DiagnosticLabel label;
  /// Satisfiable iff the obligation can fail: the negated weakest
  /// precondition conjoined with the entry assumptions.
  ivl::ExprPtr formula;
  std::vector<ivl::VarDecl> symbols;  // free symbols of `formula`
};

/// Replaces every loop by invariant-entry check, havoc, one abstract
/// iteration with a maintenance check, and the exit assumption.
ivl::Procedure cut_loops(const ivl::Procedure& proc);

/// Dynamic single assignment. Requires a loop-free procedure.
PassiveProcedure passify(const ivl::Procedure& proc,
                         const std::vector<ivl::VarDecl>& globals = {});

/// Weakest precondition of a passive statement.
ivl::ExprPtr wp(const ivl::StmtPtr& s, const ivl::ExprPtr& post);

/// Same as wp, treating every assert other than `keep` as an assume.
ivl::ExprPtr wp_for(const ivl::StmtPtr& s, const ivl::ExprPtr& post,
                    const std::string& keep);

/// One VC per assert label, in program order.
std::vector<VerificationCondition> generate_vcs(
    const ivl::Procedure& proc, const std::vector<ivl::VarDecl>& globals = {});
std::vector<VerificationCondition> generate_vcs(const ivl::Program& program);

}  // namespace scv::vcgen

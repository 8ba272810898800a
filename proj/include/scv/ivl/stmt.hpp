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

#include "scv/ivl/expr.hpp"
#include "scv/support/source.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scv::ivl {

/// What kind of obligation an assertion encodes. Drives report wording.
enum class Category {
  Assertion,
  Overflow,
  InvariantAtExit,
  InvariantBeforeExternalCall,
  Postcondition,
  Precondition,
  LoopInvariantEntry,
  LoopInvariantMaintained,
};

std::string_view category_name(Category category);
std::optional<Category> parse_category(std::string_view name);

/// Traceability record attached to every assertion.
struct DiagnosticLabel {
  std::string id;  // unique within a procedure
  Category category = Category::Assertion;
  SourceSpan span;
  std::string message;
};

/// Loop invariant. Free invariants are assumed but never checked.
struct LoopInvariant {
  ExprPtr expr;
  std::string id;
  SourceSpan span;
  std::string message;
  bool free = false;

  DiagnosticLabel entry_label() const;
  DiagnosticLabel maintained_label() const;
};

enum class StmtKind { Assign, Havoc, Assume, Assert, If, While, Seq };

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

/// Structured IVL statement. There is deliberately no call statement:
/// the translator inlines or spec-expands every call.
struct Stmt {
  StmtKind kind = StmtKind::Seq;
  std::string target;             // Assign
  std::vector<std::string> vars;  // Havoc
  ExprPtr expr;                   // Assign value; Assume/Assert formula; If/While condition
  DiagnosticLabel label;          // Assert
  std::vector<StmtPtr> children;  // Seq items; If {then, else}; While {body}
  std::vector<LoopInvariant> invariants;  // While

  const StmtPtr& then_branch() const { return children[0]; }
  const StmtPtr& else_branch() const { return children[1]; }
  const StmtPtr& body() const { return children[0]; }
};

StmtPtr assign(std::string target, ExprPtr value);
StmtPtr havoc(std::vector<std::string> vars);
StmtPtr assume(ExprPtr formula);
StmtPtr assert_(ExprPtr formula, DiagnosticLabel label);
StmtPtr if_(ExprPtr cond, StmtPtr then_branch, StmtPtr else_branch);
StmtPtr while_(ExprPtr cond, std::vector<LoopInvariant> invariants,
               StmtPtr body);
StmtPtr seq(std::vector<StmtPtr> items);
StmtPtr skip();

struct VarDecl {
  std::string name;
  TypePtr type;
};

struct Procedure {
  std::string name;
  std::vector<VarDecl> params;
  std::vector<VarDecl> locals;
  std::vector<ExprPtr> entry_assumptions;
  StmtPtr body;
  // Source-level provenance for reports.
  std::string contract;
  std::string function;
  SourceSpan span;
};

struct Program {
  std::vector<VarDecl> globals;
  std::vector<Procedure> procedures;

  const Procedure* find_procedure(std::string_view name) const;
  const VarDecl* find_global(std::string_view name) const;
};

/// Every assertion label reachable in a statement, in program order.
/// Loop invariants contribute nothing here; cut loops first.
std::vector<DiagnosticLabel> collect_assert_labels(const StmtPtr& s);

}  // namespace scv::ivl

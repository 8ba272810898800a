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

#include "scv/support/bigint.hpp"
#include "scv/support/source.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace scv::frontend {

// ---- types ------------------------------------------------------------

struct SolType;
using SolTypePtr = std::shared_ptr<const SolType>;

struct SolType {
  enum class Kind { Bool, Int, Address, Mapping, Array, Contract, Literal, Void };
  Kind kind = Kind::Void;
  bool is_signed = false;
  unsigned bits = 256;  // Int only; 0 = unsized (`int`/`uint`) before resolution
  SolTypePtr key;       // Mapping
  SolTypePtr value;     // Mapping, Array element
  std::string contract; // Contract

  static SolTypePtr boolean();
  static SolTypePtr integer(bool is_signed, unsigned bits);
  static SolTypePtr address();
  static SolTypePtr mapping(SolTypePtr key, SolTypePtr value);
  static SolTypePtr array(SolTypePtr element);
  static SolTypePtr contract_type(std::string name);
  static SolTypePtr literal();  // integer literal not yet bound to a type
  static SolTypePtr void_type();

  bool is_int() const { return kind == Kind::Int; }
  bool is_bool() const { return kind == Kind::Bool; }
  bool is_mapping() const { return kind == Kind::Mapping; }
  bool is_array() const { return kind == Kind::Array; }
  bool is_literal() const { return kind == Kind::Literal; }
  /// Addresses and contract references share the address representation.
  bool is_address_like() const { return kind == Kind::Address || kind == Kind::Contract; }
};

bool same_type(const SolType& a, const SolType& b);
/// `bool`, `address`, `int`, `uint`, `intN`, `uintN` with N in {8, 16, ..., 256}.
bool is_elementary_type_name(std::string_view s);
std::string to_string(const SolType& t);

// ---- expressions ----------------------------------------------------------

struct VarDecl;
struct FunctionDef;
struct ContractDef;

enum class ExprKind {
  BoolLiteral,
  NumberLiteral,
  StringLiteral,
  Identifier,
  Index,    // args = {base, index}
  Member,   // args = {base}; name = member
  Unary,    // args = {operand}; op
  Binary,   // args = {lhs, rhs}; op
  Call,     // args = {callee, actuals...}
  Sum,      // args = {mapping}; annotation only
  Assign,   // args = {lhs, rhs}; op is "=", "+=", ...; statement level only
  IncDec,   // args = {lvalue}; op is "++" or "--"
  Conversion,  // args = {operand}; produced by resolve() for explicit and implicit conversions
};

/// What an identifier or member refers to after resolution.
enum class RefKind {
  None,
  StateVar,
  LocalVar,  // parameter, return variable or local
  Function,
  Contract,  // a contract or library name
  This,
  Msg,
  MsgSender,
  MsgValue,
  Balance,    // `<address>.balance`
  Length,     // `<array>.length`
  Transfer,   // `<address>.transfer`
  Send,       // `<address>.send`
  CallMember, // `<address>.call`
  CallValue,  // `<address>.call.value`
  Builtin,    // require / assert / revert
  TypeName,   // elementary type used as a conversion: uint256(x)
};

/// How a resolved call is executed.
enum class CallKind {
  None,
  Internal,     // function of the current contract
  Library,      // library function (direct or through `using for`)
  External,     // public function of another contract instance
  Getter,       // public getter of another contract instance
  Require,
  Assert,
  Revert,
  Transfer,
  Send,
  CallValue,    // `a.call.value(v)(...)`, args rewritten to {recipient, amount}
};

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

struct Expr {
  ExprKind kind = ExprKind::Identifier;
  SourceSpan span;
  int id = 0;

  BigInt value;        // BoolLiteral (0/1), NumberLiteral (unit applied)
  std::string text;    // literal as written; StringLiteral payload
  std::string name;    // Identifier / Member
  std::string op;      // Unary / Binary / Assign / IncDec
  bool prefix = false; // IncDec
  std::vector<ExprPtr> args;

  // Filled by resolve().
  SolTypePtr type;
  RefKind ref = RefKind::None;
  const VarDecl* var = nullptr;          // StateVar / LocalVar
  const FunctionDef* function = nullptr; // Function and calls
  const ContractDef* contract = nullptr; // Contract, getters, external calls
  CallKind call = CallKind::None;
  ExprPtr receiver;  // External/Getter: instance; Library via using: bound first arg
  bool implicit = false;  // Conversion inserted by resolve()
};

// ---- statements -----------------------------------------------------------

enum class AnnotationKind { ContractInvariant, Precondition, Postcondition, LoopInvariant };

std::string_view annotation_kind_name(AnnotationKind kind);

struct Annotation {
  AnnotationKind kind = AnnotationKind::ContractInvariant;
  ExprPtr expr;
  SourceSpan span;
  std::string text;  // payload as written
};

struct Stmt;
using StmtPtr = std::shared_ptr<Stmt>;

enum class StmtKind {
  Block,
  VarDecl,      // decl, optional init in exprs[0]
  Expression,   // exprs[0]
  If,           // exprs[0]; body[0] then, body[1] optional else
  While,        // exprs[0]; body[0]
  For,          // body[0] init (may be null), exprs[0] cond (may be null), exprs[1] step (may be null), body[1]
  Return,       // exprs optional
  Placeholder,  // `_` in modifiers
  Throw,
};

struct VarDecl {
  enum class Kind { State, Parameter, Return, Local };
  enum class Visibility { Default, Public, Internal, Private };
  std::string name;
  SolTypePtr type;
  Kind kind = Kind::Local;
  Visibility visibility = Visibility::Default;
  bool is_constant = false;
  ExprPtr init;
  SourceSpan span;
  int id = 0;
};

struct Stmt {
  StmtKind kind = StmtKind::Block;
  SourceSpan span;
  int id = 0;
  std::vector<ExprPtr> exprs;
  std::vector<StmtPtr> body;
  std::shared_ptr<VarDecl> decl;
  std::vector<Annotation> invariants;  // While / For
};

// ---- declarations ---------------------------------------------------------

struct ModifierInvocation {
  std::string name;
  std::vector<ExprPtr> args;
  SourceSpan span;
  const struct ModifierDef* modifier = nullptr;  // filled by resolve()
};

struct ModifierDef {
  std::string name;
  std::vector<std::shared_ptr<VarDecl>> params;
  StmtPtr body;
  SourceSpan span;
  int id = 0;
};

struct FunctionDef {
  enum class Visibility { Default, Public, External, Internal, Private };
  std::string name;  // empty for the fallback
  std::vector<std::shared_ptr<VarDecl>> params;
  std::shared_ptr<VarDecl> returns;  // at most one
  Visibility visibility = Visibility::Default;
  bool is_payable = false;
  bool is_constructor = false;
  bool is_fallback = false;
  std::vector<ModifierInvocation> modifiers;
  StmtPtr body;  // null for a declaration without body
  std::vector<Annotation> pre;
  std::vector<Annotation> post;
  SourceSpan span;
  int id = 0;
  const ContractDef* owner = nullptr;  // filled by resolve()

  /// Public/external (or unmarked, which defaults to public).
  bool is_entry_point() const {
    return visibility == Visibility::Default || visibility == Visibility::Public ||
           visibility == Visibility::External;
  }
  bool has_spec() const { return !pre.empty() || !post.empty(); }
  std::string display_name() const;
};

struct UsingFor {
  std::string library;
  SolTypePtr type;  // null for `*`
  SourceSpan span;
};

struct ContractDef {
  std::string name;
  bool is_library = false;
  std::vector<std::shared_ptr<VarDecl>> state_vars;
  std::vector<std::shared_ptr<FunctionDef>> functions;
  std::vector<std::shared_ptr<ModifierDef>> modifiers;
  std::vector<Annotation> invariants;
  std::vector<UsingFor> using_for;
  SourceSpan span;
  int id = 0;

  const FunctionDef* constructor() const;
  const FunctionDef* fallback() const;
  const FunctionDef* find_function(std::string_view name) const;
  const VarDecl* find_state_var(std::string_view name) const;
  const ModifierDef* find_modifier(std::string_view name) const;
};

struct CompilationUnit {
  std::vector<std::shared_ptr<ContractDef>> contracts;
  std::vector<SourceFilePtr> files;
  bool resolved = false;

  const ContractDef* find_contract(std::string_view name) const;
};

}  // namespace scv::frontend

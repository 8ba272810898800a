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

#include "scv/frontend/dump.hpp"
#include "scv/frontend/lexer.hpp"
#include "scv/frontend/parser.hpp"
#include "scv/frontend/resolver.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <functional>

namespace scv::frontend {
namespace {

SourceFilePtr src(const std::string& text, const std::string& path = "t.sol") {
  return std::make_shared<SourceFile>(path, text);
}

CompilationUnit parse_text(const std::string& text) { return parse_sources({src(text)}); }

CompilationUnit load_text(const std::string& text, unsigned bits = 256) {
  ResolveOptions o;
  o.default_bits = bits;
  return load({src(text)}, o);
}

ErrorKind error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const CompileError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ConfigError;
}

std::string error_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const CompileError& e) {
    return e.what();
  }
  return "";
}

std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(testing::corpus_dir()))
    if (e.path().extension() == ".sol") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

SourceFilePtr corpus_file(const std::string& path) {
  return src(testing::read_file(path), path);
}

// ---- lexer ----

TEST(Lexer, MinimalContract) {
  auto toks = tokenize(src("contract C {}"));
  ASSERT_EQ(toks.size(), 5u);
  EXPECT_TRUE(toks[0].is_keyword("contract"));
  EXPECT_EQ(toks[1].kind, TokenKind::Identifier);
  EXPECT_EQ(toks[1].text, "C");
  EXPECT_TRUE(toks[2].is_punct("{"));
  EXPECT_TRUE(toks[3].is_punct("}"));
  EXPECT_EQ(toks[4].kind, TokenKind::End);
}

TEST(Lexer, DocCommentIsKeptAndBoundToContract) {
  auto file = src("/** @notice invariant x == y */ contract C { int x; int y; }");
  auto toks = tokenize(file);
  ASSERT_EQ(toks[0].kind, TokenKind::DocComment);
  EXPECT_TRUE(toks[1].is_keyword("contract"));
  auto unit = parse(toks);
  ASSERT_EQ(unit.contracts.size(), 1u);
  ASSERT_EQ(unit.contracts[0]->invariants.size(), 1u);
  EXPECT_EQ(unit.contracts[0]->invariants[0].text, "x == y");
}

TEST(Lexer, IllegalCharacterOutsideComment) {
  auto file = src("uint256 @ x;");
  try {
    tokenize(file);
    FAIL();
  } catch (const CompileError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LexError);
    EXPECT_EQ(e.span().column, 9u);
  }
}

TEST(Lexer, UnterminatedCommentAndString) {
  EXPECT_EQ(error_of([] { tokenize(src("contract C { /* open")); }), ErrorKind::LexError);
  EXPECT_EQ(error_of([] { tokenize(src("x = \"abc")); }), ErrorKind::LexError);
}

TEST(Lexer, TripleSlashLinesMerge) {
  auto toks = tokenize(src("/// @notice invariant a\n/// @notice invariant b\ncontract C {}"));
  ASSERT_EQ(toks[0].kind, TokenKind::DocComment);
  EXPECT_TRUE(toks[1].is_keyword("contract"));
}

TEST(Lexer, SpansCoverLexemes) {
  auto file = src("contract Cx { uint256 v; }");
  for (const auto& t : tokenize(file)) {
    ASSERT_LE(t.span.end, file->text().size());
    if (t.kind != TokenKind::End) {
      EXPECT_EQ(file->text().substr(t.span.begin, t.span.end - t.span.begin), t.text);
    }
  }
}

// ---- parser ----

TEST(Parser, SimpleBankShape) {
  auto unit = parse_sources({corpus_file(testing::corpus_dir() + "/fig1_simplebank_buggy.sol")});
  ASSERT_EQ(unit.contracts.size(), 1u);
  const auto& c = *unit.contracts[0];
  EXPECT_EQ(c.name, "SimpleBank");
  EXPECT_EQ(c.state_vars.size(), 1u);
  EXPECT_EQ(c.functions.size(), 2u);
  EXPECT_TRUE(c.functions[0]->is_payable);
  ASSERT_EQ(c.invariants.size(), 1u);
  EXPECT_EQ(c.invariants[0].kind, AnnotationKind::ContractInvariant);
  EXPECT_EQ(c.invariants[0].text, "sum(balances) == this.balance");
}

TEST(Parser, EmptyFile) { EXPECT_TRUE(parse_text("").contracts.empty()); }

TEST(Parser, UnsupportedConstructsAreNamed) {
  struct Case {
    std::string text, construct;
  };
  std::vector<Case> cases = {
      {"contract C { struct S { } }", "struct"},
      {"contract C { enum E { A } }", "enum"},
      {"contract C { function f() public { assembly { } } }", "assembly"},
      {"contract D {} contract C { function f() public { D d = new D(); } }", "new"},
      {"contract C { function f(address a) public { a.delegatecall(\"\"); } }", "delegatecall"},
      {"contract C is D {}", "inheritance"},
      {"contract C { event E(); }", "event"},
      {"contract C { function f() public { for (;;) { break; } } }", "break"},
      {"contract C { function f(bool b) public returns (uint) { return b ? 1 : 2; } }", "conditional expression"},
      {"contract C { string s; }", "string"},
      {"contract C { function f() public returns (uint, uint) { } }", "multiple return values"},
      {"import \"x.sol\";", "import"},
  };
  for (const auto& c : cases) {
    try {
      parse_text(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const CompileError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::UnsupportedFeature) << c.text << ": " << e.what();
      EXPECT_NE(std::string(e.what()).find(c.construct), std::string::npos) << e.what();
    }
  }
}

TEST(Parser, SyntaxErrorNamesExpectation) {
  std::string msg = error_message([] { parse_text("contract C { uint x }"); });
  EXPECT_NE(msg.find("expected ';'"), std::string::npos) << msg;
  EXPECT_EQ(error_of([] { parse_text("contract C { function f() public { x = ; } }"); }),
            ErrorKind::ParseError);
}

TEST(Parser, ReservedPrefixRejected) {
  EXPECT_EQ(error_of([] { parse_text("contract C { uint __x; }"); }), ErrorKind::NameError);
}

TEST(Parser, ModifierNeedsOnePlaceholder) {
  EXPECT_EQ(error_of([] { parse_text("contract C { modifier m() { require(true); } }"); }),
            ErrorKind::ParseError);
  EXPECT_NO_THROW(parse_text("contract C { modifier m() { require(true); _; } }"));
}

TEST(Parser, EtherUnits) {
  auto unit = parse_text("contract C { uint m = 1000 ether; uint t = 2 days; }");
  EXPECT_EQ(unit.contracts[0]->state_vars[0]->init->value, BigInt("1000000000000000000000"));
  EXPECT_EQ(unit.contracts[0]->state_vars[1]->init->value, 172800);
}

// ---- annotations ----

TEST(Annotations, PreAndPostOnFunction) {
  auto unit = parse_sources({corpus_file(testing::corpus_dir() + "/fig2_annotations.sol")});
  const auto* f = unit.contracts[0]->find_function("add_to_x");
  ASSERT_NE(f, nullptr);
  ASSERT_EQ(f->pre.size(), 1u);
  ASSERT_EQ(f->post.size(), 1u);
  EXPECT_EQ(f->pre[0].text, "x == y");
  EXPECT_EQ(f->post[0].text, "x == (y + n)");
  EXPECT_EQ(f->post[0].span.line, 9u);
}

TEST(Annotations, LoopInvariantAttachedToLoop) {
  auto unit = parse_sources({corpus_file(testing::corpus_dir() + "/fig2_annotations.sol")});
  const auto* f = unit.contracts[0]->find_function("add");
  const auto& loop = f->body->body.back();
  ASSERT_EQ(loop->kind, StmtKind::While);
  ASSERT_EQ(loop->invariants.size(), 1u);
  EXPECT_EQ(loop->invariants[0].kind, AnnotationKind::LoopInvariant);
  EXPECT_EQ(loop->invariants[0].text, "y <= x");
}

TEST(Annotations, ScopeErrors) {
  EXPECT_EQ(error_of([] { parse_text("/** @notice postcondition true */ contract C {}"); }),
            ErrorKind::ScopeError);
  EXPECT_EQ(error_of([] { parse_text("contract C { /** @notice invariant true */ function f() public {} }"); }),
            ErrorKind::ScopeError);
  EXPECT_EQ(error_of([] {
              parse_text("contract C { function f() public { /** @notice precondition true */ while (true) {} } }");
            }),
            ErrorKind::ScopeError);
  EXPECT_EQ(error_of([] { parse_text("contract C { /** @notice invariant true */ uint x; }"); }),
            ErrorKind::ScopeError);
}

TEST(Annotations, MalformedAndEffectful) {
  EXPECT_EQ(error_of([] { parse_text("/** @notice invariant x == */ contract C { int x; }"); }),
            ErrorKind::AnnotationError);
  EXPECT_EQ(error_of([] { parse_text("/** @notice invariant (x = 1) == 1 */ contract C { int x; }"); }),
            ErrorKind::AnnotationError);
  EXPECT_EQ(error_of([] { parse_text("/** @notice invariant f() */ contract C { function f() public returns (bool) { return true; } }"); }),
            ErrorKind::AnnotationError);
  EXPECT_EQ(error_of([] { parse_text("/** @notice invariant */ contract C {}"); }), ErrorKind::AnnotationError);
}

TEST(Annotations, OtherNatSpecIgnored) {
  auto unit = parse_text("/** @title Bank @notice a plain note @dev x */ contract C {}");
  EXPECT_TRUE(unit.contracts[0]->invariants.empty());
}

TEST(Annotations, TripleSlashForm) {
  auto unit = parse_text("/// @notice invariant x == y\n/// @notice invariant y >= 0\ncontract C { int x; int y; }");
  ASSERT_EQ(unit.contracts[0]->invariants.size(), 2u);
  EXPECT_EQ(unit.contracts[0]->invariants[1].text, "y >= 0");
}

// ---- resolver ----

TEST(Resolver, Fig2PostconditionBindsParameter) {
  auto unit = load({corpus_file(testing::corpus_dir() + "/fig2_annotations.sol")});
  const auto* f = unit.contracts[0]->find_function("add_to_x");
  const Expr& post = *f->post[0].expr;  // x == (y + n)
  ASSERT_EQ(post.kind, ExprKind::Binary);
  const Expr& sum = *post.args[1];
  ASSERT_EQ(sum.args[1]->kind, ExprKind::Identifier);
  EXPECT_EQ(sum.args[1]->ref, RefKind::LocalVar);
  EXPECT_EQ(sum.args[1]->var, f->params[0].get());
  EXPECT_EQ(to_string(*post.args[0]->type), "int256");
}

TEST(Resolver, SumErrors) {
  EXPECT_EQ(error_of([] { load_text("/** @notice invariant sum(x) == 0 */ contract C { int x; }"); }),
            ErrorKind::SumError);
  EXPECT_EQ(error_of([] { load_text("contract C { mapping(address => uint) m; function f() public { uint s = sum(m); } }"); }),
            ErrorKind::SumError);
  EXPECT_EQ(error_of([] { load_text("/** @notice invariant sum(m) == 0 */ contract C { mapping(address => bool) m; }"); }),
            ErrorKind::SumError);
}

TEST(Resolver, SumTypedAsValueType) {
  auto unit = load_text("/** @notice invariant sum(m) >= 0 */ contract C { mapping(address => uint8) m; }");
  const Expr& s = *unit.contracts[0]->invariants[0].expr->args[0];
  EXPECT_EQ(s.kind, ExprKind::Sum);
  EXPECT_EQ(to_string(*s.type), "uint8");
}

TEST(Resolver, MsgForbiddenInContractInvariant) {
  EXPECT_EQ(error_of([] { load_text("/** @notice invariant msg.sender == owner */ contract C { address owner; }"); }),
            ErrorKind::NameError);
  EXPECT_NO_THROW(load_text(
      "contract C { address owner; /** @notice precondition msg.sender == owner */ function f() public {} }"));
}

TEST(Resolver, UnknownIdentifier) {
  EXPECT_EQ(error_of([] { load_text("contract C { function f() public { y = 1; } }"); }), ErrorKind::NameError);
}

TEST(Resolver, TypeErrors) {
  EXPECT_EQ(error_of([] { load_text("contract C { function f(bool b, int x) public { x = b + x; } }"); }),
            ErrorKind::TypeError);
  EXPECT_EQ(error_of([] { load_text("contract C { function f() public { uint8 x = 300; } }"); }),
            ErrorKind::TypeError);
  EXPECT_EQ(error_of([] { load_text("contract C { function f(uint a, int b) public { bool c = a < b; } }"); }),
            ErrorKind::TypeError);
  EXPECT_EQ(error_of([] { load_text("contract C { function f(uint a) public { if (a) {} } }"); }),
            ErrorKind::TypeError);
  EXPECT_EQ(error_of([] { load_text("/** @notice invariant x */ contract C { int x; }"); }), ErrorKind::TypeError);
}

TEST(Resolver, LiteralsAdoptContextAndWideningIsExplicit) {
  auto unit = load_text("contract C { function f(uint8 a, uint16 b) public returns (uint16) { return a + b + 1; } }");
  const auto& ret = unit.contracts[0]->functions[0]->body->body[0]->exprs[0];
  EXPECT_EQ(to_string(*ret->type), "uint16");
  const Expr& lhs = *ret->args[0];  // a + b, with `a` widened
  EXPECT_EQ(lhs.args[0]->kind, ExprKind::Conversion);
  EXPECT_TRUE(lhs.args[0]->implicit);
  EXPECT_EQ(to_string(*ret->args[1]->type), "uint16");
}

TEST(Resolver, ConstantFolding) {
  auto unit = load_text("contract C { function f() public returns (int8) { return -(2 * 3) + 1; } }");
  const auto& ret = unit.contracts[0]->functions[0]->body->body[0]->exprs[0];
  EXPECT_EQ(ret->kind, ExprKind::NumberLiteral);
  EXPECT_EQ(ret->value, -5);
  EXPECT_EQ(to_string(*ret->type), "int8");
}

TEST(Resolver, DefaultBits) {
  auto unit = load_text("contract C { uint x; int y; }", 16);
  EXPECT_EQ(to_string(*unit.contracts[0]->state_vars[0]->type), "uint16");
  EXPECT_EQ(to_string(*unit.contracts[0]->state_vars[1]->type), "int16");
}

TEST(Resolver, CallKinds) {
  auto unit = load({corpus_file(testing::corpus_dir() + "/fig3_heap.sol")});
  const auto* b = unit.find_contract("B");
  const auto& call = b->find_function("setXofA")->body->body[0]->exprs[0];
  EXPECT_EQ(call->call, CallKind::External);
  EXPECT_EQ(call->function->name, "set");
  const auto& getter = b->find_function("getXofA")->body->body[0]->exprs[0];
  EXPECT_EQ(getter->call, CallKind::Getter);

  auto bec = load({corpus_file(testing::corpus_dir() + "/bec_fixed.sol")});
  const auto* f = bec.find_contract("BecToken")->find_function("batchTransfer");
  const auto& mul = f->body->body[1]->exprs[0];
  EXPECT_EQ(mul->call, CallKind::Library);
  EXPECT_EQ(mul->args.size(), 3u);  // callee, bound receiver, _value

  auto bank = load({corpus_file(testing::corpus_dir() + "/fig1_simplebank_buggy.sol")});
  const auto& cond = bank.contracts[0]->functions[1]->body->body[1]->exprs[0];
  EXPECT_EQ(cond->args[0]->call, CallKind::CallValue);
}

TEST(Resolver, AssignmentOnlyAtStatementLevel) {
  EXPECT_EQ(error_of([] { load_text("contract C { function f(uint a, uint b) public { a = (b = 1) + 1; } }"); }),
            ErrorKind::UnsupportedFeature);
}

TEST(Resolver, DuplicatesAndConstructors) {
  EXPECT_EQ(error_of([] { load_text("contract C {} contract C {}"); }), ErrorKind::NameError);
  EXPECT_EQ(error_of([] { load_text("contract C { constructor() public {} function C() public {} }"); }),
            ErrorKind::NameError);
}

// ---- properties over the corpus ----

void walk(const ExprPtr& e, const std::function<void(const Expr&)>& f) {
  if (!e) return;
  f(*e);
  for (const auto& a : e->args) walk(a, f);
  walk(e->receiver, f);
}

void walk_stmt(const StmtPtr& s, const std::function<void(const Expr&)>& f,
               const std::function<void(const Annotation&)>& fa) {
  if (!s) return;
  for (const auto& a : s->invariants) fa(a);
  if (s->decl && s->decl->init) walk(s->decl->init, f);
  for (const auto& e : s->exprs) walk(e, f);
  for (const auto& b : s->body) walk_stmt(b, f, fa);
}

void walk_unit(const CompilationUnit& u, const std::function<void(const Expr&)>& f,
               const std::function<void(const Annotation&)>& fa) {
  for (const auto& c : u.contracts) {
    for (const auto& a : c->invariants) fa(a);
    for (const auto& v : c->state_vars) walk(v->init, f);
    for (const auto& m : c->modifiers) walk_stmt(m->body, f, fa);
    for (const auto& fn : c->functions) {
      for (const auto& a : fn->pre) fa(a);
      for (const auto& a : fn->post) fa(a);
      walk_stmt(fn->body, f, fa);
    }
  }
}

TEST(Properties, RoundTripOverCorpus) {
  for (const auto& path : corpus_files()) {
    auto first = parse_sources({corpus_file(path)});
    std::string printed = to_solidity(first);
    auto second = parse_sources({src(printed, path)});
    EXPECT_EQ(dump_ast(first), dump_ast(second)) << path << "\n" << printed;
    EXPECT_EQ(to_solidity(second), printed) << path;
  }
}

TEST(Properties, ResolvedDumpIsDeterministic) {
  for (const auto& path : corpus_files()) {
    auto a = load({corpus_file(path)});
    auto b = load({corpus_file(path)});
    DumpOptions o;
    o.spans = true;
    EXPECT_EQ(dump_ast(a, o), dump_ast(b, o)) << path;
  }
}

TEST(Properties, EveryNodeTypedWithSpanInFile) {
  for (const auto& path : corpus_files()) {
    auto file = corpus_file(path);
    auto unit = load({file});
    auto check = [&](const Expr& e) {
      EXPECT_TRUE(e.type != nullptr) << path;
      ASSERT_TRUE(e.span.valid()) << path;
      EXPECT_EQ(e.span.file, file);
      EXPECT_LE(e.span.begin, e.span.end);
      EXPECT_LE(e.span.end, file->text().size());
      if (e.kind == ExprKind::Identifier) {
        EXPECT_NE(e.ref, RefKind::None) << path << " " << e.name;
      }
    };
    walk_unit(unit, check, [&](const Annotation& a) { walk(a.expr, check); });
  }
}

TEST(Properties, AnnotationsAreSideEffectFree) {
  for (const auto& path : corpus_files()) {
    auto unit = load({corpus_file(path)});
    walk_unit(unit, [](const Expr&) {}, [&](const Annotation& a) {
      walk(a.expr, [&](const Expr& e) {
        EXPECT_NE(e.kind, ExprKind::Assign) << path;
        EXPECT_NE(e.kind, ExprKind::IncDec) << path;
        EXPECT_NE(e.kind, ExprKind::Call) << path;
      });
    });
  }
}

}  // namespace
}  // namespace scv::frontend

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

#include "scv/ivl/analysis.hpp"
#include "scv/ivl/interpreter.hpp"
#include "scv/ivl/printer.hpp"
#include "scv/vcgen/vcgen.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

namespace scv::vcgen {
namespace {

using namespace scv::ivl;

std::vector<std::string> label_ids(const std::vector<VerificationCondition>& vcs) {
  std::vector<std::string> ids;
  for (const auto& vc : vcs) ids.push_back(vc.label.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::string passive_text(const PassiveProcedure& p) {
  std::string out;
  std::istringstream lines(print_stmt(p.body));
  for (std::string line; std::getline(lines, line);) {
    out += line.substr(0, line.find("  //")) + "\n";
  }
  return out;
}

// Wraps a passive procedure back into an IVL program for the oracle.
Program as_program(const PassiveProcedure& passive) {
  Program p;
  Procedure proc;
  proc.name = passive.name;
  proc.locals = passive.symbols;
  proc.entry_assumptions = passive.entry_assumptions;
  proc.body = passive.body;
  p.procedures.push_back(proc);
  return p;
}

TEST(CutLoops, LoopInvariantObligations) {
  Program p = parse_program(R"(procedure add(x: int) {
  var y: int;
  while ((y < x)) invariant [L] (y <= x); { y := (y + 1); }
})");
  Procedure cut = cut_loops(p.procedures[0]);
  std::string text = print_stmt(cut.body);
  EXPECT_NE(text.find("assert [L.entry:loop-invariant-entry] (y <= x);"), std::string::npos) << text;
  EXPECT_NE(text.find("assert [L.maintained:loop-invariant-maintained] (y <= x);"),
            std::string::npos) << text;
  EXPECT_NE(text.find("havoc y;"), std::string::npos);
  EXPECT_EQ(text.find("while"), std::string::npos);
  auto labels = collect_assert_labels(cut.body);
  ASSERT_EQ(labels.size(), 2u);
  EXPECT_EQ(labels[0].category, Category::LoopInvariantEntry);
  EXPECT_EQ(labels[1].category, Category::LoopInvariantMaintained);
}

TEST(CutLoops, TrivialInvariantGivesTriviallyFalseQueries) {
  Program p = parse_program(R"(procedure p(n: int) {
  var i: int;
  while ((i < n)) invariant [T] true; { i := (i + 1); }
})");
  auto vcs = generate_vcs(p);
  ASSERT_EQ(vcs.size(), 2u);
  for (const auto& vc : vcs) EXPECT_TRUE(vc.formula->is_false()) << print_expr(vc.formula);
}

TEST(CutLoops, FreeInvariantsAreNotChecked) {
  Program p = parse_program(R"(procedure p(n: int) {
  var i: int;
  while ((i < n)) free invariant (i >= 0); { i := (i + 1); }
})");
  EXPECT_TRUE(generate_vcs(p).empty());
}

TEST(CutLoops, NestedLoopsAreCutRecursively) {
  Program p = parse_program(R"(procedure p(n: int) {
  var i: int; var j: int;
  while ((i < n)) invariant [A] (i >= 0); {
    j := 0;
    while ((j < i)) invariant [B] (j >= 0); { j := (j + 1); }
    i := (i + 1);
  }
})");
  Procedure cut = cut_loops(p.procedures[0]);
  EXPECT_EQ(print_stmt(cut.body).find("while"), std::string::npos);
  EXPECT_EQ(collect_assert_labels(cut.body).size(), 4u);
}

TEST(Passify, SingleAssignment) {
  Program p = parse_program("procedure p(x: int) { x := (x + 1); assert [a] (x > 0); }");
  PassiveProcedure passive = passify(p.procedures[0]);
  EXPECT_EQ(passive_text(passive),
            "assume (x@1 == (x@0 + 1));\nassert [a:assertion] (x@1 > 0);\n");
}

TEST(Passify, JoinVersionWithPerArmEqualities) {
  Program p = parse_program(R"(procedure p(c: bool) {
  var x: int;
  if (c) { x := 1; } else { x := 2; }
  assert [a] (x >= 1);
})");
  PassiveProcedure passive = passify(p.procedures[0]);
  std::string text = print_stmt(passive.body);
  EXPECT_NE(text.find("assume (x@1 == 1);"), std::string::npos) << text;
  EXPECT_NE(text.find("assume (x@1 == 2);"), std::string::npos) << text;
  EXPECT_NE(text.find("(x@1 >= 1)"), std::string::npos) << text;
  // Oracle over c in {true, false}: the assertion always holds.
  Domain d;
  d.int_lo = 0;
  d.int_hi = 3;
  EXPECT_EQ(oracle_execute(as_program(passive), "p", d).verdict, OracleVerdict::NoFailure);
}

TEST(Passify, HavocIntroducesFreshVersion) {
  Program p = parse_program(R"(procedure p() { var x: int; havoc x; assert [a] (x == x); })");
  PassiveProcedure passive = passify(p.procedures[0]);
  EXPECT_EQ(passive_text(passive), "assert [a:assertion] true;\n");
  Program q = parse_program(R"(procedure p() { var x: int; x := 1; havoc x; assert [a] (x == 1); })");
  EXPECT_EQ(passive_text(passify(q.procedures[0])),
            "assert [a:assertion] (x@1 == 1);\n");
}

DiagnosticLabel label(const std::string& id) {
  DiagnosticLabel l;
  l.id = id;
  return l;
}

TEST(Wp, Rules) {
  auto p = var("p", Type::boolean());
  auto q = var("q", Type::boolean());
  EXPECT_EQ(print_expr(wp(assume(p), q)), "(p ==> q)");
  EXPECT_EQ(print_expr(wp(assume(p), false_expr())), "!p");
  EXPECT_EQ(wp(assert_(p, label("a")), true_expr()), p);
  EXPECT_EQ(print_expr(wp(seq({assume(p), assert_(q, label("b"))}), true_expr())), "(p ==> q)");
  auto c = var("c", Type::boolean());
  EXPECT_EQ(print_expr(wp(if_(c, assert_(p, label("x")), assert_(q, label("y"))), true_expr())),
            "((c ==> p) && (!c ==> q))");
}

TEST(Wp, CounterexampleAtMinusOne) {
  Program p = parse_program("procedure p(x: int) { x := (x + 1); assert [a] (x > 0); }");
  auto vcs = generate_vcs(p);
  ASSERT_EQ(vcs.size(), 1u);
  Env env;
  env["x@0"] = Value::of(-1);
  env["x@1"] = Value::of(0);
  EXPECT_EQ(evaluate(vcs[0].formula, env).scalar, 1);
  env["x@0"] = Value::of(5);
  env["x@1"] = Value::of(6);
  EXPECT_EQ(evaluate(vcs[0].formula, env).scalar, 0);
}

TEST(GenerateVcs, OneVcPerAssertLabel) {
  Program p = parse_program(R"(var g: int;
procedure p(n: int) requires (n > 0); {
  var i: int;
  assert [pre] (n > 0);
  while ((i < n)) invariant [L] (i <= n); { i := (i + 1); assert [body] (i > 0); }
  assert [post] (i == n);
}
procedure q() { assume true; })");
  auto vcs = generate_vcs(p);
  Procedure cut = cut_loops(p.procedures[0]);
  std::vector<std::string> expected;
  for (const auto& l : collect_assert_labels(cut.body)) expected.push_back(l.id);
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(label_ids(vcs), expected);
  for (const auto& vc : vcs) EXPECT_EQ(vc.procedure, "p");
}

TEST(GenerateVcs, OtherAssertsBecomeAssumes) {
  Program p = parse_program(R"(procedure p(x: int) {
  assert [first] (x > 5);
  assert [second] (x > 3);
})");
  auto vcs = generate_vcs(p);
  ASSERT_EQ(vcs.size(), 2u);
  EXPECT_EQ(print_expr(vcs[1].formula), "!((x@0 > 5) ==> (x@0 > 3))");
}

TEST(GenerateVcs, NoAssertsNoVcs) {
  Program p = parse_program("procedure p(x: int) { x := 1; assume (x > 0); }");
  EXPECT_TRUE(generate_vcs(p).empty());
}

// Random loop-free programs over a 2-bit window. Every assignment stays
// inside the window so passive versions remain enumerable.
class ProgramGen {
 public:
  explicit ProgramGen(unsigned seed) : rng_(seed) {}

  std::string program() {
    labels_ = 0;
    return "procedure p(x: int, y: int, c: bool) {\n  var z: int;\n" + block(3) + "}\n";
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  std::string atom() {
    static const char* atoms[] = {"x", "y", "z", "1", "2", "3", "0"};
    return atoms[pick(7)];
  }

  std::string term() {
    static const char* ops[] = {"+", "-", "*"};
    if (pick(3) == 0) return atom();
    return "(" + atom() + " " + ops[pick(3)] + " " + atom() + ")";
  }

  std::string cond() {
    static const char* rel[] = {"<", "<=", "==", "!="};
    if (pick(5) == 0) return pick(2) ? "c" : "!c";
    return "(" + term() + " " + rel[pick(4)] + " " + term() + ")";
  }

  std::string stmt(int depth) {
    static const char* vars[] = {"x", "y", "z"};
    switch (pick(depth > 0 ? 6 : 5)) {
      case 0:
      case 1: return std::string(vars[pick(3)]) + " := ((" + term() + ") mod 4);\n";
      case 2: return "assume " + cond() + ";\n";
      case 3: return "assert [a" + std::to_string(++labels_) + "] " + cond() + ";\n";
      case 4: return "havoc " + std::string(vars[pick(3)]) + ";\n";
      default:
        return "if (" + cond() + ") {\n" + block(depth - 1) + "} else {\n" + block(depth - 1) +
               "}\n";
    }
  }

  std::string block(int depth) {
    std::string out;
    int n = 1 + pick(4);
    for (int i = 0; i < n; ++i) out += stmt(depth);
    return out;
  }

  std::mt19937 rng_;
  int labels_ = 0;
};

TEST(Passify, PreservesOracleVerdictOnRandomPrograms) {
  Domain d;
  d.int_lo = 0;
  d.int_hi = 3;
  ProgramGen gen(20261014);
  for (int i = 0; i < 150; ++i) {
    std::string text = gen.program();
    Program p = parse_program(text);
    auto original = oracle_execute(p, "p", d);
    auto passive = oracle_execute(as_program(passify(p.procedures[0])), "p", d);
    EXPECT_EQ(original.verdict, passive.verdict) << text;
    EXPECT_EQ(original.failed_labels, passive.failed_labels) << text;
  }
}

}  // namespace
}  // namespace scv::vcgen

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
#include "scv/support/source.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

namespace scv::ivl {
namespace {

// Drops the trailing source-span comments the printer adds to asserts.
std::string strip_comments(const std::string& text) {
  std::string out;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    out += line.substr(0, line.find("  //")) + "\n";
  }
  return out;
}

bool has_defect(const std::vector<std::string>& defects, const std::string& needle) {
  return std::any_of(defects.begin(), defects.end(), [&](const std::string& d) {
    return d.find(needle) != std::string::npos;
  });
}

TEST(IvlPrinter, RoundTripsThroughParser) {
  const char* text = R"(type address;
var m: [address]int;
var __oc: bool;
procedure p(a: address, n: int) requires (n >= 0); {
  var t: int;
  t := (m[a] + n);
  m := m[a := (t mod 256)];
  havoc t;
  if ((t > 3)) {
    assert [a1:assertion] (t > 2);
  } else {
    assume !(t == 1);
  }
  while ((t < 10)) invariant [i1] (t <= 10); free invariant (t >= 0); {
    t := (t + 1);
  }
}
)";
  Program p = parse_program(text);
  std::string once = strip_comments(print_program(p));
  std::string twice = strip_comments(print_program(parse_program(once)));
  EXPECT_EQ(once, twice);
  EXPECT_TRUE(well_formed(p).empty());
}

TEST(IvlParser, RejectsUndeclaredVariable) {
  EXPECT_THROW(parse_program("procedure p() { x := 1; }"), CompileError);
}

TEST(IvlWellFormed, ReportsTypeMismatch) {
  Program p;
  p.globals.push_back({"g", Type::integer()});
  Procedure proc;
  proc.name = "p";
  proc.body = assign("g", true_expr());
  p.procedures.push_back(proc);
  EXPECT_TRUE(has_defect(well_formed(p), "type mismatch"));
}

TEST(IvlWellFormed, ReportsDuplicateLabels) {
  Program p = parse_program(
      "procedure p() { assert [x] true; assert [x] false; }");
  EXPECT_TRUE(has_defect(well_formed(p), "duplicate label"));
}

TEST(IvlWellFormed, ReportsUndeclaredAndNullNodes) {
  Program p;
  Procedure proc;
  proc.name = "p";
  proc.body = seq({assign("ghost", int_const(1)),
                   assume(var("missing", Type::boolean()))});
  p.procedures.push_back(proc);
  auto defects = well_formed(p);
  EXPECT_TRUE(has_defect(defects, "undeclared variable 'ghost'"));
  EXPECT_TRUE(has_defect(defects, "undeclared variable 'missing'"));
}

TEST(IvlWellFormed, OverflowFlagDiscipline) {
  Program ok = parse_program(R"(var __oc: bool;
procedure p(x: int) {
  __oc := (__oc || (x > 255));
  assert [o1:overflow] !__oc;
  __oc := false;
})");
  EXPECT_TRUE(well_formed(ok).empty());
  Program bad = parse_program(R"(var __oc: bool;
procedure p(x: int) {
  __oc := (x > 255);
  __oc := false;
})");
  EXPECT_TRUE(has_defect(well_formed(bad), "overflow flag"));
}

TEST(IvlModifiedVars, Examples) {
  Program p = parse_program(R"(var m: [int]int;
procedure p(c: bool, k: int) {
  var x: int; var y: int;
  x := 1;
  if (c) { havoc y; } else { m := m[k := 0]; }
})");
  const auto& body = p.procedures[0].body;
  EXPECT_EQ(modified_vars(body->children[0]), (std::set<std::string>{"x"}));
  EXPECT_EQ(modified_vars(body->children[1]), (std::set<std::string>{"m", "y"}));
}

TEST(IvlModifiedVars, SequenceIsUnion) {
  Program p = parse_program(R"(procedure p() {
  var a: int; var b: int; var c: int;
  a := 1; while (a < 3) { b := a; } havoc c; if (true) { a := 2; }
})");
  const auto& items = p.procedures[0].body->children;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < items.size(); ++j) {
      auto both = modified_vars(seq({items[i], items[j]}));
      auto expected = modified_vars(items[i]);
      auto right = modified_vars(items[j]);
      expected.insert(right.begin(), right.end());
      EXPECT_EQ(both, expected);
    }
  }
}

TEST(IvlEvaluate, ConcreteOperations) {
  Env env;
  env["x"] = Value::of(200);
  env["b"] = Value::of(0xf0);
  auto x = var("x", Type::integer());
  auto b = var("b", Type::bitvec(8));
  EXPECT_EQ(evaluate(mod(add(x, int_const(100)), int_const(256)), env).scalar, 44);
  EXPECT_EQ(evaluate(make(Op::BvAdd, {b, bv_const(0x20, 8)}), env).scalar, 0x10);
  EXPECT_EQ(evaluate(bv_to_int_signed(b), env).scalar, -16);
  EXPECT_EQ(evaluate(make(Op::BvAshr, {b, bv_const(2, 8)}), env).scalar, 0xfc);
  EXPECT_EQ(evaluate(make(Op::BvSdiv, {b, bv_const(3, 8)}), env).scalar, 0xfb);  // -16/3 = -5
  EXPECT_EQ(evaluate(make(Op::BvSrem, {b, bv_const(3, 8)}), env).scalar, 0xff);  // -1
  EXPECT_EQ(evaluate(make(Op::BvUdiv, {b, bv_const(0, 8)}), env).scalar, 0xff);
  EXPECT_EQ(evaluate(div(int_const(-7), int_const(2)), env).scalar, -4);
  EXPECT_EQ(evaluate(mod(int_const(-7), int_const(2)), env).scalar, 1);
  EXPECT_THROW(evaluate(var("unbound", Type::integer()), env), CompileError);
}

TEST(IvlOracle, AssertFalseFails) {
  Program p = parse_program("procedure p() { assert [a] false; }");
  auto r = oracle_execute(p, "p");
  EXPECT_EQ(r.verdict, OracleVerdict::Failure);
  EXPECT_EQ(r.first_label, "a");
}

TEST(IvlOracle, UnreachableAssertPasses) {
  Program p = parse_program("procedure p() { assume false; assert [a] false; }");
  EXPECT_EQ(oracle_execute(p, "p").verdict, OracleVerdict::NoFailure);
}

TEST(IvlOracle, EnumeratesParametersAndHavoc) {
  Program p = parse_program(R"(procedure p(x: int) {
  var y: int;
  assume ((x >= 0) && (x < 4));
  havoc y;
  assume ((y >= 0) && (y < 4));
  assert [sum] ((x + y) < 7);
})");
  Domain d;
  d.int_lo = 0;
  d.int_hi = 3;
  auto r = oracle_execute(p, "p", d);
  EXPECT_EQ(r.verdict, OracleVerdict::NoFailure);
  EXPECT_EQ(r.runs, 16u);
}

TEST(IvlOracle, MapsAreLazyAndTotal) {
  Program p = parse_program(R"(var m: [address]int;
procedure p(a: address, b: address) {
  m := m[a := 5];
  assert [same] ((a == b) ==> (m[b] == 5));
  assert [other] ((a != b) ==> (m[b] == 5));
})");
  Domain d;
  d.int_lo = 0;
  d.int_hi = 5;
  auto r = oracle_execute(p, "p", d);
  EXPECT_EQ(r.verdict, OracleVerdict::Failure);
  EXPECT_EQ(r.failed_labels, (std::set<std::string>{"other"}));
}

TEST(IvlOracle, LoopBoundGivesInconclusive) {
  Program p = parse_program(R"(procedure p() {
  var i: int;
  i := 0;
  while (i < 100) { i := (i + 1); }
})");
  EXPECT_EQ(oracle_execute(p, "p").verdict, OracleVerdict::Inconclusive);
}

TEST(IvlOracle, ChecksLoopInvariants) {
  Program p = parse_program(R"(procedure p() {
  var i: int;
  i := 0;
  while (i < 3) invariant [inv] (i <= 1); { i := (i + 1); }
})");
  auto r = oracle_execute(p, "p");
  EXPECT_EQ(r.verdict, OracleVerdict::Failure);
  EXPECT_EQ(r.first_label, "inv.maintained");
}

TEST(IvlOracle, BudgetExceededRaises) {
  Program p = parse_program(R"(procedure p(a: int, b: int, c: int, d: int) {
  assert [t] ((((a + b) + c) + d) > -100);
})");
  Domain d;
  d.max_runs = 100;
  try {
    oracle_execute(p, "p", d);
    ADD_FAILURE() << "expected DomainTooLarge";
  } catch (const CompileError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainTooLarge);
  }
}

TEST(IvlOracle, DeterministicAcrossRuns) {
  Program p = parse_program(R"(procedure p(x: int, y: int) {
  assert [a] (x < 10); assert [b] (y < 12);
})");
  auto first = oracle_execute(p, "p");
  for (int i = 0; i < 3; ++i) {
    auto again = oracle_execute(p, "p");
    EXPECT_EQ(again.first_label, first.first_label);
    EXPECT_EQ(again.failed_labels, first.failed_labels);
    EXPECT_EQ(again.runs, first.runs);
  }
}

}  // namespace
}  // namespace scv::ivl

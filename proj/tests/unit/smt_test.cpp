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

#include "scv/ivl/printer.hpp"
#include "scv/smt/emit.hpp"
#include "scv/smt/solver.hpp"
#include "scv/support/source.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

namespace scv::smt {
namespace {

using namespace scv::ivl;
using vcgen::VerificationCondition;

VerificationCondition vc_of(ExprPtr formula) {
  VerificationCondition vc;
  vc.procedure = "p";
  vc.label = {"l", Category::Assertion, {}, "m"};
  vc.formula = formula;
  std::set<std::string> seen;
  std::function<void(const ExprPtr&)> walk = [&](const ExprPtr& e) {
    if (e->op == Op::Var && seen.insert(e->name).second) vc.symbols.push_back({e->name, e->type});
    for (const auto& a : e->args) walk(a);
  };
  walk(formula);
  return vc;
}

SolverConfig z3() {
  SolverConfig c;
  c.command = testing::z3_command();
  return c;
}

TEST(Emit, AddressSortArraysAndNoQuantifiers) {
  auto m = var("m@0", Type::map(Type::address(), Type::integer()));
  auto a = var("a@0", Type::address());
  std::string script = emit_smtlib(vc_of(gt(select(m, a), int_const(3))), ArithMode::Int);
  EXPECT_NE(script.find("(declare-sort Address 0)"), std::string::npos);
  EXPECT_NE(script.find("(declare-fun |m@0| () (Array Address Int))"), std::string::npos);
  EXPECT_NE(script.find("(set-logic QF_AUFLIA)"), std::string::npos) << script;
  EXPECT_EQ(script.find("forall"), std::string::npos);
  EXPECT_EQ(script.find("exists"), std::string::npos);
}

TEST(Emit, FalseFormulaIsUnsat) {
  auto v = run_solver(emit_smtlib(vc_of(false_expr()), ArithMode::Int), z3());
  EXPECT_EQ(v.status, SolverStatus::Unsat) << v.diagnostics;
}

TEST(Emit, ModulusConstantAppears) {
  auto x = var("x@0", Type::integer());
  std::string script =
      emit_smtlib(vc_of(neq(mod(add(x, int_const(100)), int_const(256)), x)), ArithMode::Mod);
  EXPECT_NE(script.find("(mod (+ |x@0| 100) 256)"), std::string::npos) << script;
  EXPECT_NE(script.find("QF_LIA"), std::string::npos);
}

TEST(Emit, LogicSelection) {
  auto x = var("x", Type::integer());
  auto y = var("y", Type::integer());
  auto b = var("b", Type::bitvec(8));
  EXPECT_EQ(select_logic(vc_of(gt(mul(x, y), int_const(1)))), "QF_NIA");
  EXPECT_EQ(select_logic(vc_of(gt(mul(x, int_const(3)), y))), "QF_LIA");
  EXPECT_EQ(select_logic(vc_of(make(Op::BvUlt, {b, bv_const(3, 8)}))), "QF_BV");
  EXPECT_EQ(select_logic(vc_of(gt(bv_to_nat(b), x))), "ALL");
  EmitOptions override_logic;
  override_logic.logic = "ALL";
  EXPECT_NE(emit_smtlib(vc_of(gt(x, y)), ArithMode::Int, override_logic).find("(set-logic ALL)"),
            std::string::npos);
}

TEST(Emit, BitvectorNodesRejectedOutsideBvMode) {
  auto b = var("b", Type::bitvec(8));
  auto vc = vc_of(make(Op::BvUlt, {b, bv_const(3, 8)}));
  for (ArithMode mode : {ArithMode::Int, ArithMode::Mod, ArithMode::ModOverflow}) {
    try {
      emit_smtlib(vc, mode);
      ADD_FAILURE() << "expected EmitError";
    } catch (const CompileError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::EmitError);
    }
  }
  EXPECT_NE(emit_smtlib(vc, ArithMode::Bv).find("(bvult |b| (_ bv3 8))"), std::string::npos);
}

TEST(Emit, SharedSubtermsBecomeDefinitions) {
  auto x = var("x", Type::integer());
  ExprPtr shared = add(mul(x, x), int_const(1));
  ExprPtr formula = and_(gt(shared, int_const(3)), lt(shared, int_const(9)));
  std::string script = emit_smtlib(vc_of(formula), ArithMode::Int);
  EXPECT_NE(script.find("(define-fun |%d0| () Int (+ (* |x| |x|) 1))"), std::string::npos)
      << script;
  EXPECT_EQ(run_solver(script, z3()).status, SolverStatus::Sat);
}

TEST(Emit, DeterministicAndConstMaps) {
  auto t = Type::map(Type::address(), Type::integer());
  auto m = var("m", t);
  auto a = var("a", Type::address());
  auto f = eq(m, store(const_map(t, int_const(0)), a, int_const(1)));
  std::string first = emit_smtlib(vc_of(f), ArithMode::Mod);
  EXPECT_EQ(first, emit_smtlib(vc_of(f), ArithMode::Mod));
  EXPECT_NE(first.find("((as const (Array Address Int)) 0)"), std::string::npos);
  EXPECT_EQ(run_solver(first, z3()).status, SolverStatus::Sat);
}

TEST(RunSolver, StatusTokens) {
  EXPECT_EQ(run_solver("(assert false)(check-sat)", z3()).status, SolverStatus::Unsat);
  EXPECT_EQ(run_solver("(assert true)(check-sat)", z3()).status, SolverStatus::Sat);
  SolverConfig cvc5;
  cvc5.command = testing::cvc5_command();
  EXPECT_EQ(run_solver("(assert false)(check-sat)", cvc5).status, SolverStatus::Unsat);
  EXPECT_EQ(run_solver("(assert true)(check-sat)", cvc5).status, SolverStatus::Sat);
}

TEST(RunSolver, ModelsAreCapturedVerbatim) {
  SolverConfig c = z3();
  c.produce_models = true;
  auto x = var("x", Type::integer());
  std::string script = emit_smtlib(vc_of(eq(x, int_const(42))), ArithMode::Int, {std::nullopt, true});
  auto v = run_solver(script, c);
  ASSERT_EQ(v.status, SolverStatus::Sat);
  EXPECT_NE(v.model.find("42"), std::string::npos) << v.model;
  auto u = run_solver("(assert false)(check-sat)", c);
  EXPECT_TRUE(u.model.empty());
}

TEST(RunSolver, SpawnFailureIsDistinct) {
  SolverConfig c;
  c.command = "/nonexistent/solver-binary -in";
  auto v = run_solver("(check-sat)", c);
  EXPECT_EQ(v.status, SolverStatus::SpawnFailure);
  EXPECT_NE(v.diagnostics.find("nonexistent"), std::string::npos);
}

TEST(RunSolver, GarbledOutputIsSolverError) {
  SolverConfig c;
  c.command = "echo banana";
  EXPECT_EQ(run_solver("(check-sat)", c).status, SolverStatus::SolverError);
  c = z3();
  EXPECT_EQ(run_solver("(assert (> undeclared 1))(check-sat)", c).status,
            SolverStatus::SolverError);
}

TEST(RunSolver, TimeoutKillsTheProcess) {
  SolverConfig c;
  c.command = "sleep 30";
  c.timeout_seconds = 0.3;
  auto v = run_solver("", c);
  EXPECT_EQ(v.status, SolverStatus::Timeout);
  EXPECT_LT(v.seconds, 5.0);
}

TEST(RunSolver, FileArgumentTemplate) {
  SolverConfig c;
  c.command = "z3 -smt2 -T:{timeout} {file}";
  EXPECT_EQ(run_solver("(assert false)(check-sat)", c).status, SolverStatus::Unsat);
  auto argv = expand_command("solver --t={timeout} {file}", "/tmp/x.smt2", 2.5);
  EXPECT_EQ(argv, (std::vector<std::string>{"solver", "--t=3", "/tmp/x.smt2"}));
}

TEST(Discharge, OrderPreservedAcrossParallelism) {
  std::vector<std::string> scripts;
  for (int i = 0; i < 6; ++i) {
    scripts.push_back(i % 2 ? "(assert true)(check-sat)" : "(assert false)(check-sat)");
  }
  for (unsigned jobs : {1u, 3u, 8u}) {
    auto results = discharge_scripts(scripts, z3(), jobs);
    ASSERT_EQ(results.size(), scripts.size());
    for (int i = 0; i < 6; ++i) {
      EXPECT_EQ(results[i].status, i % 2 ? SolverStatus::Sat : SolverStatus::Unsat);
    }
  }
}

TEST(Discharge, TimeoutIsolatedToOneVc) {
  // A wrapper that hangs only on scripts mentioning "slow".
  auto dir = std::filesystem::temp_directory_path() / "scv-smt-test";
  std::filesystem::create_directories(dir);
  auto wrapper = dir / "maybe_slow.sh";
  std::ofstream(wrapper) << "#!/bin/sh\nif grep -q slow \"$1\"; then sleep 30; fi\n"
                            "exec z3 -smt2 \"$1\"\n";
  std::filesystem::permissions(wrapper, std::filesystem::perms::owner_all);
  SolverConfig c;
  c.command = wrapper.string() + " {file}";
  c.timeout_seconds = 1.0;
  std::vector<std::string> scripts = {"(assert false)(check-sat)", "; slow\n(check-sat)",
                                      "(assert true)(check-sat)"};
  auto results = discharge_scripts(scripts, c, 3);
  EXPECT_EQ(results[0].status, SolverStatus::Unsat);
  EXPECT_EQ(results[1].status, SolverStatus::Timeout);
  EXPECT_EQ(results[2].status, SolverStatus::Sat);
}

TEST(Discharge, EmitErrorDoesNotAbortBatch) {
  auto b = var("b", Type::bitvec(8));
  std::vector<VerificationCondition> vcs = {vc_of(false_expr()),
                                            vc_of(make(Op::BvUlt, {b, bv_const(1, 8)})),
                                            vc_of(true_expr())};
  auto out = discharge(vcs, ArithMode::Int, z3(), 2);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].verdict.status, SolverStatus::Unsat);
  EXPECT_EQ(out[1].verdict.status, SolverStatus::SolverError);
  EXPECT_EQ(out[2].verdict.status, SolverStatus::Sat);
}

}  // namespace
}  // namespace scv::smt

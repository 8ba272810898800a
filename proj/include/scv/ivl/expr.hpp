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

#include "scv/ivl/type.hpp"
#include "scv/support/bigint.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace scv::ivl {

enum class Op : std::uint8_t {
  BoolConst,
  IntConst,
  BvConst,
  Var,
  // Boolean structure.
  Not,
  And,
  Or,
  Implies,
  Ite,
  Eq,
  // Mathematical integers. Div/Mod follow SMT-LIB (Euclidean).
  Neg,
  Add,
  Sub,
  Mul,
  Div,
  Mod,
  Lt,
  Le,
  Gt,
  Ge,
  // Fixed-width bitvectors.
  BvNeg,
  BvAdd,
  BvSub,
  BvMul,
  BvUdiv,
  BvSdiv,
  BvUrem,
  BvSrem,
  BvNot,
  BvAnd,
  BvOr,
  BvXor,
  BvShl,
  BvLshr,
  BvAshr,
  BvUlt,
  BvUle,
  BvSlt,
  BvSle,
  BvToNat,   // unsigned value of a bitvector
  NatToBv,   // integer modulo 2^width, p0 = width
  ZeroExt,   // p0 = added bits
  SignExt,   // p0 = added bits
  Extract,   // p0 = high bit, p1 = low bit
  // Arrays.
  Select,
  Store,
  ConstMap,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression node. Nodes are shared freely; identity of shared
/// subterms is used by the SMT emitter to name common subformulas.
struct Expr {
  Op op = Op::BoolConst;
  TypePtr type;
  std::vector<ExprPtr> args;
  BigInt value;       // constants (bool as 0/1, bv as unsigned value)
  std::string name;   // Var
  unsigned p0 = 0;
  unsigned p1 = 0;

  bool is_const() const {
    return op == Op::BoolConst || op == Op::IntConst || op == Op::BvConst;
  }
  bool is_true() const { return op == Op::BoolConst && value != 0; }
  bool is_false() const { return op == Op::BoolConst && value == 0; }
};

// Builders. They fold constants and trivial Boolean structure but never
// reject ill-typed operands; typing is checked by well_formed().
ExprPtr bool_const(bool value);
ExprPtr true_expr();
ExprPtr false_expr();
ExprPtr int_const(const BigInt& value);
ExprPtr bv_const(const BigInt& value, unsigned width);  // value reduced mod 2^w
ExprPtr var(std::string name, TypePtr type);

ExprPtr not_(ExprPtr e);
ExprPtr and_(std::vector<ExprPtr> items);
ExprPtr and_(ExprPtr a, ExprPtr b);
ExprPtr or_(std::vector<ExprPtr> items);
ExprPtr or_(ExprPtr a, ExprPtr b);
ExprPtr implies(ExprPtr a, ExprPtr b);
ExprPtr ite(ExprPtr c, ExprPtr t, ExprPtr e);
ExprPtr eq(ExprPtr a, ExprPtr b);
ExprPtr neq(ExprPtr a, ExprPtr b);

ExprPtr neg(ExprPtr a);
ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr sub(ExprPtr a, ExprPtr b);
ExprPtr mul(ExprPtr a, ExprPtr b);
ExprPtr div(ExprPtr a, ExprPtr b);
ExprPtr mod(ExprPtr a, ExprPtr b);
ExprPtr lt(ExprPtr a, ExprPtr b);
ExprPtr le(ExprPtr a, ExprPtr b);
ExprPtr gt(ExprPtr a, ExprPtr b);
ExprPtr ge(ExprPtr a, ExprPtr b);

/// Generic constructor for the bitvector family and other fixed-arity ops.
ExprPtr make(Op op, std::vector<ExprPtr> args, unsigned p0 = 0,
             unsigned p1 = 0);

ExprPtr bv_to_nat(ExprPtr a);
/// Two's complement value of a bitvector as an integer.
ExprPtr bv_to_int_signed(ExprPtr a);
ExprPtr nat_to_bv(ExprPtr a, unsigned width);

ExprPtr select(ExprPtr map, ExprPtr key);
ExprPtr store(ExprPtr map, ExprPtr key, ExprPtr value);
ExprPtr const_map(TypePtr map_type, ExprPtr value);

/// Result type of an operation applied to typed arguments, or nullptr if
/// the operands are ill-typed.
TypePtr infer_type(Op op, const std::vector<ExprPtr>& args, unsigned p0,
                   unsigned p1);

std::string op_name(Op op);

/// True if the tree contains a variable with this name.
bool mentions(const ExprPtr& e, const std::string& name);

/// Replace variables by name. Unmapped variables are kept.
ExprPtr substitute(const ExprPtr& e,
                   const std::function<ExprPtr(const Expr&)>& rename);

}  // namespace scv::ivl

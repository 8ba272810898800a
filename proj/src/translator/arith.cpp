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

#include "scv/translator/arith.hpp"

namespace scv::translator {

using frontend::SolType;
using namespace scv::ivl;

namespace {

[[noreturn]] void unsupported(const SourceSpan& span, const std::string& what, ArithMode mode) {
  raise(ErrorKind::UnsupportedOperation, span,
        "operator '" + what + "' is not available in " + std::string(mode_name(mode)) + " mode");
}

ExprPtr abs_(const ExprPtr& x) { return ite(ge(x, int_const(0)), x, neg(x)); }

// Truncating division and remainder on mathematical integers.
ExprPtr trunc_div_(const ExprPtr& a, const ExprPtr& b) {
  ExprPtr q = div(abs_(a), abs_(b));
  return ite(eq(ge(a, int_const(0)), ge(b, int_const(0))), q, neg(q));
}

ExprPtr trunc_rem_(const ExprPtr& a, const ExprPtr& b) {
  ExprPtr r = mod(abs_(a), abs_(b));
  return ite(ge(a, int_const(0)), r, neg(r));
}

bool subsumes(const SolType& to, const SolType& from) {
  if (from.is_signed == to.is_signed) return from.bits <= to.bits;
  return !from.is_signed && to.is_signed && from.bits < to.bits;
}

void merge_into(EncodedExpr& r, const EncodedExpr& a, const EncodedExpr& b) {
  r.assumes = a.assumes;
  r.assumes.insert(r.assumes.end(), b.assumes.begin(), b.assumes.end());
  r.overflow = or_(a.overflow, b.overflow);
  r.overflow_span = a.overflow_span.valid() ? a.overflow_span : b.overflow_span;
}

ExprPtr bv_shift(Op op, const ExprPtr& a, const ExprPtr& b, unsigned wa, unsigned wb) {
  if (wa == wb) return make(op, {a, b});
  unsigned w = std::max(wa, wb);
  ExprPtr aa = wa < w ? make(op == Op::BvAshr ? Op::SignExt : Op::ZeroExt, {a}, w - wa) : a;
  ExprPtr bb = wb < w ? make(Op::ZeroExt, {b}, w - wb) : b;
  ExprPtr r = make(op, {aa, bb});
  return w > wa ? make(Op::Extract, {r}, wa - 1, 0) : r;
}

}  // namespace

TypePtr ivl_type(const SolType& t, ArithMode mode) {
  switch (t.kind) {
    case SolType::Kind::Bool: return Type::boolean();
    case SolType::Kind::Int:
      return mode == ArithMode::Bv ? Type::bitvec(t.bits) : Type::integer();
    case SolType::Kind::Literal:
      return mode == ArithMode::Bv ? Type::bitvec(256) : Type::integer();
    case SolType::Kind::Address:
    case SolType::Kind::Contract: return Type::address();
    case SolType::Kind::Mapping: return Type::map(ivl_type(*t.key, mode), ivl_type(*t.value, mode));
    case SolType::Kind::Array:
      return Type::map(ivl_type(*SolType::integer(false, 256), mode), ivl_type(*t.value, mode));
    case SolType::Kind::Void: break;
  }
  raise(ErrorKind::TranslationError, {}, "no representation for type " + to_string(t));
}

ExprPtr in_range(const ExprPtr& v, unsigned bits, bool is_signed) {
  return and_(le(int_const(int_min(bits, is_signed)), v), le(v, int_const(int_max(bits, is_signed))));
}

ExprPtr wrap(const ExprPtr& exact, unsigned bits, bool is_signed) {
  if (exact->op == Op::IntConst) return int_const(wrap_to(exact->value, bits, is_signed));
  if (!is_signed) return mod(exact, int_const(pow2(bits)));
  BigInt half = pow2(bits - 1);
  return sub(mod(add(exact, int_const(half)), int_const(pow2(bits))), int_const(half));
}

ExprPtr to_exact(const ExprPtr& v, const SolType& t, ArithMode mode) {
  if (mode != ArithMode::Bv || !(t.is_int() || t.is_literal())) return v;
  bool is_signed = t.is_int() && t.is_signed;
  return is_signed ? bv_to_int_signed(v) : bv_to_nat(v);
}

EncodedExpr encode_arith(const std::string& op, const EncodedExpr& lhs, const EncodedExpr& rhs,
                         const SolType& ty, ArithMode mode, const SourceSpan& span,
                         const SolType* rhs_type) {
  EncodedExpr r;
  merge_into(r, lhs, rhs);
  const ExprPtr& a = lhs.value;
  const ExprPtr& b = rhs.value;
  const bool s = ty.is_signed;
  const unsigned n = ty.bits;

  if (mode == ArithMode::Bv) {
    auto bvop = [&](Op o) { return make(o, {a, b}); };
    if (op == "+") r.value = bvop(Op::BvAdd);
    else if (op == "-") r.value = bvop(Op::BvSub);
    else if (op == "*") r.value = bvop(Op::BvMul);
    else if (op == "/" || op == "%") {
      r.assumes.push_back(neq(b, bv_const(0, n)));
      if (op == "/") r.value = bvop(s ? Op::BvSdiv : Op::BvUdiv);
      else r.value = bvop(s ? Op::BvSrem : Op::BvUrem);
    } else if (op == "&") r.value = bvop(Op::BvAnd);
    else if (op == "|") r.value = bvop(Op::BvOr);
    else if (op == "^") r.value = bvop(Op::BvXor);
    else if (op == "<<" || op == ">>") {
      unsigned wb = rhs_type && rhs_type->is_int() ? rhs_type->bits : n;
      if (rhs_type && rhs_type->is_int() && rhs_type->is_signed) {
        r.assumes.push_back(make(Op::BvSle, {bv_const(0, wb), b}));
      }
      Op o = op == "<<" ? Op::BvShl : (s ? Op::BvAshr : Op::BvLshr);
      r.value = bv_shift(o, a, b, n, wb);
    } else {
      unsupported(span, op, mode);
    }
    return r;
  }

  ExprPtr exact;
  bool may_wrap = true;
  if (op == "+") exact = add(a, b);
  else if (op == "-") exact = sub(a, b);
  else if (op == "*") exact = mul(a, b);
  else if (op == "/" || op == "%") {
    r.assumes.push_back(neq(b, int_const(0)));
    if (op == "/") {
      exact = s ? trunc_div_(a, b) : div(a, b);
      may_wrap = s;  // only MIN / -1
    } else {
      exact = s ? trunc_rem_(a, b) : mod(a, b);
      may_wrap = false;
    }
  } else if (op == "**") {
    if (b->op != Op::IntConst || b->value < 0 || b->value > 256) {
      raise(ErrorKind::UnsupportedOperation, span, "exponent must be a constant in [0, 256]");
    }
    exact = int_const(1);
    for (int i = 0; i < static_cast<int>(b->value); ++i) exact = mul(exact, a);
  } else {
    unsupported(span, op, mode);
  }

  if (mode == ArithMode::Int || !may_wrap) {
    r.value = exact;
    return r;
  }
  r.value = wrap(exact, n, s);
  if (mode == ArithMode::ModOverflow) {
    ExprPtr o = not_(in_range(exact, n, s));
    if (!o->is_false() && !r.overflow_span.valid()) r.overflow_span = span;
    r.overflow = or_(r.overflow, o);
  }
  return r;
}

ExprPtr encode_compare(const std::string& op, const ExprPtr& a, const ExprPtr& b,
                       const SolType& ty, ArithMode mode) {
  if (op == "==") return eq(a, b);
  if (op == "!=") return neq(a, b);
  if (!(ty.is_int() || ty.is_literal())) {
    raise(ErrorKind::TranslationError, {}, "ordering on non-integer type " + to_string(ty));
  }
  if (mode == ArithMode::Bv) {
    bool s = ty.is_int() && ty.is_signed;
    Op lt_op = s ? Op::BvSlt : Op::BvUlt;
    Op le_op = s ? Op::BvSle : Op::BvUle;
    if (op == "<") return make(lt_op, {a, b});
    if (op == "<=") return make(le_op, {a, b});
    if (op == ">") return make(lt_op, {b, a});
    if (op == ">=") return make(le_op, {b, a});
  } else {
    if (op == "<") return lt(a, b);
    if (op == "<=") return le(a, b);
    if (op == ">") return gt(a, b);
    if (op == ">=") return ge(a, b);
  }
  raise(ErrorKind::TranslationError, {}, "unknown comparison '" + op + "'");
}

ExprPtr encode_conversion(const ExprPtr& v, const SolType& from, const SolType& to,
                          ArithMode mode) {
  if (!(from.is_int() && to.is_int())) return v;
  if (mode == ArithMode::Int) return v;
  if (mode == ArithMode::Bv) {
    if (from.bits < to.bits) {
      return make(from.is_signed ? Op::SignExt : Op::ZeroExt, {v}, to.bits - from.bits);
    }
    if (from.bits > to.bits) return make(Op::Extract, {v}, to.bits - 1, 0);
    return v;
  }
  if (subsumes(to, from)) return v;
  return wrap(v, to.bits, to.is_signed);
}

ExprPtr encode_literal(const BigInt& value, const SolType& type, ArithMode mode) {
  if (type.is_bool()) return bool_const(value != 0);
  if (mode != ArithMode::Bv) return int_const(value);
  return bv_const(value, type.is_int() ? type.bits : 256);
}

}  // namespace scv::translator

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

#include "scv/ivl/expr.hpp"

#include <stdexcept>
#include <unordered_map>

namespace scv::ivl {

namespace {

ExprPtr node(Op op, TypePtr type, std::vector<ExprPtr> args, unsigned p0 = 0,
             unsigned p1 = 0) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->type = std::move(type);
  e->args = std::move(args);
  e->p0 = p0;
  e->p1 = p1;
  return e;
}

bool both_int_consts(const ExprPtr& a, const ExprPtr& b) {
  return a->op == Op::IntConst && b->op == Op::IntConst;
}

bool is_bv_op(Op op) { return op >= Op::BvNeg && op <= Op::Extract; }

}  // namespace

ExprPtr bool_const(bool value) {
  auto e = std::make_shared<Expr>();
  e->op = Op::BoolConst;
  e->type = Type::boolean();
  e->value = value ? 1 : 0;
  return e;
}

ExprPtr true_expr() {
  static const ExprPtr t = bool_const(true);
  return t;
}

ExprPtr false_expr() {
  static const ExprPtr f = bool_const(false);
  return f;
}

ExprPtr int_const(const BigInt& value) {
  auto e = std::make_shared<Expr>();
  e->op = Op::IntConst;
  e->type = Type::integer();
  e->value = value;
  return e;
}

ExprPtr bv_const(const BigInt& value, unsigned width) {
  auto e = std::make_shared<Expr>();
  e->op = Op::BvConst;
  e->type = Type::bitvec(width);
  e->value = wrap_to(value, width, false);
  return e;
}

ExprPtr var(std::string name, TypePtr type) {
  auto e = std::make_shared<Expr>();
  e->op = Op::Var;
  e->type = std::move(type);
  e->name = std::move(name);
  return e;
}

ExprPtr not_(ExprPtr e) {
  if (e->op == Op::BoolConst) return bool_const(e->value == 0);
  if (e->op == Op::Not) return e->args[0];
  return node(Op::Not, Type::boolean(), {std::move(e)});
}

ExprPtr and_(std::vector<ExprPtr> items) {
  std::vector<ExprPtr> kept;
  for (auto& item : items) {
    if (item->is_true()) continue;
    if (item->is_false()) return false_expr();
    if (item->op == Op::And) {
      kept.insert(kept.end(), item->args.begin(), item->args.end());
    } else {
      kept.push_back(std::move(item));
    }
  }
  if (kept.empty()) return true_expr();
  if (kept.size() == 1) return kept.front();
  return node(Op::And, Type::boolean(), std::move(kept));
}

ExprPtr and_(ExprPtr a, ExprPtr b) { return and_(std::vector{a, b}); }

ExprPtr or_(std::vector<ExprPtr> items) {
  std::vector<ExprPtr> kept;
  for (auto& item : items) {
    if (item->is_false()) continue;
    if (item->is_true()) return true_expr();
    if (item->op == Op::Or) {
      kept.insert(kept.end(), item->args.begin(), item->args.end());
    } else {
      kept.push_back(std::move(item));
    }
  }
  if (kept.empty()) return false_expr();
  if (kept.size() == 1) return kept.front();
  return node(Op::Or, Type::boolean(), std::move(kept));
}

ExprPtr or_(ExprPtr a, ExprPtr b) { return or_(std::vector{a, b}); }

ExprPtr implies(ExprPtr a, ExprPtr b) {
  if (a->is_true()) return b;
  if (a->is_false() || b->is_true()) return true_expr();
  if (b->is_false()) return not_(a);
  return node(Op::Implies, Type::boolean(), {std::move(a), std::move(b)});
}

ExprPtr ite(ExprPtr c, ExprPtr t, ExprPtr e) {
  if (c->is_true()) return t;
  if (c->is_false()) return e;
  if (t == e) return t;
  TypePtr type = t->type;
  return node(Op::Ite, std::move(type), {std::move(c), std::move(t), std::move(e)});
}

ExprPtr eq(ExprPtr a, ExprPtr b) {
  if (a == b) return true_expr();
  if (a->is_const() && b->is_const() && a->op == b->op &&
      same_type(a->type, b->type)) {
    return bool_const(a->value == b->value);
  }
  return node(Op::Eq, Type::boolean(), {std::move(a), std::move(b)});
}

ExprPtr neq(ExprPtr a, ExprPtr b) { return not_(eq(std::move(a), std::move(b))); }

ExprPtr neg(ExprPtr a) {
  if (a->op == Op::IntConst) return int_const(-a->value);
  return node(Op::Neg, Type::integer(), {std::move(a)});
}

ExprPtr add(ExprPtr a, ExprPtr b) {
  if (both_int_consts(a, b)) return int_const(a->value + b->value);
  if (b->op == Op::IntConst && b->value == 0) return a;
  if (a->op == Op::IntConst && a->value == 0) return b;
  return node(Op::Add, Type::integer(), {std::move(a), std::move(b)});
}

ExprPtr sub(ExprPtr a, ExprPtr b) {
  if (both_int_consts(a, b)) return int_const(a->value - b->value);
  if (b->op == Op::IntConst && b->value == 0) return a;
  return node(Op::Sub, Type::integer(), {std::move(a), std::move(b)});
}

ExprPtr mul(ExprPtr a, ExprPtr b) {
  if (both_int_consts(a, b)) return int_const(a->value * b->value);
  if (b->op == Op::IntConst && b->value == 1) return a;
  if (a->op == Op::IntConst && a->value == 1) return b;
  return node(Op::Mul, Type::integer(), {std::move(a), std::move(b)});
}

ExprPtr div(ExprPtr a, ExprPtr b) {
  if (both_int_consts(a, b) && b->value != 0) {
    return int_const(euclid_div(a->value, b->value));
  }
  return node(Op::Div, Type::integer(), {std::move(a), std::move(b)});
}

ExprPtr mod(ExprPtr a, ExprPtr b) {
  if (both_int_consts(a, b) && b->value != 0) {
    return int_const(euclid_mod(a->value, b->value));
  }
  return node(Op::Mod, Type::integer(), {std::move(a), std::move(b)});
}

#define SCV_INT_COMPARE(fn, opcode, cmp)                           \
  ExprPtr fn(ExprPtr a, ExprPtr b) {                               \
    if (both_int_consts(a, b)) return bool_const(a->value cmp b->value); \
    return node(Op::opcode, Type::boolean(), {std::move(a), std::move(b)}); \
  }
SCV_INT_COMPARE(lt, Lt, <)
SCV_INT_COMPARE(le, Le, <=)
SCV_INT_COMPARE(gt, Gt, >)
SCV_INT_COMPARE(ge, Ge, >=)
#undef SCV_INT_COMPARE

ExprPtr make(Op op, std::vector<ExprPtr> args, unsigned p0, unsigned p1) {
  switch (op) {
    case Op::Not: return not_(args.at(0));
    case Op::And: return and_(std::move(args));
    case Op::Or: return or_(std::move(args));
    case Op::Implies: return implies(args.at(0), args.at(1));
    case Op::Ite: return ite(args.at(0), args.at(1), args.at(2));
    case Op::Eq: return eq(args.at(0), args.at(1));
    case Op::Neg: return neg(args.at(0));
    case Op::Add: return add(args.at(0), args.at(1));
    case Op::Sub: return sub(args.at(0), args.at(1));
    case Op::Mul: return mul(args.at(0), args.at(1));
    case Op::Div: return div(args.at(0), args.at(1));
    case Op::Mod: return mod(args.at(0), args.at(1));
    case Op::Lt: return lt(args.at(0), args.at(1));
    case Op::Le: return le(args.at(0), args.at(1));
    case Op::Gt: return gt(args.at(0), args.at(1));
    case Op::Ge: return ge(args.at(0), args.at(1));
    case Op::Select: return select(args.at(0), args.at(1));
    case Op::Store: return store(args.at(0), args.at(1), args.at(2));
    default: break;
  }
  if (!is_bv_op(op)) throw std::logic_error("make: unsupported op " + op_name(op));
  TypePtr type = infer_type(op, args, p0, p1);
  if (!type) {
    // Keep ill-typed nodes constructible so well_formed() can report them.
    type = args.empty() ? Type::boolean() : args.front()->type;
  }
  return node(op, std::move(type), std::move(args), p0, p1);
}

ExprPtr bv_to_nat(ExprPtr a) {
  if (a->op == Op::BvConst) return int_const(a->value);
  return make(Op::BvToNat, {std::move(a)});
}

ExprPtr bv_to_int_signed(ExprPtr a) {
  unsigned w = a->type->width;
  if (a->op == Op::BvConst) return int_const(wrap_to(a->value, w, true));
  ExprPtr zero = bv_const(0, w);
  ExprPtr nat = bv_to_nat(a);
  return ite(make(Op::BvSlt, {a, zero}), sub(nat, int_const(pow2(w))), nat);
}

ExprPtr nat_to_bv(ExprPtr a, unsigned width) {
  if (a->op == Op::IntConst) return bv_const(a->value, width);
  return make(Op::NatToBv, {std::move(a)}, width);
}

ExprPtr select(ExprPtr map, ExprPtr key) {
  TypePtr type = map->type && map->type->is_map() ? map->type->value
                                                  : Type::integer();
  return node(Op::Select, std::move(type), {std::move(map), std::move(key)});
}

ExprPtr store(ExprPtr map, ExprPtr key, ExprPtr value) {
  TypePtr type = map->type;
  return node(Op::Store, std::move(type),
              {std::move(map), std::move(key), std::move(value)});
}

ExprPtr const_map(TypePtr map_type, ExprPtr value) {
  return node(Op::ConstMap, std::move(map_type), {std::move(value)});
}

TypePtr infer_type(Op op, const std::vector<ExprPtr>& args, unsigned p0,
                   unsigned p1) {
  auto arity = [&](std::size_t n) { return args.size() == n; };
  auto all = [&](auto pred) {
    for (const auto& a : args) {
      if (!a || !a->type || !pred(*a->type)) return false;
    }
    return true;
  };
  auto is_bool = [](const Type& t) { return t.is_bool(); };
  auto is_int = [](const Type& t) { return t.is_int(); };
  auto same_bv = [&]() {
    if (args.empty() || !all([](const Type& t) { return t.is_bv(); })) return false;
    for (const auto& a : args) {
      if (a->type->width != args[0]->type->width) return false;
    }
    return true;
  };
  switch (op) {
    case Op::BoolConst: return Type::boolean();
    case Op::IntConst: return Type::integer();
    case Op::BvConst:
    case Op::Var:
    case Op::ConstMap:
      return nullptr;  // carried by the node itself
    case Op::Not:
      return arity(1) && all(is_bool) ? Type::boolean() : nullptr;
    case Op::And:
    case Op::Or:
      return all(is_bool) ? Type::boolean() : nullptr;
    case Op::Implies:
      return arity(2) && all(is_bool) ? Type::boolean() : nullptr;
    case Op::Ite:
      if (!arity(3) || !args[0]->type->is_bool() ||
          !same_type(args[1]->type, args[2]->type)) {
        return nullptr;
      }
      return args[1]->type;
    case Op::Eq:
      return arity(2) && same_type(args[0]->type, args[1]->type)
                 ? Type::boolean()
                 : nullptr;
    case Op::Neg: return arity(1) && all(is_int) ? Type::integer() : nullptr;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div:
    case Op::Mod:
      return arity(2) && all(is_int) ? Type::integer() : nullptr;
    case Op::Lt:
    case Op::Le:
    case Op::Gt:
    case Op::Ge:
      return arity(2) && all(is_int) ? Type::boolean() : nullptr;
    case Op::BvNeg:
    case Op::BvNot:
      return arity(1) && same_bv() ? args[0]->type : nullptr;
    case Op::BvAdd:
    case Op::BvSub:
    case Op::BvMul:
    case Op::BvUdiv:
    case Op::BvSdiv:
    case Op::BvUrem:
    case Op::BvSrem:
    case Op::BvAnd:
    case Op::BvOr:
    case Op::BvXor:
    case Op::BvShl:
    case Op::BvLshr:
    case Op::BvAshr:
      return arity(2) && same_bv() ? args[0]->type : nullptr;
    case Op::BvUlt:
    case Op::BvUle:
    case Op::BvSlt:
    case Op::BvSle:
      return arity(2) && same_bv() ? Type::boolean() : nullptr;
    case Op::BvToNat:
      return arity(1) && same_bv() ? Type::integer() : nullptr;
    case Op::NatToBv:
      return arity(1) && all(is_int) && p0 > 0 ? Type::bitvec(p0) : nullptr;
    case Op::ZeroExt:
    case Op::SignExt:
      return arity(1) && same_bv() ? Type::bitvec(args[0]->type->width + p0)
                                   : nullptr;
    case Op::Extract:
      if (!arity(1) || !same_bv() || p0 >= args[0]->type->width || p1 > p0) {
        return nullptr;
      }
      return Type::bitvec(p0 - p1 + 1);
    case Op::Select:
      if (!arity(2) || !args[0]->type->is_map() ||
          !same_type(args[0]->type->key, args[1]->type)) {
        return nullptr;
      }
      return args[0]->type->value;
    case Op::Store:
      if (!arity(3) || !args[0]->type->is_map() ||
          !same_type(args[0]->type->key, args[1]->type) ||
          !same_type(args[0]->type->value, args[2]->type)) {
        return nullptr;
      }
      return args[0]->type;
  }
  return nullptr;
}

std::string op_name(Op op) {
  switch (op) {
    case Op::BoolConst: return "bool";
    case Op::IntConst: return "int";
    case Op::BvConst: return "bv";
    case Op::Var: return "var";
    case Op::Not: return "!";
    case Op::And: return "&&";
    case Op::Or: return "||";
    case Op::Implies: return "==>";
    case Op::Ite: return "ite";
    case Op::Eq: return "==";
    case Op::Neg: return "neg";
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "div";
    case Op::Mod: return "mod";
    case Op::Lt: return "<";
    case Op::Le: return "<=";
    case Op::Gt: return ">";
    case Op::Ge: return ">=";
    case Op::BvNeg: return "bvneg";
    case Op::BvAdd: return "bvadd";
    case Op::BvSub: return "bvsub";
    case Op::BvMul: return "bvmul";
    case Op::BvUdiv: return "bvudiv";
    case Op::BvSdiv: return "bvsdiv";
    case Op::BvUrem: return "bvurem";
    case Op::BvSrem: return "bvsrem";
    case Op::BvNot: return "bvnot";
    case Op::BvAnd: return "bvand";
    case Op::BvOr: return "bvor";
    case Op::BvXor: return "bvxor";
    case Op::BvShl: return "bvshl";
    case Op::BvLshr: return "bvlshr";
    case Op::BvAshr: return "bvashr";
    case Op::BvUlt: return "bvult";
    case Op::BvUle: return "bvule";
    case Op::BvSlt: return "bvslt";
    case Op::BvSle: return "bvsle";
    case Op::BvToNat: return "bv2nat";
    case Op::NatToBv: return "int2bv";
    case Op::ZeroExt: return "zext";
    case Op::SignExt: return "sext";
    case Op::Extract: return "extract";
    case Op::Select: return "select";
    case Op::Store: return "store";
    case Op::ConstMap: return "const";
  }
  return "?";
}

bool mentions(const ExprPtr& e, const std::string& name) {
  if (e->op == Op::Var) return e->name == name;
  for (const auto& a : e->args) {
    if (mentions(a, name)) return true;
  }
  return false;
}

namespace {

ExprPtr rebuild(const Expr& original, std::vector<ExprPtr> args) {
  switch (original.op) {
    case Op::ConstMap: return const_map(original.type, args.at(0));
    default: return make(original.op, std::move(args), original.p0, original.p1);
  }
}

ExprPtr substitute_memo(const ExprPtr& e,
                        const std::function<ExprPtr(const Expr&)>& rename,
                        std::unordered_map<const Expr*, ExprPtr>& memo) {
  if (e->op == Op::Var) {
    ExprPtr replacement = rename(*e);
    return replacement ? replacement : e;
  }
  if (e->args.empty()) return e;
  if (auto it = memo.find(e.get()); it != memo.end()) return it->second;
  std::vector<ExprPtr> args;
  args.reserve(e->args.size());
  bool changed = false;
  for (const auto& a : e->args) {
    args.push_back(substitute_memo(a, rename, memo));
    changed = changed || args.back() != a;
  }
  ExprPtr result = changed ? rebuild(*e, std::move(args)) : e;
  memo.emplace(e.get(), result);
  return result;
}

}  // namespace

ExprPtr substitute(const ExprPtr& e,
                   const std::function<ExprPtr(const Expr&)>& rename) {
  std::unordered_map<const Expr*, ExprPtr> memo;
  return substitute_memo(e, rename, memo);
}

}  // namespace scv::ivl

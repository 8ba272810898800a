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

#include "scv/ivl/interpreter.hpp"

#include "scv/support/source.hpp"

#include <utility>
#include <vector>

namespace scv::ivl {

namespace {

struct PathFailed {
  std::string label;
};
struct PathBlocked {};
struct PathInconclusive {};

// Odometer over the choice points of successive runs. Each run replays
// the stored prefix and extends it with zeros.
class Chooser {
 public:
  std::size_t choose(std::size_t arity) {
    if (pos_ < trail_.size()) return trail_[pos_++].first;
    trail_.emplace_back(0, arity);
    ++pos_;
    return 0;
  }

  bool advance() {
    while (!trail_.empty() && trail_.back().first + 1 >= trail_.back().second) {
      trail_.pop_back();
    }
    if (trail_.empty()) return false;
    ++trail_.back().first;
    pos_ = 0;
    return true;
  }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> trail_;
  std::size_t pos_ = 0;
};

BigInt bv_signed(const BigInt& v, unsigned w) { return wrap_to(v, w, true); }
BigInt bv_wrap(const BigInt& v, unsigned w) { return wrap_to(v, w, false); }

BigInt bv_udiv(const BigInt& s, const BigInt& t, unsigned w) {
  if (t == 0) return pow2(w) - 1;
  return s / t;
}

BigInt bv_urem(const BigInt& s, const BigInt& t) {
  if (t == 0) return s;
  return s % t;
}

BigInt bv_neg(const BigInt& v, unsigned w) { return bv_wrap(-v, w); }

bool msb(const BigInt& v, unsigned w) { return bit_test(v, w - 1); }

class Machine {
 public:
  Machine(const Domain& domain, Chooser* chooser, const Env& initial)
      : domain_(domain), chooser_(chooser), env_(initial) {}

  Value eval(const ExprPtr& e) {
    switch (e->op) {
      case Op::BoolConst:
      case Op::IntConst:
      case Op::BvConst:
        return Value::of(e->value);
      case Op::Var: return read(e->name, e->type);
      case Op::Not: return boolean(!truth(e->args[0]));
      case Op::And:
        for (const auto& a : e->args) {
          if (!truth(a)) return boolean(false);
        }
        return boolean(true);
      case Op::Or:
        for (const auto& a : e->args) {
          if (truth(a)) return boolean(true);
        }
        return boolean(false);
      case Op::Implies: return boolean(!truth(e->args[0]) || truth(e->args[1]));
      case Op::Ite: return truth(e->args[0]) ? eval(e->args[1]) : eval(e->args[2]);
      case Op::Eq:
        return boolean(equal(eval(e->args[0]), eval(e->args[1]), e->args[0]->type));
      case Op::ConstMap: {
        auto m = std::make_shared<MapData>();
        m->type = e->type;
        m->fallback = eval(e->args[0]);
        return Value{0, m};
      }
      case Op::Select: return select(eval(e->args[0]), eval(e->args[1]).scalar);
      case Op::Store: {
        Value base = eval(e->args[0]);
        BigInt key = eval(e->args[1]).scalar;
        Value v = eval(e->args[2]);
        auto m = std::make_shared<MapData>(*base.map);
        m->writes[key] = v;
        return Value{0, m};
      }
      default: break;
    }
    if (e->args.size() == 1) return unary(*e, num(e->args[0]));
    return binary(*e, num(e->args[0]), num(e->args[1]));
  }

  void exec(const StmtPtr& s) {
    switch (s->kind) {
      case StmtKind::Assign: {
        Value v = eval(s->expr);
        env_[s->target] = std::move(v);
        return;
      }
      case StmtKind::Havoc:
        for (const auto& v : s->vars) env_.erase(v);
        return;
      case StmtKind::Assume:
        if (!truth(s->expr)) throw PathBlocked{};
        return;
      case StmtKind::Assert:
        if (!truth(s->expr)) throw PathFailed{s->label.id};
        return;
      case StmtKind::If:
        exec(truth(s->expr) ? s->then_branch() : s->else_branch());
        return;
      case StmtKind::Seq:
        for (const auto& c : s->children) exec(c);
        return;
      case StmtKind::While: loop(*s); return;
    }
  }

  const Env& env() const { return env_; }

 private:
  static Value boolean(bool b) { return Value::of(b ? 1 : 0); }

  bool truth(const ExprPtr& e) { return eval(e).scalar != 0; }
  BigInt num(const ExprPtr& e) { return eval(e).scalar; }

  void loop(const Stmt& s) {
    for (unsigned iteration = 0;; ++iteration) {
      for (const auto& inv : s.invariants) {
        if (truth(inv.expr)) continue;
        if (inv.free) throw PathBlocked{};
        throw PathFailed{iteration == 0 ? inv.entry_label().id
                                        : inv.maintained_label().id};
      }
      if (!truth(s.expr)) return;
      if (iteration >= domain_.loop_bound) throw PathInconclusive{};
      exec(s.body());
    }
  }

  std::size_t arity(const Type& t) const {
    switch (t.kind) {
      case TypeKind::Bool: return 2;
      case TypeKind::Address: return domain_.addresses;
      case TypeKind::Int:
        return static_cast<std::size_t>(domain_.int_hi - domain_.int_lo + 1);
      case TypeKind::BitVec:
        if (t.width > domain_.max_bv_width) {
          if (domain_.wide_bv_values > 0) return domain_.wide_bv_values;
          raise(ErrorKind::DomainTooLarge, {},
                "bitvector width " + std::to_string(t.width) +
                    " exceeds the oracle domain");
        }
        return std::size_t{1} << t.width;
      case TypeKind::Map: return 0;
    }
    return 0;
  }

  BigInt scalar_at(const Type& t, std::size_t index) const {
    if (t.is_int()) return domain_.int_lo + BigInt(index);
    return BigInt(index);
  }

  Value fresh(const TypePtr& t) {
    if (t->is_map()) {
      auto m = std::make_shared<MapData>();
      m->type = t;
      m->base = next_base_++;
      return Value{0, m};
    }
    if (!chooser_) {
      raise(ErrorKind::DomainTooLarge, {}, "unbound value in concrete evaluation");
    }
    return Value::of(scalar_at(*t, chooser_->choose(arity(*t))));
  }

  Value read(const std::string& name, const TypePtr& type) {
    if (auto it = env_.find(name); it != env_.end()) return it->second;
    if (!chooser_) {
      raise(ErrorKind::DomainTooLarge, {}, "unbound variable '" + name + "'");
    }
    Value v = fresh(type);
    env_[name] = v;
    return v;
  }

  Value select(const Value& map, const BigInt& key) {
    const MapData& m = *map.map;
    if (auto it = m.writes.find(key); it != m.writes.end()) return it->second;
    if (m.base < 0) return m.fallback;
    auto slot = std::make_pair(m.base, key);
    if (auto it = lazy_.find(slot); it != lazy_.end()) return it->second;
    Value v = fresh(m.type->value);
    lazy_.emplace(slot, v);
    return v;
  }

  bool equal(const Value& a, const Value& b, const TypePtr& type) {
    if (!type->is_map()) return a.scalar == b.scalar;
    std::size_t n = arity(*type->key);
    for (std::size_t i = 0; i < n; ++i) {
      BigInt key = scalar_at(*type->key, i);
      if (!equal(select(a, key), select(b, key), type->value)) return false;
    }
    return true;
  }

  Value unary(const Expr& e, const BigInt& a) {
    unsigned w = e.args[0]->type->is_bv() ? e.args[0]->type->width : 0;
    switch (e.op) {
      case Op::Neg: return Value::of(-a);
      case Op::BvNeg: return Value::of(bv_neg(a, w));
      case Op::BvNot: return Value::of(pow2(w) - 1 - a);
      case Op::BvToNat: return Value::of(a);
      case Op::NatToBv: return Value::of(bv_wrap(a, e.p0));
      case Op::ZeroExt: return Value::of(a);
      case Op::SignExt: return Value::of(bv_wrap(bv_signed(a, w), w + e.p0));
      case Op::Extract: return Value::of(bv_wrap(a >> e.p1, e.p0 - e.p1 + 1));
      default: break;
    }
    raise(ErrorKind::TranslationError, {}, "oracle: unexpected unary " + op_name(e.op));
  }

  Value binary(const Expr& e, const BigInt& a, const BigInt& b) {
    unsigned w = e.args[0]->type->is_bv() ? e.args[0]->type->width : 0;
    switch (e.op) {
      case Op::Add: return Value::of(a + b);
      case Op::Sub: return Value::of(a - b);
      case Op::Mul: return Value::of(a * b);
      case Op::Div:
        if (b == 0) throw PathInconclusive{};
        return Value::of(euclid_div(a, b));
      case Op::Mod:
        if (b == 0) throw PathInconclusive{};
        return Value::of(euclid_mod(a, b));
      case Op::Lt: return boolean(a < b);
      case Op::Le: return boolean(a <= b);
      case Op::Gt: return boolean(a > b);
      case Op::Ge: return boolean(a >= b);
      case Op::BvAdd: return Value::of(bv_wrap(a + b, w));
      case Op::BvSub: return Value::of(bv_wrap(a - b, w));
      case Op::BvMul: return Value::of(bv_wrap(a * b, w));
      case Op::BvUdiv: return Value::of(bv_udiv(a, b, w));
      case Op::BvUrem: return Value::of(bv_urem(a, b));
      case Op::BvSdiv: {
        bool na = msb(a, w), nb = msb(b, w);
        BigInt q = bv_udiv(na ? bv_neg(a, w) : a, nb ? bv_neg(b, w) : b, w);
        return Value::of(na != nb ? bv_neg(q, w) : q);
      }
      case Op::BvSrem: {
        bool na = msb(a, w), nb = msb(b, w);
        BigInt r = bv_urem(na ? bv_neg(a, w) : a, nb ? bv_neg(b, w) : b);
        return Value::of(na ? bv_neg(r, w) : r);
      }
      case Op::BvAnd: return Value::of(a & b);
      case Op::BvOr: return Value::of(a | b);
      case Op::BvXor: return Value::of(a ^ b);
      case Op::BvShl:
        if (b >= w) return Value::of(0);
        return Value::of(bv_wrap(a << static_cast<unsigned>(b), w));
      case Op::BvLshr:
        if (b >= w) return Value::of(0);
        return Value::of(a >> static_cast<unsigned>(b));
      case Op::BvAshr: {
        BigInt s = bv_signed(a, w);
        if (b >= w) return Value::of(s < 0 ? pow2(w) - 1 : BigInt(0));
        BigInt shifted = s >= 0 ? BigInt(s >> static_cast<unsigned>(b))
                                : euclid_div(s, pow2(static_cast<unsigned>(b)));
        return Value::of(bv_wrap(shifted, w));
      }
      case Op::BvUlt: return boolean(a < b);
      case Op::BvUle: return boolean(a <= b);
      case Op::BvSlt: return boolean(bv_signed(a, w) < bv_signed(b, w));
      case Op::BvSle: return boolean(bv_signed(a, w) <= bv_signed(b, w));
      default: break;
    }
    raise(ErrorKind::TranslationError, {}, "oracle: unexpected binary " + op_name(e.op));
  }

  const Domain& domain_;
  Chooser* chooser_;
  Env env_;
  std::map<std::pair<long, BigInt>, Value> lazy_;
  long next_base_ = 0;
};

}  // namespace

Value evaluate(const ExprPtr& e, const Env& env) {
  Domain domain;
  Machine machine(domain, nullptr, env);
  try {
    return machine.eval(e);
  } catch (const PathInconclusive&) {
    raise(ErrorKind::DomainTooLarge, {}, "division by zero in concrete evaluation");
  }
}

OracleResult oracle_execute(const Program& program, const std::string& procedure,
                            const Domain& domain) {
  const Procedure* proc = program.find_procedure(procedure);
  if (!proc) {
    raise(ErrorKind::NameError, {}, "no procedure named '" + procedure + "'");
  }
  OracleResult result;
  bool inconclusive = false;
  Chooser chooser;
  do {
    if (result.runs++ >= domain.max_runs) {
      raise(ErrorKind::DomainTooLarge, proc->span,
            "oracle budget of " + std::to_string(domain.max_runs) +
                " runs exceeded for '" + procedure + "'");
    }
    Machine machine(domain, &chooser, {});
    try {
      for (const auto& a : proc->entry_assumptions) {
        if (machine.eval(a).scalar == 0) throw PathBlocked{};
      }
      machine.exec(proc->body);
    } catch (const PathFailed& f) {
      if (result.failed_labels.empty()) result.first_label = f.label;
      result.failed_labels.insert(f.label);
    } catch (const PathBlocked&) {
    } catch (const PathInconclusive&) {
      inconclusive = true;
    }
  } while (chooser.advance());
  if (!result.failed_labels.empty()) {
    result.verdict = OracleVerdict::Failure;
  } else if (inconclusive) {
    result.verdict = OracleVerdict::Inconclusive;
  } else {
    result.verdict = OracleVerdict::NoFailure;
  }
  return result;
}

}  // namespace scv::ivl

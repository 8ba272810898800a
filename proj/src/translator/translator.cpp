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

#include "scv/translator/translator.hpp"

#include "scv/ivl/analysis.hpp"
#include "scv/ivl/printer.hpp"
#include "scv/translator/arith.hpp"

#include <functional>
#include <map>
#include <set>

namespace scv::translator {

namespace fe = scv::frontend;
using ivl::ExprPtr;
using ivl::StmtPtr;
using ivl::TypePtr;
using Enc = EncodedExpr;

namespace {

struct Global {
  std::string name;
  TypePtr type;  // [address]T
  fe::SolTypePtr sol;
  std::string ghost;  // sum ghost, empty if untracked
};

struct Frame {
  const fe::ContractDef* contract = nullptr;
  const fe::FunctionDef* function = nullptr;
  ExprPtr self, sender, value;
  std::map<const fe::VarDecl*, std::string> locals;
  std::string ret;
  std::string done;
  std::function<void()> placeholder;
  bool in_modifier = false;
};

bool is_mod(ArithMode m) { return m == ArithMode::Mod || m == ArithMode::ModOverflow; }

const fe::SolType& uint256() {
  static const fe::SolTypePtr t = fe::SolType::integer(false, 256);
  return *t;
}

bool contains_return(const fe::StmtPtr& s) {
  if (!s) return false;
  if (s->kind == fe::StmtKind::Return) return true;
  for (const auto& b : s->body)
    if (contains_return(b)) return true;
  return false;
}

// A return anywhere but as a direct child of the function body needs a flag.
bool needs_done_flag(const fe::StmtPtr& body) {
  if (!body) return false;
  for (const auto& s : body->body) {
    if (s && s->kind != fe::StmtKind::Return && contains_return(s)) return true;
  }
  return false;
}

void walk_exprs(const fe::ExprPtr& e, const std::function<void(const fe::Expr&)>& fn) {
  if (!e) return;
  fn(*e);
  for (const auto& a : e->args) walk_exprs(a, fn);
  if (e->receiver) walk_exprs(e->receiver, fn);
}

void walk_stmt_exprs(const fe::StmtPtr& s, const std::function<void(const fe::Expr&)>& fn,
                     bool annotations) {
  if (!s) return;
  for (const auto& e : s->exprs) walk_exprs(e, fn);
  if (s->decl && s->decl->init) walk_exprs(s->decl->init, fn);
  if (annotations)
    for (const auto& a : s->invariants) walk_exprs(a.expr, fn);
  for (const auto& b : s->body) walk_stmt_exprs(b, fn, annotations);
}

class Translator {
 public:
  Translator(const fe::CompilationUnit& unit, ArithMode mode) : unit_(unit), mode_(mode) {}

  ivl::Program run() {
    collect_globals();
    for (const auto& c : unit_.contracts) {
      if (c->is_library) continue;
      bool has_ctor = false;
      for (const auto& f : c->functions) {
        if (f->is_constructor) {
          has_ctor = true;
          program_.procedures.push_back(constructor(*c, f.get()));
        }
      }
      if (!has_ctor) program_.procedures.push_back(constructor(*c, nullptr));
      for (const auto& f : c->functions) {
        if (f->is_constructor || !f->is_entry_point() || !f->body) continue;
        program_.procedures.push_back(entry_point(*c, *f));
      }
    }
    if (uses_address0_) program_.globals.push_back({kAddressZero, ivl::Type::address()});
    return std::move(program_);
  }

 private:
  // ---- globals ----

  void collect_globals() {
    std::set<const fe::VarDecl*> tracked;
    auto find_sums = [&](const fe::Expr& e) {
      if (e.kind == fe::ExprKind::Sum && e.args[0]->var) tracked.insert(e.args[0]->var);
    };
    std::map<std::string, int> count;
    for (const auto& c : unit_.contracts) {
      for (const auto& a : c->invariants) walk_exprs(a.expr, find_sums);
      for (const auto& f : c->functions) {
        for (const auto& a : f->pre) walk_exprs(a.expr, find_sums);
        for (const auto& a : f->post) walk_exprs(a.expr, find_sums);
        walk_stmt_exprs(f->body, find_sums, true);
      }
      for (const auto& v : c->state_vars)
        if (!v->is_constant) ++count[v->name];
    }
    for (const auto& c : unit_.contracts) {
      for (const auto& v : c->state_vars) {
        if (v->is_constant) continue;
        if (v->type->is_array()) {
          raise(ErrorKind::TranslationError, v->span, "array state variables are not supported");
        }
        Global g;
        g.name = count[v->name] > 1 ? c->name + "." + v->name : v->name;
        g.type = ivl::Type::map(ivl::Type::address(), ivl_type(*v->type, mode_));
        g.sol = v->type;
        if (tracked.count(v.get())) g.ghost = kSumPrefix + g.name;
        program_.globals.push_back({g.name, g.type});
        state_names_.push_back(g.name);
        globals_[v.get()] = g;
      }
    }
    program_.globals.push_back({kBalance, balance_type()});
    for (const auto& c : unit_.contracts) {
      for (const auto& v : c->state_vars) {
        auto it = globals_.find(v.get());
        if (it == globals_.end() || it->second.ghost.empty()) continue;
        program_.globals.push_back({it->second.ghost, balance_type()});
        ghost_names_.push_back(it->second.ghost);
      }
    }
    if (mode_ == ArithMode::ModOverflow) {
      program_.globals.push_back({ivl::kOverflowFlag, ivl::Type::boolean()});
    }
    for (const auto& g : program_.globals) reserved_.insert(g.name);
  }

  static TypePtr balance_type() { return ivl::Type::map(ivl::Type::address(), ivl::Type::integer()); }

  const Global& global(const fe::VarDecl* v, const SourceSpan& span) const {
    auto it = globals_.find(v);
    if (it == globals_.end()) raise(ErrorKind::TranslationError, span, "unknown state variable");
    return it->second;
  }

  ExprPtr gvar(const Global& g) const { return ivl::var(g.name, g.type); }
  static ExprPtr balance() { return ivl::var(kBalance, balance_type()); }
  static ExprPtr oc() { return ivl::var(ivl::kOverflowFlag, ivl::Type::boolean()); }
  ExprPtr ghost(const Global& g, const ExprPtr& self) const {
    return ivl::select(ivl::var(g.ghost, balance_type()), self);
  }
  ExprPtr address0() {
    uses_address0_ = true;
    return ivl::var(kAddressZero, ivl::Type::address());
  }

  ExprPtr default_value(const fe::SolType& t, const SourceSpan& span) {
    switch (t.kind) {
      case fe::SolType::Kind::Bool: return ivl::false_expr();
      case fe::SolType::Kind::Int: return encode_literal(0, t, mode_);
      case fe::SolType::Kind::Address:
      case fe::SolType::Kind::Contract: return address0();
      case fe::SolType::Kind::Mapping:
        return ivl::const_map(ivl_type(t, mode_), default_value(*t.value, span));
      default: break;
    }
    raise(ErrorKind::TranslationError, span, "no default value for " + fe::to_string(t));
  }

  // ---- procedure state ----

  void begin(const std::string& name) {
    proc_ = ivl::Procedure{};
    proc_.name = name;
    used_ = reserved_;
    local_types_.clear();
    tmp_counter_ = 0;
    label_counter_.clear();
    out_ = &top_;
    top_.clear();
    seg_span_ = {};
    keys_.clear();
    inline_stack_.clear();
    inline_depth_ = 0;
    in_check_ = false;
  }

  std::string fresh_name(const std::string& base) {
    if (used_.insert(base).second) return base;
    for (int k = 1;; ++k) {
      std::string n = base + "$" + std::to_string(k);
      if (used_.insert(n).second) return n;
    }
  }

  std::string declare_local(const std::string& base, const fe::SolType& t, const SourceSpan& span) {
    if (t.is_mapping() || t.is_array()) {
      raise(ErrorKind::UnsupportedFeature, span, "local variables of type " + fe::to_string(t) + " are not supported");
    }
    std::string n = fresh_name(base);
    proc_.locals.push_back({n, ivl_type(t, mode_)});
    if (t.is_int()) local_types_[n] = fe::SolType::integer(t.is_signed, t.bits);
    return n;
  }

  std::string tmp(TypePtr type) {
    std::string n;
    do {
      n = "__t" + std::to_string(++tmp_counter_);
    } while (!used_.insert(n).second);
    proc_.locals.push_back({n, std::move(type)});
    return n;
  }

  std::string tmp_of(const fe::SolType& t) {
    std::string n = tmp(ivl_type(t, mode_));
    if (t.is_int()) local_types_[n] = fe::SolType::integer(t.is_signed, t.bits);
    return n;
  }

  std::string next_label(const std::string& prefix) {
    return prefix + std::to_string(++label_counter_[prefix]);
  }

  ivl::DiagnosticLabel label(const std::string& prefix, ivl::Category cat, const SourceSpan& span,
                             std::string message) {
    return {next_label(prefix), cat, span, std::move(message)};
  }

  void emit(StmtPtr s) { out_->push_back(std::move(s)); }

  void emit_assumes(const std::vector<ExprPtr>& facts) {
    ExprPtr all = ivl::and_(facts);
    if (!all->is_true()) emit(ivl::assume(all));
  }

  void accumulate(const ExprPtr& ovf, const SourceSpan& span) {
    if (mode_ != ArithMode::ModOverflow || ovf->is_false()) return;
    if (!seg_span_.valid()) seg_span_ = span;
    emit(ivl::assign(ivl::kOverflowFlag, ivl::or_(oc(), ovf)));
  }

  /// Emits the side conditions of `e` and returns its value.
  ExprPtr consume(const Enc& e) {
    emit_assumes(e.assumes);
    accumulate(e.overflow, e.overflow_span);
    return e.value;
  }

  void flush(const SourceSpan& fallback) {
    keys_.clear();
    if (mode_ != ArithMode::ModOverflow) return;
    SourceSpan span = seg_span_.valid() ? seg_span_ : fallback;
    seg_span_ = {};
    emit(ivl::assert_(ivl::not_(oc()), label("ovf", ivl::Category::Overflow, span, "possible overflow")));
    emit(ivl::assign(ivl::kOverflowFlag, ivl::false_expr()));
  }

  std::vector<StmtPtr> capture(const std::function<void()>& fn) {
    std::vector<StmtPtr> buffer;
    std::vector<StmtPtr>* saved = out_;
    out_ = &buffer;
    fn();
    out_ = saved;
    return buffer;
  }

  void append(std::vector<StmtPtr>& stmts) {
    for (auto& s : stmts) emit(std::move(s));
  }

  // ---- expressions ----

  // Annotations use exact integers. In bv mode they stay bitvectors: each
  // value is a signed vector wide enough that no operation wraps, and only
  // meets mathematical integers next to ghost sums and balances.
  ArithMode operand_mode(const Enc& a, const Enc* b) const {
    if (!exact_) return mode_;
    if (mode_ != ArithMode::Bv) return ArithMode::Int;
    bool bv = a.value->type->is_bv() && (!b || b->value->type->is_bv());
    return bv ? ArithMode::Bv : ArithMode::Int;
  }

  void align(Enc& a, ArithMode m) const {
    if (exact_ && m == ArithMode::Int && a.value->type->is_bv()) a.value = ivl::bv_to_int_signed(a.value);
  }

  ExprPtr lift(const ExprPtr& v, const fe::SolType& t) const {
    if (!exact_ || mode_ != ArithMode::Bv || !v->type->is_bv() || !(t.is_int() || t.is_literal())) return v;
    if (t.is_int() && t.is_signed) return v;
    return ivl::make(ivl::Op::ZeroExt, {v}, 1);
  }

  static ExprPtr sext(const ExprPtr& v, unsigned w) {
    unsigned have = v->type->width;
    return w > have ? ivl::make(ivl::Op::SignExt, {v}, w - have) : v;
  }

  /// Exact arithmetic on signed bitvectors.
  static ExprPtr wide_arith(const std::string& op, const ExprPtr& a, const ExprPtr& b, const SourceSpan& span) {
    unsigned wa = a->type->width, wb = b->type->width;
    unsigned w = std::max(wa, wb) + 1;
    ivl::Op o;
    if (op == "+") o = ivl::Op::BvAdd;
    else if (op == "-") o = ivl::Op::BvSub;
    else if (op == "/") o = ivl::Op::BvSdiv;
    else if (op == "%") o = ivl::Op::BvSrem;
    else if (op == "*") {
      o = ivl::Op::BvMul;
      w = wa + wb;
    } else {
      raise(ErrorKind::UnsupportedOperation, span, "operator '" + op + "' is not supported in annotations");
    }
    return ivl::make(o, {sext(a, w), sext(b, w)});
  }

  static ExprPtr wide_compare(const std::string& op, const ExprPtr& a, const ExprPtr& b) {
    unsigned w = std::max(a->type->width, b->type->width);
    ExprPtr x = sext(a, w), y = sext(b, w);
    if (op == "==") return ivl::eq(x, y);
    if (op == "!=") return ivl::neq(x, y);
    if (op == "<") return ivl::make(ivl::Op::BvSlt, {x, y});
    if (op == "<=") return ivl::make(ivl::Op::BvSle, {x, y});
    if (op == ">") return ivl::make(ivl::Op::BvSlt, {y, x});
    return ivl::make(ivl::Op::BvSle, {y, x});
  }

  void add_range(Enc& r, const ExprPtr& v, const fe::SolType& t) const {
    if (is_mod(mode_) && t.is_int()) r.assumes.push_back(in_range(v, t.bits, t.is_signed));
  }

  Enc encode_annotation(const fe::Annotation& a, Frame& f) {
    bool saved = exact_;
    exact_ = true;
    Enc r = encode(a.expr, f);
    exact_ = saved;
    return r;
  }

  Enc encode(const fe::ExprPtr& e, Frame& f) {
    switch (e->kind) {
      case fe::ExprKind::BoolLiteral: return Enc::of(ivl::bool_const(e->value != 0));
      case fe::ExprKind::NumberLiteral:
        return Enc::of(lift(encode_literal(e->value, *e->type, mode_), *e->type));
      case fe::ExprKind::Identifier:
      case fe::ExprKind::Member: return reference(e, f);
      case fe::ExprKind::Index: return index(e, f);
      case fe::ExprKind::Unary: return unary(e, f);
      case fe::ExprKind::Binary: return binary(e, f);
      case fe::ExprKind::Conversion: return conversion(e, f);
      case fe::ExprKind::Call: return call(e, f);
      case fe::ExprKind::Sum: {
        const Global& g = global(e->args[0]->var, e->span);
        return Enc::of(ghost(g, f.self));
      }
      default: break;
    }
    raise(ErrorKind::UnsupportedFeature, e->span, "expression is not supported here");
  }

  Enc reference(const fe::ExprPtr& e, Frame& f) {
    switch (e->ref) {
      case fe::RefKind::This: return Enc::of(f.self);
      case fe::RefKind::MsgSender: return Enc::of(f.sender);
      case fe::RefKind::MsgValue: return Enc::of(lift(f.value, uint256()));
      case fe::RefKind::LocalVar: {
        auto it = f.locals.find(e->var);
        if (it == f.locals.end()) {
          raise(ErrorKind::TranslationError, e->span, "variable '" + e->name + "' is not in scope");
        }
        return Enc::of(lift(ivl::var(it->second, ivl_type(*e->var->type, mode_)), *e->var->type));
      }
      case fe::RefKind::StateVar: {
        if (e->var->is_constant) {
          if (!e->var->init) raise(ErrorKind::TranslationError, e->span, "constant without a value");
          return encode(e->var->init, f);
        }
        const Global& g = global(e->var, e->span);
        ExprPtr self = f.self;
        if (e->kind == fe::ExprKind::Member) self = encode(e->args[0], f).value;
        Enc r = Enc::of(ivl::select(gvar(g), self));
        add_range(r, r.value, *g.sol);
        r.value = lift(r.value, *g.sol);
        return r;
      }
      case fe::RefKind::Balance: {
        Enc base = encode(e->args[0], f);
        Enc r;
        r.assumes = base.assumes;
        ExprPtr b = ivl::select(balance(), base.value);
        if (mode_ != ArithMode::Int) r.assumes.push_back(in_range(b, 256, false));
        r.value = (exact_ || mode_ != ArithMode::Bv) ? b : ivl::nat_to_bv(b, 256);
        return r;
      }
      case fe::RefKind::Length: {
        const fe::ExprPtr& base = e->args[0];
        if (base->ref != fe::RefKind::LocalVar || !f.locals.count(base->var)) {
          raise(ErrorKind::UnsupportedFeature, e->span, "length of this array is not supported");
        }
        ExprPtr len = ivl::var(f.locals.at(base->var) + "#len", ivl_type(uint256(), mode_));
        return Enc::of(lift(len, uint256()));
      }
      default: break;
    }
    raise(ErrorKind::UnsupportedFeature, e->span, "'" + e->name + "' cannot be used as a value");
  }

  /// Key in code (not annotation) representation.
  Enc encode_key(const fe::ExprPtr& k, Frame& f) {
    bool saved = exact_;
    exact_ = false;
    Enc r = encode(k, f);
    exact_ = saved;
    return r;
  }

  struct MapAccess {
    const Global* global = nullptr;  // state mapping
    std::string array;               // or array parameter
    ExprPtr map;                     // current value of the indexed map
    Enc key;
    fe::SolTypePtr value_type;
  };

  MapAccess access(const fe::ExprPtr& e, Frame& f) {
    const fe::ExprPtr& base = e->args[0];
    MapAccess a;
    a.key = encode_key(e->args[1], f);
    a.value_type = e->type;
    if (base->ref == fe::RefKind::StateVar && base->kind == fe::ExprKind::Identifier &&
        base->var->type->is_mapping() && !base->var->is_constant) {
      a.global = &global(base->var, base->span);
      a.map = ivl::select(gvar(*a.global), f.self);
      return a;
    }
    if (base->ref == fe::RefKind::LocalVar && base->var->type->is_array() && f.locals.count(base->var)) {
      a.array = f.locals.at(base->var);
      TypePtr t = ivl_type(*base->var->type, mode_);
      a.map = ivl::var(a.array, t);
      ExprPtr len = ivl::var(a.array + "#len", ivl_type(uint256(), mode_));
      const ExprPtr& i = a.key.value;
      if (mode_ == ArithMode::Bv) {
        a.key.assumes.push_back(ivl::make(ivl::Op::BvUlt, {i, len}));
      } else {
        a.key.assumes.push_back(ivl::and_(ivl::le(ivl::int_const(0), i), ivl::lt(i, len)));
      }
      return a;
    }
    raise(ErrorKind::UnsupportedFeature, e->span, "indexing this expression is not supported");
  }

  bool sum_axioms(const Global& g) const {
    return !g.ghost.empty() && mode_ != ArithMode::Int && g.sol->value->is_int() &&
           !g.sol->value->is_signed;
  }

  /// Facts from the ghost sum about the entry `m[key]` and the entries
  /// touched earlier in the segment.
  void sum_facts(const MapAccess& a, Frame& f, std::vector<ExprPtr>& out) {
    if (!a.global || !sum_axioms(*a.global) || exact_) return;
    const fe::SolType& vt = *a.global->sol->value;
    ExprPtr s = ghost(*a.global, f.self);
    ExprPtr here = to_exact(ivl::select(a.map, a.key.value), vt, mode_);
    out.push_back(ivl::le(here, s));
    auto& seen = keys_[a.global->name];
    std::string text = ivl::print_expr(a.key.value);
    for (const auto& [other_text, other] : seen) {
      if (other_text == text) continue;
      ExprPtr there = to_exact(ivl::select(a.map, other), vt, mode_);
      out.push_back(ivl::or_(ivl::eq(other, a.key.value), ivl::le(ivl::add(there, here), s)));
    }
    bool known = false;
    for (const auto& k : seen) known = known || k.first == text;
    if (!known) seen.emplace_back(text, a.key.value);
  }

  Enc index(const fe::ExprPtr& e, Frame& f) {
    MapAccess a = access(e, f);
    Enc r;
    r.assumes = a.key.assumes;
    r.overflow = a.key.overflow;
    r.overflow_span = a.key.overflow_span;
    ExprPtr v = ivl::select(a.map, a.key.value);
    add_range(r, v, *a.value_type);
    sum_facts(a, f, r.assumes);
    r.value = lift(v, *a.value_type);
    return r;
  }

  Enc unary(const fe::ExprPtr& e, Frame& f) {
    Enc x = encode(e->args[0], f);
    if (e->op == "!") {
      x.value = ivl::not_(x.value);
      return x;
    }
    ArithMode m = operand_mode(x, nullptr);
    if (e->op == "-") {
      if (exact_ && m == ArithMode::Bv) {
        x.value = wide_arith("-", ivl::bv_const(0, 1), x.value, e->span);
        return x;
      }
      Enc zero = Enc::of(m == ArithMode::Bv ? encode_literal(0, *e->type, m) : ivl::int_const(0));
      std::size_t plain = x.assumes.size();
      Enc r = encode_arith("-", zero, x, *e->type, m, e->span);
      if (exact_) r.assumes.resize(plain);
      return r;
    }
    if (e->op == "~" && m == ArithMode::Bv) {
      x.value = ivl::make(ivl::Op::BvNot, {x.value});
      return x;
    }
    raise(ErrorKind::UnsupportedOperation, e->span,
          "operator '" + e->op + "' is not available in " + std::string(mode_name(m)) + " mode");
  }

  /// Stores `e` in a fresh temporary so later side effects cannot change it.
  Enc materialize(const Enc& e) {
    ExprPtr v = consume(e);
    if (v->is_const() || v->op == ivl::Op::Var) return Enc::of(v);
    std::string t = tmp(v->type);
    emit(ivl::assign(t, v));
    return Enc::of(ivl::var(t, v->type));
  }

  Enc binary(const fe::ExprPtr& e, Frame& f) {
    const std::string& op = e->op;
    Enc a = encode(e->args[0], f);
    Enc b;
    auto buffer = capture([&] { b = encode(e->args[1], f); });
    if (op == "&&" || op == "||") {
      bool conj = op == "&&";
      if (!buffer.empty()) {
        // A call on the right-hand side only runs when not short-circuited.
        std::string t = tmp(ivl::Type::boolean());
        emit(ivl::assign(t, consume(a)));
        flush(e->span);
        ExprPtr tv = ivl::var(t, ivl::Type::boolean());
        buffer.push_back(ivl::assume(ivl::and_(b.assumes)));
        if (mode_ == ArithMode::ModOverflow && !b.overflow->is_false()) {
          buffer.push_back(ivl::assign(ivl::kOverflowFlag, ivl::or_(oc(), b.overflow)));
          if (!seg_span_.valid()) seg_span_ = b.overflow_span;
        }
        buffer.push_back(ivl::assign(t, b.value));
        auto tail = capture([&] { flush(e->span); });
        buffer.insert(buffer.end(), tail.begin(), tail.end());
        emit(ivl::if_(conj ? tv : ivl::not_(tv), ivl::seq(std::move(buffer)), ivl::skip()));
        return Enc::of(tv);
      }
      Enc r;
      r.assumes = a.assumes;
      ExprPtr guard = conj ? a.value : ivl::not_(a.value);
      ExprPtr rhs_facts = ivl::and_(b.assumes);
      if (!rhs_facts->is_true()) r.assumes.push_back(ivl::implies(guard, rhs_facts));
      r.overflow = ivl::or_(a.overflow, ivl::and_(guard, b.overflow));
      r.overflow_span = a.overflow_span.valid() ? a.overflow_span : b.overflow_span;
      r.value = conj ? ivl::and_(a.value, b.value) : ivl::or_(a.value, b.value);
      return r;
    }
    if (!buffer.empty()) {
      a = materialize(a);
      append(buffer);
    }
    ArithMode m = operand_mode(a, &b);
    align(a, m);
    align(b, m);
    const bool wide = exact_ && m == ArithMode::Bv;
    static const std::set<std::string> comparisons = {"==", "!=", "<", "<=", ">", ">="};
    if (comparisons.count(op)) {
      Enc r;
      r.assumes = a.assumes;
      r.assumes.insert(r.assumes.end(), b.assumes.begin(), b.assumes.end());
      r.overflow = ivl::or_(a.overflow, b.overflow);
      r.overflow_span = a.overflow_span.valid() ? a.overflow_span : b.overflow_span;
      const fe::SolType& t = *e->args[0]->type;
      r.value = wide && a.value->type->is_bv()
                    ? wide_compare(op, a.value, b.value)
                    : encode_compare(op, a.value, b.value, t.is_literal() ? *e->args[1]->type : t, m);
      return r;
    }
    if (wide) {
      Enc r;
      r.assumes = a.assumes;
      r.assumes.insert(r.assumes.end(), b.assumes.begin(), b.assumes.end());
      r.value = wide_arith(op, a.value, b.value, e->span);
      return r;
    }
    std::size_t plain = a.assumes.size() + b.assumes.size();
    Enc r = encode_arith(op, a, b, *e->type, m, e->span, e->args[1]->type.get());
    if (exact_) r.assumes.resize(plain);  // no expected failures inside annotations
    return r;
  }

  Enc conversion(const fe::ExprPtr& e, Frame& f) {
    const fe::ExprPtr& x = e->args[0];
    if (e->type->kind == fe::SolType::Kind::Address && x->kind == fe::ExprKind::NumberLiteral) {
      return Enc::of(address0());
    }
    Enc r = encode(x, f);
    if (exact_) return r;  // annotations are exact
    r.value = encode_conversion(r.value, *x->type, *e->type, mode_);
    return r;
  }

  // ---- calls ----

  Enc call(const fe::ExprPtr& e, Frame& f) {
    if (exact_) raise(ErrorKind::AnnotationError, e->span, "calls are not allowed in annotations");
    switch (e->call) {
      case fe::CallKind::Require: {
        Enc c = encode(e->args[1], f);
        emit(ivl::assume(consume(c)));
        return Enc::of(ivl::true_expr());
      }
      case fe::CallKind::Assert: {
        Enc c = encode(e->args[1], f);
        ExprPtr v = consume(c);
        emit(ivl::assert_(v, label("assert", ivl::Category::Assertion, e->span, "assertion might not hold")));
        return Enc::of(ivl::true_expr());
      }
      case fe::CallKind::Revert:
        emit(ivl::assume(ivl::false_expr()));
        return Enc::of(ivl::true_expr());
      case fe::CallKind::Transfer:
      case fe::CallKind::Send:
      case fe::CallKind::CallValue: return value_transfer(e, f);
      case fe::CallKind::Getter: return getter(e, f);
      case fe::CallKind::Internal:
      case fe::CallKind::Library:
      case fe::CallKind::External: return function_call(e, f);
      default: break;
    }
    raise(ErrorKind::UnsupportedFeature, e->span, "call is not supported");
  }

  Enc getter(const fe::ExprPtr& e, Frame& f) {
    Enc recv = encode(e->receiver, f);
    const Global& g = global(e->var, e->span);
    Enc r;
    r.assumes = recv.assumes;
    ExprPtr v = ivl::select(gvar(g), recv.value);
    fe::SolTypePtr t = g.sol;
    if (t->is_mapping()) {
      Enc k = encode_key(e->args[1], f);
      r.assumes.insert(r.assumes.end(), k.assumes.begin(), k.assumes.end());
      r.overflow = k.overflow;
      r.overflow_span = k.overflow_span;
      v = ivl::select(v, k.value);
      t = t->value;
    }
    add_range(r, v, *t);
    r.value = v;
    return r;
  }

  ivl::ExprPtr max_ether() const { return ivl::int_const(int_max(256, false)); }

  void move_balance(const ExprPtr& from, const ExprPtr& to, const ExprPtr& amount) {
    emit(ivl::assign(kBalance, ivl::store(balance(), from, ivl::sub(ivl::select(balance(), from), amount))));
    emit(ivl::assign(kBalance, ivl::store(balance(), to, ivl::add(ivl::select(balance(), to), amount))));
  }

  Enc value_transfer(const fe::ExprPtr& e, Frame& f) {
    const bool is_call = e->call == fe::CallKind::CallValue;
    Enc to_e = materialize(encode(is_call ? e->args[0] : e->receiver, f));
    ExprPtr amount = consume(encode(e->args[1], f));
    ExprPtr to = to_e.value;
    if (is_call) flush(e->span);
    ExprPtr amt = to_exact(amount, uint256(), mode_);
    if (!amt->is_const() && amt->op != ivl::Op::Var) {
      std::string t = tmp(ivl::Type::integer());
      emit(ivl::assign(t, amt));
      amt = ivl::var(t, ivl::Type::integer());
    }
    emit(ivl::assume(ivl::ge(ivl::select(balance(), f.self), amt)));
    if (mode_ != ArithMode::Int) {
      emit(ivl::assume(ivl::le(ivl::add(ivl::select(balance(), to), amt), max_ether())));
    }
    move_balance(f.self, to, amt);
    if (e->call == fe::CallKind::Transfer) return Enc::of(ivl::true_expr());
    std::string ok = tmp(ivl::Type::boolean());
    ExprPtr okv = ivl::var(ok, ivl::Type::boolean());
    if (e->call == fe::CallKind::Send) {
      emit(ivl::havoc({ok}));
      auto undo = capture([&] { move_balance(to, f.self, amt); });
      emit(ivl::if_(ivl::not_(okv), ivl::seq(std::move(undo)), ivl::skip()));
      return Enc::of(okv);
    }
    for (const auto& inv : f.contract->invariants) {
      Enc i = encode_annotation(inv, f);
      emit_assumes(i.assumes);
      emit(ivl::assert_(i.value, label("inv", ivl::Category::InvariantBeforeExternalCall, e->span,
                                      "invariant '" + inv.text + "' might not hold before external call")));
    }
    std::vector<std::string> all = state_names_;
    all.push_back(kBalance);
    all.insert(all.end(), ghost_names_.begin(), ghost_names_.end());
    all.push_back(ok);
    emit(ivl::havoc(all));
    assume_invariants(*f.contract, f);
    return Enc::of(okv);
  }

  void assume_invariants(const fe::ContractDef& c, Frame& f) {
    for (const auto& inv : c.invariants) {
      Enc i = encode_annotation(inv, f);
      i.assumes.push_back(i.value);
      emit_assumes(i.assumes);
    }
  }

  void mod_set(const fe::FunctionDef& fn, std::set<std::string>& out,
               std::set<const fe::FunctionDef*>& seen) {
    if (!seen.insert(&fn).second) return;
    auto write_target = [&](const fe::ExprPtr& lhs) {
      fe::ExprPtr root = lhs;
      while (root->kind == fe::ExprKind::Index) root = root->args[0];
      if (root->ref == fe::RefKind::StateVar && globals_.count(root->var)) {
        const Global& g = globals_.at(root->var);
        out.insert(g.name);
        if (!g.ghost.empty()) out.insert(g.ghost);
      }
    };
    auto visit = [&](const fe::Expr& e) {
      if (e.kind == fe::ExprKind::Assign || e.kind == fe::ExprKind::IncDec) write_target(e.args[0]);
      if (e.kind != fe::ExprKind::Call) return;
      switch (e.call) {
        case fe::CallKind::Transfer:
        case fe::CallKind::Send: out.insert(kBalance); break;
        case fe::CallKind::CallValue:
          out.insert(state_names_.begin(), state_names_.end());
          out.insert(ghost_names_.begin(), ghost_names_.end());
          out.insert(kBalance);
          break;
        case fe::CallKind::Internal:
        case fe::CallKind::Library:
        case fe::CallKind::External:
          if (e.function) mod_set(*e.function, out, seen);
          break;
        default: break;
      }
    };
    walk_stmt_exprs(fn.body, visit, false);
    for (const auto& m : fn.modifiers) {
      for (const auto& a : m.args) walk_exprs(a, visit);
      if (m.modifier) walk_stmt_exprs(m.modifier->body, visit, false);
    }
  }

  Frame callee_frame(const fe::ExprPtr& e, Frame& f, const fe::FunctionDef& fn, const ExprPtr& recv) {
    Frame c;
    c.contract = fn.owner;
    c.function = &fn;
    if (e->call == fe::CallKind::External) {
      c.self = recv;
      c.sender = f.self;
      c.value = encode_literal(0, uint256(), mode_);
    } else {
      c.self = f.self;
      c.sender = f.sender;
      c.value = f.value;
    }
    return c;
  }

  /// Binds parameters to fresh locals holding `args`.
  void bind_params(Frame& c, const fe::FunctionDef& fn, const std::vector<ExprPtr>& args) {
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      const auto& p = fn.params[i];
      if (p->type->is_array()) {
        raise(ErrorKind::UnsupportedFeature, p->span, "array arguments to internal calls are not supported");
      }
      std::string n = declare_local(p->name, *p->type, p->span);
      emit(ivl::assign(n, args[i]));
      c.locals[p.get()] = n;
    }
  }

  void open_result(Frame& c, const fe::FunctionDef& fn) {
    if (fn.returns) {
      const auto& r = fn.returns;
      c.ret = r->name.empty() ? tmp_of(*r->type) : declare_local(r->name, *r->type, r->span);
      if (!r->name.empty()) c.locals[r.get()] = c.ret;
      emit(ivl::assign(c.ret, default_value(*r->type, r->span)));
    }
    if (needs_done_flag(fn.body)) {
      c.done = tmp(ivl::Type::boolean());
      emit(ivl::assign(c.done, ivl::false_expr()));
    }
  }

  Enc function_call(const fe::ExprPtr& e, Frame& f) {
    const fe::FunctionDef& fn = *e->function;
    if (!fn.body) raise(ErrorKind::TranslationError, e->span, "'" + fn.name + "' has no body");
    ExprPtr recv;
    if (e->call == fe::CallKind::External) recv = materialize(encode(e->receiver, f)).value;
    std::vector<ExprPtr> args;
    for (std::size_t i = 1; i < e->args.size(); ++i) args.push_back(materialize(encode(e->args[i], f)).value);
    flush(e->span);
    Frame c = callee_frame(e, f, fn, recv);
    bind_params(c, fn, args);
    ExprPtr result = ivl::true_expr();
    if (fn.has_spec()) {
      result = spec_call(e, c, fn);
    } else {
      if (inline_depth_ >= 1 || std::count(inline_stack_.begin(), inline_stack_.end(), &fn)) {
        raise(ErrorKind::RecursionError, e->span,
              "call to '" + fn.display_name() + "' needs a specification: unannotated calls are inlined only one level deep");
      }
      ++inline_depth_;
      inline_stack_.push_back(&fn);
      open_result(c, fn);
      function_body(c, fn);
      flush(fn.span);
      inline_stack_.pop_back();
      --inline_depth_;
      if (!c.ret.empty()) result = ivl::var(c.ret, ivl_type(*fn.returns->type, mode_));
    }
    return Enc::of(result);
  }

  ExprPtr spec_call(const fe::ExprPtr& e, Frame& c, const fe::FunctionDef& fn) {
    for (const auto& p : fn.pre) {
      Enc pe = encode_annotation(p, c);
      emit_assumes(pe.assumes);
      emit(ivl::assert_(pe.value, label("pre", ivl::Category::Precondition, e->span,
                                       "precondition '" + p.text + "' of '" + fn.display_name() +
                                           "' might not hold")));
    }
    if (!in_check_) {
      std::string chk = tmp(ivl::Type::boolean());
      emit(ivl::havoc({chk}));
      auto branch = capture([&] {
        in_check_ = true;
        Frame body = c;
        for (const auto& p : fn.params) {
          std::string n = declare_local(p->name, *p->type, p->span);
          emit(ivl::assign(n, ivl::var(c.locals.at(p.get()), ivl_type(*p->type, mode_))));
          body.locals[p.get()] = n;
        }
        open_result(body, fn);
        for (const auto& p : fn.pre) {
          Enc pe = encode_annotation(p, body);
          pe.assumes.push_back(pe.value);
          emit_assumes(pe.assumes);
        }
        function_body(body, fn);
        flush(fn.span);
        Frame post = c;
        post.ret = body.ret;
        if (fn.returns && !fn.returns->name.empty()) post.locals[fn.returns.get()] = body.ret;
        for (const auto& q : fn.post) {
          Enc qe = encode_annotation(q, post);
          emit_assumes(qe.assumes);
          emit(ivl::assert_(qe.value, label("post", ivl::Category::Postcondition, q.span,
                                           "postcondition '" + q.text + "' might not hold")));
        }
        emit(ivl::assume(ivl::false_expr()));
        in_check_ = false;
      });
      emit(ivl::if_(ivl::var(chk, ivl::Type::boolean()), ivl::seq(std::move(branch)), ivl::skip()));
      keys_.clear();
      seg_span_ = {};
    }
    std::set<std::string> written;
    std::set<const fe::FunctionDef*> seen;
    mod_set(fn, written, seen);
    if (!written.empty()) emit(ivl::havoc({written.begin(), written.end()}));
    Frame post = c;
    ExprPtr result = ivl::true_expr();
    if (fn.returns) {
      const fe::SolType& rt = *fn.returns->type;
      post.ret = tmp_of(rt);
      if (!fn.returns->name.empty()) post.locals[fn.returns.get()] = post.ret;
      emit(ivl::havoc({post.ret}));
      result = ivl::var(post.ret, ivl_type(rt, mode_));
      if (is_mod(mode_) && rt.is_int()) emit(ivl::assume(in_range(result, rt.bits, rt.is_signed)));
    }
    for (const auto& q : fn.post) {
      Enc qe = encode_annotation(q, post);
      qe.assumes.push_back(qe.value);
      emit_assumes(qe.assumes);
    }
    return result;
  }

  // ---- statements ----

  void function_body(Frame& fr, const fe::FunctionDef& fn) { modifiers(fr, fn, 0); }

  void modifiers(Frame& fr, const fe::FunctionDef& fn, std::size_t i) {
    if (i == fn.modifiers.size()) {
      block(fn.body, fr);
      return;
    }
    const fe::ModifierInvocation& inv = fn.modifiers[i];
    const fe::ModifierDef* m = inv.modifier;
    if (!m) raise(ErrorKind::TranslationError, inv.span, "unresolved modifier '" + inv.name + "'");
    Frame mf;
    mf.contract = fr.contract;
    mf.self = fr.self;
    mf.sender = fr.sender;
    mf.value = fr.value;
    mf.in_modifier = true;
    for (std::size_t k = 0; k < m->params.size(); ++k) {
      const auto& p = m->params[k];
      ExprPtr v = consume(encode(inv.args.at(k), fr));
      std::string n = declare_local(p->name, *p->type, p->span);
      emit(ivl::assign(n, v));
      mf.locals[p.get()] = n;
    }
    mf.placeholder = [&, i] { modifiers(fr, fn, i + 1); };
    block(m->body, mf);
  }

  void block(const fe::StmtPtr& s, Frame& f) {
    if (!s) return;
    if (s->kind != fe::StmtKind::Block) {
      statement(s, f);
      return;
    }
    sequence(s->body, 0, f);
  }

  void sequence(const std::vector<fe::StmtPtr>& items, std::size_t from, Frame& f) {
    for (std::size_t i = from; i < items.size(); ++i) {
      const fe::StmtPtr& s = items[i];
      statement(s, f);
      if (s->kind == fe::StmtKind::Return) return;
      if (i + 1 < items.size() && !f.done.empty() && contains_return(s)) {
        flush(s->span);
        auto rest = capture([&] {
          sequence(items, i + 1, f);
          flush(items.back()->span);
        });
        emit(ivl::if_(ivl::not_(ivl::var(f.done, ivl::Type::boolean())), ivl::seq(std::move(rest)), ivl::skip()));
        return;
      }
    }
  }

  void statement(const fe::StmtPtr& s, Frame& f) {
    switch (s->kind) {
      case fe::StmtKind::Block: block(s, f); return;
      case fe::StmtKind::VarDecl: {
        const auto& d = s->decl;
        ExprPtr v;
        if (d->init) {
          v = consume(encode(d->init, f));
        } else if (!s->exprs.empty() && s->exprs[0]) {
          v = consume(encode(s->exprs[0], f));
        } else {
          v = default_value(*d->type, d->span);
        }
        std::string n = declare_local(d->name, *d->type, d->span);
        f.locals[d.get()] = n;
        emit(ivl::assign(n, v));
        return;
      }
      case fe::StmtKind::Expression: expression_statement(s->exprs[0], f); return;
      case fe::StmtKind::If: {
        ExprPtr c = consume(encode(s->exprs[0], f));
        flush(s->span);
        auto then_b = capture([&] {
          block(s->body[0], f);
          flush(s->body[0]->span);
        });
        auto else_b = capture([&] {
          if (s->body.size() > 1 && s->body[1]) {
            block(s->body[1], f);
            flush(s->body[1]->span);
          }
        });
        emit(ivl::if_(c, ivl::seq(std::move(then_b)), ivl::seq(std::move(else_b))));
        return;
      }
      case fe::StmtKind::While: loop(s, s->exprs[0], s->body[0], nullptr, f); return;
      case fe::StmtKind::For: {
        if (s->body[0]) statement(s->body[0], f);
        loop(s, s->exprs[0], s->body[1], s->exprs.size() > 1 ? s->exprs[1] : nullptr, f);
        return;
      }
      case fe::StmtKind::Return: {
        if (f.in_modifier) raise(ErrorKind::UnsupportedFeature, s->span, "return inside a modifier is not supported");
        if (!s->exprs.empty() && s->exprs[0]) {
          ExprPtr v = consume(encode(s->exprs[0], f));
          if (f.ret.empty()) raise(ErrorKind::TranslationError, s->span, "function has no return value");
          emit(ivl::assign(f.ret, v));
        }
        if (!f.done.empty()) emit(ivl::assign(f.done, ivl::true_expr()));
        return;
      }
      case fe::StmtKind::Placeholder:
        if (!f.placeholder) raise(ErrorKind::TranslationError, s->span, "'_' outside a modifier");
        f.placeholder();
        return;
      case fe::StmtKind::Throw: emit(ivl::assume(ivl::false_expr())); return;
    }
  }

  void loop(const fe::StmtPtr& s, const fe::ExprPtr& cond, const fe::StmtPtr& body,
            const fe::ExprPtr& step, Frame& f) {
    if (contains_return(body)) raise(ErrorKind::UnsupportedFeature, s->span, "return inside a loop is not supported");
    Enc c = cond ? Enc{} : Enc::of(ivl::true_expr());
    if (cond) {
      auto pre = capture([&] { c = encode(cond, f); });
      if (!pre.empty()) raise(ErrorKind::UnsupportedFeature, cond->span, "calls in loop conditions are not supported");
    }
    std::vector<Enc> invs;
    for (const auto& a : s->invariants) invs.push_back(encode_annotation(a, f));
    consume(c);
    for (const auto& i : invs) emit_assumes(i.assumes);
    flush(s->span);
    auto iteration = capture([&] {
      block(body, f);
      if (step) expression_statement(step, f);
      accumulate(c.overflow, c.overflow_span);
      for (const auto& i : invs) emit_assumes(i.assumes);
      flush(s->span);
    });
    StmtPtr body_stmt = ivl::seq(std::move(iteration));
    std::vector<ivl::LoopInvariant> out;
    std::vector<ExprPtr> free;
    if (is_mod(mode_)) {
      for (const auto& v : ivl::modified_vars(body_stmt)) {
        auto it = local_types_.find(v);
        if (it != local_types_.end()) {
          free.push_back(in_range(ivl::var(v, ivl::Type::integer()), it->second->bits, it->second->is_signed));
        }
      }
    }
    if (mode_ == ArithMode::ModOverflow) free.push_back(ivl::not_(oc()));
    free.insert(free.end(), c.assumes.begin(), c.assumes.end());
    for (const auto& i : invs) free.insert(free.end(), i.assumes.begin(), i.assumes.end());
    ExprPtr facts = ivl::and_(free);
    if (!facts->is_true()) out.push_back({facts, next_label("free"), s->span, "", true});
    for (std::size_t k = 0; k < invs.size(); ++k) {
      const auto& a = s->invariants[k];
      out.push_back({invs[k].value, next_label("loop"), a.span,
                     "loop invariant '" + a.text + "'", false});
    }
    emit(ivl::while_(c.value, std::move(out), body_stmt));
  }

  void expression_statement(const fe::ExprPtr& e, Frame& f) {
    if (e->kind == fe::ExprKind::Assign) {
      std::string op = e->op == "=" ? "" : e->op.substr(0, e->op.size() - 1);
      Enc rhs = encode(e->args[1], f);
      assign(e->args[0], op, rhs, e->span, f);
      return;
    }
    if (e->kind == fe::ExprKind::IncDec) {
      Enc one = Enc::of(encode_literal(1, *e->args[0]->type, mode_));
      assign(e->args[0], e->op == "++" ? "+" : "-", one, e->span, f);
      return;
    }
    consume(encode(e, f));
  }

  void assign(const fe::ExprPtr& lhs, const std::string& op, const Enc& rhs, const SourceSpan& span, Frame& f) {
    const fe::SolType& t = *lhs->type;
    auto combine = [&](const Enc& old) {
      return op.empty() ? rhs : encode_arith(op, old, rhs, t, mode_, span, nullptr);
    };
    if (lhs->kind == fe::ExprKind::Identifier && lhs->ref == fe::RefKind::LocalVar) {
      const std::string& n = f.locals.at(lhs->var);
      Enc v = combine(Enc::of(ivl::var(n, ivl_type(t, mode_))));
      emit(ivl::assign(n, consume(v)));
      return;
    }
    if (lhs->kind == fe::ExprKind::Identifier && lhs->ref == fe::RefKind::StateVar && !lhs->var->is_constant) {
      const Global& g = global(lhs->var, lhs->span);
      if (g.sol->is_mapping()) raise(ErrorKind::UnsupportedFeature, span, "assignment of whole mappings is not supported");
      Enc old = Enc::of(ivl::select(gvar(g), f.self));
      add_range(old, old.value, t);
      Enc v = combine(old);
      if (!op.empty()) v.assumes.insert(v.assumes.begin(), old.assumes.begin(), old.assumes.end());
      emit(ivl::assign(g.name, ivl::store(gvar(g), f.self, consume(v))));
      return;
    }
    if (lhs->kind == fe::ExprKind::Index) {
      MapAccess a = access(lhs, f);
      std::vector<ExprPtr> facts = a.key.assumes;
      ExprPtr cur = ivl::select(a.map, a.key.value);
      Enc old = Enc::of(cur);
      add_range(old, cur, t);
      sum_facts(a, f, old.assumes);
      facts.insert(facts.end(), old.assumes.begin(), old.assumes.end());
      Enc v = combine(Enc::of(cur));
      emit_assumes(facts);
      accumulate(a.key.overflow, a.key.overflow_span);
      ExprPtr nv = consume(v);
      if (a.global) {
        const Global& g = *a.global;
        if (!g.ghost.empty()) {
          ExprPtr s = ghost(g, f.self);
          ExprPtr delta_old = to_exact(cur, t, mode_);
          ExprPtr delta_new = to_exact(nv, t, mode_);
          emit(ivl::assign(g.ghost, ivl::store(ivl::var(g.ghost, balance_type()), f.self,
                                               ivl::add(ivl::sub(s, delta_old), delta_new))));
        }
        emit(ivl::assign(g.name, ivl::store(gvar(g), f.self, ivl::store(a.map, a.key.value, nv))));
      } else {
        emit(ivl::assign(a.array, ivl::store(a.map, a.key.value, nv)));
      }
      return;
    }
    raise(ErrorKind::UnsupportedFeature, span, "unsupported assignment target");
  }

  // ---- procedures ----

  Frame entry_frame(const fe::ContractDef& c, const fe::FunctionDef* fn) {
    Frame f;
    f.contract = &c;
    f.function = fn;
    f.self = ivl::var(kThis, ivl::Type::address());
    f.sender = ivl::var(kSender, ivl::Type::address());
    f.value = ivl::var(kValue, ivl_type(uint256(), mode_));
    proc_.params = {{kThis, ivl::Type::address()},
                    {kSender, ivl::Type::address()},
                    {kValue, ivl_type(uint256(), mode_)}};
    for (const char* n : {kThis, kSender, kValue}) used_.insert(n);
    if (is_mod(mode_)) proc_.entry_assumptions.push_back(in_range(f.value, 256, false));
    // Transactions come from another account: the contract never calls its
    // own entry points through the network.
    proc_.entry_assumptions.push_back(ivl::neq(f.sender, f.self));
    if (!fn) return f;
    for (const auto& p : fn->params) {
      std::string n = fresh_name(p->name);
      f.locals[p.get()] = n;
      proc_.params.push_back({n, ivl_type(*p->type, mode_)});
      if (p->type->is_array()) {
        std::string len = n + "#len";
        used_.insert(len);
        proc_.params.push_back({len, ivl_type(uint256(), mode_)});
        ExprPtr lv = ivl::var(len, ivl_type(uint256(), mode_));
        if (is_mod(mode_)) proc_.entry_assumptions.push_back(in_range(lv, 256, false));
        if (mode_ == ArithMode::Int) proc_.entry_assumptions.push_back(ivl::ge(lv, ivl::int_const(0)));
      } else if (is_mod(mode_) && p->type->is_int()) {
        proc_.entry_assumptions.push_back(
            in_range(ivl::var(n, ivl::Type::integer()), p->type->bits, p->type->is_signed));
      }
    }
    return f;
  }

  void receive_value(const fe::FunctionDef* fn, Frame& f) {
    if (!fn || !fn->is_payable) {
      emit(ivl::assume(ivl::eq(f.value, encode_literal(0, uint256(), mode_))));
      return;
    }
    ExprPtr v = to_exact(f.value, uint256(), mode_);
    ExprPtr here = ivl::select(balance(), f.self);
    if (mode_ != ArithMode::Int) emit(ivl::assume(ivl::le(ivl::add(here, v), max_ether())));
    emit(ivl::assign(kBalance, ivl::store(balance(), f.self, ivl::add(here, v))));
  }

  void exit_checks(const fe::ContractDef& c, const fe::FunctionDef* fn, Frame& f) {
    flush(fn ? fn->span : c.span);
    std::string where = fn && !fn->is_constructor ? "function " + fn->display_name() : "constructor";
    for (const auto& inv : c.invariants) {
      Enc i = encode_annotation(inv, f);
      emit_assumes(i.assumes);
      emit(ivl::assert_(i.value, label("inv", ivl::Category::InvariantAtExit, inv.span,
                                      "invariant '" + inv.text + "' might not hold at end of " + where)));
    }
    if (!fn) return;
    for (const auto& q : fn->post) {
      Enc qe = encode_annotation(q, f);
      emit_assumes(qe.assumes);
      emit(ivl::assert_(qe.value, label("post", ivl::Category::Postcondition, q.span,
                                       "postcondition '" + q.text + "' might not hold")));
    }
  }

  void assume_pre(const fe::FunctionDef& fn, Frame& f) {
    for (const auto& p : fn.pre) {
      Enc pe = encode_annotation(p, f);
      pe.assumes.push_back(pe.value);
      emit_assumes(pe.assumes);
    }
  }

  ivl::Procedure finish(const fe::ContractDef& c, const fe::FunctionDef* fn, const std::string& name) {
    proc_.body = ivl::seq(std::move(top_));
    top_.clear();
    proc_.contract = c.name;
    proc_.function = name;
    proc_.span = fn ? fn->span : c.span;
    return std::move(proc_);
  }

  ivl::Procedure constructor(const fe::ContractDef& c, const fe::FunctionDef* fn) {
    begin(c.name + ".constructor");
    Frame f = entry_frame(c, fn);
    emit(ivl::assume(ivl::eq(ivl::select(balance(), f.self), ivl::int_const(0))));
    if (mode_ == ArithMode::ModOverflow) emit(ivl::assume(ivl::not_(oc())));
    receive_value(fn, f);
    for (const auto& v : c.state_vars) {
      if (v->is_constant) continue;
      const Global& g = globals_.at(v.get());
      ExprPtr init = v->init ? consume(encode(v->init, f)) : default_value(*v->type, v->span);
      emit(ivl::assign(g.name, ivl::store(gvar(g), f.self, init)));
      if (!g.ghost.empty()) {
        emit(ivl::assign(g.ghost, ivl::store(ivl::var(g.ghost, balance_type()), f.self, ivl::int_const(0))));
      }
    }
    if (fn) {
      assume_pre(*fn, f);
      open_result(f, *fn);
      function_body(f, *fn);
    }
    exit_checks(c, fn, f);
    return finish(c, fn, "constructor");
  }

  ivl::Procedure entry_point(const fe::ContractDef& c, const fe::FunctionDef& fn) {
    std::string name = fn.display_name();
    begin(c.name + "." + name);
    Frame f = entry_frame(c, &fn);
    if (mode_ == ArithMode::ModOverflow) emit(ivl::assume(ivl::not_(oc())));
    assume_invariants(c, f);
    assume_pre(fn, f);
    receive_value(&fn, f);
    open_result(f, fn);
    function_body(f, fn);
    exit_checks(c, &fn, f);
    return finish(c, &fn, name);
  }

  const fe::CompilationUnit& unit_;
  ArithMode mode_;
  ivl::Program program_;
  std::map<const fe::VarDecl*, Global> globals_;
  std::vector<std::string> state_names_;
  std::vector<std::string> ghost_names_;
  std::set<std::string> reserved_;
  bool uses_address0_ = false;

  ivl::Procedure proc_;
  std::set<std::string> used_;
  std::map<std::string, fe::SolTypePtr> local_types_;
  int tmp_counter_ = 0;
  std::map<std::string, int> label_counter_;
  std::vector<StmtPtr> top_;
  std::vector<StmtPtr>* out_ = &top_;
  SourceSpan seg_span_;
  std::map<std::string, std::vector<std::pair<std::string, ExprPtr>>> keys_;
  std::vector<const fe::FunctionDef*> inline_stack_;
  int inline_depth_ = 0;
  bool in_check_ = false;
  bool exact_ = false;
};

}  // namespace

ivl::Program translate_unit(const fe::CompilationUnit& unit, ArithMode mode) {
  if (!unit.resolved) raise(ErrorKind::TranslationError, {}, "unit is not resolved");
  try {
    return Translator(unit, mode).run();
  } catch (const CompileError& e) {
    if (e.kind() == ErrorKind::UnsupportedFeature) {
      raise(ErrorKind::TranslationError, e.span(), e.detail());
    }
    throw;
  }
}

}  // namespace scv::translator

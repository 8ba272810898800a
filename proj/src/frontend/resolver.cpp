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

#include "scv/frontend/resolver.hpp"

#include "scv/frontend/parser.hpp"

#include <map>
#include <set>

namespace scv::frontend {

namespace {

using Kind = SolType::Kind;

[[noreturn]] void type_error(const SourceSpan& span, const std::string& msg) {
  raise(ErrorKind::TypeError, span, msg);
}

std::string tname(const SolTypePtr& t) { return t ? to_string(*t) : "?"; }

bool fits(const BigInt& v, const SolType& t) {
  return v >= int_min(t.bits, t.is_signed) && v <= int_max(t.bits, t.is_signed);
}

/// Implicit integer conversion from `from` to `to` never loses information.
bool widens(const SolType& from, const SolType& to) {
  if (!from.is_int() || !to.is_int()) return false;
  if (from.is_signed == to.is_signed) return from.bits <= to.bits;
  return !from.is_signed && to.is_signed && to.bits > from.bits;
}

bool is_unsupported_global(std::string_view n) {
  static const std::set<std::string, std::less<>> names = {
      "now", "block", "tx", "gasleft", "keccak256", "sha3", "sha256", "ripemd160", "ecrecover",
      "addmod", "mulmod", "blockhash", "selfdestruct", "suicide", "abi"};
  return names.count(n) > 0;
}

struct Context {
  const ContractDef* contract = nullptr;
  const FunctionDef* function = nullptr;
  bool allow_msg = false;
  bool annotation = false;
  bool in_modifier = false;
  SolTypePtr return_type;  // null for none
};

class Resolver {
 public:
  Resolver(CompilationUnit& unit, const ResolveOptions& options) : unit_(unit), options_(options) {}

  void run() {
    std::set<std::string> names;
    for (const auto& c : unit_.contracts) {
      if (!names.insert(c->name).second)
        raise(ErrorKind::NameError, c->span, "duplicate contract '" + c->name + "'");
    }
    for (auto& c : unit_.contracts) declare(*c);
    for (auto& c : unit_.contracts) resolve_contract(*c);
    unit_.resolved = true;
  }

 private:
  // ---- types ----

  SolTypePtr concrete(const SolTypePtr& t, const SourceSpan& span) {
    switch (t->kind) {
      case Kind::Int:
        if (t->bits == 0) return SolType::integer(t->is_signed, options_.default_bits);
        return t;
      case Kind::Mapping: {
        auto v = concrete(t->value, span);
        if (v->is_mapping()) raise(ErrorKind::UnsupportedFeature, span, "nested mapping is not supported");
        if (v->is_array()) raise(ErrorKind::UnsupportedFeature, span, "mapping to array is not supported");
        return SolType::mapping(concrete(t->key, span), v);
      }
      case Kind::Array: {
        auto v = concrete(t->value, span);
        if (v->is_mapping()) raise(ErrorKind::UnsupportedFeature, span, "array of mappings is not supported");
        return SolType::array(v);
      }
      case Kind::Contract: {
        const ContractDef* c = unit_.find_contract(t->contract);
        if (!c) raise(ErrorKind::NameError, span, "unknown type '" + t->contract + "'");
        if (c->is_library) type_error(span, "library '" + t->contract + "' cannot be used as a type");
        return t;
      }
      default:
        return t;
    }
  }

  void declare(ContractDef& c) {
    std::set<std::string> names;
    auto claim = [&](const std::string& n, const SourceSpan& span) {
      if (!names.insert(n).second)
        raise(ErrorKind::NameError, span, "duplicate declaration of '" + n + "' in '" + c.name + "'");
    };
    for (auto& v : c.state_vars) {
      claim(v->name, v->span);
      v->type = concrete(v->type, v->span);
      if (v->type->is_array()) raise(ErrorKind::UnsupportedFeature, v->span, "array state variable is not supported");
      if (v->is_constant && (!v->init || v->type->is_mapping()))
        type_error(v->span, "constant '" + v->name + "' needs a value initializer");
    }
    int constructors = 0;
    int fallbacks = 0;
    std::set<std::string> fnames;
    for (auto& f : c.functions) {
      f->owner = &c;
      if (f->is_constructor) {
        if (++constructors > 1) raise(ErrorKind::NameError, f->span, "multiple constructors in '" + c.name + "'");
        if (c.is_library) type_error(f->span, "libraries cannot have constructors");
      } else if (f->is_fallback) {
        if (++fallbacks > 1) raise(ErrorKind::NameError, f->span, "multiple fallback functions");
      } else {
        if (!fnames.insert(f->name).second)
          raise(ErrorKind::UnsupportedFeature, f->span, "function overloading is not supported");
        claim(f->name, f->span);
      }
      if (!f->body) raise(ErrorKind::UnsupportedFeature, f->span, "function without body is not supported");
      if (f->is_payable && !f->is_entry_point() && !f->is_constructor)
        type_error(f->span, "only public functions can be payable");
      std::set<std::string> pnames;
      for (auto& p : f->params) {
        p->type = concrete(p->type, p->span);
        if (p->type->is_mapping()) type_error(p->span, "mapping parameters are not supported");
        if (!p->name.empty() && !pnames.insert(p->name).second)
          raise(ErrorKind::NameError, p->span, "duplicate parameter '" + p->name + "'");
      }
      if (f->returns) {
        f->returns->type = concrete(f->returns->type, f->returns->span);
        if (f->returns->type->is_mapping() || f->returns->type->is_array())
          raise(ErrorKind::UnsupportedFeature, f->returns->span, "returning " + tname(f->returns->type) + " is not supported");
        if (!f->returns->name.empty() && !pnames.insert(f->returns->name).second)
          raise(ErrorKind::NameError, f->returns->span, "duplicate parameter '" + f->returns->name + "'");
      }
    }
    for (auto& m : c.modifiers) {
      claim(m->name, m->span);
      for (auto& p : m->params) {
        p->type = concrete(p->type, p->span);
        if (p->type->is_mapping() || p->type->is_array())
          type_error(p->span, "modifier parameters must have value types");
      }
    }
    for (auto& u : c.using_for) {
      const ContractDef* lib = unit_.find_contract(u.library);
      if (!lib || !lib->is_library) raise(ErrorKind::NameError, u.span, "unknown library '" + u.library + "'");
      if (u.type) u.type = concrete(u.type, u.span);
    }
  }

  // ---- scopes ----

  void push() { frames_.emplace_back(); }
  void pop() { frames_.pop_back(); }
  void bind(const VarDecl& v) {
    if (v.name.empty()) return;
    if (frames_.back().count(v.name))
      raise(ErrorKind::NameError, v.span, "duplicate declaration of '" + v.name + "'");
    frames_.back()[v.name] = &v;
  }
  const VarDecl* lookup_local(const std::string& n) const {
    for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
      auto f = it->find(n);
      if (f != it->end()) return f->second;
    }
    return nullptr;
  }

  // ---- contracts and functions ----

  void resolve_contract(ContractDef& c) {
    Context ctx;
    ctx.contract = &c;
    frames_.clear();
    push();
    // State initializers run in the constructor.
    ctx.allow_msg = true;
    for (auto& v : c.state_vars) {
      if (v->init) {
        if (v->type->is_mapping()) type_error(v->span, "mappings cannot be initialized");
        resolve_value(v->init, ctx);
        coerce(v->init, v->type);
      }
    }
    ctx.allow_msg = false;
    ctx.annotation = true;
    for (auto& a : c.invariants) resolve_annotation(a, ctx);
    ctx.annotation = false;
    pop();
    for (auto& m : c.modifiers) resolve_modifier(*m, c);
    for (auto& f : c.functions) resolve_function(*f, c);
  }

  void resolve_annotation(Annotation& a, Context ctx) {
    ctx.annotation = true;
    resolve_value(a.expr, ctx);
    if (!a.expr->type->is_bool())
      type_error(a.expr->span, "annotation must be a boolean expression, found " + tname(a.expr->type));
  }

  void resolve_modifier(ModifierDef& m, const ContractDef& c) {
    Context ctx;
    ctx.contract = &c;
    ctx.allow_msg = true;
    ctx.in_modifier = true;
    frames_.clear();
    push();
    for (auto& p : m.params) bind(*p);
    resolve_stmt(m.body, ctx);
    pop();
  }

  void resolve_function(FunctionDef& f, const ContractDef& c) {
    Context ctx;
    ctx.contract = &c;
    ctx.function = &f;
    ctx.allow_msg = !c.is_library;
    ctx.return_type = f.returns ? f.returns->type : nullptr;
    frames_.clear();
    push();
    for (auto& p : f.params) bind(*p);
    for (auto& a : f.pre) resolve_annotation(a, ctx);
    if (f.returns) bind(*f.returns);
    for (auto& a : f.post) resolve_annotation(a, ctx);
    for (auto& inv : f.modifiers) {
      const ModifierDef* m = c.find_modifier(inv.name);
      if (!m) raise(ErrorKind::NameError, inv.span, "unknown modifier '" + inv.name + "'");
      if (inv.args.size() != m->params.size())
        type_error(inv.span, "modifier '" + inv.name + "' expects " + std::to_string(m->params.size()) + " arguments");
      for (std::size_t i = 0; i < inv.args.size(); ++i) {
        resolve_value(inv.args[i], ctx);
        coerce(inv.args[i], m->params[i]->type);
      }
      inv.modifier = m;
    }
    resolve_stmt(f.body, ctx);
    pop();
  }

  // ---- statements ----

  void resolve_stmt(const StmtPtr& s, Context& ctx) {
    if (!s) return;
    switch (s->kind) {
      case StmtKind::Block:
        push();
        for (auto& b : s->body) resolve_stmt(b, ctx);
        pop();
        break;
      case StmtKind::VarDecl: {
        auto& v = *s->decl;
        v.type = concrete(v.type, v.span);
        if (v.type->is_mapping() || v.type->is_array())
          raise(ErrorKind::UnsupportedFeature, v.span, "local variable of type " + tname(v.type) + " is not supported");
        if (!s->exprs.empty()) {
          resolve_value(s->exprs[0], ctx);
          coerce(s->exprs[0], v.type);
        }
        bind(v);
        break;
      }
      case StmtKind::Expression:
        resolve_effect(s->exprs[0], ctx);
        break;
      case StmtKind::If:
        resolve_condition(s->exprs[0], ctx);
        for (auto& b : s->body) {
          push();
          resolve_stmt(b, ctx);
          pop();
        }
        break;
      case StmtKind::While:
        for (auto& a : s->invariants) resolve_annotation(a, ctx);
        resolve_condition(s->exprs[0], ctx);
        push();
        resolve_stmt(s->body[0], ctx);
        pop();
        break;
      case StmtKind::For:
        push();
        if (s->body[0]) {
          if (s->body[0]->kind == StmtKind::Expression) {
            resolve_effect(s->body[0]->exprs[0], ctx);
          } else {
            resolve_stmt(s->body[0], ctx);
          }
        }
        for (auto& a : s->invariants) resolve_annotation(a, ctx);
        if (s->exprs[0]) resolve_condition(s->exprs[0], ctx);
        if (s->exprs[1]) resolve_effect(s->exprs[1], ctx);
        push();
        resolve_stmt(s->body[1], ctx);
        pop();
        pop();
        break;
      case StmtKind::Return:
        if (ctx.in_modifier) raise(ErrorKind::UnsupportedFeature, s->span, "return in a modifier is not supported");
        if (s->exprs.empty()) {
          if (ctx.return_type && ctx.function->returns->name.empty())
            type_error(s->span, "missing return value");
        } else {
          if (!ctx.return_type) type_error(s->span, "function has no return value");
          resolve_value(s->exprs[0], ctx);
          coerce(s->exprs[0], ctx.return_type);
        }
        break;
      case StmtKind::Placeholder:
      case StmtKind::Throw:
        break;
    }
  }

  void resolve_condition(ExprPtr& e, Context& ctx) {
    resolve_value(e, ctx);
    if (!e->type->is_bool()) type_error(e->span, "condition must be bool, found " + tname(e->type));
  }

  /// Statement-level expression: assignments and calls are allowed here.
  void resolve_effect(ExprPtr& e, Context& ctx) {
    if (e->kind == ExprKind::Assign) {
      resolve_assign(e, ctx);
    } else if (e->kind == ExprKind::IncDec) {
      resolve_lvalue(e->args[0], ctx);
      if (!e->args[0]->type->is_int()) type_error(e->span, "'" + e->op + "' needs an integer operand");
      e->type = e->args[0]->type;
    } else {
      resolve_expr(e, ctx);
    }
  }

  void resolve_assign(ExprPtr& e, Context& ctx) {
    resolve_lvalue(e->args[0], ctx);
    SolTypePtr lt = e->args[0]->type;
    resolve_value(e->args[1], ctx);
    if (e->op != "=") {
      std::string op = e->op.substr(0, e->op.size() - 1);
      if (!lt->is_int()) type_error(e->span, "'" + e->op + "' needs an integer target");
      if (op == "<<" || op == ">>") {
        check_shift_amount(e->args[1], lt);
      } else {
        coerce(e->args[1], lt);
      }
    } else {
      coerce(e->args[1], lt);
    }
    e->type = lt;
  }

  void resolve_lvalue(ExprPtr& e, Context& ctx) {
    if (ctx.annotation) raise(ErrorKind::AnnotationError, e->span, "annotations must be side-effect free");
    resolve_expr(e, ctx);
    if (e->kind == ExprKind::Identifier) {
      if (e->ref == RefKind::StateVar) {
        if (e->var->is_constant) type_error(e->span, "cannot assign to constant '" + e->name + "'");
        if (e->type->is_mapping()) type_error(e->span, "cannot assign a whole mapping");
        return;
      }
      if (e->ref == RefKind::LocalVar) {
        if (e->type->is_array()) type_error(e->span, "cannot assign a whole array");
        return;
      }
    } else if (e->kind == ExprKind::Index) {
      const ExprPtr& base = e->args[0];
      if (base->kind == ExprKind::Identifier &&
          (base->ref == RefKind::StateVar || base->ref == RefKind::LocalVar))
        return;
    }
    type_error(e->span, "expression is not assignable");
  }

  // ---- expressions ----

  void resolve_value(ExprPtr& e, Context& ctx) {
    resolve_expr(e, ctx);
    if (e->type->kind == Kind::Void) type_error(e->span, "expression has no value");
    if (e->type->is_mapping() && !(ctx.annotation && e->kind == ExprKind::Sum))
      type_error(e->span, "mapping '" + e->name + "' used as a value");
  }

  void check_no_effect(const ExprPtr& e) {
    if (e->kind == ExprKind::Assign || e->kind == ExprKind::IncDec)
      raise(ErrorKind::UnsupportedFeature, e->span, "assignment inside an expression is not supported");
  }

  void resolve_expr(ExprPtr& e, Context& ctx) {
    check_no_effect(e);
    switch (e->kind) {
      case ExprKind::BoolLiteral:
        e->type = SolType::boolean();
        break;
      case ExprKind::NumberLiteral:
        e->type = SolType::literal();
        break;
      case ExprKind::StringLiteral:
        type_error(e->span, "string values are not supported here");
      case ExprKind::Identifier:
        resolve_identifier(e, ctx);
        break;
      case ExprKind::Index:
        resolve_index(e, ctx);
        break;
      case ExprKind::Member:
        resolve_member(e, ctx);
        break;
      case ExprKind::Unary:
        resolve_unary(e, ctx);
        break;
      case ExprKind::Binary:
        resolve_binary(e, ctx);
        break;
      case ExprKind::Call:
        resolve_call(e, ctx);
        break;
      case ExprKind::Sum:
      case ExprKind::Conversion:
        break;  // already resolved
      case ExprKind::Assign:
      case ExprKind::IncDec:
        break;  // rejected above
    }
  }

  void resolve_identifier(ExprPtr& e, Context& ctx) {
    const std::string& n = e->name;
    if (const VarDecl* v = lookup_local(n)) {
      e->ref = RefKind::LocalVar;
      e->var = v;
      e->type = v->type;
      return;
    }
    if (n == "this") {
      if (ctx.contract->is_library) type_error(e->span, "'this' is not available in a library");
      e->ref = RefKind::This;
      e->type = SolType::contract_type(ctx.contract->name);
      e->contract = ctx.contract;
      return;
    }
    if (n == "msg") {
      if (!ctx.allow_msg) {
        raise(ErrorKind::NameError, e->span,
              ctx.annotation ? "'msg' is not available in a contract invariant"
                             : "'msg' is not available here");
      }
      e->ref = RefKind::Msg;
      e->type = SolType::void_type();
      return;
    }
    if (const VarDecl* v = ctx.contract->find_state_var(n)) {
      e->ref = RefKind::StateVar;
      e->var = v;
      e->type = v->type;
      return;
    }
    if (const FunctionDef* f = ctx.contract->find_function(n)) {
      e->ref = RefKind::Function;
      e->function = f;
      e->contract = ctx.contract;
      e->type = SolType::void_type();
      return;
    }
    if (const ContractDef* c = unit_.find_contract(n)) {
      e->ref = RefKind::Contract;
      e->contract = c;
      e->type = SolType::void_type();
      return;
    }
    if (n == "require" || n == "assert" || n == "revert") {
      e->ref = RefKind::Builtin;
      e->type = SolType::void_type();
      return;
    }
    if (is_elementary_type_name(n)) {
      e->ref = RefKind::TypeName;
      e->type = SolType::void_type();
      return;
    }
    if (n == "sum") raise(ErrorKind::SumError, e->span, "'sum' can only be applied to a mapping in an annotation");
    if (is_unsupported_global(n)) raise(ErrorKind::UnsupportedFeature, e->span, "'" + n + "' is not supported");
    raise(ErrorKind::NameError, e->span, "unknown identifier '" + n + "'");
  }

  void resolve_index(ExprPtr& e, Context& ctx) {
    resolve_expr(e->args[0], ctx);
    const SolTypePtr& bt = e->args[0]->type;
    resolve_value(e->args[1], ctx);
    if (bt->is_mapping()) {
      coerce(e->args[1], bt->key);
      e->type = bt->value;
    } else if (bt->is_array()) {
      if (e->args[1]->type->is_literal()) coerce(e->args[1], SolType::integer(false, 256));
      if (!e->args[1]->type->is_int() || e->args[1]->type->is_signed)
        type_error(e->args[1]->span, "array index must be an unsigned integer");
      e->type = bt->value;
    } else {
      type_error(e->span, "cannot index a value of type " + tname(bt));
    }
  }

  void resolve_member(ExprPtr& e, Context& ctx) {
    ExprPtr& base = e->args[0];
    resolve_expr(base, ctx);
    const std::string& m = e->name;
    if (base->ref == RefKind::Msg && base->kind == ExprKind::Identifier) {
      if (m == "sender") {
        e->ref = RefKind::MsgSender;
        e->type = SolType::address();
      } else if (m == "value") {
        e->ref = RefKind::MsgValue;
        e->type = SolType::integer(false, 256);
      } else {
        raise(ErrorKind::UnsupportedFeature, e->span, "'msg." + m + "' is not supported");
      }
      return;
    }
    if (base->ref == RefKind::Contract && base->kind == ExprKind::Identifier) {
      const ContractDef* c = base->contract;
      const FunctionDef* f = c->find_function(m);
      if (!c->is_library || !f) raise(ErrorKind::NameError, e->span, "'" + c->name + "." + m + "' cannot be referenced");
      e->ref = RefKind::Function;
      e->function = f;
      e->contract = c;
      e->type = SolType::void_type();
      return;
    }
    if (base->ref == RefKind::CallMember && m == "value") {
      e->ref = RefKind::CallValue;
      e->type = SolType::void_type();
      return;
    }
    const SolTypePtr& bt = base->type;
    if (bt->is_address_like()) {
      if (m == "balance") {
        e->ref = RefKind::Balance;
        e->type = SolType::integer(false, 256);
        return;
      }
      if (m == "transfer" || m == "send" || m == "call") {
        e->ref = m == "transfer" ? RefKind::Transfer : m == "send" ? RefKind::Send : RefKind::CallMember;
        e->type = SolType::void_type();
        return;
      }
    }
    if (bt->is_array() && m == "length") {
      e->ref = RefKind::Length;
      e->type = SolType::integer(false, 256);
      return;
    }
    if (bt->kind == Kind::Contract) {
      const ContractDef* c = unit_.find_contract(bt->contract);
      if (const FunctionDef* f = c->find_function(m)) {
        if (!f->is_entry_point()) type_error(e->span, "'" + c->name + "." + m + "' is not public");
        e->ref = RefKind::Function;
        e->function = f;
        e->contract = c;
        e->type = SolType::void_type();
        return;
      }
      if (const VarDecl* v = c->find_state_var(m)) {
        if (v->visibility != VarDecl::Visibility::Public)
          type_error(e->span, "'" + c->name + "." + m + "' is not public");
        e->ref = RefKind::StateVar;
        e->var = v;
        e->contract = c;
        e->type = SolType::void_type();
        return;
      }
    }
    // Library functions bound with `using L for T`.
    if (bt->kind != Kind::Void) {
      for (const auto& u : ctx.contract->using_for) {
        if (u.type && !same_type(*u.type, *bt) && !(bt->is_literal() && u.type->is_int())) continue;
        const ContractDef* lib = unit_.find_contract(u.library);
        if (const FunctionDef* f = lib->find_function(m)) {
          e->ref = RefKind::Function;
          e->function = f;
          e->contract = lib;
          e->type = SolType::void_type();
          return;
        }
      }
    }
    raise(ErrorKind::NameError, e->span, "no member '" + m + "' on " + tname(bt));
  }

  void resolve_unary(ExprPtr& e, Context& ctx) {
    ExprPtr& a = e->args[0];
    resolve_value(a, ctx);
    if (e->op == "!") {
      if (!a->type->is_bool()) type_error(e->span, "'!' needs a bool operand");
      e->type = SolType::boolean();
      if (a->kind == ExprKind::BoolLiteral) fold_bool(e, a->value == 0);
      return;
    }
    if (a->type->is_literal()) {
      if (e->op == "-") {
        fold_number(e, -a->value);
        return;
      }
      type_error(e->span, "'~' needs a typed operand");
    }
    if (!a->type->is_int()) type_error(e->span, "'" + e->op + "' needs an integer operand");
    if (e->op == "-" && !a->type->is_signed) type_error(e->span, "unary '-' on unsigned " + tname(a->type));
    e->type = a->type;
  }

  void fold_number(ExprPtr& e, const BigInt& v) {
    e->kind = ExprKind::NumberLiteral;
    e->value = v;
    e->text = to_decimal(v);
    e->args.clear();
    e->op.clear();
    e->type = SolType::literal();
  }
  void fold_bool(ExprPtr& e, bool v) {
    e->kind = ExprKind::BoolLiteral;
    e->value = v ? 1 : 0;
    e->text = v ? "true" : "false";
    e->args.clear();
    e->op.clear();
    e->type = SolType::boolean();
  }

  void check_shift_amount(ExprPtr& amount, const SolTypePtr& lhs) {
    if (amount->type->is_literal()) {
      if (amount->value < 0) type_error(amount->span, "negative shift amount");
      coerce(amount, lhs->is_signed ? SolType::integer(false, lhs->bits) : lhs);
      return;
    }
    if (!amount->type->is_int() || amount->type->is_signed)
      type_error(amount->span, "shift amount must be unsigned");
  }

  void resolve_binary(ExprPtr& e, Context& ctx) {
    ExprPtr& a = e->args[0];
    ExprPtr& b = e->args[1];
    resolve_value(a, ctx);
    resolve_value(b, ctx);
    const std::string& op = e->op;
    if (op == "&&" || op == "||") {
      if (!a->type->is_bool() || !b->type->is_bool()) type_error(e->span, "'" + op + "' needs bool operands");
      e->type = SolType::boolean();
      return;
    }
    bool eq = op == "==" || op == "!=";
    bool cmp = eq || op == "<" || op == ">" || op == "<=" || op == ">=";
    if (eq && (a->type->is_bool() || b->type->is_bool())) {
      if (!a->type->is_bool() || !b->type->is_bool()) type_error(e->span, "cannot compare " + tname(a->type) + " and " + tname(b->type));
      e->type = SolType::boolean();
      return;
    }
    if (eq && (a->type->is_address_like() || b->type->is_address_like())) {
      if (!a->type->is_address_like() || !b->type->is_address_like())
        type_error(e->span, "cannot compare " + tname(a->type) + " and " + tname(b->type));
      e->type = SolType::boolean();
      return;
    }
    if (a->type->is_literal() && b->type->is_literal()) {
      fold_binary(e);
      return;
    }
    if (op == "<<" || op == ">>") {
      if (a->type->is_literal()) type_error(e->span, "shift of an untyped literal");
      if (!a->type->is_int()) type_error(e->span, "shift needs an integer operand");
      check_shift_amount(b, a->type);
      e->type = a->type;
      return;
    }
    if (op == "**") {
      if (a->type->is_literal()) type_error(e->span, "'**' with an untyped literal base");
      if (!a->type->is_int()) type_error(e->span, "'**' needs an integer base");
      if (b->type->is_literal()) {
        if (b->value < 0) type_error(b->span, "negative exponent");
        coerce(b, SolType::integer(false, 256));
      } else if (!b->type->is_int() || b->type->is_signed) {
        type_error(b->span, "exponent must be unsigned");
      }
      e->type = a->type;
      return;
    }
    SolTypePtr t = common_type(a, b, e->span, op);
    e->type = cmp ? SolType::boolean() : t;
  }

  SolTypePtr common_type(ExprPtr& a, ExprPtr& b, const SourceSpan& span, const std::string& op) {
    if (a->type->is_literal() && b->type->is_int()) {
      coerce(a, b->type);
      return b->type;
    }
    if (b->type->is_literal() && a->type->is_int()) {
      coerce(b, a->type);
      return a->type;
    }
    if (!a->type->is_int() || !b->type->is_int())
      type_error(span, "operator '" + op + "' not applicable to " + tname(a->type) + " and " + tname(b->type));
    if (same_type(*a->type, *b->type)) return a->type;
    if (widens(*a->type, *b->type)) {
      coerce(a, b->type);
      return b->type;
    }
    if (widens(*b->type, *a->type)) {
      coerce(b, a->type);
      return a->type;
    }
    type_error(span, "operator '" + op + "' not applicable to " + tname(a->type) + " and " + tname(b->type));
  }

  void fold_binary(ExprPtr& e) {
    const BigInt x = e->args[0]->value;
    const BigInt y = e->args[1]->value;
    const std::string op = e->op;
    if (op == "+") return fold_number(e, x + y);
    if (op == "-") return fold_number(e, x - y);
    if (op == "*") return fold_number(e, x * y);
    if (op == "/" || op == "%") {
      if (y == 0) type_error(e->span, "division by zero in constant expression");
      return fold_number(e, op == "/" ? trunc_div(x, y) : trunc_rem(x, y));
    }
    if (op == "**") {
      if (y < 0 || y > 4096) type_error(e->span, "exponent out of range in constant expression");
      return fold_number(e, boost::multiprecision::pow(x, static_cast<unsigned>(y)));
    }
    if (op == "==") return fold_bool(e, x == y);
    if (op == "!=") return fold_bool(e, x != y);
    if (op == "<") return fold_bool(e, x < y);
    if (op == ">") return fold_bool(e, x > y);
    if (op == "<=") return fold_bool(e, x <= y);
    if (op == ">=") return fold_bool(e, x >= y);
    if (x < 0 || y < 0) type_error(e->span, "bitwise operation on a negative constant");
    if (op == "&") return fold_number(e, x & y);
    if (op == "|") return fold_number(e, x | y);
    if (op == "^") return fold_number(e, x ^ y);
    if (y > 4096) type_error(e->span, "shift amount out of range in constant expression");
    if (op == "<<") return fold_number(e, x << static_cast<unsigned>(y));
    if (op == ">>") return fold_number(e, x >> static_cast<unsigned>(y));
    type_error(e->span, "unknown operator '" + op + "'");
  }

  /// Makes `e` usable where a value of type `to` is expected.
  void coerce(ExprPtr& e, const SolTypePtr& to) {
    const SolTypePtr& from = e->type;
    if (same_type(*from, *to)) return;
    if (from->is_literal()) {
      if (!to->is_int()) type_error(e->span, "cannot use literal " + e->text + " as " + tname(to));
      if (!fits(e->value, *to)) type_error(e->span, "literal " + e->text + " is out of range for " + tname(to));
      e->type = to;
      return;
    }
    if (widens(*from, *to)) {
      auto c = std::make_shared<Expr>();
      c->kind = ExprKind::Conversion;
      c->span = e->span;
      c->id = e->id;
      c->args = {e};
      c->type = to;
      c->implicit = true;
      e = c;
      return;
    }
    if (from->kind == Kind::Contract && to->kind == Kind::Address) return;
    type_error(e->span, "cannot convert " + tname(from) + " to " + tname(to));
  }

  // ---- calls ----

  void resolve_call(ExprPtr& e, Context& ctx) {
    // `recipient.call.value(amount)(data...)`
    if (e->args[0]->kind == ExprKind::Call && e->args[0]->args[0]->kind == ExprKind::Member &&
        e->args[0]->args[0]->name == "value" &&
        e->args[0]->args[0]->args[0]->kind == ExprKind::Member &&
        e->args[0]->args[0]->args[0]->name == "call") {
      if (ctx.annotation) raise(ErrorKind::AnnotationError, e->span, "calls are not allowed in annotations");
      ExprPtr inner = e->args[0];
      ExprPtr value_member = inner->args[0];
      resolve_expr(value_member, ctx);
      if (value_member->ref != RefKind::CallValue) type_error(e->span, "malformed call.value");
      if (inner->args.size() != 2) type_error(inner->span, "call.value expects one argument");
      ExprPtr recipient = value_member->args[0]->args[0];
      ExprPtr amount = inner->args[1];
      resolve_value(amount, ctx);
      coerce(amount, SolType::integer(false, 256));
      for (std::size_t i = 1; i < e->args.size(); ++i) {
        if (e->args[i]->kind != ExprKind::StringLiteral)
          raise(ErrorKind::UnsupportedFeature, e->args[i]->span, "call data other than a string literal is not supported");
      }
      e->call = CallKind::CallValue;
      e->args = {recipient, amount};
      e->type = SolType::boolean();
      return;
    }
    ExprPtr& callee = e->args[0];
    if (callee->kind == ExprKind::Identifier && callee->name == "sum" && !lookup_local("sum") &&
        !ctx.contract->find_function("sum") && !ctx.contract->find_state_var("sum")) {
      resolve_sum(e, ctx);
      return;
    }
    if (ctx.annotation) raise(ErrorKind::AnnotationError, e->span, "calls are not allowed in annotations");
    resolve_expr(callee, ctx);
    std::vector<ExprPtr> actuals(e->args.begin() + 1, e->args.end());
    switch (callee->ref) {
      case RefKind::Builtin:
        resolve_builtin(e, actuals, ctx);
        return;
      case RefKind::TypeName:
      case RefKind::Contract:
        resolve_conversion(e, actuals, ctx);
        return;
      case RefKind::Transfer:
      case RefKind::Send: {
        if (actuals.size() != 1) type_error(e->span, "'" + callee->name + "' expects one argument");
        resolve_value(actuals[0], ctx);
        coerce(actuals[0], SolType::integer(false, 256));
        e->call = callee->ref == RefKind::Transfer ? CallKind::Transfer : CallKind::Send;
        e->receiver = callee->args[0];
        e->args = {callee, actuals[0]};
        e->type = e->call == CallKind::Send ? SolType::boolean() : SolType::void_type();
        return;
      }
      case RefKind::CallMember:
        raise(ErrorKind::UnsupportedFeature, e->span, "low-level call is not supported");
      case RefKind::StateVar:
        resolve_getter(e, actuals, ctx);
        return;
      case RefKind::Function:
        resolve_function_call(e, actuals, ctx);
        return;
      default:
        type_error(callee->span, "expression is not callable");
    }
  }

  void resolve_sum(ExprPtr& e, Context& ctx) {
    if (!ctx.annotation) raise(ErrorKind::SumError, e->span, "'sum' can only be used in annotations");
    if (e->args.size() != 2) raise(ErrorKind::SumError, e->span, "'sum' expects one argument");
    ExprPtr m = e->args[1];
    if (m->kind != ExprKind::Identifier) raise(ErrorKind::SumError, m->span, "'sum' must be applied to a state mapping");
    resolve_expr(m, ctx);
    if (m->ref != RefKind::StateVar || !m->type->is_mapping())
      raise(ErrorKind::SumError, m->span, "'sum' must be applied to a mapping, found " + tname(m->type));
    if (!m->type->value->is_int())
      raise(ErrorKind::SumError, m->span, "'sum' needs a mapping with integer values");
    e->kind = ExprKind::Sum;
    e->args = {m};
    e->type = m->type->value;
  }

  void resolve_builtin(ExprPtr& e, std::vector<ExprPtr>& actuals, Context& ctx) {
    const std::string& n = e->args[0]->name;
    auto check_message = [&](std::size_t i) {
      if (actuals.size() > i + 1) type_error(e->span, "too many arguments to '" + n + "'");
      if (actuals.size() == i + 1 && actuals[i]->kind != ExprKind::StringLiteral)
        type_error(actuals[i]->span, "message of '" + n + "' must be a string literal");
    };
    if (n == "revert") {
      check_message(0);
      e->call = CallKind::Revert;
      e->args.resize(1);
    } else {
      if (actuals.empty()) type_error(e->span, "'" + n + "' expects a condition");
      resolve_condition(actuals[0], ctx);
      if (n == "assert") {
        if (actuals.size() > 1) type_error(e->span, "'assert' expects one argument");
      } else {
        check_message(1);
      }
      e->call = n == "assert" ? CallKind::Assert : CallKind::Require;
      e->args = {e->args[0], actuals[0]};
    }
    e->type = SolType::void_type();
  }

  void resolve_conversion(ExprPtr& e, std::vector<ExprPtr>& actuals, Context& ctx) {
    const ExprPtr& callee = e->args[0];
    if (actuals.size() != 1) type_error(e->span, "conversion expects one argument");
    SolTypePtr to;
    if (callee->ref == RefKind::Contract) {
      if (callee->contract->is_library) type_error(e->span, "cannot convert to a library");
      to = SolType::contract_type(callee->contract->name);
    } else {
      const std::string& n = callee->name;
      if (n == "bool") {
        to = SolType::boolean();
      } else if (n == "address") {
        to = SolType::address();
      } else {
        bool s = n[0] == 'i';
        std::string digits = n.substr(s ? 3 : 4);
        to = SolType::integer(s, digits.empty() ? options_.default_bits : static_cast<unsigned>(std::stoi(digits)));
      }
    }
    ExprPtr a = actuals[0];
    resolve_value(a, ctx);
    const SolTypePtr& from = a->type;
    if (to->is_int()) {
      if (from->is_literal()) {
        // Explicit conversion of a constant wraps like the EVM does.
        ExprPtr lit = a;
        lit->value = wrap_to(lit->value, to->bits, to->is_signed);
        lit->text = to_decimal(lit->value);
        lit->type = to;
        e = lit;
        return;
      }
      if (!from->is_int()) type_error(e->span, "cannot convert " + tname(from) + " to " + tname(to));
    } else if (to->kind == Kind::Address && from->is_literal() && a->value == 0) {
      a->type = SolType::integer(false, 256);  // address(0), the zero address
    } else if (to->is_address_like()) {
      if (!from->is_address_like()) type_error(e->span, "cannot convert " + tname(from) + " to " + tname(to));
    } else if (!same_type(*from, *to)) {
      type_error(e->span, "cannot convert " + tname(from) + " to " + tname(to));
    }
    e->kind = ExprKind::Conversion;
    e->args = {a};
    e->type = to;
    e->implicit = false;
  }

  void resolve_getter(ExprPtr& e, std::vector<ExprPtr>& actuals, Context& ctx) {
    const ExprPtr& callee = e->args[0];
    if (callee->kind != ExprKind::Member) type_error(e->span, "state variable is not callable");
    const VarDecl* v = callee->var;
    e->call = CallKind::Getter;
    e->var = v;
    e->contract = callee->contract;
    e->receiver = callee->args[0];
    if (v->type->is_mapping()) {
      if (actuals.size() != 1) type_error(e->span, "getter of '" + v->name + "' expects one argument");
      resolve_value(actuals[0], ctx);
      coerce(actuals[0], v->type->key);
      e->type = v->type->value;
    } else {
      if (!actuals.empty()) type_error(e->span, "getter of '" + v->name + "' takes no arguments");
      e->type = v->type;
    }
    e->args.resize(1);
    for (auto& a : actuals) e->args.push_back(a);
  }

  void resolve_function_call(ExprPtr& e, std::vector<ExprPtr>& actuals, Context& ctx) {
    const ExprPtr& callee = e->args[0];
    const FunctionDef* f = callee->function;
    e->function = f;
    e->contract = callee->contract;
    if (callee->kind == ExprKind::Identifier) {
      e->call = ctx.contract->is_library ? CallKind::Library : CallKind::Internal;
    } else if (callee->contract->is_library) {
      e->call = CallKind::Library;
      const ExprPtr& base = callee->args[0];
      if (!(base->kind == ExprKind::Identifier && base->ref == RefKind::Contract)) {
        actuals.insert(actuals.begin(), base);  // bound by `using for`
      }
    } else {
      e->call = CallKind::External;
      e->receiver = callee->args[0];
      if (ctx.contract->is_library) type_error(e->span, "external calls from libraries are not supported");
    }
    if (actuals.size() != f->params.size())
      type_error(e->span, "'" + f->name + "' expects " + std::to_string(f->params.size()) + " arguments, got " +
                              std::to_string(actuals.size()));
    for (std::size_t i = 0; i < actuals.size(); ++i) {
      if (!actuals[i]->type) resolve_value(actuals[i], ctx);
      coerce(actuals[i], f->params[i]->type);
    }
    e->args.resize(1);
    for (auto& a : actuals) e->args.push_back(a);
    e->type = f->returns ? f->returns->type : SolType::void_type();
  }

  CompilationUnit& unit_;
  ResolveOptions options_;
  std::vector<std::map<std::string, const VarDecl*>> frames_;
};

}  // namespace

void resolve(CompilationUnit& unit, const ResolveOptions& options) {
  unsigned lo = options.allow_small_widths ? 2 : 8;
  bool aligned = options.allow_small_widths || options.default_bits % 8 == 0;
  if (options.default_bits < lo || options.default_bits > 256 || !aligned) {
    raise(ErrorKind::ConfigError, SourceSpan{}, "bit width must be a multiple of 8 in [8, 256]");
  }
  Resolver(unit, options).run();
}

CompilationUnit load(const std::vector<SourceFilePtr>& files, const ResolveOptions& options) {
  CompilationUnit unit = parse_sources(files);
  resolve(unit, options);
  return unit;
}

}  // namespace scv::frontend

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

#include "scv/vcgen/vcgen.hpp"

#include "scv/ivl/analysis.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace scv::vcgen {

using namespace scv::ivl;

namespace {

StmtPtr cut(const StmtPtr& s) {
  switch (s->kind) {
    case StmtKind::If:
      return if_(s->expr, cut(s->then_branch()),
                 cut(s->else_branch()));
    case StmtKind::Seq: {
      std::vector<StmtPtr> items;
      items.reserve(s->children.size());
      for (const auto& c : s->children) items.push_back(cut(c));
      return seq(std::move(items));
    }
    case StmtKind::While: break;
    default: return s;
  }
  std::vector<StmtPtr> out;
  std::vector<ExprPtr> all;
  for (const auto& inv : s->invariants) {
    if (!inv.free) out.push_back(assert_(inv.expr, inv.entry_label()));
    all.push_back(inv.expr);
  }
  std::set<std::string> modified = modified_vars(s->body());
  if (!modified.empty()) {
    out.push_back(havoc({modified.begin(), modified.end()}));
  }
  out.push_back(assume(and_(all)));
  std::vector<StmtPtr> iteration{cut(s->body())};
  for (const auto& inv : s->invariants) {
    if (!inv.free) iteration.push_back(assert_(inv.expr, inv.maintained_label()));
  }
  iteration.push_back(assume(false_expr()));
  out.push_back(if_(s->expr, seq(std::move(iteration)), skip()));
  out.push_back(assume(not_(s->expr)));
  return seq(std::move(out));
}

bool same_value(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (a->op != b->op || !same_type(a->type, b->type)) return false;
  if (a->is_const()) return a->value == b->value;
  return a->op == Op::Var && a->name == b->name;
}

class Passifier {
 public:
  explicit Passifier(PassiveProcedure& out) : out_(out) {}

  void declare(const VarDecl& d) {
    types_[d.name] = d.type;
    current_[d.name] = version(d.name);
  }

  ExprPtr rename(const ExprPtr& e) {
    return substitute(e, [this](const Expr& v) -> ExprPtr {
      auto it = current_.find(v.name);
      if (it == current_.end()) {
        throw std::logic_error("passify: undeclared variable " + v.name);
      }
      return it->second;
    });
  }

  StmtPtr stmt(const StmtPtr& s) {
    switch (s->kind) {
      case StmtKind::Assign: {
        ExprPtr value = rename(s->expr);
        // Copy propagation: constants and plain versions need no new symbol.
        if (value->is_const() || value->op == Op::Var) {
          current_[s->target] = value;
          return skip();
        }
        ExprPtr next = version(s->target);
        current_[s->target] = next;
        return assume(eq(next, value));
      }
      case StmtKind::Havoc:
        for (const auto& v : s->vars) current_[v] = version(v);
        return skip();
      case StmtKind::Assume: {
        StmtPtr out = assume(rename(s->expr));
        // `assume b` / `assume !b` on a Boolean variable fixes its value.
        const Expr& e = *s->expr;
        if (e.op == Op::Var && e.type->is_bool()) {
          current_[e.name] = true_expr();
        } else if (e.op == Op::Not && e.args[0]->op == Op::Var) {
          current_[e.args[0]->name] = false_expr();
        }
        return out;
      }
      case StmtKind::Assert: return assert_(rename(s->expr), s->label);
      case StmtKind::Seq: {
        std::vector<StmtPtr> items;
        items.reserve(s->children.size());
        for (const auto& c : s->children) items.push_back(stmt(c));
        return seq(std::move(items));
      }
      case StmtKind::If: return branch(*s);
      case StmtKind::While: break;
    }
    throw std::logic_error("passify: loop survived cutting");
  }

 private:
  ExprPtr version(const std::string& name) {
    unsigned k = counter_[name]++;
    std::string versioned = name + "@" + std::to_string(k);
    out_.symbols.push_back({versioned, types_.at(name)});
    return var(versioned, types_.at(name));
  }

  StmtPtr branch(const Stmt& s) {
    ExprPtr cond = rename(s.expr);
    auto before = current_;
    StmtPtr then_body = stmt(s.then_branch());
    auto after_then = current_;
    current_ = before;
    StmtPtr else_body = stmt(s.else_branch());
    auto after_else = current_;
    std::vector<StmtPtr> then_fix{then_body}, else_fix{else_body};
    for (auto& [name, t_version] : after_then) {
      const ExprPtr& e_version = after_else.at(name);
      if (same_value(t_version, e_version)) continue;
      ExprPtr joined = version(name);
      then_fix.push_back(assume(eq(joined, t_version)));
      else_fix.push_back(assume(eq(joined, e_version)));
      current_[name] = joined;
    }
    for (auto& [name, e_version] : after_else) {
      if (!after_then.count(name)) current_[name] = e_version;
    }
    return if_(cond, seq(std::move(then_fix)), seq(std::move(else_fix)));
  }

  PassiveProcedure& out_;
  std::map<std::string, TypePtr> types_;
  std::map<std::string, ExprPtr> current_;
  std::map<std::string, unsigned> counter_;
};

ExprPtr wp_impl(const StmtPtr& s, const ExprPtr& post, const std::string* keep) {
  switch (s->kind) {
    case StmtKind::Assume: return implies(s->expr, post);
    case StmtKind::Assert:
      if (keep && s->label.id != *keep) return implies(s->expr, post);
      return and_(s->expr, post);
    case StmtKind::Seq: {
      ExprPtr q = post;
      for (auto it = s->children.rbegin(); it != s->children.rend(); ++it) {
        q = wp_impl(*it, q, keep);
      }
      return q;
    }
    case StmtKind::If: {
      ExprPtr t = wp_impl(s->then_branch(), post, keep);
      ExprPtr e = wp_impl(s->else_branch(), post, keep);
      if (t == e) return t;
      return and_(implies(s->expr, t), implies(not_(s->expr), e));
    }
    default: break;
  }
  throw std::logic_error("wp: statement is not passive");
}

void collect_symbols(const ExprPtr& e, std::map<std::string, TypePtr>& out,
                     std::set<const Expr*>& seen) {
  if (!seen.insert(e.get()).second) return;
  if (e->op == Op::Var) out.emplace(e->name, e->type);
  for (const auto& a : e->args) collect_symbols(a, out, seen);
}

}  // namespace

Procedure cut_loops(const Procedure& proc) {
  Procedure out = proc;
  out.body = cut(proc.body);
  return out;
}

PassiveProcedure passify(const Procedure& proc,
                         const std::vector<VarDecl>& globals) {
  PassiveProcedure out;
  out.name = proc.name;
  Passifier p(out);
  for (const auto& d : globals) p.declare(d);
  for (const auto& d : proc.params) p.declare(d);
  for (const auto& d : proc.locals) p.declare(d);
  for (const auto& a : proc.entry_assumptions) out.entry_assumptions.push_back(p.rename(a));
  out.body = p.stmt(proc.body);
  return out;
}

ExprPtr wp(const StmtPtr& s, const ExprPtr& post) { return wp_impl(s, post, nullptr); }

ExprPtr wp_for(const StmtPtr& s, const ExprPtr& post, const std::string& keep) {
  return wp_impl(s, post, &keep);
}

std::vector<VerificationCondition> generate_vcs(
    const Procedure& proc, const std::vector<VarDecl>& globals) {
  PassiveProcedure passive = passify(cut_loops(proc), globals);
  std::vector<VerificationCondition> vcs;
  for (const auto& label : collect_assert_labels(passive.body)) {
    VerificationCondition vc;
    vc.procedure = proc.name;
    vc.label = label;
    std::vector<ExprPtr> parts = passive.entry_assumptions;
    parts.push_back(not_(wp_for(passive.body, true_expr(), label.id)));
    vc.formula = and_(std::move(parts));
    std::map<std::string, TypePtr> symbols;
    std::set<const Expr*> seen;
    collect_symbols(vc.formula, symbols, seen);
    for (auto& [name, type] : symbols) vc.symbols.push_back({name, type});
    vcs.push_back(std::move(vc));
  }
  return vcs;
}

std::vector<VerificationCondition> generate_vcs(const Program& program) {
  std::vector<VerificationCondition> vcs;
  for (const auto& proc : program.procedures) {
    auto part = generate_vcs(proc, program.globals);
    vcs.insert(vcs.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return vcs;
}

}  // namespace scv::vcgen

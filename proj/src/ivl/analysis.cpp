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

#include "scv/ivl/printer.hpp"

#include <map>
#include <unordered_set>

namespace scv::ivl {

namespace {

class Checker {
 public:
  Checker(const Program& program, std::vector<std::string>& defects)
      : program_(program), defects_(defects) {
    for (const auto& g : program.globals) {
      if (!globals_.emplace(g.name, g.type).second) {
        defect("duplicate global '" + g.name + "'");
      }
      if (g.name == kOverflowFlag) has_flag_ = true;
    }
  }

  void procedure(const Procedure& p) {
    proc_ = &p;
    scope_ = globals_;
    labels_.clear();
    for (const auto* list : {&p.params, &p.locals}) {
      for (const auto& d : *list) {
        if (globals_.count(d.name)) {
          defect("'" + d.name + "' shadows a global");
        }
        if (!scope_.emplace(d.name, d.type).second &&
            !globals_.count(d.name)) {
          defect("duplicate variable '" + d.name + "'");
        }
      }
    }
    for (const auto& a : p.entry_assumptions) boolean(a, "entry assumption");
    if (!p.body) {
      defect("missing body");
      return;
    }
    stmt(p.body);
  }

 private:
  void defect(const std::string& message) {
    defects_.push_back((proc_ ? proc_->name + ": " : std::string()) + message);
  }

  TypePtr check(const ExprPtr& e) {
    if (!e) {
      defect("null expression");
      return nullptr;
    }
    switch (e->op) {
      case Op::BoolConst:
      case Op::IntConst:
        return e->type;
      case Op::BvConst:
        if (!e->type || !e->type->is_bv() || e->type->width == 0) {
          defect("malformed bitvector constant");
        }
        return e->type;
      case Op::Var: {
        auto it = scope_.find(e->name);
        if (it == scope_.end()) {
          defect("undeclared variable '" + e->name + "'");
          return e->type;
        }
        if (!same_type(it->second, e->type)) {
          defect("type mismatch: '" + e->name + "' used as " +
                 to_string(*e->type) + " but declared " +
                 to_string(*it->second));
        }
        return it->second;
      }
      case Op::ConstMap: {
        TypePtr v = check(e->args.at(0));
        if (!e->type || !e->type->is_map() || !same_type(e->type->value, v)) {
          defect("type mismatch in constant map");
        }
        return e->type;
      }
      default: break;
    }
    for (const auto& a : e->args) check(a);
    TypePtr t = infer_type(e->op, e->args, e->p0, e->p1);
    if (!t) {
      defect("type mismatch in '" + print_expr(e) + "'");
      return e->type;
    }
    return t;
  }

  void boolean(const ExprPtr& e, const char* what) {
    TypePtr t = check(e);
    if (t && !t->is_bool()) defect(std::string("type mismatch: ") + what + " is not boolean");
  }

  void label(const std::string& id) {
    if (id.empty()) {
      defect("empty label");
    } else if (!labels_.insert(id).second) {
      defect("duplicate label '" + id + "'");
    }
  }

  bool is_flag_accumulate(const StmtPtr& s) const {
    const auto& e = s->expr;
    return e->op == Op::Or && !e->args.empty() && e->args[0]->op == Op::Var &&
           e->args[0]->name == kOverflowFlag;
  }

  static bool is_flag_check(const StmtPtr& s) {
    if (s->kind != StmtKind::Assert) return false;
    const auto& e = s->expr;
    return e->op == Op::Not && e->args[0]->op == Op::Var &&
           e->args[0]->name == kOverflowFlag;
  }

  void stmt(const StmtPtr& s, const StmtPtr& previous = nullptr) {
    switch (s->kind) {
      case StmtKind::Assign: {
        auto it = scope_.find(s->target);
        TypePtr value = check(s->expr);
        if (it == scope_.end()) {
          defect("assignment to undeclared variable '" + s->target + "'");
        } else if (value && !same_type(it->second, value)) {
          defect("type mismatch: assigning " + to_string(*value) + " to '" +
                 s->target + "' of type " + to_string(*it->second));
        }
        if (has_flag_ && s->target == kOverflowFlag) {
          bool reset = s->expr->is_false() && previous && is_flag_check(previous);
          if (!reset && !is_flag_accumulate(s)) {
            defect("overflow flag assigned outside accumulate/reset discipline");
          }
        }
        return;
      }
      case StmtKind::Havoc:
        for (const auto& v : s->vars) {
          if (!scope_.count(v)) defect("havoc of undeclared variable '" + v + "'");
        }
        return;
      case StmtKind::Assume: boolean(s->expr, "assumption"); return;
      case StmtKind::Assert:
        boolean(s->expr, "assertion");
        label(s->label.id);
        return;
      case StmtKind::If:
        boolean(s->expr, "condition");
        stmt(s->then_branch());
        stmt(s->else_branch());
        return;
      case StmtKind::While:
        boolean(s->expr, "loop condition");
        for (const auto& inv : s->invariants) {
          boolean(inv.expr, "loop invariant");
          if (!inv.free) {
            label(inv.entry_label().id);
            label(inv.maintained_label().id);
          }
        }
        stmt(s->body());
        return;
      case StmtKind::Seq: {
        StmtPtr prev;
        for (const auto& c : s->children) {
          stmt(c, prev);
          prev = c;
        }
        return;
      }
    }
  }

  const Program& program_;
  std::vector<std::string>& defects_;
  std::map<std::string, TypePtr> globals_;
  std::map<std::string, TypePtr> scope_;
  std::unordered_set<std::string> labels_;
  const Procedure* proc_ = nullptr;
  bool has_flag_ = false;
};

void collect_modified(const StmtPtr& s, std::set<std::string>& out) {
  switch (s->kind) {
    case StmtKind::Assign: out.insert(s->target); return;
    case StmtKind::Havoc: out.insert(s->vars.begin(), s->vars.end()); return;
    default:
      for (const auto& c : s->children) collect_modified(c, out);
      return;
  }
}

void collect_free(const ExprPtr& e, std::set<std::string>& out) {
  if (e->op == Op::Var) {
    out.insert(e->name);
    return;
  }
  for (const auto& a : e->args) collect_free(a, out);
}

}  // namespace

std::vector<std::string> well_formed(const Program& program) {
  std::vector<std::string> defects;
  Checker checker(program, defects);
  std::set<std::string> names;
  for (const auto& p : program.procedures) {
    if (!names.insert(p.name).second) {
      defects.push_back("duplicate procedure '" + p.name + "'");
    }
    checker.procedure(p);
  }
  return defects;
}

std::set<std::string> modified_vars(const StmtPtr& s) {
  std::set<std::string> out;
  collect_modified(s, out);
  return out;
}

std::set<std::string> free_vars(const ExprPtr& e) {
  std::set<std::string> out;
  collect_free(e, out);
  return out;
}

}  // namespace scv::ivl

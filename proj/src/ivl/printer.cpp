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

#include <sstream>

namespace scv::ivl {

namespace {

void print_expr_to(const ExprPtr& e, std::ostream& out);

void print_binary(const ExprPtr& e, const char* sep, std::ostream& out) {
  out << '(';
  for (std::size_t i = 0; i < e->args.size(); ++i) {
    if (i) out << ' ' << sep << ' ';
    print_expr_to(e->args[i], out);
  }
  out << ')';
}

void print_call(const std::string& name, const ExprPtr& e, std::ostream& out) {
  out << name << '(';
  for (std::size_t i = 0; i < e->args.size(); ++i) {
    if (i) out << ", ";
    print_expr_to(e->args[i], out);
  }
  out << ')';
}

void print_expr_to(const ExprPtr& e, std::ostream& out) {
  switch (e->op) {
    case Op::BoolConst: out << (e->is_true() ? "true" : "false"); return;
    case Op::IntConst: out << e->value; return;
    case Op::BvConst: out << e->value << "bv" << e->type->width; return;
    case Op::Var: out << e->name; return;
    case Op::Not: out << '!'; print_expr_to(e->args[0], out); return;
    case Op::And: print_binary(e, "&&", out); return;
    case Op::Or: print_binary(e, "||", out); return;
    case Op::Implies: print_binary(e, "==>", out); return;
    case Op::Eq: print_binary(e, "==", out); return;
    case Op::Ite:
      out << "(if ";
      print_expr_to(e->args[0], out);
      out << " then ";
      print_expr_to(e->args[1], out);
      out << " else ";
      print_expr_to(e->args[2], out);
      out << ')';
      return;
    case Op::Neg: print_call("neg", e, out); return;
    case Op::Add: print_binary(e, "+", out); return;
    case Op::Sub: print_binary(e, "-", out); return;
    case Op::Mul: print_binary(e, "*", out); return;
    case Op::Div: print_binary(e, "div", out); return;
    case Op::Mod: print_binary(e, "mod", out); return;
    case Op::Lt: print_binary(e, "<", out); return;
    case Op::Le: print_binary(e, "<=", out); return;
    case Op::Gt: print_binary(e, ">", out); return;
    case Op::Ge: print_binary(e, ">=", out); return;
    case Op::NatToBv:
      print_call("int2bv[" + std::to_string(e->p0) + "]", e, out);
      return;
    case Op::ZeroExt:
      print_call("zext[" + std::to_string(e->p0) + "]", e, out);
      return;
    case Op::SignExt:
      print_call("sext[" + std::to_string(e->p0) + "]", e, out);
      return;
    case Op::Extract:
      print_call("extract[" + std::to_string(e->p0) + ":" +
                     std::to_string(e->p1) + "]",
                 e, out);
      return;
    case Op::Select:
      print_expr_to(e->args[0], out);
      out << '[';
      print_expr_to(e->args[1], out);
      out << ']';
      return;
    case Op::Store:
      print_expr_to(e->args[0], out);
      out << '[';
      print_expr_to(e->args[1], out);
      out << " := ";
      print_expr_to(e->args[2], out);
      out << ']';
      return;
    case Op::ConstMap:
      out << "const[" << to_string(*e->type) << "](";
      print_expr_to(e->args[0], out);
      out << ')';
      return;
    default: print_call(op_name(e->op), e, out); return;
  }
}

void print_label_comment(const DiagnosticLabel& label, std::ostream& out) {
  out << "  // " << label.span.to_string();
  if (!label.message.empty()) out << ' ' << label.message;
}

void print_stmt_to(const StmtPtr& s, int indent, std::ostream& out) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  switch (s->kind) {
    case StmtKind::Assign:
      out << pad << s->target << " := " << print_expr(s->expr) << ";\n";
      return;
    case StmtKind::Havoc: {
      out << pad << "havoc ";
      for (std::size_t i = 0; i < s->vars.size(); ++i) {
        if (i) out << ", ";
        out << s->vars[i];
      }
      out << ";\n";
      return;
    }
    case StmtKind::Assume:
      out << pad << "assume " << print_expr(s->expr) << ";\n";
      return;
    case StmtKind::Assert:
      out << pad << "assert [" << s->label.id << ':'
          << category_name(s->label.category) << "] "
          << print_expr(s->expr) << ';';
      print_label_comment(s->label, out);
      out << '\n';
      return;
    case StmtKind::If:
      out << pad << "if (" << print_expr(s->expr) << ") {\n";
      print_stmt_to(s->then_branch(), indent + 1, out);
      if (!s->else_branch()->children.empty() ||
          s->else_branch()->kind != StmtKind::Seq) {
        out << pad << "} else {\n";
        print_stmt_to(s->else_branch(), indent + 1, out);
      }
      out << pad << "}\n";
      return;
    case StmtKind::While:
      out << pad << "while (" << print_expr(s->expr) << ")\n";
      for (const auto& inv : s->invariants) {
        out << pad << "  " << (inv.free ? "free " : "") << "invariant ";
        if (!inv.id.empty()) out << '[' << inv.id << "] ";
        out << print_expr(inv.expr) << ";\n";
      }
      out << pad << "{\n";
      print_stmt_to(s->body(), indent + 1, out);
      out << pad << "}\n";
      return;
    case StmtKind::Seq:
      for (const auto& c : s->children) print_stmt_to(c, indent, out);
      return;
  }
}

void print_decls(const std::vector<VarDecl>& decls, std::ostream& out) {
  for (std::size_t i = 0; i < decls.size(); ++i) {
    if (i) out << ", ";
    out << decls[i].name << ": " << to_string(*decls[i].type);
  }
}

}  // namespace

std::string print_expr(const ExprPtr& e) {
  std::ostringstream out;
  print_expr_to(e, out);
  return out.str();
}

std::string print_stmt(const StmtPtr& s, int indent) {
  std::ostringstream out;
  print_stmt_to(s, indent, out);
  return out.str();
}

std::string print_procedure(const Procedure& p) {
  std::ostringstream out;
  out << "procedure " << p.name << '(';
  print_decls(p.params, out);
  out << ")\n";
  for (const auto& a : p.entry_assumptions) {
    out << "  requires " << print_expr(a) << ";\n";
  }
  out << "{\n";
  for (const auto& l : p.locals) {
    out << "  var " << l.name << ": " << to_string(*l.type) << ";\n";
  }
  if (p.body) print_stmt_to(p.body, 1, out);
  out << "}\n";
  return out.str();
}

std::string print_program(const Program& p) {
  std::ostringstream out;
  out << "type address;\n";
  for (const auto& g : p.globals) {
    out << "var " << g.name << ": " << to_string(*g.type) << ";\n";
  }
  for (const auto& proc : p.procedures) {
    out << '\n' << print_procedure(proc);
  }
  return out.str();
}

}  // namespace scv::ivl

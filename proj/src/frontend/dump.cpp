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

#include "scv/frontend/dump.hpp"

#include <sstream>

namespace scv::frontend {

namespace {

std::string_view ref_name(RefKind r) {
  switch (r) {
    case RefKind::None: return "";
    case RefKind::StateVar: return "state";
    case RefKind::LocalVar: return "local";
    case RefKind::Function: return "function";
    case RefKind::Contract: return "contract";
    case RefKind::This: return "this";
    case RefKind::Msg: return "msg";
    case RefKind::MsgSender: return "msg.sender";
    case RefKind::MsgValue: return "msg.value";
    case RefKind::Balance: return "balance";
    case RefKind::Length: return "length";
    case RefKind::Transfer: return "transfer";
    case RefKind::Send: return "send";
    case RefKind::CallMember: return "call";
    case RefKind::CallValue: return "call.value";
    case RefKind::Builtin: return "builtin";
    case RefKind::TypeName: return "typename";
  }
  return "";
}

std::string_view call_name(CallKind c) {
  switch (c) {
    case CallKind::None: return "";
    case CallKind::Internal: return "internal";
    case CallKind::Library: return "library";
    case CallKind::External: return "external";
    case CallKind::Getter: return "getter";
    case CallKind::Require: return "require";
    case CallKind::Assert: return "assert";
    case CallKind::Revert: return "revert";
    case CallKind::Transfer: return "transfer";
    case CallKind::Send: return "send";
    case CallKind::CallValue: return "call.value";
  }
  return "";
}

std::string_view expr_kind_name(ExprKind k) {
  switch (k) {
    case ExprKind::BoolLiteral: return "Bool";
    case ExprKind::NumberLiteral: return "Number";
    case ExprKind::StringLiteral: return "String";
    case ExprKind::Identifier: return "Ident";
    case ExprKind::Index: return "Index";
    case ExprKind::Member: return "Member";
    case ExprKind::Unary: return "Unary";
    case ExprKind::Binary: return "Binary";
    case ExprKind::Call: return "Call";
    case ExprKind::Sum: return "Sum";
    case ExprKind::Assign: return "Assign";
    case ExprKind::IncDec: return "IncDec";
    case ExprKind::Conversion: return "Conversion";
  }
  return "?";
}

std::string_view stmt_kind_name(StmtKind k) {
  switch (k) {
    case StmtKind::Block: return "Block";
    case StmtKind::VarDecl: return "VarDecl";
    case StmtKind::Expression: return "ExprStmt";
    case StmtKind::If: return "If";
    case StmtKind::While: return "While";
    case StmtKind::For: return "For";
    case StmtKind::Return: return "Return";
    case StmtKind::Placeholder: return "Placeholder";
    case StmtKind::Throw: return "Throw";
  }
  return "?";
}

std::string_view visibility_name(FunctionDef::Visibility v) {
  switch (v) {
    case FunctionDef::Visibility::Default: return "";
    case FunctionDef::Visibility::Public: return "public";
    case FunctionDef::Visibility::External: return "external";
    case FunctionDef::Visibility::Internal: return "internal";
    case FunctionDef::Visibility::Private: return "private";
  }
  return "";
}

std::string_view visibility_name(VarDecl::Visibility v) {
  switch (v) {
    case VarDecl::Visibility::Default: return "";
    case VarDecl::Visibility::Public: return "public";
    case VarDecl::Visibility::Internal: return "internal";
    case VarDecl::Visibility::Private: return "private";
  }
  return "";
}

class Dumper {
 public:
  explicit Dumper(const DumpOptions& o) : opts_(o) {}

  std::string unit(const CompilationUnit& u) {
    for (const auto& c : u.contracts) contract(*c);
    return out_.str();
  }

 private:
  void line(int depth, const std::string& text, const SourceSpan& span) {
    out_ << std::string(static_cast<std::size_t>(depth) * 2, ' ') << text;
    if (opts_.spans && span.valid()) out_ << " @" << span.line << ":" << span.column;
    out_ << "\n";
  }

  static std::string type_suffix(const SolTypePtr& t) { return t ? " : " + to_string(*t) : ""; }

  void var(int d, const std::string& tag, const VarDecl& v) {
    std::string s = tag + " " + (v.name.empty() ? "_" : v.name) + " " + to_string(*v.type);
    auto vis = visibility_name(v.visibility);
    if (!vis.empty()) s += " " + std::string(vis);
    if (v.is_constant) s += " constant";
    line(d, s, v.span);
    if (v.init) expr(d + 1, *v.init);
  }

  void annotation(int d, const Annotation& a) {
    line(d, "Annotation " + std::string(annotation_kind_name(a.kind)), a.span);
    expr(d + 1, *a.expr);
  }

  void contract(const ContractDef& c) {
    line(0, std::string(c.is_library ? "Library " : "Contract ") + c.name, c.span);
    for (const auto& u : c.using_for)
      line(1, "Using " + u.library + " for " + (u.type ? to_string(*u.type) : "*"), u.span);
    for (const auto& a : c.invariants) annotation(1, a);
    for (const auto& v : c.state_vars) var(1, "StateVar", *v);
    for (const auto& m : c.modifiers) {
      line(1, "Modifier " + m->name, m->span);
      for (const auto& p : m->params) var(2, "Param", *p);
      stmt(2, m->body);
    }
    for (const auto& f : c.functions) {
      std::string s = "Function " + f->display_name();
      auto vis = visibility_name(f->visibility);
      if (!vis.empty()) s += " " + std::string(vis);
      if (f->is_payable) s += " payable";
      line(1, s, f->span);
      for (const auto& p : f->params) var(2, "Param", *p);
      if (f->returns) var(2, "Returns", *f->returns);
      for (const auto& m : f->modifiers) {
        line(2, "Apply " + m.name, m.span);
        for (const auto& a : m.args) expr(3, *a);
      }
      for (const auto& a : f->pre) annotation(2, a);
      for (const auto& a : f->post) annotation(2, a);
      stmt(2, f->body);
    }
  }

  void stmt(int d, const StmtPtr& s) {
    if (!s) {
      line(d, "Empty", {});
      return;
    }
    line(d, std::string(stmt_kind_name(s->kind)), s->span);
    for (const auto& a : s->invariants) annotation(d + 1, a);
    if (s->decl) var(d + 1, "Local", *s->decl);
    if (s->kind == StmtKind::For) {
      stmt(d + 1, s->body[0]);
      for (const auto& e : s->exprs) {
        if (e) {
          expr(d + 1, *e);
        } else {
          line(d + 1, "Empty", {});
        }
      }
      stmt(d + 1, s->body[1]);
      return;
    }
    for (const auto& e : s->exprs) expr(d + 1, *e);
    for (const auto& b : s->body) stmt(d + 1, b);
  }

  void expr(int d, const Expr& e) {
    std::string s(expr_kind_name(e.kind));
    switch (e.kind) {
      case ExprKind::BoolLiteral:
      case ExprKind::NumberLiteral:
        s += " " + to_decimal(e.value);
        break;
      case ExprKind::StringLiteral:
        s += " \"" + e.text + "\"";
        break;
      case ExprKind::Identifier:
      case ExprKind::Member:
        s += " " + e.name;
        break;
      case ExprKind::Unary:
      case ExprKind::Binary:
      case ExprKind::Assign:
        s += " " + e.op;
        break;
      case ExprKind::IncDec:
        s += std::string(e.prefix ? " prefix " : " postfix ") + e.op;
        break;
      case ExprKind::Conversion:
        if (e.implicit) s += " implicit";
        break;
      default:
        break;
    }
    auto r = ref_name(e.ref);
    if (!r.empty()) s += " [" + std::string(r) + "]";
    auto c = call_name(e.call);
    if (!c.empty()) s += " <" + std::string(c) + (e.function ? " " + e.function->display_name() : "") + ">";
    s += type_suffix(e.type);
    line(d, s, e.span);
    if (e.receiver) {
      line(d + 1, "Receiver", e.receiver->span);
      expr(d + 2, *e.receiver);
    }
    for (const auto& a : e.args)
      if (a) expr(d + 1, *a);
  }

  DumpOptions opts_;
  std::ostringstream out_;
};

// ---- source printer ----

int precedence(const Expr& e) {
  if (e.kind == ExprKind::Assign) return 0;
  if (e.kind == ExprKind::Binary) {
    const std::string& op = e.op;
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "==" || op == "!=") return 3;
    if (op == "<" || op == ">" || op == "<=" || op == ">=") return 4;
    if (op == "|") return 5;
    if (op == "^") return 6;
    if (op == "&") return 7;
    if (op == "<<" || op == ">>") return 8;
    if (op == "+" || op == "-") return 9;
    if (op == "*" || op == "/" || op == "%") return 10;
    return 11;
  }
  if (e.kind == ExprKind::Unary || (e.kind == ExprKind::IncDec && e.prefix)) return 12;
  return 13;
}

std::string src_expr(const Expr& e);

std::string wrap(const Expr& e, int min_prec) {
  std::string s = src_expr(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

std::string src_expr(const Expr& e) {
  switch (e.kind) {
    case ExprKind::BoolLiteral:
      return e.value != 0 ? "true" : "false";
    case ExprKind::NumberLiteral:
      return e.value < 0 ? "(" + to_decimal(e.value) + ")" : (e.text.empty() ? to_decimal(e.value) : e.text);
    case ExprKind::StringLiteral:
      return "\"" + e.text + "\"";
    case ExprKind::Identifier:
      return e.name;
    case ExprKind::Index:
      return wrap(*e.args[0], 13) + "[" + src_expr(*e.args[1]) + "]";
    case ExprKind::Member:
      return wrap(*e.args[0], 13) + "." + e.name;
    case ExprKind::Unary:
      // A space keeps `- -x` from lexing as `--x`.
      return e.op + (e.args[0]->kind == ExprKind::Unary || e.args[0]->kind == ExprKind::IncDec ? " " : "") +
             wrap(*e.args[0], 12);
    case ExprKind::Binary: {
      int p = precedence(e);
      bool right = e.op == "**";
      return wrap(*e.args[0], right ? p + 1 : p) + " " + e.op + " " + wrap(*e.args[1], right ? p : p + 1);
    }
    case ExprKind::Call: {
      std::string s = wrap(*e.args[0], 13) + "(";
      for (std::size_t i = 1; i < e.args.size(); ++i) s += (i > 1 ? ", " : "") + src_expr(*e.args[i]);
      return s + ")";
    }
    case ExprKind::Sum:
      return "sum(" + src_expr(*e.args[0]) + ")";
    case ExprKind::Assign:
      return src_expr(*e.args[0]) + " " + e.op + " " + src_expr(*e.args[1]);
    case ExprKind::IncDec:
      return e.prefix ? e.op + wrap(*e.args[0], 13) : wrap(*e.args[0], 13) + e.op;
    case ExprKind::Conversion:
      return (e.type ? to_string(*e.type) : std::string("?")) + "(" + src_expr(*e.args[0]) + ")";
  }
  return "";
}

class SourcePrinter {
 public:
  std::string unit(const CompilationUnit& u) {
    for (const auto& c : u.contracts) contract(*c);
    return out_.str();
  }

 private:
  void indent(int d) { out_ << std::string(static_cast<std::size_t>(d) * 4, ' '); }

  void annotations(int d, const std::vector<Annotation>& as) {
    if (as.empty()) return;
    indent(d);
    out_ << "/**";
    for (const auto& a : as) {
      std::string_view kind = a.kind == AnnotationKind::LoopInvariant ? "invariant" : annotation_kind_name(a.kind);
      out_ << " @notice " << kind << " " << src_expr(*a.expr);
    }
    out_ << " */\n";
  }

  static std::string var(const VarDecl& v) {
    std::string s = to_string(*v.type);
    if (v.visibility != VarDecl::Visibility::Default) s += " " + std::string(visibility_name(v.visibility));
    if (v.is_constant) s += " constant";
    if (!v.name.empty()) s += " " + v.name;
    return s;
  }

  static std::string params(const std::vector<std::shared_ptr<VarDecl>>& ps) {
    std::string s = "(";
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + var(*ps[i]);
    return s + ")";
  }

  void contract(const ContractDef& c) {
    annotations(0, c.invariants);
    out_ << (c.is_library ? "library " : "contract ") << c.name << " {\n";
    for (const auto& u : c.using_for) {
      indent(1);
      out_ << "using " << u.library << " for " << (u.type ? to_string(*u.type) : "*") << ";\n";
    }
    for (const auto& v : c.state_vars) {
      indent(1);
      out_ << var(*v);
      if (v->init) out_ << " = " << src_expr(*v->init);
      out_ << ";\n";
    }
    for (const auto& m : c.modifiers) {
      indent(1);
      out_ << "modifier " << m->name << params(m->params) << " ";
      block(1, m->body);
      out_ << "\n";
    }
    for (const auto& f : c.functions) {
      std::vector<Annotation> spec = f->pre;
      spec.insert(spec.end(), f->post.begin(), f->post.end());
      annotations(1, spec);
      indent(1);
      if (f->is_constructor) {
        out_ << "constructor";
      } else {
        out_ << "function" << (f->is_fallback ? "" : " " + f->name);
      }
      out_ << params(f->params);
      auto vis = visibility_name(f->visibility);
      if (!vis.empty()) out_ << " " << vis;
      if (f->is_payable) out_ << " payable";
      for (const auto& m : f->modifiers) {
        out_ << " " << m.name;
        if (!m.args.empty()) {
          out_ << "(";
          for (std::size_t i = 0; i < m.args.size(); ++i) out_ << (i ? ", " : "") << src_expr(*m.args[i]);
          out_ << ")";
        }
      }
      if (f->returns) out_ << " returns (" << var(*f->returns) << ")";
      if (f->body) {
        out_ << " ";
        block(1, f->body);
        out_ << "\n";
      } else {
        out_ << ";\n";
      }
    }
    out_ << "}\n";
  }

  void block(int d, const StmtPtr& b) {
    out_ << "{\n";
    for (const auto& s : b->body) stmt(d + 1, s);
    indent(d);
    out_ << "}";
  }

  void simple(const StmtPtr& s) {
    if (s->kind == StmtKind::VarDecl) {
      out_ << var(*s->decl);
      if (!s->exprs.empty()) out_ << " = " << src_expr(*s->exprs[0]);
    } else {
      out_ << src_expr(*s->exprs[0]);
    }
  }

  // Nested statements of if/while/for are printed as blocks when they are
  // blocks, otherwise as a single indented statement.
  void child(int d, const StmtPtr& s) {
    if (s->kind == StmtKind::Block) {
      out_ << " ";
      block(d, s);
      out_ << "\n";
    } else {
      out_ << "\n";
      stmt(d + 1, s);
    }
  }

  void stmt(int d, const StmtPtr& s) {
    if (s->kind == StmtKind::While || s->kind == StmtKind::For) annotations(d, s->invariants);
    indent(d);
    switch (s->kind) {
      case StmtKind::Block:
        block(d, s);
        out_ << "\n";
        break;
      case StmtKind::VarDecl:
      case StmtKind::Expression:
        simple(s);
        out_ << ";\n";
        break;
      case StmtKind::If:
        out_ << "if (" << src_expr(*s->exprs[0]) << ")";
        if (s->body.size() > 1) {
          // Always brace the then-branch so a nested if cannot capture the else.
          out_ << " ";
          if (s->body[0]->kind == StmtKind::Block) {
            block(d, s->body[0]);
          } else {
            out_ << "{\n";
            stmt(d + 1, s->body[0]);
            indent(d);
            out_ << "}";
          }
          out_ << " else";
          child(d, s->body[1]);
        } else {
          child(d, s->body[0]);
        }
        break;
      case StmtKind::While:
        out_ << "while (" << src_expr(*s->exprs[0]) << ")";
        child(d, s->body[0]);
        break;
      case StmtKind::For:
        out_ << "for (";
        if (s->body[0]) simple(s->body[0]);
        out_ << ";";
        if (s->exprs[0]) out_ << " " << src_expr(*s->exprs[0]);
        out_ << ";";
        if (s->exprs[1]) out_ << " " << src_expr(*s->exprs[1]);
        out_ << ")";
        child(d, s->body[1]);
        break;
      case StmtKind::Return:
        out_ << "return";
        if (!s->exprs.empty()) out_ << " " << src_expr(*s->exprs[0]);
        out_ << ";\n";
        break;
      case StmtKind::Placeholder:
        out_ << "_;\n";
        break;
      case StmtKind::Throw:
        out_ << "throw;\n";
        break;
    }
  }

  std::ostringstream out_;
};

}  // namespace

std::string dump_ast(const CompilationUnit& unit, const DumpOptions& options) {
  return Dumper(options).unit(unit);
}

std::string to_solidity(const CompilationUnit& unit) { return SourcePrinter().unit(unit); }

std::string to_solidity(const Expr& expr) { return src_expr(expr); }

}  // namespace scv::frontend

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

#include "scv/frontend/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace scv::frontend {

namespace {

bool is_unsupported_type_name(std::string_view s) {
  if (s == "byte" || s == "string" || s == "bytes" || s == "fixed" || s == "ufixed") return true;
  if (s.substr(0, 5) == "bytes" && s.size() > 5 &&
      std::all_of(s.begin() + 5, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return true;
  return false;
}

SolTypePtr elementary_type(std::string_view s) {
  if (s == "bool") return SolType::boolean();
  if (s == "address") return SolType::address();
  bool is_signed = s[0] == 'i';
  std::string_view digits = s.substr(is_signed ? 3 : 4);
  unsigned bits = digits.empty() ? 0 : static_cast<unsigned>(std::stoi(std::string(digits)));
  return SolType::integer(is_signed, bits);
}

const BigInt* unit_multiplier(std::string_view s) {
  static const BigInt wei = 1, szabo = BigInt("1000000000000"),
                      finney = BigInt("1000000000000000"), ether = BigInt("1000000000000000000"),
                      seconds = 1, minutes = 60, hours = 3600, days = 86400, weeks = 604800,
                      years = 31536000;
  if (s == "wei") return &wei;
  if (s == "szabo") return &szabo;
  if (s == "finney") return &finney;
  if (s == "ether") return &ether;
  if (s == "seconds") return &seconds;
  if (s == "minutes") return &minutes;
  if (s == "hours") return &hours;
  if (s == "days") return &days;
  if (s == "weeks") return &weeks;
  if (s == "years") return &years;
  return nullptr;
}

BigInt parse_number(const std::string& text) {
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    BigInt v = 0;
    for (std::size_t i = 2; i < text.size(); ++i) {
      char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
      v = v * 16 + (std::isdigit(static_cast<unsigned char>(c)) ? c - '0' : c - 'a' + 10);
    }
    return v;
  }
  BigInt v = 0;
  for (char c : text)
    if (c != '_') v = v * 10 + (c - '0');
  return v;
}

int binary_precedence(std::string_view op) {
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
  if (op == "**") return 11;
  return 0;
}

bool is_assign_op(std::string_view op) {
  return op == "=" || op == "+=" || op == "-=" || op == "*=" || op == "/=" || op == "%=" ||
         op == "|=" || op == "&=" || op == "^=" || op == "<<=" || op == ">>=";
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, int& next_id) : next_id_(next_id) {
    // Doc comments are kept aside and attached to the following token.
    for (const auto& t : tokens) {
      if (t.kind == TokenKind::DocComment) {
        pending_doc_ = &t;
        continue;
      }
      toks_.push_back(&t);
      docs_.push_back(pending_doc_);
      pending_doc_ = nullptr;
    }
  }

  CompilationUnit unit() {
    CompilationUnit u;
    if (!toks_.empty() && toks_.front()->span.file) u.files.push_back(toks_.front()->span.file);
    while (!at_end()) {
      if (peek().is_keyword("pragma")) {
        while (!at_end() && !peek().is_punct(";")) ++pos_;
        expect_punct(";");
      } else if (peek().is_keyword("import")) {
        unsupported("import");
      } else if (peek().is_keyword("interface")) {
        unsupported("interface");
      } else if (peek().is_keyword("contract") || peek().is_keyword("library")) {
        u.contracts.push_back(contract());
      } else if (peek().is_keyword("struct") || peek().is_keyword("enum")) {
        unsupported(peek().text);
      } else {
        fail_expected("'contract', 'library' or 'pragma'");
      }
    }
    return u;
  }

  ExprPtr standalone_expression() {
    ExprPtr e = expression();
    if (!at_end()) fail_expected("end of expression");
    return e;
  }

 private:
  // ---- token helpers ----

  const Token& peek(std::size_t k = 0) const {
    return *toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at_end() const { return peek().kind == TokenKind::End; }
  const Token* doc_here() const { return docs_[std::min(pos_, docs_.size() - 1)]; }
  const Token& advance() {
    const Token& t = peek();
    if (!at_end()) ++pos_;
    return t;
  }
  const Token& previous() const { return *toks_[pos_ == 0 ? 0 : pos_ - 1]; }

  bool accept_punct(std::string_view p) {
    if (!peek().is_punct(p)) return false;
    ++pos_;
    return true;
  }
  bool accept_keyword(std::string_view k) {
    if (!peek().is_keyword(k)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail_expected(const std::string& what) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    raise(ErrorKind::ParseError, t.span, "expected " + what + ", found " + found);
  }
  [[noreturn]] void unsupported(const std::string& construct) const {
    raise(ErrorKind::UnsupportedFeature, peek().span, construct + " is not supported");
  }
  [[noreturn]] void unsupported_at(const SourceSpan& span, const std::string& construct) const {
    raise(ErrorKind::UnsupportedFeature, span, construct + " is not supported");
  }

  const Token& expect_punct(std::string_view p) {
    if (!peek().is_punct(p)) fail_expected("'" + std::string(p) + "'");
    return advance();
  }
  const Token& expect_keyword(std::string_view k) {
    if (!peek().is_keyword(k)) fail_expected("'" + std::string(k) + "'");
    return advance();
  }
  std::string expect_identifier() {
    if (peek().kind != TokenKind::Identifier) {
      if (peek().kind == TokenKind::Keyword) check_unsupported_keyword();
      fail_expected("identifier");
    }
    const Token& t = advance();
    check_reserved(t);
    return t.text;
  }
  void check_reserved(const Token& t) const {
    if (t.text.rfind("__", 0) == 0)
      raise(ErrorKind::NameError, t.span, "identifier '" + t.text + "' uses the reserved prefix '__'");
  }
  void check_unsupported_keyword() const {
    static const std::string_view kw[] = {"struct", "enum", "event", "emit", "assembly", "new",
                                          "delete", "var", "break", "continue", "do",
                                          "interface", "import", "string", "bytes"};
    for (auto k : kw)
      if (peek().is_keyword(k)) unsupported(std::string(k));
  }

  SourceSpan span_from(const SourceSpan& start) const {
    return SourceSpan::merge(start, previous().span);
  }

  // ---- nodes ----

  ExprPtr new_expr(ExprKind kind, const SourceSpan& span) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->span = span;
    e->id = next_id_++;
    return e;
  }
  StmtPtr new_stmt(StmtKind kind, const SourceSpan& span) {
    auto s = std::make_shared<Stmt>();
    s->kind = kind;
    s->span = span;
    s->id = next_id_++;
    return s;
  }
  std::shared_ptr<VarDecl> new_var(VarDecl::Kind kind) {
    auto v = std::make_shared<VarDecl>();
    v->kind = kind;
    v->id = next_id_++;
    return v;
  }

  // ---- declarations ----

  std::shared_ptr<ContractDef> contract() {
    const Token* doc = doc_here();
    auto c = std::make_shared<ContractDef>();
    c->id = next_id_++;
    SourceSpan start = peek().span;
    c->is_library = advance().text == "library";
    c->name = expect_identifier();
    if (peek().is_keyword("is")) unsupported("inheritance");
    if (doc) {
      c->invariants = parse_annotations(*doc, AnnotationScope::Contract, next_id_);
    }
    expect_punct("{");
    while (!peek().is_punct("}")) {
      if (at_end()) fail_expected("'}'");
      member(*c);
    }
    expect_punct("}");
    c->span = span_from(start);
    return c;
  }

  void member(ContractDef& c) {
    const Token& t = peek();
    if (t.is_keyword("function") || t.is_keyword("constructor")) {
      c.functions.push_back(function(c));
    } else if (t.is_keyword("modifier")) {
      c.modifiers.push_back(modifier());
    } else if (t.is_keyword("using")) {
      using_for(c);
    } else if (t.is_keyword("struct") || t.is_keyword("enum") || t.is_keyword("event")) {
      unsupported(t.text);
    } else {
      // Annotations on a state variable are misplaced; this raises for them.
      if (doc_here()) parse_annotations(*doc_here(), AnnotationScope::Statement, next_id_);
      auto v = new_var(VarDecl::Kind::State);
      SourceSpan start = peek().span;
      v->type = type_name();
      for (;;) {
        if (accept_keyword("public")) {
          v->visibility = VarDecl::Visibility::Public;
        } else if (accept_keyword("internal")) {
          v->visibility = VarDecl::Visibility::Internal;
        } else if (accept_keyword("private")) {
          v->visibility = VarDecl::Visibility::Private;
        } else if (accept_keyword("constant")) {
          v->is_constant = true;
        } else {
          break;
        }
      }
      v->name = expect_identifier();
      if (accept_punct("=")) v->init = expression();
      expect_punct(";");
      v->span = span_from(start);
      c.state_vars.push_back(v);
    }
  }

  void using_for(ContractDef& c) {
    SourceSpan start = advance().span;
    UsingFor u;
    u.library = expect_identifier();
    expect_keyword("for");
    if (!accept_punct("*")) u.type = type_name();
    expect_punct(";");
    u.span = span_from(start);
    c.using_for.push_back(std::move(u));
  }

  std::shared_ptr<ModifierDef> modifier() {
    auto m = std::make_shared<ModifierDef>();
    m->id = next_id_++;
    SourceSpan start = advance().span;
    m->name = expect_identifier();
    if (peek().is_punct("(")) m->params = parameter_list(VarDecl::Kind::Parameter);
    in_modifier_ = true;
    m->body = block();
    in_modifier_ = false;
    m->span = span_from(start);
    int count = count_placeholders(m->body);
    if (count != 1) {
      raise(ErrorKind::ParseError, m->span,
            "modifier '" + m->name + "' must contain exactly one '_' placeholder (found " +
                std::to_string(count) + ")");
    }
    return m;
  }

  static int count_placeholders(const StmtPtr& s) {
    if (!s) return 0;
    int n = s->kind == StmtKind::Placeholder ? 1 : 0;
    for (const auto& b : s->body) n += count_placeholders(b);
    return n;
  }

  std::shared_ptr<FunctionDef> function(const ContractDef& c) {
    const Token* doc = doc_here();
    auto f = std::make_shared<FunctionDef>();
    f->id = next_id_++;
    SourceSpan start = peek().span;
    if (advance().is_keyword("constructor")) {
      f->is_constructor = true;
    } else if (peek().kind == TokenKind::Identifier) {
      f->name = expect_identifier();
      if (f->name == c.name) f->is_constructor = true;  // pre-0.4.22 constructor
    } else {
      f->is_fallback = true;
    }
    f->params = parameter_list(VarDecl::Kind::Parameter);
    for (;;) {
      const Token& t = peek();
      if (accept_keyword("public")) {
        f->visibility = FunctionDef::Visibility::Public;
      } else if (accept_keyword("external")) {
        f->visibility = FunctionDef::Visibility::External;
      } else if (accept_keyword("internal")) {
        f->visibility = FunctionDef::Visibility::Internal;
      } else if (accept_keyword("private")) {
        f->visibility = FunctionDef::Visibility::Private;
      } else if (accept_keyword("payable")) {
        f->is_payable = true;
      } else if (accept_keyword("view") || accept_keyword("pure") || accept_keyword("constant")) {
      } else if (t.kind == TokenKind::Identifier) {
        ModifierInvocation inv;
        inv.span = t.span;
        inv.name = expect_identifier();
        if (accept_punct("(")) {
          if (!peek().is_punct(")")) {
            do {
              inv.args.push_back(expression());
            } while (accept_punct(","));
          }
          expect_punct(")");
        }
        inv.span = span_from(inv.span);
        f->modifiers.push_back(std::move(inv));
      } else {
        break;
      }
    }
    if (accept_keyword("returns")) {
      auto rets = parameter_list(VarDecl::Kind::Return);
      if (rets.size() > 1) unsupported_at(rets[1]->span, "multiple return values");
      if (rets.empty()) fail_expected("return type");
      f->returns = rets[0];
    }
    if (doc) {
      for (auto& a : parse_annotations(*doc, AnnotationScope::Function, next_id_)) {
        (a.kind == AnnotationKind::Precondition ? f->pre : f->post).push_back(std::move(a));
      }
    }
    if (!accept_punct(";")) f->body = block();
    f->span = span_from(start);
    return f;
  }

  std::vector<std::shared_ptr<VarDecl>> parameter_list(VarDecl::Kind kind) {
    std::vector<std::shared_ptr<VarDecl>> out;
    expect_punct("(");
    if (!peek().is_punct(")")) {
      do {
        auto v = new_var(kind);
        SourceSpan start = peek().span;
        v->type = type_name();
        while (accept_keyword("memory") || accept_keyword("storage") || accept_keyword("calldata")) {
        }
        if (peek().kind == TokenKind::Identifier) v->name = expect_identifier();
        v->span = span_from(start);
        out.push_back(v);
      } while (accept_punct(","));
    }
    expect_punct(")");
    return out;
  }

  bool at_type_start() const {
    const Token& t = peek();
    if (t.is_keyword("mapping")) return true;
    if (t.kind != TokenKind::Identifier) return false;
    return is_elementary_type_name(t.text) || is_unsupported_type_name(t.text);
  }

  SolTypePtr type_name() {
    const Token& t = peek();
    SolTypePtr base;
    if (accept_keyword("mapping")) {
      expect_punct("(");
      SourceSpan kspan = peek().span;
      SolTypePtr key = type_name();
      if (key->is_mapping() || key->is_array()) unsupported_at(kspan, "non-elementary mapping key");
      expect_punct("=>");
      SolTypePtr value = type_name();
      expect_punct(")");
      base = SolType::mapping(key, value);
    } else if (t.is_keyword("string") || t.is_keyword("bytes")) {
      unsupported(t.text);
    } else if (t.is_keyword("var")) {
      unsupported("var");
    } else if (t.kind == TokenKind::Identifier) {
      if (is_unsupported_type_name(t.text)) unsupported(t.text);
      advance();
      if (is_elementary_type_name(t.text)) {
        base = elementary_type(t.text);
      } else {
        check_reserved(t);
        base = SolType::contract_type(t.text);
      }
    } else {
      if (t.kind == TokenKind::Keyword) check_unsupported_keyword();
      fail_expected("type name");
    }
    while (peek().is_punct("[")) {
      SourceSpan s = advance().span;
      if (!peek().is_punct("]")) unsupported_at(s, "fixed-size array");
      advance();
      if (base->is_array()) unsupported_at(s, "multi-dimensional array");
      base = SolType::array(base);
    }
    return base;
  }

  // ---- statements ----

  StmtPtr block() {
    SourceSpan start = expect_punct("{").span;
    auto b = new_stmt(StmtKind::Block, start);
    while (!peek().is_punct("}")) {
      if (at_end()) fail_expected("'}'");
      b->body.push_back(statement());
    }
    advance();
    b->span = span_from(start);
    return b;
  }

  StmtPtr statement() {
    const Token* doc = doc_here();
    const Token& t = peek();
    SourceSpan start = t.span;
    if (t.is_keyword("while") || t.is_keyword("for")) {
      std::vector<Annotation> invariants;
      if (doc) invariants = parse_annotations(*doc, AnnotationScope::Loop, next_id_);
      StmtPtr s = t.is_keyword("while") ? while_stmt() : for_stmt();
      s->invariants = std::move(invariants);
      return s;
    }
    if (doc) parse_annotations(*doc, AnnotationScope::Statement, next_id_);
    if (t.is_punct("{")) return block();
    if (accept_keyword("if")) {
      auto s = new_stmt(StmtKind::If, start);
      expect_punct("(");
      s->exprs.push_back(expression());
      expect_punct(")");
      s->body.push_back(statement());
      if (accept_keyword("else")) s->body.push_back(statement());
      s->span = span_from(start);
      return s;
    }
    if (accept_keyword("return")) {
      auto s = new_stmt(StmtKind::Return, start);
      if (!peek().is_punct(";")) {
        s->exprs.push_back(expression());
        if (peek().is_punct(",")) unsupported("multiple return values");
      }
      expect_punct(";");
      s->span = span_from(start);
      return s;
    }
    if (accept_keyword("throw")) {
      expect_punct(";");
      return new_stmt(StmtKind::Throw, span_from(start));
    }
    if (t.kind == TokenKind::Identifier && t.text == "_" && in_modifier_ && peek(1).is_punct(";")) {
      advance();
      advance();
      return new_stmt(StmtKind::Placeholder, span_from(start));
    }
    if (t.is_keyword("do")) unsupported("do-while loop");
    if (t.is_keyword("break") || t.is_keyword("continue") || t.is_keyword("emit") ||
        t.is_keyword("assembly") || t.is_keyword("var") || t.is_keyword("delete")) {
      unsupported(t.text);
    }
    if (is_var_decl_start()) {
      auto s = var_decl_stmt();
      expect_punct(";");
      s->span = span_from(start);
      return s;
    }
    auto s = new_stmt(StmtKind::Expression, start);
    s->exprs.push_back(expression());
    expect_punct(";");
    s->span = span_from(start);
    return s;
  }

  bool is_var_decl_start() const {
    const Token& t = peek();
    if (t.is_keyword("mapping") || t.is_keyword("string") || t.is_keyword("bytes")) return true;
    if (t.kind != TokenKind::Identifier) return false;
    std::size_t k = 1;
    while (peek(k).is_punct("[") && peek(k + 1).is_punct("]")) k += 2;
    const Token& n = peek(k);
    bool named = n.kind == TokenKind::Identifier || n.is_keyword("memory") || n.is_keyword("storage");
    if (is_elementary_type_name(t.text) || is_unsupported_type_name(t.text)) return named || k > 1;
    return named;
  }

  StmtPtr var_decl_stmt() {
    SourceSpan start = peek().span;
    auto s = new_stmt(StmtKind::VarDecl, start);
    auto v = new_var(VarDecl::Kind::Local);
    v->type = type_name();
    while (accept_keyword("memory") || accept_keyword("storage")) {
    }
    v->name = expect_identifier();
    v->span = span_from(start);
    if (accept_punct("=")) s->exprs.push_back(expression());
    s->decl = v;
    return s;
  }

  StmtPtr while_stmt() {
    SourceSpan start = advance().span;
    auto s = new_stmt(StmtKind::While, start);
    expect_punct("(");
    s->exprs.push_back(expression());
    expect_punct(")");
    s->body.push_back(statement());
    s->span = span_from(start);
    return s;
  }

  StmtPtr for_stmt() {
    SourceSpan start = advance().span;
    auto s = new_stmt(StmtKind::For, start);
    expect_punct("(");
    StmtPtr init;
    if (!peek().is_punct(";")) {
      SourceSpan is = peek().span;
      if (is_var_decl_start()) {
        init = var_decl_stmt();
      } else {
        init = new_stmt(StmtKind::Expression, is);
        init->exprs.push_back(expression());
      }
      init->span = span_from(is);
    }
    expect_punct(";");
    ExprPtr cond = peek().is_punct(";") ? nullptr : expression();
    expect_punct(";");
    ExprPtr step = peek().is_punct(")") ? nullptr : expression();
    expect_punct(")");
    s->body.push_back(init);
    s->exprs.push_back(cond);
    s->exprs.push_back(step);
    s->body.push_back(statement());
    s->span = span_from(start);
    return s;
  }

  // ---- expressions ----

  ExprPtr expression() {
    ExprPtr lhs = binary(1);
    if (peek().is_punct("?")) unsupported("conditional expression");
    if (peek().kind == TokenKind::Punct && is_assign_op(peek().text)) {
      std::string op = advance().text;
      ExprPtr rhs = expression();
      auto e = new_expr(ExprKind::Assign, SourceSpan::merge(lhs->span, rhs->span));
      e->op = op;
      e->args = {lhs, rhs};
      return e;
    }
    return lhs;
  }

  ExprPtr binary(int min_prec) {
    ExprPtr lhs = unary();
    for (;;) {
      const Token& t = peek();
      if (t.kind != TokenKind::Punct) return lhs;
      int prec = binary_precedence(t.text);
      if (prec == 0 || prec < min_prec) return lhs;
      std::string op = advance().text;
      // `**` is right associative; everything else is left associative.
      ExprPtr rhs = binary(op == "**" ? prec : prec + 1);
      auto e = new_expr(ExprKind::Binary, SourceSpan::merge(lhs->span, rhs->span));
      e->op = op;
      e->args = {lhs, rhs};
      lhs = e;
    }
  }

  ExprPtr unary() {
    const Token& t = peek();
    SourceSpan start = t.span;
    if (t.is_punct("!") || t.is_punct("-") || t.is_punct("~") || t.is_punct("+")) {
      std::string op = advance().text;
      if (op == "+") unsupported_at(start, "unary '+'");
      ExprPtr operand = unary();
      auto e = new_expr(ExprKind::Unary, SourceSpan::merge(start, operand->span));
      e->op = op;
      e->args = {operand};
      return e;
    }
    if (t.is_punct("++") || t.is_punct("--")) {
      std::string op = advance().text;
      ExprPtr operand = unary();
      auto e = new_expr(ExprKind::IncDec, SourceSpan::merge(start, operand->span));
      e->op = op;
      e->prefix = true;
      e->args = {operand};
      return e;
    }
    if (t.is_keyword("delete")) unsupported("delete");
    if (t.is_keyword("new")) unsupported("new");
    return postfix(primary());
  }

  ExprPtr postfix(ExprPtr e) {
    for (;;) {
      const Token& t = peek();
      if (t.is_punct("[")) {
        advance();
        if (peek().is_punct("]")) fail_expected("index expression");
        ExprPtr idx = expression();
        expect_punct("]");
        auto n = new_expr(ExprKind::Index, span_from(e->span));
        n->args = {e, idx};
        e = n;
      } else if (t.is_punct(".")) {
        advance();
        const Token& m = peek();
        if (m.kind != TokenKind::Identifier) fail_expected("member name");
        if (m.text == "delegatecall" || m.text == "callcode") unsupported(m.text);
        advance();
        auto n = new_expr(ExprKind::Member, span_from(e->span));
        n->name = m.text;
        n->args = {e};
        e = n;
      } else if (t.is_punct("(")) {
        advance();
        auto n = new_expr(ExprKind::Call, e->span);
        n->args.push_back(e);
        if (!peek().is_punct(")")) {
          do {
            n->args.push_back(expression());
          } while (accept_punct(","));
        }
        expect_punct(")");
        n->span = span_from(e->span);
        e = n;
      } else if (t.is_punct("++") || t.is_punct("--")) {
        advance();
        auto n = new_expr(ExprKind::IncDec, span_from(e->span));
        n->op = t.text;
        n->args = {e};
        e = n;
      } else {
        return e;
      }
    }
  }

  ExprPtr primary() {
    const Token& t = peek();
    if (t.kind == TokenKind::Number) {
      advance();
      auto e = new_expr(ExprKind::NumberLiteral, t.span);
      e->text = t.text;
      e->value = parse_number(t.text);
      if (peek().kind == TokenKind::Identifier) {
        if (const BigInt* mult = unit_multiplier(peek().text)) {
          e->text += " " + advance().text;
          e->value *= *mult;
          e->span = span_from(t.span);
        }
      }
      return e;
    }
    if (t.is_keyword("true") || t.is_keyword("false")) {
      advance();
      auto e = new_expr(ExprKind::BoolLiteral, t.span);
      e->value = t.text == "true" ? 1 : 0;
      e->text = t.text;
      return e;
    }
    if (t.kind == TokenKind::String) {
      advance();
      auto e = new_expr(ExprKind::StringLiteral, t.span);
      e->text = t.text;
      return e;
    }
    if (t.is_punct("(")) {
      SourceSpan start = advance().span;
      if (peek().is_punct(")")) unsupported("empty tuple");
      ExprPtr inner = expression();
      if (peek().is_punct(",")) unsupported("tuple");
      expect_punct(")");
      // Parentheses are not a node; keep the wider span for diagnostics.
      (void)start;
      return inner;
    }
    if (t.kind == TokenKind::Identifier) {
      if (is_unsupported_type_name(t.text)) unsupported(t.text);
      advance();
      if (!is_elementary_type_name(t.text)) check_reserved(t);
      auto e = new_expr(ExprKind::Identifier, t.span);
      e->name = t.text;
      return e;
    }
    if (t.kind == TokenKind::Keyword) check_unsupported_keyword();
    fail_expected("expression");
  }

  std::vector<const Token*> toks_;
  std::vector<const Token*> docs_;
  const Token* pending_doc_ = nullptr;
  std::size_t pos_ = 0;
  int& next_id_;
  bool in_modifier_ = false;
};

void check_annotation_expr(const ExprPtr& e) {
  if (!e) return;
  switch (e->kind) {
    case ExprKind::Assign:
    case ExprKind::IncDec:
      raise(ErrorKind::AnnotationError, e->span, "annotations must be side-effect free");
    case ExprKind::Call:
      if (e->args[0]->kind != ExprKind::Identifier || e->args[0]->name != "sum") {
        raise(ErrorKind::AnnotationError, e->span,
              "function calls other than 'sum' are not allowed in annotations");
      }
      break;
    case ExprKind::StringLiteral:
      raise(ErrorKind::AnnotationError, e->span, "string literals are not allowed in annotations");
    default:
      break;
  }
  for (const auto& a : e->args) check_annotation_expr(a);
}

std::string_view scope_name(AnnotationScope s) {
  switch (s) {
    case AnnotationScope::Contract:
      return "a contract";
    case AnnotationScope::Function:
      return "a function";
    case AnnotationScope::Loop:
      return "a loop";
    case AnnotationScope::Statement:
      return "this declaration or statement";
  }
  return "?";
}

}  // namespace

CompilationUnit parse(const std::vector<Token>& tokens, int& next_id) {
  return Parser(tokens, next_id).unit();
}

CompilationUnit parse(const std::vector<Token>& tokens) {
  int next_id = 1;
  return parse(tokens, next_id);
}

CompilationUnit parse_sources(const std::vector<SourceFilePtr>& files) {
  CompilationUnit out;
  int next_id = 1;
  for (const auto& f : files) {
    CompilationUnit u = parse(tokenize(f), next_id);
    for (auto& c : u.contracts) out.contracts.push_back(std::move(c));
    out.files.push_back(f);
  }
  return out;
}

ExprPtr parse_expression(const std::vector<Token>& tokens, int& next_id) {
  return Parser(tokens, next_id).standalone_expression();
}

std::vector<Annotation> parse_annotations(const Token& doc, AnnotationScope scope, int& next_id) {
  std::vector<Annotation> out;
  const SourceFilePtr& file = doc.span.file;
  const std::string& src = file->text();
  std::size_t begin = doc.span.begin;
  std::size_t end = doc.span.end;
  if (src.compare(begin, 3, "/**") == 0) {
    begin += 3;
    end -= 2;
  }
  std::size_t at = src.find('@', begin);
  while (at != std::string::npos && at < end) {
    std::size_t next = src.find('@', at + 1);
    if (next == std::string::npos || next > end) next = end;
    std::size_t p = at + 1;
    auto word = [&]() {
      while (p < next && std::isspace(static_cast<unsigned char>(src[p]))) ++p;
      std::size_t s = p;
      while (p < next && (std::isalnum(static_cast<unsigned char>(src[p])) || src[p] == '_')) ++p;
      return src.substr(s, p - s);
    };
    std::string tag = word();
    if (tag == "notice") {
      std::size_t kind_begin = p;
      std::string kind_word = word();
      std::optional<AnnotationKind> kind;
      if (kind_word == "invariant") {
        kind = scope == AnnotationScope::Loop ? AnnotationKind::LoopInvariant
                                              : AnnotationKind::ContractInvariant;
      } else if (kind_word == "precondition") {
        kind = AnnotationKind::Precondition;
      } else if (kind_word == "postcondition") {
        kind = AnnotationKind::Postcondition;
      }
      if (kind) {
        while (kind_begin < p && std::isspace(static_cast<unsigned char>(src[kind_begin]))) ++kind_begin;
        SourceSpan span = SourceSpan::make(file, at, next);
        bool ok = (kind_word == "invariant" &&
                   (scope == AnnotationScope::Contract || scope == AnnotationScope::Loop)) ||
                  (kind_word != "invariant" && scope == AnnotationScope::Function);
        if (!ok) {
          raise(ErrorKind::ScopeError, span,
                "'" + kind_word + "' annotation cannot be attached to " + std::string(scope_name(scope)));
        }
        std::vector<Token> toks;
        try {
          toks = tokenize_range(file, p, next);
        } catch (const CompileError& e) {
          raise(ErrorKind::AnnotationError, e.span(), "malformed annotation: " + e.detail());
        }
        if (toks.size() == 1) raise(ErrorKind::AnnotationError, span, "annotation has no expression");
        Annotation a;
        a.kind = *kind;
        a.span = SourceSpan::merge(SourceSpan::make(file, at, p), toks[toks.size() - 2].span);
        a.text = src.substr(toks.front().span.begin,
                            toks[toks.size() - 2].span.end - toks.front().span.begin);
        try {
          a.expr = parse_expression(toks, next_id);
        } catch (const CompileError& e) {
          if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::UnsupportedFeature) {
            raise(ErrorKind::AnnotationError, e.span(), "malformed annotation: " + e.detail());
          }
          throw;
        }
        check_annotation_expr(a.expr);
        out.push_back(std::move(a));
      }
    }
    at = next < end ? next : std::string::npos;
  }
  return out;
}

}  // namespace scv::frontend

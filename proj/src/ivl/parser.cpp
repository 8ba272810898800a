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

#include <cctype>
#include <map>

namespace scv::ivl {

namespace {

enum class Tok { Ident, Number, BvNumber, Punct, Label, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  BigInt value;
  unsigned width = 0;
  std::size_t offset = 0;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool ident_char(char c) {
  return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) ||
         c == '@' || c == '.' || c == '#';
}

class Parser {
 public:
  explicit Parser(SourceFilePtr file) : file_(std::move(file)), src_(file_->text()) {
    advance();
  }

  Program program() {
    Program prog;
    while (cur_.kind != Tok::End) {
      if (accept_word("type")) {
        expect_word("address");
        expect(";");
      } else if (accept_word("var")) {
        VarDecl d = decl();
        expect(";");
        globals_[d.name] = d.type;
        prog.globals.push_back(std::move(d));
      } else if (accept_word("procedure")) {
        prog.procedures.push_back(procedure());
      } else {
        fail("expected 'var' or 'procedure'");
      }
    }
    return prog;
  }

 private:
  // ---- lexing -------------------------------------------------------
  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void advance() {
    skip_space();
    cur_ = Token{};
    cur_.offset = pos_;
    if (pos_ >= src_.size()) return;
    char c = src_[pos_];
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
      cur_.kind = Tok::Ident;
      cur_.text = src_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      cur_.value = BigInt(src_.substr(start, pos_ - start));
      cur_.kind = Tok::Number;
      if (src_.compare(pos_, 2, "bv") == 0) {
        pos_ += 2;
        std::size_t ws = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (ws == pos_) fail("bitvector literal without width");
        cur_.width = static_cast<unsigned>(std::stoul(src_.substr(ws, pos_ - ws)));
        cur_.kind = Tok::BvNumber;
      }
      return;
    }
    static const char* const kPuncts[] = {"==>", ":=", "==", "!=", "<=", ">=",
                                          "&&", "||", "!", "<", ">", "+", "-",
                                          "*", "(", ")", "[", "]", "{", "}",
                                          ",", ";", ":"};
    for (const char* p : kPuncts) {
      std::size_t n = std::char_traits<char>::length(p);
      if (src_.compare(pos_, n, p) == 0) {
        pos_ += n;
        cur_.kind = Tok::Punct;
        cur_.text = p;
        return;
      }
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  // Raw `[...]` label text directly after assert/invariant.
  std::optional<std::string> raw_label() {
    if (!(cur_.kind == Tok::Punct && cur_.text == "[")) return std::nullopt;
    std::size_t close = src_.find(']', pos_);
    if (close == std::string::npos) fail("unterminated label");
    std::string text = src_.substr(pos_, close - pos_);
    pos_ = close + 1;
    advance();
    return text;
  }

  [[noreturn]] void fail(const std::string& message) {
    raise(ErrorKind::ParseError, SourceSpan::make(file_, cur_.offset, cur_.offset),
          message);
  }

  bool is(const char* punct) const {
    return cur_.kind == Tok::Punct && cur_.text == punct;
  }
  bool is_word(const char* word) const {
    return cur_.kind == Tok::Ident && cur_.text == word;
  }
  bool accept(const char* punct) {
    if (!is(punct)) return false;
    advance();
    return true;
  }
  bool accept_word(const char* word) {
    if (!is_word(word)) return false;
    advance();
    return true;
  }
  void expect(const char* punct) {
    if (!accept(punct)) fail(std::string("expected '") + punct + "'");
  }
  void expect_word(const char* word) {
    if (!accept_word(word)) fail(std::string("expected '") + word + "'");
  }
  std::string ident() {
    if (cur_.kind != Tok::Ident) fail("expected identifier");
    std::string t = cur_.text;
    advance();
    return t;
  }
  unsigned small_number() {
    if (cur_.kind != Tok::Number) fail("expected number");
    auto v = static_cast<unsigned>(cur_.value);
    advance();
    return v;
  }

  // ---- declarations -------------------------------------------------
  TypePtr type() {
    if (accept("[")) {
      TypePtr key = type();
      expect("]");
      return Type::map(std::move(key), type());
    }
    std::string name = ident();
    if (name == "bool") return Type::boolean();
    if (name == "int") return Type::integer();
    if (name == "address") return Type::address();
    if (name.size() > 2 && name.compare(0, 2, "bv") == 0) {
      return Type::bitvec(static_cast<unsigned>(std::stoul(name.substr(2))));
    }
    fail("unknown type '" + name + "'");
  }

  VarDecl decl() {
    VarDecl d;
    d.name = ident();
    expect(":");
    d.type = type();
    return d;
  }

  Procedure procedure() {
    Procedure p;
    p.name = ident();
    p.function = p.name;
    locals_.clear();
    expect("(");
    if (!is(")")) {
      do {
        VarDecl d = decl();
        locals_[d.name] = d.type;
        p.params.push_back(std::move(d));
      } while (accept(","));
    }
    expect(")");
    while (accept_word("requires")) {
      p.entry_assumptions.push_back(expr());
      expect(";");
    }
    expect("{");
    while (accept_word("var")) {
      VarDecl d = decl();
      expect(";");
      locals_[d.name] = d.type;
      p.locals.push_back(std::move(d));
    }
    p.body = block_items("}");
    return p;
  }

  // ---- statements ---------------------------------------------------
  StmtPtr block_items(const char* close) {
    std::vector<StmtPtr> items;
    while (!accept(close)) items.push_back(statement());
    return seq(std::move(items));
  }

  DiagnosticLabel label_from(const std::string& raw, std::size_t offset) {
    DiagnosticLabel label;
    auto colon = raw.find(':');
    label.id = raw.substr(0, colon);
    label.category = Category::Assertion;
    if (colon != std::string::npos) {
      auto cat = parse_category(raw.substr(colon + 1));
      if (!cat) fail("unknown category '" + raw.substr(colon + 1) + "'");
      label.category = *cat;
    }
    label.span = SourceSpan::make(file_, offset, offset);
    label.message = std::string(category_name(label.category));
    return label;
  }

  StmtPtr statement() {
    std::size_t offset = cur_.offset;
    if (accept_word("assume")) {
      auto e = expr();
      expect(";");
      return assume(e);
    }
    if (is_word("assert")) {
      advance();
      auto raw = raw_label();
      auto e = expr();
      expect(";");
      DiagnosticLabel label =
          label_from(raw ? *raw : "A" + std::to_string(++anon_), offset);
      return assert_(e, label);
    }
    if (accept_word("havoc")) {
      std::vector<std::string> vars;
      do {
        vars.push_back(ident());
        lookup(vars.back());
      } while (accept(","));
      expect(";");
      return havoc(std::move(vars));
    }
    if (accept_word("if")) {
      expect("(");
      auto c = expr();
      expect(")");
      expect("{");
      auto t = block_items("}");
      StmtPtr e = skip();
      if (accept_word("else")) {
        if (is_word("if")) {
          e = statement();
        } else {
          expect("{");
          e = block_items("}");
        }
      }
      return if_(c, t, e);
    }
    if (accept_word("while")) {
      expect("(");
      auto c = expr();
      expect(")");
      std::vector<LoopInvariant> invs;
      for (;;) {
        std::size_t inv_offset = cur_.offset;
        bool is_free = accept_word("free");
        if (!is_word("invariant")) {
          if (is_free) fail("expected 'invariant'");
          break;
        }
        advance();
        LoopInvariant inv;
        inv.free = is_free;
        auto raw = raw_label();
        inv.id = raw ? *raw : (is_free ? "" : "I" + std::to_string(++anon_));
        inv.expr = expr();
        inv.span = SourceSpan::make(file_, inv_offset, inv_offset);
        expect(";");
        invs.push_back(std::move(inv));
      }
      expect("{");
      auto body = block_items("}");
      return while_(c, std::move(invs), body);
    }
    if (accept("{")) return block_items("}");
    std::string target = ident();
    lookup(target);
    expect(":=");
    auto e = expr();
    expect(";");
    return assign(target, e);
  }

  // ---- expressions --------------------------------------------------
  ExprPtr expr() { return implication(); }

  ExprPtr implication() {
    auto lhs = disjunction();
    if (accept("==>")) return implies(lhs, implication());
    return lhs;
  }

  ExprPtr disjunction() {
    auto lhs = conjunction();
    while (accept("||")) lhs = or_(lhs, conjunction());
    return lhs;
  }

  ExprPtr conjunction() {
    auto lhs = equality();
    while (accept("&&")) lhs = and_(lhs, equality());
    return lhs;
  }

  ExprPtr equality() {
    auto lhs = relational();
    for (;;) {
      if (accept("==")) {
        lhs = eq(lhs, relational());
      } else if (accept("!=")) {
        lhs = neq(lhs, relational());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr relational() {
    auto lhs = additive();
    if (accept("<")) return lt(lhs, additive());
    if (accept("<=")) return le(lhs, additive());
    if (accept(">")) return gt(lhs, additive());
    if (accept(">=")) return ge(lhs, additive());
    return lhs;
  }

  ExprPtr additive() {
    auto lhs = multiplicative();
    for (;;) {
      if (accept("+")) {
        lhs = add(lhs, multiplicative());
      } else if (accept("-")) {
        lhs = sub(lhs, multiplicative());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr multiplicative() {
    auto lhs = unary();
    for (;;) {
      if (accept("*")) {
        lhs = mul(lhs, unary());
      } else if (accept_word("div")) {
        lhs = div(lhs, unary());
      } else if (accept_word("mod")) {
        lhs = mod(lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (accept("!")) return not_(unary());
    if (accept("-")) return neg(unary());
    return postfix(primary());
  }

  ExprPtr postfix(ExprPtr base) {
    while (accept("[")) {
      auto key = expr();
      if (accept(":=")) {
        auto value = expr();
        expect("]");
        base = store(base, key, value);
      } else {
        expect("]");
        base = select(base, key);
      }
    }
    return base;
  }

  std::vector<ExprPtr> call_args() {
    std::vector<ExprPtr> args;
    expect("(");
    if (!is(")")) {
      do {
        args.push_back(expr());
      } while (accept(","));
    }
    expect(")");
    return args;
  }

  ExprPtr primary() {
    if (cur_.kind == Tok::Number) {
      auto v = cur_.value;
      advance();
      return int_const(v);
    }
    if (cur_.kind == Tok::BvNumber) {
      auto v = cur_.value;
      auto w = cur_.width;
      advance();
      return bv_const(v, w);
    }
    if (accept("(")) {
      if (accept_word("if")) {
        auto c = expr();
        expect_word("then");
        auto t = expr();
        expect_word("else");
        auto e = expr();
        expect(")");
        return ite(c, t, e);
      }
      auto e = expr();
      expect(")");
      return e;
    }
    std::string name = ident();
    if (name == "true") return true_expr();
    if (name == "false") return false_expr();
    if (name == "const") {
      expect("[");
      TypePtr t = type();
      expect("]");
      auto args = call_args();
      return const_map(t, args.at(0));
    }
    if (name == "int2bv" || name == "zext" || name == "sext" || name == "extract") {
      expect("[");
      unsigned p0 = small_number();
      unsigned p1 = 0;
      if (name == "extract") {
        expect(":");
        p1 = small_number();
      }
      expect("]");
      auto args = call_args();
      static const std::map<std::string, Op> kOps = {
          {"int2bv", Op::NatToBv}, {"zext", Op::ZeroExt},
          {"sext", Op::SignExt}, {"extract", Op::Extract}};
      return make(kOps.at(name), std::move(args), p0, p1);
    }
    if (is("(")) {
      auto args = call_args();
      if (name == "neg") return neg(args.at(0));
      if (name == "bv2nat") return bv_to_nat(args.at(0));
      static const std::map<std::string, Op> kBvOps = {
          {"bvneg", Op::BvNeg}, {"bvadd", Op::BvAdd}, {"bvsub", Op::BvSub},
          {"bvmul", Op::BvMul}, {"bvudiv", Op::BvUdiv}, {"bvsdiv", Op::BvSdiv},
          {"bvurem", Op::BvUrem}, {"bvsrem", Op::BvSrem}, {"bvnot", Op::BvNot},
          {"bvand", Op::BvAnd}, {"bvor", Op::BvOr}, {"bvxor", Op::BvXor},
          {"bvshl", Op::BvShl}, {"bvlshr", Op::BvLshr}, {"bvashr", Op::BvAshr},
          {"bvult", Op::BvUlt}, {"bvule", Op::BvUle}, {"bvslt", Op::BvSlt},
          {"bvsle", Op::BvSle}};
      auto it = kBvOps.find(name);
      if (it == kBvOps.end()) fail("unknown function '" + name + "'");
      return make(it->second, std::move(args));
    }
    return lookup(name);
  }

  ExprPtr lookup(const std::string& name) {
    if (auto it = locals_.find(name); it != locals_.end()) return var(name, it->second);
    if (auto it = globals_.find(name); it != globals_.end()) return var(name, it->second);
    fail("undeclared variable '" + name + "'");
  }

  SourceFilePtr file_;
  const std::string& src_;
  std::size_t pos_ = 0;
  Token cur_;
  std::map<std::string, TypePtr> globals_;
  std::map<std::string, TypePtr> locals_;
  unsigned anon_ = 0;
};

}  // namespace

Program parse_program(const std::string& text, const std::string& path) {
  auto file = std::make_shared<SourceFile>(path, text);
  Parser parser(file);
  return parser.program();
}

}  // namespace scv::ivl

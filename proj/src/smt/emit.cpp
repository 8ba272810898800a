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

#include "scv/smt/emit.hpp"

#include "scv/support/source.hpp"

#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace scv::smt {

using namespace scv::ivl;

namespace {

bool is_bv_node(Op op) { return op >= Op::BvNeg && op <= Op::Extract; }

struct Footprint {
  bool arrays = false;
  bool address = false;
  bool ints = false;
  bool nonlinear = false;
  bool bv = false;

  void type(const Type& t) {
    switch (t.kind) {
      case TypeKind::Int: ints = true; break;
      case TypeKind::BitVec: bv = true; break;
      case TypeKind::Address: address = true; break;
      case TypeKind::Map:
        arrays = true;
        type(*t.key);
        type(*t.value);
        break;
      case TypeKind::Bool: break;
    }
  }
};

void scan(const ExprPtr& e, Footprint& fp, std::unordered_set<const Expr*>& seen) {
  if (!seen.insert(e.get()).second) return;
  if (e->type) fp.type(*e->type);
  switch (e->op) {
    case Op::Mul:
      if (!e->args[0]->is_const() && !e->args[1]->is_const()) fp.nonlinear = true;
      break;
    case Op::Div:
    case Op::Mod:
      if (!e->args[1]->is_const()) fp.nonlinear = true;
      break;
    case Op::BvToNat:
    case Op::NatToBv:
      fp.ints = true;
      fp.bv = true;
      break;
    default: break;
  }
  for (const auto& a : e->args) scan(a, fp, seen);
}

Footprint footprint(const vcgen::VerificationCondition& vc) {
  Footprint fp;
  for (const auto& s : vc.symbols) fp.type(*s.type);
  std::unordered_set<const Expr*> seen;
  scan(vc.formula, fp, seen);
  return fp;
}

std::string quote(const std::string& name) { return "|" + name + "|"; }

class Writer {
 public:
  Writer(ArithMode mode, std::ostringstream& out) : mode_(mode), out_(out) {}

  void count(const ExprPtr& e) {
    if (++refs_[e.get()] > 1) return;
    for (const auto& a : e->args) count(a);
  }

  // Post-order: shared compound nodes become definitions before use.
  void define(const ExprPtr& e) {
    if (e->args.empty() || names_.count(e.get()) || visited_.count(e.get())) return;
    visited_.insert(e.get());
    for (const auto& a : e->args) define(a);
    if (refs_[e.get()] > 1) {
      std::string name = "%d" + std::to_string(names_.size());
      out_ << "(define-fun " << quote(name) << " () " << sort_name(*e->type) << ' '
           << term(e) << ")\n";
      names_.emplace(e.get(), quote(name));
    }
  }

  std::string ref(const ExprPtr& e) {
    if (auto it = names_.find(e.get()); it != names_.end()) return it->second;
    return term(e);
  }

 private:
  std::string apply(const char* head, const ExprPtr& e) {
    std::string s = "(";
    s += head;
    for (const auto& a : e->args) {
      s += ' ';
      s += ref(a);
    }
    s += ')';
    return s;
  }

  std::string indexed(const std::string& head, const ExprPtr& e) {
    return "((_ " + head + ") " + ref(e->args[0]) + ")";
  }

  static std::string integer(const BigInt& v) {
    if (v < 0) return "(- " + to_decimal(-v) + ")";
    return to_decimal(v);
  }

  std::string term(const ExprPtr& e) {
    if (is_bv_node(e->op) && mode_ != ArithMode::Bv) {
      raise(ErrorKind::EmitError, {},
            "operation '" + op_name(e->op) + "' has no encoding in " +
                std::string(mode_name(mode_)) + " mode");
    }
    if (e->op == Op::BvConst && mode_ != ArithMode::Bv) {
      raise(ErrorKind::EmitError, {}, "bitvector constant in " +
                                          std::string(mode_name(mode_)) + " mode");
    }
    switch (e->op) {
      case Op::BoolConst: return e->value != 0 ? "true" : "false";
      case Op::IntConst: return integer(e->value);
      case Op::BvConst:
        return "(_ bv" + to_decimal(e->value) + " " + std::to_string(e->type->width) + ")";
      case Op::Var: return quote(e->name);
      case Op::Not: return apply("not", e);
      case Op::And: return apply("and", e);
      case Op::Or: return apply("or", e);
      case Op::Implies: return apply("=>", e);
      case Op::Ite: return apply("ite", e);
      case Op::Eq: return apply("=", e);
      case Op::Neg: return apply("-", e);
      case Op::Add: return apply("+", e);
      case Op::Sub: return apply("-", e);
      case Op::Mul: return apply("*", e);
      case Op::Div: return apply("div", e);
      case Op::Mod: return apply("mod", e);
      case Op::Lt: return apply("<", e);
      case Op::Le: return apply("<=", e);
      case Op::Gt: return apply(">", e);
      case Op::Ge: return apply(">=", e);
      case Op::BvToNat: return apply("bv2nat", e);
      case Op::NatToBv: return indexed("int2bv " + std::to_string(e->p0), e);
      case Op::ZeroExt: return indexed("zero_extend " + std::to_string(e->p0), e);
      case Op::SignExt: return indexed("sign_extend " + std::to_string(e->p0), e);
      case Op::Extract:
        return indexed("extract " + std::to_string(e->p0) + " " + std::to_string(e->p1), e);
      case Op::Select: return apply("select", e);
      case Op::Store: return apply("store", e);
      case Op::ConstMap:
        return "((as const " + sort_name(*e->type) + ") " + ref(e->args[0]) + ")";
      default: return apply(op_name(e->op).c_str(), e);  // remaining bv ops
    }
  }

  ArithMode mode_;
  std::ostringstream& out_;
  std::unordered_map<const Expr*, unsigned> refs_;
  std::unordered_map<const Expr*, std::string> names_;
  std::unordered_set<const Expr*> visited_;
};

}  // namespace

std::string sort_name(const Type& type) {
  switch (type.kind) {
    case TypeKind::Bool: return "Bool";
    case TypeKind::Int: return "Int";
    case TypeKind::BitVec: return "(_ BitVec " + std::to_string(type.width) + ")";
    case TypeKind::Address: return "Address";
    case TypeKind::Map:
      return "(Array " + sort_name(*type.key) + " " + sort_name(*type.value) + ")";
  }
  return "?";
}

std::string select_logic(const vcgen::VerificationCondition& vc) {
  Footprint fp = footprint(vc);
  if (fp.ints && fp.bv) return "ALL";
  // QF_AUFBV admits only bitvector-indexed arrays in some solvers.
  if (fp.bv && fp.arrays && fp.address) return "ALL";
  std::string logic = "QF_";
  if (fp.arrays) logic += "A";
  if (fp.address) logic += "UF";
  if (fp.bv) {
    logic += "BV";
  } else {
    logic += fp.nonlinear ? "NIA" : "LIA";
  }
  return logic;
}

std::string emit_smtlib(const vcgen::VerificationCondition& vc, ArithMode mode,
                        const EmitOptions& options) {
  std::ostringstream out;
  out << "; " << vc.procedure << " :: " << vc.label.id << " ("
      << category_name(vc.label.category) << ")\n";
  if (options.produce_models) out << "(set-option :produce-models true)\n";
  out << "(set-logic " << (options.logic ? *options.logic : select_logic(vc)) << ")\n";
  Footprint fp = footprint(vc);
  if (fp.address) out << "(declare-sort Address 0)\n";
  for (const auto& s : vc.symbols) {
    out << "(declare-fun " << quote(s.name) << " () " << sort_name(*s.type) << ")\n";
  }
  Writer writer(mode, out);
  writer.count(vc.formula);
  writer.define(vc.formula);
  out << "(assert " << writer.ref(vc.formula) << ")\n";
  out << "(check-sat)\n";
  if (options.produce_models) out << "(get-model)\n";
  out << "(exit)\n";
  return out.str();
}

}  // namespace scv::smt

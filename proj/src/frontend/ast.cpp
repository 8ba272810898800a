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

#include "scv/frontend/ast.hpp"

#include <algorithm>
#include <cctype>

namespace scv::frontend {

namespace {

SolType of_kind(SolType::Kind k) {
  SolType t;
  t.kind = k;
  return t;
}

SolTypePtr make(SolType t) { return std::make_shared<const SolType>(std::move(t)); }

}  // namespace

bool is_elementary_type_name(std::string_view s) {
  if (s == "bool" || s == "address" || s == "int" || s == "uint") return true;
  std::string_view digits;
  if (s.substr(0, 4) == "uint") {
    digits = s.substr(4);
  } else if (s.substr(0, 3) == "int") {
    digits = s.substr(3);
  } else {
    return false;
  }
  if (digits.empty() || digits.size() > 3 || digits[0] == '0') return false;
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return false;
  int n = std::stoi(std::string(digits));
  return n >= 8 && n <= 256 && n % 8 == 0;
}

SolTypePtr SolType::boolean() {
  static const SolTypePtr t = make(of_kind(Kind::Bool));
  return t;
}

SolTypePtr SolType::integer(bool is_signed, unsigned bits) {
  SolType t;
  t.kind = Kind::Int;
  t.is_signed = is_signed;
  t.bits = bits;
  return make(std::move(t));
}

SolTypePtr SolType::address() {
  static const SolTypePtr t = make(of_kind(Kind::Address));
  return t;
}

SolTypePtr SolType::mapping(SolTypePtr key, SolTypePtr value) {
  SolType t;
  t.kind = Kind::Mapping;
  t.key = std::move(key);
  t.value = std::move(value);
  return make(std::move(t));
}

SolTypePtr SolType::array(SolTypePtr element) {
  SolType t;
  t.kind = Kind::Array;
  t.value = std::move(element);
  return make(std::move(t));
}

SolTypePtr SolType::contract_type(std::string name) {
  SolType t;
  t.kind = Kind::Contract;
  t.contract = std::move(name);
  return make(std::move(t));
}

SolTypePtr SolType::literal() {
  static const SolTypePtr t = make(of_kind(Kind::Literal));
  return t;
}

SolTypePtr SolType::void_type() {
  static const SolTypePtr t = make(of_kind(Kind::Void));
  return t;
}

bool same_type(const SolType& a, const SolType& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case SolType::Kind::Int:
      return a.is_signed == b.is_signed && a.bits == b.bits;
    case SolType::Kind::Mapping:
      return same_type(*a.key, *b.key) && same_type(*a.value, *b.value);
    case SolType::Kind::Array:
      return same_type(*a.value, *b.value);
    case SolType::Kind::Contract:
      return a.contract == b.contract;
    default:
      return true;
  }
}

std::string to_string(const SolType& t) {
  switch (t.kind) {
    case SolType::Kind::Bool:
      return "bool";
    case SolType::Kind::Int:
      return std::string(t.is_signed ? "int" : "uint") + (t.bits ? std::to_string(t.bits) : "");
    case SolType::Kind::Address:
      return "address";
    case SolType::Kind::Mapping:
      return "mapping(" + to_string(*t.key) + " => " + to_string(*t.value) + ")";
    case SolType::Kind::Array:
      return to_string(*t.value) + "[]";
    case SolType::Kind::Contract:
      return t.contract;
    case SolType::Kind::Literal:
      return "literal";
    case SolType::Kind::Void:
      return "void";
  }
  return "?";
}

std::string_view annotation_kind_name(AnnotationKind kind) {
  switch (kind) {
    case AnnotationKind::ContractInvariant:
      return "invariant";
    case AnnotationKind::Precondition:
      return "precondition";
    case AnnotationKind::Postcondition:
      return "postcondition";
    case AnnotationKind::LoopInvariant:
      return "loop-invariant";
  }
  return "?";
}

std::string FunctionDef::display_name() const {
  if (is_fallback) return "fallback";
  if (is_constructor) return "constructor";
  return name;
}

const FunctionDef* ContractDef::constructor() const {
  for (const auto& f : functions)
    if (f->is_constructor) return f.get();
  return nullptr;
}

const FunctionDef* ContractDef::fallback() const {
  for (const auto& f : functions)
    if (f->is_fallback) return f.get();
  return nullptr;
}

const FunctionDef* ContractDef::find_function(std::string_view n) const {
  for (const auto& f : functions)
    if (!f->is_constructor && !f->is_fallback && f->name == n) return f.get();
  return nullptr;
}

const VarDecl* ContractDef::find_state_var(std::string_view n) const {
  for (const auto& v : state_vars)
    if (v->name == n) return v.get();
  return nullptr;
}

const ModifierDef* ContractDef::find_modifier(std::string_view n) const {
  for (const auto& m : modifiers)
    if (m->name == n) return m.get();
  return nullptr;
}

const ContractDef* CompilationUnit::find_contract(std::string_view n) const {
  for (const auto& c : contracts)
    if (c->name == n) return c.get();
  return nullptr;
}

}  // namespace scv::frontend

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

#include "scv/ivl/type.hpp"

namespace scv::ivl {

namespace {
TypePtr make_type(TypeKind kind, unsigned width = 0, TypePtr key = nullptr,
                  TypePtr value = nullptr) {
  auto t = std::make_shared<Type>();
  t->kind = kind;
  t->width = width;
  t->key = std::move(key);
  t->value = std::move(value);
  return t;
}
}  // namespace

TypePtr Type::boolean() {
  static const TypePtr t = make_type(TypeKind::Bool);
  return t;
}

TypePtr Type::integer() {
  static const TypePtr t = make_type(TypeKind::Int);
  return t;
}

TypePtr Type::bitvec(unsigned width) {
  return make_type(TypeKind::BitVec, width);
}

TypePtr Type::address() {
  static const TypePtr t = make_type(TypeKind::Address);
  return t;
}

TypePtr Type::map(TypePtr key, TypePtr value) {
  return make_type(TypeKind::Map, 0, std::move(key), std::move(value));
}

bool same_type(const Type& a, const Type& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case TypeKind::BitVec: return a.width == b.width;
    case TypeKind::Map:
      return same_type(*a.key, *b.key) && same_type(*a.value, *b.value);
    default: return true;
  }
}

std::string to_string(const Type& type) {
  switch (type.kind) {
    case TypeKind::Bool: return "bool";
    case TypeKind::Int: return "int";
    case TypeKind::BitVec: return "bv" + std::to_string(type.width);
    case TypeKind::Address: return "address";
    case TypeKind::Map:
      return "[" + to_string(*type.key) + "]" + to_string(*type.value);
  }
  return "?";
}

}  // namespace scv::ivl

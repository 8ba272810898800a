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

#pragma once

#include <memory>
#include <string>

namespace scv::ivl {

enum class TypeKind { Bool, Int, BitVec, Address, Map };

struct Type;
using TypePtr = std::shared_ptr<const Type>;

/// IVL types. `Address` is an uninterpreted sort; maps are total.
struct Type {
  TypeKind kind = TypeKind::Bool;
  unsigned width = 0;  // BitVec only
  TypePtr key;         // Map only
  TypePtr value;       // Map only

  static TypePtr boolean();
  static TypePtr integer();
  static TypePtr bitvec(unsigned width);
  static TypePtr address();
  static TypePtr map(TypePtr key, TypePtr value);

  bool is_bool() const { return kind == TypeKind::Bool; }
  bool is_int() const { return kind == TypeKind::Int; }
  bool is_bv() const { return kind == TypeKind::BitVec; }
  bool is_map() const { return kind == TypeKind::Map; }
};

bool same_type(const Type& a, const Type& b);
inline bool same_type(const TypePtr& a, const TypePtr& b) {
  return a && b && same_type(*a, *b);
}

/// Boogie-style spelling: bool, int, bv8, address, [address]int.
std::string to_string(const Type& type);

}  // namespace scv::ivl

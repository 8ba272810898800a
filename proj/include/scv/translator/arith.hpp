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

#include "scv/frontend/ast.hpp"
#include "scv/ivl/expr.hpp"
#include "scv/support/mode.hpp"
#include "scv/support/source.hpp"

#include <string>
#include <vector>

namespace scv::translator {

/// A translated expression. `value` is pure; `assumes` are the
/// expected-failure and range facts that must hold where it is read.
struct EncodedExpr {
  ivl::ExprPtr value;
  ivl::ExprPtr overflow = ivl::false_expr();  // only non-false in mod_overflow
  SourceSpan overflow_span;                   // first operation that may overflow
  std::vector<ivl::ExprPtr> assumes;

  static EncodedExpr of(ivl::ExprPtr v) {
    EncodedExpr e;
    e.value = std::move(v);
    return e;
  }
};

ivl::TypePtr ivl_type(const frontend::SolType& type, ArithMode mode);

/// `lo <= v <= hi` for integers represented as mathematical integers.
ivl::ExprPtr in_range(const ivl::ExprPtr& v, unsigned bits, bool is_signed);

/// Reduces an exact integer into the range of the given type.
ivl::ExprPtr wrap(const ivl::ExprPtr& exact, unsigned bits, bool is_signed);

/// Integer value of a mode-encoded integer (identity outside bv mode).
ivl::ExprPtr to_exact(const ivl::ExprPtr& v, const frontend::SolType& type, ArithMode mode);

/// Arithmetic and bitwise operators: + - * / % ** & | ^ << >>. `rhs_type`
/// matters only for shifts.
EncodedExpr encode_arith(const std::string& op, const EncodedExpr& lhs, const EncodedExpr& rhs,
                         const frontend::SolType& type, ArithMode mode,
                         const SourceSpan& span = {},
                         const frontend::SolType* rhs_type = nullptr);

/// Comparison operators: == != < <= > >=.
ivl::ExprPtr encode_compare(const std::string& op, const ivl::ExprPtr& lhs,
                            const ivl::ExprPtr& rhs, const frontend::SolType& type,
                            ArithMode mode);

ivl::ExprPtr encode_conversion(const ivl::ExprPtr& v, const frontend::SolType& from,
                               const frontend::SolType& to, ArithMode mode);

ivl::ExprPtr encode_literal(const BigInt& value, const frontend::SolType& type, ArithMode mode);

}  // namespace scv::translator

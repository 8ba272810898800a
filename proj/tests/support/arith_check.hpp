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

// Exhaustive comparison of the mod and bv encodings of + - * / % over
// every operand pair of one width.

#include "scv/frontend/ast.hpp"
#include "scv/ivl/interpreter.hpp"
#include "scv/translator/arith.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace scv::testing {

/// Returns a description of every disagreement (empty when the encodings
/// agree). Division by zero is skipped: both encodings assume it away.
inline std::vector<std::string> mod_bv_mismatches(unsigned bits) {
  using translator::EncodedExpr;
  std::vector<std::string> out;
  const BigInt span = BigInt(1) << bits;
  for (bool is_signed : {false, true}) {
    auto type = frontend::SolType::integer(is_signed, bits);
    auto mod_t = translator::ivl_type(*type, ArithMode::Mod);
    auto bv_t = translator::ivl_type(*type, ArithMode::Bv);
    auto ma = EncodedExpr::of(ivl::var("a", mod_t)), mb = EncodedExpr::of(ivl::var("b", mod_t));
    auto ba = EncodedExpr::of(ivl::var("a", bv_t)), bb = EncodedExpr::of(ivl::var("b", bv_t));
    for (const char* op : {"+", "-", "*", "/", "%"}) {
      auto m = translator::encode_arith(op, ma, mb, *type, ArithMode::Mod);
      auto b = translator::encode_arith(op, ba, bb, *type, ArithMode::Bv);
      auto b_exact = translator::to_exact(b.value, *type, ArithMode::Bv);
      BigInt lo = is_signed ? -(span / 2) : BigInt(0);
      for (BigInt x = lo; x < lo + span; ++x) {
        for (BigInt y = lo; y < lo + span; ++y) {
          if (y == 0 && (op[0] == '/' || op[0] == '%')) continue;
          ivl::Env me{{"a", ivl::Value::of(x)}, {"b", ivl::Value::of(y)}};
          ivl::Env be{{"a", ivl::Value::of(x < 0 ? x + span : x)},
                      {"b", ivl::Value::of(y < 0 ? y + span : y)}};
          BigInt mv = ivl::evaluate(m.value, me).scalar;
          BigInt bv = ivl::evaluate(b_exact, be).scalar;
          if (mv != bv) {
            std::ostringstream s;
            s << (is_signed ? "int" : "uint") << bits << " " << x << " " << op << " " << y
              << ": mod " << mv << ", bv " << bv;
            out.push_back(s.str());
            if (out.size() > 20) return out;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace scv::testing

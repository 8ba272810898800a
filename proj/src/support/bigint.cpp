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

#include "scv/support/bigint.hpp"

namespace scv {

BigInt pow2(unsigned bits) {
  BigInt one = 1;
  return one << bits;
}

BigInt int_min(unsigned bits, bool is_signed) {
  return is_signed ? BigInt(-pow2(bits - 1)) : BigInt(0);
}

BigInt int_max(unsigned bits, bool is_signed) {
  return is_signed ? BigInt(pow2(bits - 1) - 1) : BigInt(pow2(bits) - 1);
}

BigInt euclid_mod(const BigInt& a, const BigInt& b) {
  BigInt m = abs(b);
  BigInt r = a % m;  // sign follows a
  if (r < 0) r += m;
  return r;
}

BigInt euclid_div(const BigInt& a, const BigInt& b) {
  return (a - euclid_mod(a, b)) / b;
}

BigInt trunc_div(const BigInt& a, const BigInt& b) { return a / b; }

BigInt trunc_rem(const BigInt& a, const BigInt& b) { return a % b; }

BigInt wrap_to(const BigInt& value, unsigned bits, bool is_signed) {
  BigInt m = pow2(bits);
  if (!is_signed) return euclid_mod(value, m);
  BigInt half = pow2(bits - 1);
  return euclid_mod(value + half, m) - half;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace scv

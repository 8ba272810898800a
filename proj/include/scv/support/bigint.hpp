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

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace scv {

using BigInt = boost::multiprecision::cpp_int;

/// 2^bits.
BigInt pow2(unsigned bits);

/// Inclusive range of an N-bit integer type.
BigInt int_min(unsigned bits, bool is_signed);
BigInt int_max(unsigned bits, bool is_signed);

/// Floor division and modulo for positive divisors (SMT-LIB div/mod when
/// the divisor is positive; Euclidean in general).
BigInt euclid_div(const BigInt& a, const BigInt& b);
BigInt euclid_mod(const BigInt& a, const BigInt& b);

/// Division truncating toward zero and the matching remainder.
BigInt trunc_div(const BigInt& a, const BigInt& b);
BigInt trunc_rem(const BigInt& a, const BigInt& b);

/// Reduce to the N-bit two's complement (signed) or unsigned range.
BigInt wrap_to(const BigInt& value, unsigned bits, bool is_signed);

std::string to_decimal(const BigInt& value);

}  // namespace scv

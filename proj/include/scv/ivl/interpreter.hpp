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

#include "scv/ivl/stmt.hpp"
#include "scv/support/bigint.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>

namespace scv::ivl {

struct MapData;

/// A concrete IVL value. Scalars (bool as 0/1, addresses as indices,
/// bitvectors as unsigned values) live in `scalar`; maps in `map`.
struct Value {
  BigInt scalar;
  std::shared_ptr<const MapData> map;

  static Value of(const BigInt& v) { return Value{v, nullptr}; }
};

/// Maps are a base plus explicit writes. A constant base returns
/// `fallback`; a symbolic base (id >= 0) is resolved lazily per key.
struct MapData {
  TypePtr type;
  long base = -1;
  Value fallback;
  std::map<BigInt, Value> writes;
};

using Env = std::map<std::string, Value>;

/// Evaluates a closed expression over a fully concrete environment.
/// Throws CompileError(DomainTooLarge) if a variable is unbound.
Value evaluate(const ExprPtr& e, const Env& env);

/// Finite domain for exhaustive execution.
struct Domain {
  BigInt int_lo = -8;
  BigInt int_hi = 15;
  unsigned addresses = 2;
  unsigned max_bv_width = 4;
  /// When non-zero, wider bitvectors only take the values 0..n-1 instead
  /// of raising DomainTooLarge. The run is then a sample, not a proof.
  unsigned wide_bv_values = 0;
  unsigned loop_bound = 3;
  std::size_t max_runs = 2'000'000;
};

enum class OracleVerdict { NoFailure, Failure, Inconclusive };

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::NoFailure;
  std::string first_label;
  std::set<std::string> failed_labels;
  std::size_t runs = 0;
};

/// Enumerates every nondeterministic choice (initial values, havocs,
/// map entries) of `procedure` within `domain`. Each path stops at its
/// first failing assert. Paths that exceed the loop bound or divide by
/// zero count as inconclusive. Throws CompileError(DomainTooLarge) once
/// `domain.max_runs` paths have been explored without finishing.
OracleResult oracle_execute(const Program& program, const std::string& procedure,
                            const Domain& domain = {});

}  // namespace scv::ivl

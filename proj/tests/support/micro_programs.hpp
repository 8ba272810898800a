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

// Small programs over 4-bit integers, small enough for the concrete
// oracle to enumerate, and a checker that compares its verdicts with
// the solver's.

#include "scv/frontend/resolver.hpp"
#include "scv/ivl/interpreter.hpp"
#include "scv/smt/solver.hpp"
#include "scv/translator/translator.hpp"
#include "scv/vcgen/vcgen.hpp"

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace scv::testing {

struct MicroProgram {
  std::string name;
  std::string source;
};

inline std::vector<MicroProgram> micro_programs() {
  return {
      {"add_unguarded", R"(
contract C {
    uint x;
    function f(uint a) public { x = a + 1; assert(x > a); }
})"},
      {"add_guarded", R"(
contract C {
    uint x;
    function f(uint a) public { require(a < 15); x = a + 1; assert(x > a); }
})"},
      {"sub_guarded", R"(
contract C {
    function f(uint a, uint b) public returns (uint) { require(a >= b); return a - b; }
})"},
      {"sub_unguarded", R"(
contract C {
    uint x;
    function f(uint a, uint b) public { x = a - b; }
})"},
      {"mul_roundtrip", R"(
contract C {
    function f(uint a, uint b) public {
        uint c = a * b;
        require(a != 0);
        assert(c / a == b);
    }
})"},
      {"div_mod_identity", R"(
contract C {
    function f(uint a, uint b) public {
        require(b != 0);
        assert((a / b) * b + a % b == a);
    }
})"},
      {"signed_div_identity", R"(
contract C {
    function f(int a, int b) public {
        require(b != 0);
        int q = a / b;
        assert(q * b + a % b == a);
    }
})"},
      {"signed_negation", R"(
contract C {
    function f(int a) public { int b = -a; assert(b != a || a == 0); }
})"},
      {"signed_decrement", R"(
contract C {
    function f(int a) public { require(a < 0); assert(a - 1 < a); }
})"},
      {"map_update", R"(
contract C {
    mapping(address => uint) m;
    function f(uint v) public { m[msg.sender] = v; assert(m[msg.sender] == v); }
})"},
      {"map_two_keys", R"(
contract C {
    mapping(address => uint) m;
    function f(uint v) public {
        m[msg.sender] = v;
        m[this] = 3;
        assert(m[msg.sender] == v);
    }
})"},
      {"invariant_bounded", R"(
/** @notice invariant x <= 10 */
contract C {
    uint x;
    function inc() public { if (x < 10) { x = x + 1; } }
})"},
      {"invariant_broken", R"(
/** @notice invariant x <= 10 */
contract C {
    uint x;
    function inc() public { x = x + 1; }
})"},
      {"invariant_even", R"(
/** @notice invariant x % 2 == 0 */
contract C {
    uint x;
    function add2() public { x = x + 2; }
})"},
      {"postcondition_double", R"(
contract C {
    /** @notice postcondition r >= a */
    function f(uint a) public returns (uint r) { r = a + a; }
})"},
      {"inline_call", R"(
contract C {
    function g(uint a) internal returns (uint) { return a * 2; }
    function f(uint a) public { require(a < 8); assert(g(a) >= a); }
})"},
      {"spec_call", R"(
contract C {
    /** @notice precondition a < 8
        @notice postcondition r == a * 2 */
    function g(uint a) internal returns (uint r) { r = a * 2; }
    function ok(uint a) public { require(a < 4); assert(g(a) < 8); }
    function bad(uint a) public { uint b = g(a); }
})"},
      {"branch_distance", R"(
contract C {
    function f(uint a) public {
        uint r;
        if (a > 5) { r = a - 5; } else { r = 5 - a; }
        assert(r <= 5);
    }
})"},
      {"bool_logic", R"(
contract C {
    bool flag;
    function set(bool b) public { flag = b && !flag; assert(!(flag && !b)); }
})"},
      {"short_circuit_div", R"(
contract C {
    function f(uint a, uint b) public { require(b != 0 && a / b > 1); assert(a > b); }
})"},
      {"modulo_bound", R"(
contract C {
    function f(uint a, uint b) public { require(b > 0); assert(a % b < b); }
})"},
      {"require_false", R"(
contract C {
    function f() public { require(false); assert(false); }
})"},
      {"early_return", R"(
contract C {
    /** @notice postcondition r >= 1 */
    function f(uint a) public returns (uint r) {
        if (a == 0) { return 1; }
        return a;
    }
})"},
      {"modifier_guard", R"(
contract C {
    modifier positive(uint a) { require(a > 0); _; }
    function f(uint a) public positive(a) { assert(a != 0); }
})"},
      {"wrap_cancel", R"(
contract C {
    function f(uint a, uint b) public { uint x = (a + b) - b; assert(x == a); }
})"},
      {"bounded_loop", R"(
contract C {
    function f() public {
        uint i = 0;
        /** @notice invariant i <= 2 */
        while (i < 2) { i = i + 1; }
        assert(i == 2);
    }
})"},
      {"compound_assign", R"(
contract C {
    uint total;
    function f(uint a) public { require(total <= 4 && a <= 4); total += a; assert(total <= 8); }
})"},
  };
}

struct ProcedureAgreement {
  std::string procedure;
  bool compared = false;  // false when the oracle or the solver is inconclusive
  bool oracle_fails = false;
  bool verifier_fails = false;
  bool labels_ok = true;  // every oracle failure label is satisfiable
};

struct Agreement {
  std::vector<ProcedureAgreement> procedures;
  std::string error;

  bool ok() const {
    if (!error.empty()) return false;
    bool any = false;
    for (const auto& p : procedures) {
      if (!p.compared) continue;
      any = true;
      if (p.oracle_fails != p.verifier_fails || !p.labels_ok) return false;
    }
    return any;
  }

  std::string describe() const {
    if (!error.empty()) return error;
    std::ostringstream s;
    for (const auto& p : procedures) {
      s << p.procedure << ": ";
      if (!p.compared) {
        s << "inconclusive; ";
        continue;
      }
      s << "oracle " << (p.oracle_fails ? "fails" : "holds") << ", verifier "
        << (p.verifier_fails ? "fails" : "holds") << (p.labels_ok ? "" : ", label mismatch")
        << "; ";
    }
    return s.str();
  }
};

/// Translates at 4 bits and compares, per procedure, "the oracle finds a
/// failing run" with "some VC is satisfiable".
inline Agreement check_agreement(const MicroProgram& mp, ArithMode mode,
                                 const std::string& solver_command) {
  Agreement out;
  try {
    frontend::ResolveOptions ro;
    ro.default_bits = 4;
    ro.allow_small_widths = true;
    auto unit = frontend::load({std::make_shared<SourceFile>(mp.name + ".sol", mp.source)}, ro);
    ivl::Program program = translator::translate_unit(unit, mode);

    smt::SolverConfig sc;
    sc.command = solver_command;
    sc.timeout_seconds = 20;
    auto results = smt::discharge(vcgen::generate_vcs(program), mode, sc, 2);

    ivl::Domain domain;
    domain.int_lo = -8;
    domain.int_hi = 15;
    domain.addresses = 2;
    domain.max_bv_width = 4;
    // msg.value stays uint256; sample it like the Int domain does.
    domain.wide_bv_values = 16;
    domain.loop_bound = 4;

    for (const auto& proc : program.procedures) {
      ProcedureAgreement pa;
      pa.procedure = proc.name;
      std::set<std::string> sat;
      bool unknown = false;
      for (const auto& r : results) {
        if (r.procedure != proc.name) continue;
        if (r.verdict.status == smt::SolverStatus::Sat) sat.insert(r.label.id);
        else if (r.verdict.status != smt::SolverStatus::Unsat) unknown = true;
      }
      ivl::OracleResult oracle = ivl::oracle_execute(program, proc.name, domain);
      pa.compared = !unknown && oracle.verdict != ivl::OracleVerdict::Inconclusive;
      pa.oracle_fails = oracle.verdict == ivl::OracleVerdict::Failure;
      pa.verifier_fails = !sat.empty();
      for (const auto& l : oracle.failed_labels) {
        if (!sat.count(l)) pa.labels_ok = false;
      }
      out.procedures.push_back(pa);
    }
  } catch (const std::exception& e) {
    out.error = mp.name + ": " + e.what();
  }
  return out;
}

}  // namespace scv::testing

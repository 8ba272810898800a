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

#include "scv/smt/emit.hpp"
#include "scv/support/mode.hpp"
#include "scv/vcgen/vcgen.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace scv::smt {

/// Environment variable that overrides the solver command template.
inline constexpr const char* kSolverEnv = "SCV_SOLVER";

struct SolverConfig {
  /// Whitespace-separated argv. `{file}` is replaced by a temporary
  /// script path (otherwise the script goes to stdin) and `{timeout}`
  /// by the timeout in whole seconds.
  std::string command = "z3 -in -smt2";
  std::optional<std::string> logic;
  double timeout_seconds = 10.0;
  bool produce_models = false;
};

enum class SolverStatus { Unsat, Sat, Unknown, Timeout, SolverError, SpawnFailure };

std::string_view status_name(SolverStatus status);

struct SolverVerdict {
  SolverStatus status = SolverStatus::SolverError;
  std::string model;        // only for sat with produce_models
  std::string diagnostics;  // stderr or error text
  double seconds = 0.0;
};

/// Splits a command template into argv and substitutes placeholders.
std::vector<std::string> expand_command(const std::string& command_template,
                                        const std::string& file, double timeout);

/// Runs one SMT-LIB2 script in a child process.
SolverVerdict run_solver(const std::string& script, const SolverConfig& config);

struct Discharged {
  ivl::DiagnosticLabel label;
  std::string procedure;
  SolverVerdict verdict;
};

/// Emits and solves every VC with at most `jobs` concurrent solver
/// processes. Results keep the input order. Emission failures become
/// solver_error verdicts so one bad VC never aborts the batch.
std::vector<Discharged> discharge(const std::vector<vcgen::VerificationCondition>& vcs,
                                  ArithMode mode, const SolverConfig& config,
                                  unsigned jobs);

/// Lower-level variant over ready-made scripts.
std::vector<SolverVerdict> discharge_scripts(const std::vector<std::string>& scripts,
                                             const SolverConfig& config, unsigned jobs);

}  // namespace scv::smt

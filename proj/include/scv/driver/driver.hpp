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
#include "scv/smt/solver.hpp"
#include "scv/support/mode.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace scv::driver {

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::vector<std::string> files;
  ArithMode mode = ArithMode::ModOverflow;
  unsigned bits = 256;
  smt::SolverConfig solver;
  unsigned jobs = 1;
  OutputFormat format = OutputFormat::Text;
  bool print_ivl = false;
  bool print_vc = false;
  std::optional<std::string> smt_dir;
  /// Widths below 8 bits, for oracle-sized experiments only.
  bool allow_small_widths = false;
};

enum class Verdict { Verified, Violated, Unknown, Error };

std::string_view verdict_name(Verdict v);

struct Diagnostic {
  Verdict verdict = Verdict::Verified;
  std::string category;  // label category, or the error kind for pipeline errors
  std::string file;
  unsigned line = 0;
  unsigned column = 0;
  std::string contract;
  std::string function;
  std::string message;
  double seconds = 0.0;
};

struct RunResult {
  std::vector<Diagnostic> diagnostics;  // every check plus pipeline errors, sorted
  int exit_code = 0;
};

/// Raises ConfigError for an unusable configuration.
void validate(const RunConfig& config);

/// frontend -> translator -> well_formed -> vcgen -> discharge -> map_results.
/// Dumps requested by the config go to `dump`.
RunResult run(const RunConfig& config, std::ostream* dump = nullptr);

std::vector<Diagnostic> map_results(const std::vector<smt::Discharged>& results,
                                    const ivl::Program& program);

void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

int exit_code(const std::vector<Diagnostic>& diagnostics);

std::string format_text(const RunResult& result);
std::string format_json(const RunResult& result);
std::vector<Diagnostic> parse_json(const std::string& text);

struct CorpusEntry {
  std::string file;
  std::string mode;
  unsigned bits = 256;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs every `<stem>.sol` in `dir` against `<stem>.expect.json`:
/// `{"runs": [{"mode": "mod", "bits": 256,
///             "diagnostics": [{"category": "overflow", "line": 37}]}]}`.
/// Expected diagnostics are compared exactly (as a multiset) with the
/// violated and unknown diagnostics of the run. Raises ConfigError when an
/// expectation file is missing or malformed.
std::vector<CorpusEntry> run_corpus(const std::string& dir, const RunConfig& base);

std::string format_corpus(const std::vector<CorpusEntry>& entries);

}  // namespace scv::driver

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

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace scv::testing {

inline std::string source_dir() { return SCV_SOURCE_DIR; }

inline std::string corpus_dir() { return source_dir() + "/corpus"; }

inline std::string z3_command() { return "z3 -in -smt2"; }

inline std::string cvc5_command() {
  return std::string(SCV_PYTHON) + " " + source_dir() + "/tools/cvc5_smt2.py";
}

/// The solver used by tests that need just one: $SCV_SOLVER or z3.
inline std::string default_solver() {
  const char* env = std::getenv("SCV_SOLVER");
  return env && *env ? env : z3_command();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace scv::testing

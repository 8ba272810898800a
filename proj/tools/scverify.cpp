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

// verify <files...> [options]
// verify --corpus DIR [options]

#include "scv/driver/driver.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  using namespace scv;
  CLI::App app{"Modular deductive verifier for annotated Solidity contracts", "verify"};
  driver::RunConfig config;
  std::string arith = "mod-overflow";
  std::string format = "text";
  std::string smt_dir;
  std::string corpus;
  std::optional<std::string> solver;
  app.add_option("files", config.files, "Solidity source files");
  app.add_option("--arith", arith, "Arithmetic encoding: int, bv, mod, mod-overflow")
      ->capture_default_str();
  app.add_option("--bits", config.bits, "Width of unsized int/uint")->capture_default_str();
  app.add_option("--solver", solver,
                 "Solver command template ({file}, {timeout} are substituted; default: z3 -in -smt2)");
  app.add_option("--timeout", config.solver.timeout_seconds, "Per-query timeout in seconds")
      ->capture_default_str();
  app.add_option("--jobs", config.jobs, "Parallel solver processes")->capture_default_str();
  app.add_option("--format", format, "Report format: text or json")->capture_default_str();
  app.add_flag("--print-ivl", config.print_ivl, "Dump the intermediate program");
  app.add_flag("--print-vc", config.print_vc, "Dump verification conditions");
  app.add_option("--print-smt", smt_dir, "Write one SMT-LIB2 script per check into DIR");
  app.add_option("--corpus", corpus, "Run every <stem>.sol in DIR against <stem>.expect.json");
  CLI11_PARSE(app, argc, argv);

  auto mode = parse_mode(arith);
  if (!mode || (format != "text" && format != "json")) {
    std::cerr << "error: " << (!mode ? "unknown --arith '" + arith + "'" : "unknown --format '" + format + "'")
              << "\n";
    return 3;
  }
  config.mode = *mode;
  config.format = format == "json" ? driver::OutputFormat::Json : driver::OutputFormat::Text;
  if (const char* env = std::getenv(smt::kSolverEnv); env && *env) config.solver.command = env;
  if (solver) config.solver.command = *solver;
  if (!smt_dir.empty()) config.smt_dir = smt_dir;

  if (!corpus.empty()) {
    try {
      auto entries = driver::run_corpus(corpus, config);
      std::cout << driver::format_corpus(entries);
      for (const auto& e : entries)
        if (!e.passed) return 1;
      return 0;
    } catch (const CompileError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 3;
    }
  }

  driver::RunResult result = driver::run(
      config, config.format == driver::OutputFormat::Json ? &std::cerr : &std::cout);
  std::cout << (config.format == driver::OutputFormat::Json ? driver::format_json(result)
                                                            : driver::format_text(result));
  return result.exit_code;
}

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

#include "scv/driver/driver.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>

namespace scv::driver {
namespace {

namespace fs = std::filesystem;

class Driver : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("scv_driver_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  static RunConfig config(std::vector<std::string> files, ArithMode mode) {
    RunConfig c;
    c.files = std::move(files);
    c.mode = mode;
    c.solver.command = testing::default_solver();
    c.solver.timeout_seconds = 20;
    c.jobs = 2;
    return c;
  }

  fs::path dir_;
};

std::string corpus(const std::string& stem) { return testing::corpus_dir() + "/" + stem + ".sol"; }

using Key = std::tuple<std::string, unsigned, std::string>;

std::set<Key> violations(const std::vector<Diagnostic>& ds) {
  std::set<Key> out;
  for (const auto& d : ds) {
    if (d.verdict == Verdict::Violated) out.insert({fs::path(d.file).filename().string(), d.line, d.category});
  }
  return out;
}

TEST_F(Driver, VerifiedExitsZero) {
  auto r = run(config({corpus("fig2_annotations")}, ArithMode::ModOverflow));
  EXPECT_EQ(r.exit_code, 0) << format_text(r);
  EXPECT_FALSE(r.diagnostics.empty());
}

TEST_F(Driver, ViolationExitsOne) {
  auto r = run(config({corpus("fig1_simplebank_buggy")}, ArithMode::Mod));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(violations(r.diagnostics),
            (std::set<Key>{{"fig1_simplebank_buggy.sol", 13, "invariant-before-external-call"}}));
}

TEST_F(Driver, UnknownExitsTwo) {
  auto c = config({corpus("fig2_annotations")}, ArithMode::Mod);
  c.solver.command = "echo unknown";
  auto r = run(c);
  EXPECT_EQ(r.exit_code, 2);
  for (const auto& d : r.diagnostics) {
    EXPECT_EQ(d.verdict, Verdict::Unknown);
    EXPECT_EQ(d.message.rfind("could not verify (unknown)", 0), 0u) << d.message;
  }
}

TEST_F(Driver, PipelineErrorExitsThree) {
  auto bad = write("bad.sol", "contract C { function f( public {} }");
  auto r = run(config({bad}, ArithMode::Mod));
  EXPECT_EQ(r.exit_code, 3);
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].verdict, Verdict::Error);
  EXPECT_EQ(r.diagnostics[0].category, "ParseError");
  EXPECT_EQ(r.diagnostics[0].line, 1u);

  auto missing = run(config({(dir_ / "nope.sol").string()}, ArithMode::Mod));
  EXPECT_EQ(missing.exit_code, 3);
}

TEST_F(Driver, SpawnFailureIsAnError) {
  auto c = config({corpus("fig2_annotations")}, ArithMode::Mod);
  c.solver.command = "/nonexistent/solver";
  EXPECT_EQ(run(c).exit_code, 3);
}

TEST_F(Driver, RejectsBadBits) {
  auto c = config({corpus("fig2_annotations")}, ArithMode::Mod);
  c.bits = 12;
  EXPECT_THROW(validate(c), CompileError);
  c.allow_small_widths = true;
  EXPECT_NO_THROW(validate(c));
}

TEST_F(Driver, JsonRoundTrips) {
  auto r = run(config({corpus("fig5_left"), corpus("fig1_simplebank_buggy")}, ArithMode::ModOverflow));
  auto back = parse_json(format_json(r));
  ASSERT_EQ(back.size(), r.diagnostics.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].verdict, r.diagnostics[i].verdict);
    EXPECT_EQ(back[i].category, r.diagnostics[i].category);
    EXPECT_EQ(back[i].file, r.diagnostics[i].file);
    EXPECT_EQ(back[i].line, r.diagnostics[i].line);
    EXPECT_EQ(back[i].column, r.diagnostics[i].column);
    EXPECT_EQ(back[i].contract, r.diagnostics[i].contract);
    EXPECT_EQ(back[i].function, r.diagnostics[i].function);
    EXPECT_EQ(back[i].message, r.diagnostics[i].message);
  }
}

TEST_F(Driver, TextAndJsonAgree) {
  auto r = run(config({corpus("fig5_left"), corpus("fig5_right")}, ArithMode::ModOverflow));
  std::set<Key> from_text;
  std::regex line(R"(^(.*):(\d+):\d+: violated: \[([a-z-]+)\])");
  std::istringstream text(format_text(r));
  for (std::string l; std::getline(text, l);) {
    std::smatch m;
    if (std::regex_search(l, m, line)) {
      from_text.insert({fs::path(m[1].str()).filename().string(),
                        static_cast<unsigned>(std::stoul(m[2])), m[3]});
    }
  }
  auto from_json = violations(parse_json(format_json(r)));
  EXPECT_EQ(from_text, from_json);
  EXPECT_EQ(from_json, (std::set<Key>{{"fig5_left.sol", 8, "assertion"},
                                      {"fig5_left.sol", 10, "overflow"},
                                      {"fig5_right.sol", 11, "assertion"}}));
}

TEST_F(Driver, DiagnosticsAreSorted) {
  auto r = run(config({corpus("fig5_right"), corpus("fig5_left")}, ArithMode::ModOverflow));
  auto copy = r.diagnostics;
  sort_diagnostics(copy);
  for (std::size_t i = 0; i < copy.size(); ++i) {
    EXPECT_EQ(copy[i].file, r.diagnostics[i].file);
    EXPECT_EQ(copy[i].line, r.diagnostics[i].line);
  }
}

TEST_F(Driver, DumpsIvlAndScripts) {
  auto c = config({corpus("fig2_annotations")}, ArithMode::Mod);
  c.print_ivl = true;
  c.smt_dir = (dir_ / "smt").string();
  std::ostringstream dump;
  run(c, &dump);
  EXPECT_NE(dump.str().find("procedure C.add"), std::string::npos);
  std::size_t scripts = 0;
  for (const auto& e : fs::directory_iterator(dir_ / "smt")) {
    if (e.path().extension() == ".smt2") ++scripts;
  }
  EXPECT_GT(scripts, 0u);
}

TEST_F(Driver, CorpusRunnerComparesExpectations) {
  fs::copy_file(corpus("fig5_left"), dir_ / "fig5_left.sol");
  write("fig5_left.expect.json", R"({"runs": [
    {"mode": "mod", "bits": 256, "diagnostics": [{"category": "assertion", "line": 8}]},
    {"mode": "mod-overflow", "bits": 256, "diagnostics": [{"category": "assertion", "line": 8}]}
  ]})");
  auto entries = run_corpus(dir_.string(), config({}, ArithMode::Mod));
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_TRUE(entries[0].passed) << entries[0].detail;
  // The overflow at line 10 is unexpected in the second run.
  EXPECT_FALSE(entries[1].passed);
  EXPECT_NE(format_corpus(entries).find("fig5_left"), std::string::npos);
}

TEST_F(Driver, CorruptExpectationIsAnError) {
  fs::copy_file(corpus("fig5_left"), dir_ / "fig5_left.sol");
  write("fig5_left.expect.json", R"({"runs": [{"mode": "mod", "diagnostics": [)");
  try {
    run_corpus(dir_.string(), config({}, ArithMode::Mod));
    FAIL() << "no error";
  } catch (const CompileError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConfigError);
  }
}

TEST_F(Driver, MissingExpectationIsAnError) {
  fs::copy_file(corpus("fig5_left"), dir_ / "fig5_left.sol");
  EXPECT_THROW(run_corpus(dir_.string(), config({}, ArithMode::Mod)), CompileError);
}

}  // namespace
}  // namespace scv::driver

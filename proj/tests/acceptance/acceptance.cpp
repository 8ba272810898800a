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

// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if
// any criterion fails.

#include "scv/driver/driver.hpp"
#include "scv/frontend/resolver.hpp"
#include "scv/smt/emit.hpp"
#include "scv/translator/translator.hpp"
#include "scv/vcgen/vcgen.hpp"

#include "arith_check.hpp"
#include "micro_programs.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace {

namespace fs = std::filesystem;
using namespace scv;
using driver::Verdict;

// Pinned limits.
constexpr double kSimpleBankSeconds = 5.0;
constexpr double kBecFixedSeconds = 60.0;
constexpr std::size_t kMinMicroPrograms = 20;
constexpr double kTimeout = 30.0;
constexpr double kBvAgreementTimeout = 3.0;

const ArithMode kModes[] = {ArithMode::Int, ArithMode::Bv, ArithMode::Mod,
                            ArithMode::ModOverflow};

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

struct Timed {
  driver::RunResult result;
  double seconds = 0;
};

std::string corpus(const std::string& stem) { return testing::corpus_dir() + "/" + stem + ".sol"; }

Timed run(const std::string& stem, ArithMode mode, unsigned bits = 256,
          const std::string& solver = testing::z3_command(), double timeout = kTimeout) {
  driver::RunConfig c;
  c.files = {corpus(stem)};
  c.mode = mode;
  c.bits = bits;
  c.solver.command = solver;
  c.solver.timeout_seconds = timeout;
  auto t0 = std::chrono::steady_clock::now();
  Timed t{driver::run(c), 0};
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

// Every check that did not verify, as "category@line"; unknowns and
// errors carry their verdict.
std::multiset<std::string> open_checks(const driver::RunResult& r) {
  std::multiset<std::string> out;
  for (const auto& d : r.diagnostics) {
    if (d.verdict == Verdict::Verified) continue;
    std::string item = d.category + "@" + std::to_string(d.line);
    if (d.verdict != Verdict::Violated) item += "(" + std::string(driver::verdict_name(d.verdict)) + ")";
    out.insert(item);
  }
  return out;
}

std::string show(const std::multiset<std::string>& s) {
  std::string out = "{";
  for (const auto& x : s) out += " " + x;
  return out + " }";
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

void expect_open(Outcome& o, const std::string& stem, ArithMode mode, unsigned bits,
                 const std::multiset<std::string>& want, double limit = 0) {
  Timed t = run(stem, mode, bits);
  auto got = open_checks(t.result);
  std::string tag = stem + "[" + std::string(mode_name(mode)) + "/" + std::to_string(bits) + "]";
  if (got != want) o.fail(tag + " expected " + show(want) + " got " + show(got));
  if (limit > 0 && t.seconds >= limit) o.fail(tag + " took " + secs(t.seconds));
  o.note(tag + " " + secs(t.seconds));
}

std::vector<std::string> corpus_stems() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(testing::corpus_dir())) {
    if (e.path().extension() == ".sol") out.push_back(e.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Outcome simplebank() {
  Outcome o;
  for (ArithMode mode : {ArithMode::Int, ArithMode::Mod}) {
    expect_open(o, "fig1_simplebank_buggy", mode, 256, {"invariant-before-external-call@13"},
                kSimpleBankSeconds);
    expect_open(o, "fig1_simplebank_fixed", mode, 256, {}, kSimpleBankSeconds);
  }
  return o;
}

Outcome fig2_overflow() {
  Outcome o;
  expect_open(o, "fig2_annotations", ArithMode::ModOverflow, 256, {});
  return o;
}

Outcome bec() {
  Outcome o;
  expect_open(o, "bec_buggy", ArithMode::ModOverflow, 256, {"overflow@37"});
  expect_open(o, "bec_fixed", ArithMode::ModOverflow, 256, {}, kBecFixedSeconds);
  expect_open(o, "fig2_annotations", ArithMode::Bv, 16, {});
  return o;
}

Outcome fig5() {
  Outcome o;
  expect_open(o, "fig5_left", ArithMode::Mod, 256, {"assertion@8"});
  expect_open(o, "fig5_right", ArithMode::Mod, 256, {"assertion@11"});
  expect_open(o, "fig5_right_capped", ArithMode::Mod, 256, {});
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  auto programs = testing::micro_programs();
  std::size_t agreeing = 0;
  for (const auto& mp : programs) {
    bool all = true;
    for (ArithMode mode : {ArithMode::Mod, ArithMode::ModOverflow, ArithMode::Bv}) {
      auto a = testing::check_agreement(mp, mode, testing::z3_command());
      if (!a.ok()) {
        all = false;
        o.fail(mp.name + "[" + std::string(mode_name(mode)) + "] " + a.describe());
      }
    }
    if (all) ++agreeing;
  }
  if (agreeing < kMinMicroPrograms) o.fail("only " + std::to_string(agreeing) + " programs agree");
  o.note(std::to_string(agreeing) + "/" + std::to_string(programs.size()) +
         " programs agree in mod, mod-overflow and bv at 4 bits");
  return o;
}

Outcome mod_equals_bv() {
  Outcome o;
  auto mismatches = testing::mod_bv_mismatches(8);
  for (const auto& m : mismatches) o.fail(m);
  if (o.pass) o.note("all 65536 operand pairs of + - * / % agree, signed and unsigned");
  return o;
}

Outcome quantifier_free() {
  Outcome o;
  std::regex quantifier(R"(\((forall|exists)\b)");
  std::size_t scripts = 0;
  for (const auto& stem : corpus_stems()) {
    std::string path = corpus(stem);
    auto unit = frontend::load({std::make_shared<SourceFile>(path, testing::read_file(path))});
    for (ArithMode mode : kModes) {
      auto program = translator::translate_unit(unit, mode);
      for (const auto& vc : vcgen::generate_vcs(program)) {
        ++scripts;
        if (std::regex_search(smt::emit_smtlib(vc, mode), quantifier)) {
          o.fail(stem + " " + std::string(mode_name(mode)) + " " + vc.label.id);
        }
      }
    }
  }
  o.note(std::to_string(scripts) + " scripts");
  return o;
}

Outcome solvers_agree() {
  Outcome o;
  std::size_t compared = 0, excluded = 0;
  for (const auto& stem : corpus_stems()) {
    for (ArithMode mode : kModes) {
      double timeout = mode == ArithMode::Bv ? kBvAgreementTimeout : kTimeout;
      auto a = run(stem, mode, 256, testing::z3_command(), timeout).result.diagnostics;
      auto b = run(stem, mode, 256, testing::cvc5_command(), timeout).result.diagnostics;
      std::string tag = stem + "[" + std::string(mode_name(mode)) + "]";
      if (a.size() != b.size()) {
        o.fail(tag + " different number of checks");
        continue;
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].verdict == Verdict::Error || b[i].verdict == Verdict::Error) {
          o.fail(tag + " error: " + a[i].message + " / " + b[i].message);
        } else if (a[i].verdict == Verdict::Unknown || b[i].verdict == Verdict::Unknown) {
          ++excluded;
        } else if (a[i].verdict != b[i].verdict) {
          o.fail(tag + " " + a[i].category + "@" + std::to_string(a[i].line) + " z3 " +
                 std::string(driver::verdict_name(a[i].verdict)) + ", cvc5 " +
                 std::string(driver::verdict_name(b[i].verdict)));
        } else {
          ++compared;
        }
      }
    }
  }
  o.note(std::to_string(compared) + " checks compared, " + std::to_string(excluded) +
         " excluded as unknown");
  if (compared == 0) o.fail("nothing compared");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {"SimpleBank: one invariant-before-external-call at line 13, fixed clean (int, mod)",
       simplebank},
      {"Fig2 verifies without diagnostics in mod-overflow", fig2_overflow},
      {"BEC: single overflow at line 37, fixed verifies; Fig2 clean in bv/16", bec},
      {"Fig5 (mod): left line 8, right line 11, capped clean", fig5},
      {"verifier agrees with the concrete oracle on 4-bit micro-programs", oracle_agreement},
      {"mod encoding equals bv encoding exhaustively at 8 bits", mod_equals_bv},
      {"no quantifiers in any emitted script (corpus, all modes)", quantifier_free},
      {"z3 and cvc5 agree on every decided check (corpus, all modes)", solvers_agree},
  };
  int failures = 0;
  int n = 0;
  for (const auto& c : criteria) {
    ++n;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << n << "] " << c.title << " (" << secs(s)
              << ")";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

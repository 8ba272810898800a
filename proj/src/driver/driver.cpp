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

#include "scv/frontend/resolver.hpp"
#include "scv/ivl/analysis.hpp"
#include "scv/ivl/printer.hpp"
#include "scv/smt/emit.hpp"
#include "scv/translator/translator.hpp"
#include "scv/vcgen/vcgen.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace scv::driver {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::ConfigError, {}, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Diagnostic error_diagnostic(const CompileError& e) {
  Diagnostic d;
  d.verdict = Verdict::Error;
  d.category = std::string(error_kind_name(e.kind()));
  d.message = e.detail();
  if (e.span().valid()) {
    d.file = e.span().file_name();
    d.line = e.span().line;
    d.column = e.span().column;
  }
  return d;
}

std::string safe_file_name(const std::string& s) {
  std::string out;
  for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '-') ? c : '_';
  return out;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Violated: return "violated";
    case Verdict::Unknown: return "unknown";
    case Verdict::Error: return "error";
  }
  return "?";
}

void validate(const RunConfig& c) {
  if (c.files.empty()) raise(ErrorKind::ConfigError, {}, "no input files");
  unsigned lo = c.allow_small_widths ? 2 : 8;
  if (c.bits < lo || c.bits > 256 || (!c.allow_small_widths && c.bits % 8 != 0)) {
    raise(ErrorKind::ConfigError, {}, "--bits must be a multiple of 8 in [8, 256]");
  }
  if (c.jobs == 0) raise(ErrorKind::ConfigError, {}, "--jobs must be positive");
  if (!(c.solver.timeout_seconds > 0)) raise(ErrorKind::ConfigError, {}, "--timeout must be positive");
  if (c.solver.command.find_first_not_of(" \t") == std::string::npos) {
    raise(ErrorKind::ConfigError, {}, "empty solver command");
  }
}

std::vector<Diagnostic> map_results(const std::vector<smt::Discharged>& results,
                                    const ivl::Program& program) {
  std::vector<Diagnostic> out;
  for (const auto& r : results) {
    Diagnostic d;
    d.category = std::string(ivl::category_name(r.label.category));
    d.file = r.label.span.file_name();
    d.line = r.label.span.line;
    d.column = r.label.span.column;
    if (const ivl::Procedure* p = program.find_procedure(r.procedure)) {
      d.contract = p->contract;
      d.function = p->function;
    }
    d.seconds = r.verdict.seconds;
    switch (r.verdict.status) {
      case smt::SolverStatus::Unsat:
        d.verdict = Verdict::Verified;
        d.message = r.label.message;
        break;
      case smt::SolverStatus::Sat:
        d.verdict = Verdict::Violated;
        d.message = r.label.message;
        break;
      case smt::SolverStatus::Unknown:
      case smt::SolverStatus::Timeout:
        d.verdict = Verdict::Unknown;
        d.message = "could not verify (" + std::string(smt::status_name(r.verdict.status)) + "): " + r.label.message;
        break;
      case smt::SolverStatus::SolverError:
      case smt::SolverStatus::SpawnFailure: {
        d.verdict = Verdict::Error;
        std::string why = r.verdict.diagnostics.substr(0, r.verdict.diagnostics.find('\n'));
        d.message = std::string(smt::status_name(r.verdict.status)) + ": " + why;
        break;
      }
    }
    out.push_back(std::move(d));
  }
  sort_diagnostics(out);
  return out;
}

void sort_diagnostics(std::vector<Diagnostic>& ds) {
  std::stable_sort(ds.begin(), ds.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.file, a.line, a.column, a.category) < std::tie(b.file, b.line, b.column, b.category);
  });
}

int exit_code(const std::vector<Diagnostic>& ds) {
  bool violated = false, unknown = false;
  for (const auto& d : ds) {
    if (d.verdict == Verdict::Error) return 3;
    violated = violated || d.verdict == Verdict::Violated;
    unknown = unknown || d.verdict == Verdict::Unknown;
  }
  return violated ? 1 : unknown ? 2 : 0;
}

RunResult run(const RunConfig& config, std::ostream* dump) {
  RunResult result;
  try {
    validate(config);
    std::vector<SourceFilePtr> files;
    for (const auto& path : config.files) files.push_back(std::make_shared<SourceFile>(path, read_file(path)));
    frontend::ResolveOptions ro;
    ro.default_bits = config.bits;
    ro.allow_small_widths = config.allow_small_widths;
    frontend::CompilationUnit unit = frontend::load(files, ro);
    ivl::Program program = translator::translate_unit(unit, config.mode);
    auto defects = ivl::well_formed(program);
    if (!defects.empty()) {
      raise(ErrorKind::TranslationError, {}, "internal: ill-formed IVL: " + defects.front());
    }
    if (config.print_ivl && dump) *dump << ivl::print_program(program);
    auto vcs = vcgen::generate_vcs(program);
    if (config.print_vc && dump) {
      for (const auto& vc : vcs) {
        *dump << "vc " << vc.procedure << " " << vc.label.id << " [" << ivl::category_name(vc.label.category)
              << " " << vc.label.span.to_string() << "]\n  " << ivl::print_expr(vc.formula) << "\n";
      }
    }
    if (config.smt_dir) {
      fs::create_directories(*config.smt_dir);
      smt::EmitOptions eo{config.solver.logic, config.solver.produce_models};
      for (const auto& vc : vcs) {
        std::ofstream out(fs::path(*config.smt_dir) / safe_file_name(vc.procedure + "." + vc.label.id + ".smt2"));
        out << smt::emit_smtlib(vc, config.mode, eo);
      }
    }
    auto discharged = smt::discharge(vcs, config.mode, config.solver, config.jobs);
    result.diagnostics = map_results(discharged, program);
  } catch (const CompileError& e) {
    result.diagnostics.push_back(error_diagnostic(e));
  } catch (const fs::filesystem_error& e) {
    result.diagnostics.push_back(error_diagnostic(CompileError(ErrorKind::ConfigError, {}, e.what())));
  }
  result.exit_code = exit_code(result.diagnostics);
  return result;
}

std::string format_text(const RunResult& r) {
  std::ostringstream out;
  std::size_t verified = 0, violated = 0, unknown = 0, errors = 0;
  for (const auto& d : r.diagnostics) {
    switch (d.verdict) {
      case Verdict::Verified: ++verified; continue;
      case Verdict::Violated: ++violated; break;
      case Verdict::Unknown: ++unknown; break;
      case Verdict::Error: ++errors; break;
    }
    if (!d.file.empty()) out << d.file << ':' << d.line << ':' << d.column << ": ";
    out << verdict_name(d.verdict) << ": [" << d.category << "] " << d.message;
    if (!d.function.empty()) out << " (in " << d.contract << '.' << d.function << ')';
    out << '\n';
  }
  out << verified << " checks verified";
  if (violated) out << ", " << violated << " violated";
  if (unknown) out << ", " << unknown << " unknown";
  if (errors) out << ", " << errors << " errors";
  out << '\n';
  return out.str();
}

std::string format_json(const RunResult& r) {
  json arr = json::array();
  for (const auto& d : r.diagnostics) {
    arr.push_back({{"verdict", verdict_name(d.verdict)},
                   {"category", d.category},
                   {"file", d.file},
                   {"line", d.line},
                   {"column", d.column},
                   {"contract", d.contract},
                   {"function", d.function},
                   {"message", d.message},
                   {"seconds", d.seconds}});
  }
  return arr.dump(2) + "\n";
}

std::vector<Diagnostic> parse_json(const std::string& text) {
  std::vector<Diagnostic> out;
  json arr = json::parse(text);
  for (const auto& o : arr) {
    Diagnostic d;
    std::string v = o.at("verdict");
    d.verdict = v == "verified" ? Verdict::Verified
                : v == "violated" ? Verdict::Violated
                : v == "unknown"  ? Verdict::Unknown
                                  : Verdict::Error;
    d.category = o.at("category");
    d.file = o.at("file");
    d.line = o.at("line");
    d.column = o.at("column");
    d.contract = o.at("contract");
    d.function = o.at("function");
    d.message = o.at("message");
    d.seconds = o.at("seconds");
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<CorpusEntry> run_corpus(const std::string& dir, const RunConfig& base) {
  std::vector<fs::path> sources;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".sol") sources.push_back(entry.path());
  }
  std::sort(sources.begin(), sources.end());
  std::vector<CorpusEntry> out;
  for (const auto& src : sources) {
    fs::path expect = src;
    expect.replace_extension(".expect.json");
    if (!fs::exists(expect)) {
      raise(ErrorKind::ConfigError, {}, "missing expectation file " + expect.string());
    }
    json spec;
    try {
      spec = json::parse(read_file(expect.string()));
      if (!spec.at("runs").is_array() || spec.at("runs").empty()) throw std::runtime_error("no runs");
    } catch (const std::exception& e) {
      raise(ErrorKind::ConfigError, {}, "malformed expectation file " + expect.string() + ": " + e.what());
    }
    for (const auto& r : spec["runs"]) {
      CorpusEntry ce;
      ce.file = src.string();
      RunConfig c = base;
      c.files = {src.string()};
      std::multiset<std::pair<std::string, unsigned>> expected, actual;
      try {
        ce.mode = r.at("mode");
        ce.bits = r.value("bits", 256u);
        auto m = parse_mode(ce.mode);
        if (!m) throw std::runtime_error("unknown mode '" + ce.mode + "'");
        c.mode = *m;
        c.bits = ce.bits;
        for (const auto& d : r.at("diagnostics")) {
          expected.emplace(d.at("category").get<std::string>(), d.at("line").get<unsigned>());
        }
      } catch (const std::exception& e) {
        raise(ErrorKind::ConfigError, {}, "malformed expectation file " + expect.string() + ": " + e.what());
      }
      auto t0 = std::chrono::steady_clock::now();
      RunResult res = run(c);
      ce.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::string errors;
      for (const auto& d : res.diagnostics) {
        if (d.verdict == Verdict::Violated || d.verdict == Verdict::Unknown) actual.insert({d.category, d.line});
        if (d.verdict == Verdict::Error) errors += " " + d.category + ": " + d.message;
      }
      ce.passed = errors.empty() && actual == expected;
      if (!errors.empty()) {
        ce.detail = "pipeline error:" + errors;
      } else if (!ce.passed) {
        std::ostringstream s;
        s << "expected {";
        for (const auto& [cat, line] : expected) s << ' ' << cat << '@' << line;
        s << " } got {";
        for (const auto& [cat, line] : actual) s << ' ' << cat << '@' << line;
        s << " }";
        ce.detail = s.str();
      }
      out.push_back(std::move(ce));
    }
  }
  return out;
}

std::string format_corpus(const std::vector<CorpusEntry>& entries) {
  json arr = json::array();
  std::size_t passed = 0;
  for (const auto& e : entries) {
    passed += e.passed;
    arr.push_back({{"file", e.file}, {"mode", e.mode}, {"bits", e.bits}, {"passed", e.passed},
                   {"detail", e.detail}, {"seconds", e.seconds}});
  }
  json summary = {{"entries", arr}, {"passed", passed}, {"total", entries.size()}};
  return summary.dump(2) + "\n";
}

}  // namespace scv::driver

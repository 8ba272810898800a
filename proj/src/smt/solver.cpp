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

#include "scv/smt/solver.hpp"

#include "scv/support/source.hpp"

#include <atomic>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

namespace scv::smt {

namespace {

using Clock = std::chrono::steady_clock;

void replace_all(std::string& s, std::string_view from, const std::string& to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos;
       pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

struct Pipe {
  int fd[2] = {-1, -1};
  // Close-on-exec so concurrent spawns never inherit each other's ends.
  bool open() { return ::pipe2(fd, O_CLOEXEC) == 0; }
  void close_both() {
    for (int& f : fd) {
      if (f >= 0) ::close(f);
      f = -1;
    }
  }
};

struct RawResult {
  bool spawned = false;
  bool timed_out = false;
  int exit_status = 0;
  std::string out;
  std::string err;
  std::string spawn_error;
};

void set_nonblocking(int fd) { ::fcntl(fd, F_SETFL, ::fcntl(fd, F_GETFL) | O_NONBLOCK); }

RawResult run_process(const std::vector<std::string>& argv, const std::string& input,
                      double timeout) {
  static const bool sigpipe_ignored = [] {
    ::signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)sigpipe_ignored;
  RawResult r;
  Pipe in, out, err, status;
  if (!in.open() || !out.open() || !err.open() || !status.open()) {
    r.spawn_error = std::strerror(errno);
    in.close_both(); out.close_both(); err.close_both(); status.close_both();
    return r;
  }
  std::vector<char*> args;
  for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
  args.push_back(nullptr);

  pid_t pid = ::fork();
  if (pid < 0) {
    r.spawn_error = std::strerror(errno);
    in.close_both(); out.close_both(); err.close_both(); status.close_both();
    return r;
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(in.fd[0], 0);
    ::dup2(out.fd[1], 1);
    ::dup2(err.fd[1], 2);
    for (int f : {in.fd[0], in.fd[1], out.fd[0], out.fd[1], err.fd[0], err.fd[1]}) ::close(f);
    ::close(status.fd[0]);
    ::execvp(args[0], args.data());
    int code = errno;
    [[maybe_unused]] auto n = ::write(status.fd[1], &code, sizeof code);
    ::_exit(127);
  }
  ::close(in.fd[0]);
  ::close(out.fd[1]);
  ::close(err.fd[1]);
  ::close(status.fd[1]);

  int exec_errno = 0;
  if (::read(status.fd[0], &exec_errno, sizeof exec_errno) == sizeof exec_errno) {
    r.spawn_error = std::string(argv[0]) + ": " + std::strerror(exec_errno);
    ::close(status.fd[0]);
    ::close(in.fd[1]);
    ::close(out.fd[0]);
    ::close(err.fd[0]);
    ::waitpid(pid, nullptr, 0);
    return r;
  }
  ::close(status.fd[0]);
  r.spawned = true;

  int to_child = in.fd[1];
  set_nonblocking(to_child);
  set_nonblocking(out.fd[0]);
  set_nonblocking(err.fd[0]);
  std::size_t written = 0;
  if (input.empty()) {
    ::close(to_child);
    to_child = -1;
  }
  int from_out = out.fd[0], from_err = err.fd[0];
  auto deadline = Clock::now() + std::chrono::duration<double>(timeout);
  char buffer[65536];
  while (from_out >= 0 || from_err >= 0) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
    if (left.count() <= 0) {
      r.timed_out = true;
      break;
    }
    pollfd fds[3];
    int n = 0;
    if (to_child >= 0) fds[n++] = {to_child, POLLOUT, 0};
    if (from_out >= 0) fds[n++] = {from_out, POLLIN, 0};
    if (from_err >= 0) fds[n++] = {from_err, POLLIN, 0};
    int ready = ::poll(fds, n, static_cast<int>(std::min<long long>(left.count(), 1000)));
    if (ready < 0 && errno != EINTR) break;
    for (int i = 0; i < n && ready > 0; ++i) {
      if (fds[i].revents == 0) continue;
      int fd = fds[i].fd;
      if (fd == to_child) {
        ssize_t w = ::write(fd, input.data() + written, input.size() - written);
        if (w > 0) written += static_cast<std::size_t>(w);
        if (w < 0 && errno != EAGAIN) written = input.size();
        if (written >= input.size()) {
          ::close(to_child);
          to_child = -1;
        }
        continue;
      }
      ssize_t got = ::read(fd, buffer, sizeof buffer);
      if (got > 0) {
        (fd == from_out ? r.out : r.err).append(buffer, static_cast<std::size_t>(got));
      } else if (got == 0 || errno != EAGAIN) {
        ::close(fd);
        (fd == from_out ? from_out : from_err) = -1;
      }
    }
  }
  for (int fd : {to_child, from_out, from_err}) {
    if (fd >= 0) ::close(fd);
  }
  if (r.timed_out) {
    ::kill(-pid, SIGKILL);
    ::kill(pid, SIGKILL);
  }
  int wstatus = 0;
  ::waitpid(pid, &wstatus, 0);
  r.exit_status = WIFEXITED(wstatus) ? WEXITSTATUS(wstatus) : 128 + WTERMSIG(wstatus);
  return r;
}

std::string temp_script_path() {
  static std::atomic<unsigned> counter{0};
  auto dir = std::filesystem::temp_directory_path();
  return (dir / ("scv-" + std::to_string(::getpid()) + "-" +
                 std::to_string(counter++) + ".smt2"))
      .string();
}

}  // namespace

std::string_view status_name(SolverStatus status) {
  switch (status) {
    case SolverStatus::Unsat: return "unsat";
    case SolverStatus::Sat: return "sat";
    case SolverStatus::Unknown: return "unknown";
    case SolverStatus::Timeout: return "timeout";
    case SolverStatus::SolverError: return "solver_error";
    case SolverStatus::SpawnFailure: return "spawn_failure";
  }
  return "?";
}

std::vector<std::string> expand_command(const std::string& command_template,
                                        const std::string& file, double timeout) {
  std::vector<std::string> argv;
  std::istringstream words(command_template);
  std::string word;
  std::string seconds = std::to_string(std::max(1L, std::lround(std::ceil(timeout))));
  while (words >> word) {
    replace_all(word, "{file}", file);
    replace_all(word, "{timeout}", seconds);
    argv.push_back(word);
  }
  return argv;
}

SolverVerdict run_solver(const std::string& script, const SolverConfig& config) {
  SolverVerdict v;
  auto start = Clock::now();
  bool uses_file = config.command.find("{file}") != std::string::npos;
  std::string file;
  if (uses_file) {
    file = temp_script_path();
    std::ofstream(file) << script;
  }
  auto argv = expand_command(config.command, file, config.timeout_seconds);
  if (argv.empty()) {
    v.status = SolverStatus::SpawnFailure;
    v.diagnostics = "empty solver command";
    return v;
  }
  RawResult raw = run_process(argv, uses_file ? std::string() : script,
                              config.timeout_seconds);
  if (uses_file) std::filesystem::remove(file);
  v.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  v.diagnostics = raw.err;
  if (!raw.spawned) {
    v.status = SolverStatus::SpawnFailure;
    v.diagnostics = raw.spawn_error;
    return v;
  }
  if (raw.timed_out) {
    v.status = SolverStatus::Timeout;
    return v;
  }
  std::istringstream lines(raw.out);
  std::string token;
  lines >> token;
  if (token == "unsat") {
    v.status = SolverStatus::Unsat;
  } else if (token == "sat") {
    v.status = SolverStatus::Sat;
    if (config.produce_models) {
      std::string rest((std::istreambuf_iterator<char>(lines)), std::istreambuf_iterator<char>());
      v.model = rest.substr(rest.find_first_not_of("\n") == std::string::npos
                                ? rest.size()
                                : rest.find_first_not_of("\n"));
    }
  } else if (token == "unknown") {
    v.status = SolverStatus::Unknown;
  } else if (token == "timeout") {
    v.status = SolverStatus::Timeout;
  } else {
    v.status = SolverStatus::SolverError;
    if (v.diagnostics.empty()) v.diagnostics = raw.out;
    if (v.diagnostics.empty()) {
      v.diagnostics = "solver exited with status " + std::to_string(raw.exit_status);
    }
  }
  return v;
}

std::vector<SolverVerdict> discharge_scripts(const std::vector<std::string>& scripts,
                                             const SolverConfig& config, unsigned jobs) {
  std::vector<SolverVerdict> results(scripts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < scripts.size(); i = next++) {
      results[i] = run_solver(scripts[i], config);
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(scripts.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::vector<Discharged> discharge(const std::vector<vcgen::VerificationCondition>& vcs,
                                  ArithMode mode, const SolverConfig& config,
                                  unsigned jobs) {
  std::vector<std::string> scripts(vcs.size());
  std::vector<std::string> emit_errors(vcs.size());
  EmitOptions options{config.logic, config.produce_models};
  for (std::size_t i = 0; i < vcs.size(); ++i) {
    if (vcs[i].formula->is_false()) continue;  // trivially unsat
    try {
      scripts[i] = emit_smtlib(vcs[i], mode, options);
    } catch (const CompileError& e) {
      emit_errors[i] = e.what();
    }
  }
  std::vector<std::string> runnable;
  std::vector<std::size_t> index;
  for (std::size_t i = 0; i < vcs.size(); ++i) {
    if (emit_errors[i].empty() && !vcs[i].formula->is_false()) {
      runnable.push_back(scripts[i]);
      index.push_back(i);
    }
  }
  auto verdicts = discharge_scripts(runnable, config, jobs);
  std::vector<Discharged> out(vcs.size());
  for (std::size_t i = 0; i < vcs.size(); ++i) {
    out[i].label = vcs[i].label;
    out[i].procedure = vcs[i].procedure;
    if (vcs[i].formula->is_false()) {
      out[i].verdict.status = SolverStatus::Unsat;
    } else if (!emit_errors[i].empty()) {
      out[i].verdict.status = SolverStatus::SolverError;
      out[i].verdict.diagnostics = emit_errors[i];
    }
  }
  for (std::size_t j = 0; j < index.size(); ++j) out[index[j]].verdict = std::move(verdicts[j]);
  return out;
}

}  // namespace scv::smt

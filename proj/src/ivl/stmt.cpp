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

#include "scv/ivl/stmt.hpp"

namespace scv::ivl {

namespace {
constexpr std::pair<Category, std::string_view> kCategoryNames[] = {
    {Category::Assertion, "assertion"},
    {Category::Overflow, "overflow"},
    {Category::InvariantAtExit, "invariant-at-exit"},
    {Category::InvariantBeforeExternalCall, "invariant-before-external-call"},
    {Category::Postcondition, "postcondition"},
    {Category::Precondition, "precondition"},
    {Category::LoopInvariantEntry, "loop-invariant-entry"},
    {Category::LoopInvariantMaintained, "loop-invariant-maintained"},
};

std::shared_ptr<Stmt> make_stmt(StmtKind kind) {
  auto s = std::make_shared<Stmt>();
  s->kind = kind;
  return s;
}
}  // namespace

std::string_view category_name(Category category) {
  for (const auto& [c, name] : kCategoryNames) {
    if (c == category) return name;
  }
  return "unknown";
}

std::optional<Category> parse_category(std::string_view name) {
  for (const auto& [c, n] : kCategoryNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

DiagnosticLabel LoopInvariant::entry_label() const {
  std::string what = message.empty() ? "loop invariant" : message;
  return {id + ".entry", Category::LoopInvariantEntry, span, what + " might not hold on entry"};
}

DiagnosticLabel LoopInvariant::maintained_label() const {
  std::string what = message.empty() ? "loop invariant" : message;
  return {id + ".maintained", Category::LoopInvariantMaintained, span,
          what + " might not be maintained by the loop"};
}

StmtPtr assign(std::string target, ExprPtr value) {
  auto s = make_stmt(StmtKind::Assign);
  s->target = std::move(target);
  s->expr = std::move(value);
  return s;
}

StmtPtr havoc(std::vector<std::string> vars) {
  auto s = make_stmt(StmtKind::Havoc);
  s->vars = std::move(vars);
  return s;
}

StmtPtr assume(ExprPtr formula) {
  auto s = make_stmt(StmtKind::Assume);
  s->expr = std::move(formula);
  return s;
}

StmtPtr assert_(ExprPtr formula, DiagnosticLabel label) {
  auto s = make_stmt(StmtKind::Assert);
  s->expr = std::move(formula);
  s->label = std::move(label);
  return s;
}

StmtPtr if_(ExprPtr cond, StmtPtr then_branch, StmtPtr else_branch) {
  auto s = make_stmt(StmtKind::If);
  s->expr = std::move(cond);
  s->children = {std::move(then_branch), std::move(else_branch)};
  return s;
}

StmtPtr while_(ExprPtr cond, std::vector<LoopInvariant> invariants,
               StmtPtr body) {
  auto s = make_stmt(StmtKind::While);
  s->expr = std::move(cond);
  s->invariants = std::move(invariants);
  s->children = {std::move(body)};
  return s;
}

StmtPtr seq(std::vector<StmtPtr> items) {
  auto s = make_stmt(StmtKind::Seq);
  for (auto& item : items) {
    if (item->kind == StmtKind::Seq) {
      s->children.insert(s->children.end(), item->children.begin(),
                         item->children.end());
    } else {
      s->children.push_back(std::move(item));
    }
  }
  return s;
}

StmtPtr skip() { return make_stmt(StmtKind::Seq); }

const Procedure* Program::find_procedure(std::string_view name) const {
  for (const auto& p : procedures) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

const VarDecl* Program::find_global(std::string_view name) const {
  for (const auto& g : globals) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

namespace {
void collect_labels(const StmtPtr& s, std::vector<DiagnosticLabel>& out) {
  if (s->kind == StmtKind::Assert) out.push_back(s->label);
  for (const auto& c : s->children) collect_labels(c, out);
}
}  // namespace

std::vector<DiagnosticLabel> collect_assert_labels(const StmtPtr& s) {
  std::vector<DiagnosticLabel> out;
  collect_labels(s, out);
  return out;
}

}  // namespace scv::ivl

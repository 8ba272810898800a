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

#include <optional>
#include <string>
#include <string_view>

namespace scv {

/// How contract integers are modelled.
enum class ArithMode {
  Int,          // unbounded mathematical integers
  Bv,           // fixed-width bitvectors
  Mod,          // integers with range assumptions and wraparound
  ModOverflow,  // Mod plus delayed overflow checks
};

std::string_view mode_name(ArithMode mode);
/// Accepts "int", "bv", "mod", "mod-overflow" and "mod_overflow".
std::optional<ArithMode> parse_mode(std::string_view text);

inline constexpr ArithMode kAllModes[] = {ArithMode::Int, ArithMode::Bv,
                                          ArithMode::Mod, ArithMode::ModOverflow};

}  // namespace scv

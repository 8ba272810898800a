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

#include "scv/support/mode.hpp"

namespace scv {

std::string_view mode_name(ArithMode mode) {
  switch (mode) {
    case ArithMode::Int: return "int";
    case ArithMode::Bv: return "bv";
    case ArithMode::Mod: return "mod";
    case ArithMode::ModOverflow: return "mod-overflow";
  }
  return "?";
}

std::optional<ArithMode> parse_mode(std::string_view text) {
  if (text == "int") return ArithMode::Int;
  if (text == "bv") return ArithMode::Bv;
  if (text == "mod") return ArithMode::Mod;
  if (text == "mod-overflow" || text == "mod_overflow") return ArithMode::ModOverflow;
  return std::nullopt;
}

}  // namespace scv

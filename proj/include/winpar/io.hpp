/*
 * Copyright 2026 The winpar authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "winpar/arena.hpp"
#include "winpar/product.hpp"

namespace winpar {

struct ParseError : std::runtime_error {
  size_t line;
  ParseError(size_t line_, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

struct ParsedGame {
  Arena arena;
  std::optional<uint32_t> initial;
};

/// Line-oriented game format (UTF-8, `#` comments):
///   winpar 1 dims=<n>
///   vertex <id> <owner:1|2> <p_1> [... <p_n>]
///   edge <src> <dst>
///   init <id>
ParsedGame parse_game(const std::string& text);
std::string write_game(const Arena& arena, std::optional<uint32_t> initial = std::nullopt);

/// GraphViz export: circle = P1, box = P2, priorities as labels; beta /
/// bad product states drawn filled.
std::string export_dot(const Arena& arena, std::optional<uint32_t> initial = std::nullopt);
std::string export_dot(const ProductArena& product);

/// Moore machine format:
///   moore <player:1|2> init=<m0>
///   next <m> <v> -> <v'>
///   update <m> <v> -> <m'>
std::string write_strategy(const MooreStrategy& strategy, const Arena& arena);
MooreStrategy read_strategy(const std::string& text, const Arena& arena);

}  // namespace winpar

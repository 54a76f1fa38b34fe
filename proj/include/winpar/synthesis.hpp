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

#include "winpar/arena.hpp"
#include "winpar/product.hpp"

namespace winpar {

/// Moore machine from a solved product: memory states are the product
/// payloads reachable under the player's memoryless product strategy
/// (plus the initial reset memory), update follows product transitions,
/// next-action projects the product strategy. Unreachable memory is
/// never materialized, so the reported |M| is already pruned.
///
/// Throws std::invalid_argument when the player's projected region is
/// empty, when the result came through the request-response path, or
/// for the bounded kinds on the P2 side ("no finite certificate
/// produced": the product machine only certifies the fixed complement
/// at the threshold).
MooreStrategy extract_strategy(const Arena& arena, const SolveResult& result, Player player);

/// Product of the arena with a strategy: states (v, m); the strategy
/// owner's states have the unique successor (next(m,v), update(m,v)),
/// opponent states keep all successors with updated memory. Priorities
/// are inherited from the source vertex.
struct RestrictedArena {
  Arena game;
  std::vector<uint32_t> source_vertex;  // restricted state -> source vertex
  std::vector<uint32_t> memory_state;   // restricted state -> memory
  uint32_t num_source = 0;

  uint32_t index(uint32_t v, uint32_t m) const { return m * num_source + v; }
};

RestrictedArena restrict_arena(const Arena& arena, const MooreStrategy& strategy);

struct VerifyResult {
  bool winning = false;
  std::optional<Lasso> counterexample;  // a consistent play refuting the strategy
};

/// Exact check: restricts the arena by the strategy and solves the
/// objective on the one-player remainder. A P1 strategy wins iff every
/// consistent play satisfies the objective, a P2 strategy iff none
/// does. On failure returns a refuting lasso in the original arena
/// (shortest-path walk over the opponent-won product, deterministic) —
/// except for the bounded kinds, whose failures need not admit an
/// ultimately periodic refutation, so only the verdict is returned.
VerifyResult verify_strategy(const Arena& arena, const MooreStrategy& strategy,
                             const ObjectiveSpec& spec, uint32_t initial);

}  // namespace winpar

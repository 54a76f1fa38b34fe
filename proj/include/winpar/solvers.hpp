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

#include <vector>

#include "winpar/arena.hpp"

namespace winpar {

/// Winning regions with memoryless strategies on each player's region.
/// Determinacy holds for every backend: winner assigns each vertex to
/// exactly one player.
struct WinningRegions {
  std::vector<Player> winner;
  std::vector<uint32_t> strategy1;  // P1 vertices in win1 -> chosen successor
  std::vector<uint32_t> strategy2;  // P2 vertices in win2 -> chosen successor

  bool won_by(uint32_t v, Player p) const { return winner[v] == p; }
  std::vector<uint32_t> region(Player p) const;
  const std::vector<uint32_t>& strategy(Player p) const {
    return p == Player::P1 ? strategy1 : strategy2;
  }
};

struct AttractorResult {
  std::vector<char> in;
  std::vector<uint32_t> rank;      // BFS level, 0 on the target
  std::vector<uint32_t> strategy;  // rank-decreasing move for the attracting player
};

/// Vertices from which `player` can force reaching `target`, restricted
/// to `alive` when given. Strategy picks the lowest-index successor
/// among rank-decreasing moves.
AttractorResult attractor(const Arena& arena, Player player, const std::vector<char>& target,
                          const std::vector<char>* alive = nullptr);

WinningRegions solve_reachability(const Arena& arena, const std::vector<uint32_t>& target);
WinningRegions solve_safety(const Arena& arena, const std::vector<uint32_t>& safe);

/// `player` forces visiting `accepting` infinitely often; the classical
/// repeated attractor/removal fixpoint.
WinningRegions solve_buchi_for(const Arena& arena, Player player,
                               const std::vector<uint32_t>& accepting);
WinningRegions solve_buchi(const Arena& arena, const std::vector<uint32_t>& accepting);
/// P1 forces visiting vertices outside `allowed` only finitely often.
WinningRegions solve_cobuchi(const Arena& arena, const std::vector<uint32_t>& allowed);

/// Zielonka on one-dimension arenas, min-priority-even convention.
/// Throws std::invalid_argument when the arena has more dimensions.
WinningRegions solve_parity(const Arena& arena);

/// Visit every target set at least once, solved on the visited-set
/// product. Regions are per source vertex (as initial vertex);
/// strategies for it are finite-memory and available through the
/// dispatcher's product path.
WinningRegions solve_genreach(const Arena& arena,
                              const std::vector<std::vector<uint32_t>>& targets);

std::vector<char> make_mask(uint32_t n, const std::vector<uint32_t>& set);

}  // namespace winpar

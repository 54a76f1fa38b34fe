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
#include <vector>

#include "winpar/arena.hpp"
#include "winpar/solvers.hpp"

namespace winpar {

enum class ProductKind { Identity, Window, Counter, History, Subset, RequestResponse };

/// A derived game with per-state annotations and a back-mapping to the
/// source arena. Only states reachable from the canonical initial
/// states (one per source vertex) are generated.
struct ProductArena {
  ProductKind kind = ProductKind::Identity;
  bool direct = false;
  Arena game;
  std::vector<uint32_t> back_map;  // product vertex -> source vertex (kNoVertex on the absorbing beta)
  std::vector<char> bad;           // beta / violation states
  std::vector<uint32_t> init_of;   // source vertex -> canonical initial product vertex
  std::vector<std::vector<int>> payload;  // per product vertex; the strategy memory
  std::vector<int> reset_payload;         // initial memory m0
  // For direct window/counter products: source successor taken on an
  // edge into the absorbing beta (lowest index), per product vertex.
  std::vector<uint32_t> overflow_choice;
  uint32_t absorbing = kNoVertex;
  size_t payload_space = 0;  // bound on distinct payloads, for assertions

  uint32_t size() const { return game.size(); }
  std::vector<uint32_t> bad_states() const;
  std::vector<uint32_t> good_states() const;
};

/// Window product: states (v, (c_m, l_m)_m) tracking the minimum
/// priority and step count of the current window per dimension; any
/// dimension overflowing at l = lambda-1 with an odd minimum routes to
/// beta (per-vertex with a reset edge when undirect, absorbing when
/// direct). Objective: safety (direct) / co-Buchi (undirect) on non-beta.
ProductArena build_fixwp_product(const Arena& arena, int lambda, bool direct);

/// Counter product: one counter per (dimension, odd priority) in
/// {bot, 0, .., lambda-2}, counting unanswered steps. Requires
/// lambda >= 2 (lambda = 1 is the all-even safety special case).
ProductArena build_fixpr_counter_product(const Arena& arena, int lambda, bool direct);

/// History product (one dimension): states are the last lambda vertices,
/// padded with an even-priority sentinel; a state is bad when the oldest
/// entry's priority is not answered inside the window.
ProductArena build_fixpr_history_product(const Arena& arena, int lambda, bool direct);

/// Visited-set product for generalized reachability.
ProductArena build_genreach_product(const Arena& arena,
                                    const std::vector<std::vector<uint32_t>>& targets);

/// Source arena itself as a trivial product (classical backends and the
/// lambda = 1 parity-response special case, where `bad` marks vertices
/// with an odd priority in some dimension).
ProductArena build_identity_product(const Arena& arena, bool mark_odd_bad, bool direct);

struct RRPair {
  std::vector<uint32_t> request;
  std::vector<uint32_t> response;
  int dimension = 0;
  int priority = 0;
};

/// One request/response pair per (dimension, odd priority):
/// Rq = {v | p_m(v) = c}, Rp = {v | p_m(v) even and <= c}; empty-request
/// pairs omitted.
std::vector<RRPair> build_rr_instance(const Arena& arena);

/// Pointer product for request-response games: states (v, P, i) with
/// pending set P and cyclic pointer i; the pointer advances past i
/// whenever i is not pending, and the pointer-wrap states (i = r, r not
/// pending) are the Buchi acceptance set.
ProductArena build_rr_product(const Arena& arena, const std::vector<RRPair>& pairs);

/// Winner of the (direct) bounded request-response game from every
/// vertex. Undirect solves the layered fixpoint over the direct winning
/// sets. Regions only; strategies for this path are not materialized.
WinningRegions solve_request_response(const Arena& arena, const std::vector<RRPair>& pairs,
                                      bool direct);

/// Smallest lambda at which the fixed objective's winning sets equal the
/// bounded ones: |V| (PR) and (d/2)|V| (WP) in one dimension,
/// b = |V| * 2^(n*d/2) * n*d/2 and b*d/2 in multi-dimension, clamped to
/// >= 1. Throws std::overflow_error("instance too large for bounded
/// solving") when the arithmetic overflows.
long long bounded_threshold(const Arena& arena, Objective kind);

enum class SolveVia { Product, RequestResponse, History };

struct ProductObjective {
  Objective kind = Objective::Safe;
  std::vector<uint32_t> set;
};

struct SolveResult {
  ObjectiveSpec spec;
  SolveVia via = SolveVia::Product;
  ProductArena product;
  ProductObjective product_objective;
  WinningRegions product_regions;
  std::vector<Player> source_winner;
  std::optional<long long> threshold;  // lambda used to decide a bounded kind

  bool won_by(uint32_t source_vertex, Player p) const {
    return source_winner[source_vertex] == p;
  }
  std::vector<uint32_t> region(Player p) const;
};

/// Dispatcher: classical kinds route to the basic solvers, fixed kinds
/// to the matching product plus safety / co-Buchi, bounded kinds to the
/// threshold plus fixed product (default) or the request-response path.
SolveResult solve(const Arena& arena, const ObjectiveSpec& spec, SolveVia via = SolveVia::Product);

/// Solves a safety/co-Buchi/Buchi/reach objective stated on an arena.
WinningRegions solve_objective_on(const Arena& arena, const ProductObjective& objective);

}  // namespace winpar

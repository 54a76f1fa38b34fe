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

#include "winpar/synthesis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace winpar {

namespace {

bool is_beta_state(const ProductArena& prod, uint32_t u) {
  return prod.bad[u] &&
         (prod.kind == ProductKind::Window || prod.kind == ProductKind::Counter);
}

// Reach-style sides have an "objective achieved" point after which any
// continuation keeps winning and the solvers leave the move free.
bool reach_like(const ProductObjective& objective, Player player) {
  return (objective.kind == Objective::Reach && player == Player::P1) ||
         (objective.kind == Objective::Safe && player == Player::P2);
}

struct ExtractionTables {
  std::map<std::vector<int>, uint32_t> memory_id;
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> update_entries, next_entries;

  uint32_t intern(const std::vector<int>& payload) {
    auto it = memory_id.find(payload);
    if (it != memory_id.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(memory_id.size());
    memory_id.emplace(payload, id);
    return id;
  }
  void record(std::map<std::pair<uint32_t, uint32_t>, uint32_t>& table, uint32_t m, uint32_t v,
              uint32_t value) {
    auto [it, fresh] = table.emplace(std::make_pair(m, v), value);
    if (!fresh && it->second != value)
      throw std::logic_error("inconsistent product transitions during extraction");
  }
};

}  // namespace

MooreStrategy extract_strategy(const Arena& arena, const SolveResult& result, Player player) {
  if (result.via == SolveVia::RequestResponse)
    throw std::invalid_argument("strategy extraction requires the product path");
  if (is_bounded_kind(result.spec.kind) && player == Player::P2)
    throw std::invalid_argument("no finite certificate produced");

  const ProductArena& prod = result.product;
  const Arena& pg = prod.game;
  const uint32_t nv = arena.size();
  const auto& strat = result.product_regions.strategy(player);

  std::vector<uint32_t> seeds;
  for (uint32_t v = 0; v < nv; ++v)
    if (result.source_winner[v] == player) seeds.push_back(v);
  if (seeds.empty()) throw std::invalid_argument("requested player has empty winning region");

  ExtractionTables ex;
  const uint32_t m0 = ex.intern(prod.reset_payload);

  // Resolve a product successor to (continuation state, source vertex
  // moved to); an undirect beta passes through to its reset state, the
  // absorbing beta has no continuation.
  auto resolve = [&](uint32_t u2) -> std::pair<uint32_t, uint32_t> {
    if (u2 == prod.absorbing) return {kNoVertex, kNoVertex};
    if (is_beta_state(prod, u2)) return {pg.successors(u2)[0], prod.back_map[u2]};
    return {u2, prod.back_map[u2]};
  };

  std::deque<std::pair<uint32_t, uint32_t>> queue;  // (memory id, product state)
  std::set<std::pair<uint32_t, uint32_t>> seen;
  std::vector<std::pair<uint32_t, uint32_t>> sink_entries;  // (memory id, source vertex)
  auto push = [&](uint32_t m, uint32_t u) {
    if (seen.emplace(m, u).second) queue.emplace_back(m, u);
  };
  for (uint32_t v : seeds) push(m0, prod.init_of[v]);

  while (!queue.empty()) {
    auto [m, u] = queue.front();
    queue.pop_front();
    const uint32_t v = prod.back_map[u];
    const uint32_t mu = ex.intern(prod.payload[u]);
    ex.record(ex.update_entries, m, v, mu);

    if (arena.owner(v) == player) {
      uint32_t u2 = strat[u];
      if (u2 == kNoVertex) {
        if (!reach_like(result.product_objective, player))
          throw std::logic_error("missing product strategy inside winning region");
        u2 = pg.successors(u)[0];
      }
      auto [nstate, nvertex] = resolve(u2);
      if (nstate == kNoVertex) {
        nvertex = prod.overflow_choice[u];
        ex.record(ex.next_entries, m, v, nvertex);
        sink_entries.emplace_back(mu, nvertex);
        continue;
      }
      ex.record(ex.next_entries, m, v, nvertex);
      push(mu, nstate);
    } else {
      // Opponent moves: follow every source edge. Edges into the
      // absorbing beta collapse, so recover the overflowing targets as
      // the source successors not covered by a product successor.
      std::vector<char> covered(nv, 0);
      for (uint32_t u2 : pg.successors(u)) {
        auto [nstate, nvertex] = resolve(u2);
        if (nstate == kNoVertex) continue;
        covered[nvertex] = 1;
        push(mu, nstate);
      }
      for (uint32_t w : arena.successors(v))
        if (!covered[w]) sink_entries.emplace_back(mu, w);
    }
  }

  const bool need_sink = !sink_entries.empty();
  const uint32_t num_memory = static_cast<uint32_t>(ex.memory_id.size()) + (need_sink ? 1 : 0);
  const uint32_t sink = need_sink ? num_memory - 1 : kNoVertex;

  MooreStrategy machine = MooreStrategy::make(player, nv, num_memory);
  machine.initial = m0;
  if (need_sink) machine.memory_names[sink] = "sink";

  // Totality defaults; only pairs unreachable in consistent plays from
  // the winning region keep them.
  for (uint32_t m = 0; m < num_memory; ++m) {
    for (uint32_t v = 0; v < nv; ++v) {
      machine.set_update(m, v, m);
      if (arena.owner(v) == player) machine.set_next(m, v, arena.successors(v)[0]);
    }
  }
  for (auto& [key, mval] : ex.update_entries) machine.set_update(key.first, key.second, mval);
  for (auto& [key, vval] : ex.next_entries) machine.set_next(key.first, key.second, vval);
  for (auto& [m, v] : sink_entries) machine.set_update(m, v, sink);

  return machine;
}

RestrictedArena restrict_arena(const Arena& arena, const MooreStrategy& strategy) {
  validate_strategy(arena, strategy);
  const uint32_t nv = arena.size();
  const uint32_t nm = strategy.memory_size();

  RestrictedArena r;
  r.num_source = nv;
  r.game.set_dims(arena.dims());
  r.source_vertex.reserve(static_cast<size_t>(nv) * nm);
  r.memory_state.reserve(static_cast<size_t>(nv) * nm);
  for (uint32_t m = 0; m < nm; ++m) {
    for (uint32_t v = 0; v < nv; ++v) {
      std::vector<int> prios(arena.priorities(v).begin(), arena.priorities(v).end());
      r.game.add_vertex(arena.owner(v), std::move(prios));
      r.source_vertex.push_back(v);
      r.memory_state.push_back(m);
    }
  }
  for (uint32_t m = 0; m < nm; ++m) {
    for (uint32_t v = 0; v < nv; ++v) {
      uint32_t m2 = strategy.update_at(m, v);
      if (arena.owner(v) == strategy.player) {
        r.game.add_edge(r.index(v, m), r.index(strategy.next_at(m, v), m2));
      } else {
        for (uint32_t w : arena.successors(v)) r.game.add_edge(r.index(v, m), r.index(w, m2));
      }
    }
  }
  r.game.finalize();
  return r;
}

namespace {

// Deterministic walk over the verification product under the opponent's
// memoryless strategy: the verified machine's states have a single
// successor, the winner follows their strategy. Returns the refuting
// lasso over restricted states.
Lasso witness_walk(const RestrictedArena& r, const SolveResult& res, uint32_t u0, Player winner) {
  const ProductArena& prod = res.product;
  const Arena& pg = prod.game;
  const auto& strat = res.product_regions.strategy(winner);

  std::vector<uint32_t> seq;                       // restricted vertices
  std::unordered_map<uint32_t, size_t> state_pos;  // product state -> index in seq
  uint32_t u = prod.init_of[u0];
  for (;;) {
    if (!is_beta_state(prod, u)) {
      auto it = state_pos.find(u);
      if (it != state_pos.end()) {
        Lasso l;
        l.stem.assign(seq.begin(), seq.begin() + it->second);
        l.cycle.assign(seq.begin() + it->second, seq.end());
        return l;
      }
      state_pos.emplace(u, seq.size());
      seq.push_back(prod.back_map[u]);
    }
    uint32_t u2;
    if (pg.owner(u) == winner) {
      u2 = strat[u];
      if (u2 == kNoVertex) {
        if (!reach_like(res.product_objective, winner))
          throw std::logic_error("missing winner strategy during witness walk");
        u2 = pg.successors(u)[0];
      }
    } else {
      u2 = pg.successors(u)[0];
    }
    if (u2 == prod.absorbing) {
      // The violating move; any continuation completes a counterexample.
      // The free tail is vertex-deterministic, so the cycle is cut at a
      // repeated restricted vertex within it.
      uint32_t w = prod.overflow_choice[u];
      std::unordered_map<uint32_t, size_t> vertex_pos;
      for (;;) {
        auto it = vertex_pos.find(w);
        if (it != vertex_pos.end()) {
          Lasso l;
          l.stem.assign(seq.begin(), seq.begin() + it->second);
          l.cycle.assign(seq.begin() + it->second, seq.end());
          return l;
        }
        vertex_pos.emplace(w, seq.size());
        seq.push_back(w);
        w = r.game.successors(w)[0];
      }
    }
    u = u2;
  }
}

}  // namespace

VerifyResult verify_strategy(const Arena& arena, const MooreStrategy& strategy,
                             const ObjectiveSpec& spec, uint32_t initial) {
  if (initial >= arena.size()) throw std::invalid_argument("initial vertex out of range");
  spec.validate(arena);
  RestrictedArena r = restrict_arena(arena, strategy);

  ObjectiveSpec lifted = spec;
  for (auto& set : lifted.targets) {
    std::vector<uint32_t> big;
    for (uint32_t m = 0; m < strategy.memory_size(); ++m)
      for (uint32_t v : set) big.push_back(r.index(v, m));
    set = std::move(big);
  }

  // The bounded kinds go through the request-response path: thresholds
  // computed on the restricted arena blow the fixed product up, and
  // the exact verdict is all that is decidable here anyway (a failing
  // bounded strategy need not have an ultimately periodic refutation,
  // so no counterexample is produced for them).
  if (is_bounded_kind(spec.kind)) {
    SolveResult res = solve(r.game, lifted, SolveVia::RequestResponse);
    bool winning = res.won_by(r.index(initial, strategy.initial), strategy.player);
    return {winning, std::nullopt};
  }

  SolveResult res = solve(r.game, lifted, SolveVia::Product);
  uint32_t u0 = r.index(initial, strategy.initial);
  if (res.won_by(u0, strategy.player)) return {true, std::nullopt};

  Lasso restricted = witness_walk(r, res, u0, opponent(strategy.player));
  Lasso original;
  original.stem.reserve(restricted.stem.size());
  original.cycle.reserve(restricted.cycle.size());
  for (uint32_t u : restricted.stem) original.stem.push_back(r.source_vertex[u]);
  for (uint32_t u : restricted.cycle) original.cycle.push_back(r.source_vertex[u]);
  return {false, std::move(original)};
}

}  // namespace winpar

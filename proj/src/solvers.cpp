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

#include "winpar/solvers.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace winpar {

namespace {
constexpr uint32_t kInfRank = std::numeric_limits<uint32_t>::max();
}

std::vector<uint32_t> WinningRegions::region(Player p) const {
  std::vector<uint32_t> out;
  for (uint32_t v = 0; v < winner.size(); ++v)
    if (winner[v] == p) out.push_back(v);
  return out;
}

std::vector<char> make_mask(uint32_t n, const std::vector<uint32_t>& set) {
  std::vector<char> mask(n, 0);
  for (uint32_t v : set) {
    if (v >= n) throw std::invalid_argument("vertex out of range");
    mask[v] = 1;
  }
  return mask;
}

AttractorResult attractor(const Arena& arena, Player player, const std::vector<char>& target,
                          const std::vector<char>* alive) {
  const uint32_t n = arena.size();
  AttractorResult res;
  res.in.assign(n, 0);
  res.rank.assign(n, kInfRank);
  res.strategy.assign(n, kNoVertex);
  auto is_alive = [&](uint32_t v) { return !alive || (*alive)[v]; };

  std::vector<uint32_t> counts(n, 0);
  for (uint32_t v = 0; v < n; ++v) {
    if (!is_alive(v) || arena.owner(v) == player) continue;
    uint32_t c = 0;
    for (uint32_t w : arena.successors(v)) c += is_alive(w) ? 1 : 0;
    counts[v] = c;
  }

  std::deque<uint32_t> queue;
  for (uint32_t v = 0; v < n; ++v)
    if (target[v] && is_alive(v)) {
      res.in[v] = 1;
      res.rank[v] = 0;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    uint32_t u = queue.front();
    queue.pop_front();
    for (uint32_t v : arena.predecessors(u)) {
      if (!is_alive(v) || res.in[v]) continue;
      if (arena.owner(v) == player) {
        res.in[v] = 1;
        res.rank[v] = res.rank[u] + 1;
        queue.push_back(v);
      } else if (--counts[v] == 0) {
        res.in[v] = 1;
        res.rank[v] = res.rank[u] + 1;
        queue.push_back(v);
      }
    }
  }
  for (uint32_t v = 0; v < n; ++v) {
    if (!res.in[v] || res.rank[v] == 0 || arena.owner(v) != player) continue;
    for (uint32_t w : arena.successors(v)) {
      if (is_alive(w) && res.in[w] && res.rank[w] < res.rank[v]) {
        res.strategy[v] = w;
        break;
      }
    }
  }
  return res;
}

namespace {

uint32_t lowest_successor_in(const Arena& arena, uint32_t v, const std::vector<char>& set) {
  for (uint32_t w : arena.successors(v))
    if (set[w]) return w;
  return kNoVertex;
}

}  // namespace

WinningRegions solve_reachability(const Arena& arena, const std::vector<uint32_t>& target) {
  const uint32_t n = arena.size();
  auto tmask = make_mask(n, target);
  auto attr = attractor(arena, Player::P1, tmask);
  WinningRegions r;
  r.winner.assign(n, Player::P2);
  r.strategy1.assign(n, kNoVertex);
  r.strategy2.assign(n, kNoVertex);
  std::vector<char> win2(n, 0);
  for (uint32_t v = 0; v < n; ++v)
    if (!attr.in[v]) win2[v] = 1;
  for (uint32_t v = 0; v < n; ++v) {
    if (attr.in[v]) {
      r.winner[v] = Player::P1;
      if (arena.owner(v) == Player::P1)
        r.strategy1[v] = tmask[v] ? arena.successors(v)[0] : attr.strategy[v];
    } else if (arena.owner(v) == Player::P2) {
      r.strategy2[v] = lowest_successor_in(arena, v, win2);
    }
  }
  return r;
}

WinningRegions solve_safety(const Arena& arena, const std::vector<uint32_t>& safe) {
  const uint32_t n = arena.size();
  auto smask = make_mask(n, safe);
  std::vector<char> unsafe(n, 0);
  for (uint32_t v = 0; v < n; ++v) unsafe[v] = !smask[v];
  auto attr = attractor(arena, Player::P2, unsafe);
  WinningRegions r;
  r.winner.assign(n, Player::P1);
  r.strategy1.assign(n, kNoVertex);
  r.strategy2.assign(n, kNoVertex);
  std::vector<char> win1(n, 0);
  for (uint32_t v = 0; v < n; ++v)
    if (!attr.in[v]) win1[v] = 1;
  for (uint32_t v = 0; v < n; ++v) {
    if (attr.in[v]) {
      r.winner[v] = Player::P2;
      if (arena.owner(v) == Player::P2)
        r.strategy2[v] = unsafe[v] ? arena.successors(v)[0] : attr.strategy[v];
    } else if (arena.owner(v) == Player::P1) {
      r.strategy1[v] = lowest_successor_in(arena, v, win1);
    }
  }
  return r;
}

WinningRegions solve_buchi_for(const Arena& arena, Player player,
                               const std::vector<uint32_t>& accepting) {
  const uint32_t n = arena.size();
  auto fmask = make_mask(n, accepting);
  const Player opp = opponent(player);
  WinningRegions r;
  r.winner.assign(n, player);
  r.strategy1.assign(n, kNoVertex);
  r.strategy2.assign(n, kNoVertex);
  auto& strat_pl = player == Player::P1 ? r.strategy1 : r.strategy2;
  auto& strat_opp = player == Player::P1 ? r.strategy2 : r.strategy1;

  std::vector<char> alive(n, 1);
  std::vector<char> target(n, 0), umask(n, 0);
  for (;;) {
    for (uint32_t v = 0; v < n; ++v) target[v] = alive[v] && fmask[v];
    auto reach = attractor(arena, player, target, &alive);
    bool u_empty = true;
    for (uint32_t v = 0; v < n; ++v) {
      umask[v] = alive[v] && !reach.in[v];
      u_empty = u_empty && !umask[v];
    }
    if (u_empty) {
      for (uint32_t v = 0; v < n; ++v) {
        if (!alive[v] || arena.owner(v) != player) continue;
        strat_pl[v] = target[v] ? lowest_successor_in(arena, v, alive) : reach.strategy[v];
      }
      break;
    }
    auto removed = attractor(arena, opp, umask, &alive);
    for (uint32_t v = 0; v < n; ++v) {
      if (!removed.in[v]) continue;
      r.winner[v] = opp;
      alive[v] = 0;
      if (arena.owner(v) == opp)
        strat_opp[v] = umask[v] ? lowest_successor_in(arena, v, umask) : removed.strategy[v];
    }
  }
  return r;
}

WinningRegions solve_buchi(const Arena& arena, const std::vector<uint32_t>& accepting) {
  return solve_buchi_for(arena, Player::P1, accepting);
}

WinningRegions solve_cobuchi(const Arena& arena, const std::vector<uint32_t>& allowed) {
  const uint32_t n = arena.size();
  auto amask = make_mask(n, allowed);
  std::vector<uint32_t> penalized;
  for (uint32_t v = 0; v < n; ++v)
    if (!amask[v]) penalized.push_back(v);
  // P2's objective is to visit the complement infinitely often.
  return solve_buchi_for(arena, Player::P2, penalized);
}

namespace {

void zielonka(const Arena& arena, std::vector<char>& mask, WinningRegions& out) {
  int c = std::numeric_limits<int>::max();
  const uint32_t n = arena.size();
  for (uint32_t v = 0; v < n; ++v)
    if (mask[v]) c = std::min(c, arena.priority(v, 0));
  if (c == std::numeric_limits<int>::max()) return;

  const Player i = c % 2 == 0 ? Player::P1 : Player::P2;
  const Player opp = opponent(i);
  auto& strat_i = i == Player::P1 ? out.strategy1 : out.strategy2;
  auto& strat_opp = i == Player::P1 ? out.strategy2 : out.strategy1;

  std::vector<char> tmask(n, 0);
  for (uint32_t v = 0; v < n; ++v) tmask[v] = mask[v] && arena.priority(v, 0) == c;
  auto head = attractor(arena, i, tmask, &mask);

  std::vector<char> rest(n, 0);
  for (uint32_t v = 0; v < n; ++v) rest[v] = mask[v] && !head.in[v];
  zielonka(arena, rest, out);

  bool opp_wins_some = false;
  for (uint32_t v = 0; v < n && !opp_wins_some; ++v)
    opp_wins_some = rest[v] && out.winner[v] == opp;

  if (!opp_wins_some) {
    for (uint32_t v = 0; v < n; ++v) {
      if (!mask[v]) continue;
      out.winner[v] = i;
      if (head.in[v] && arena.owner(v) == i)
        strat_i[v] = tmask[v] ? lowest_successor_in(arena, v, mask) : head.strategy[v];
    }
    return;
  }

  std::vector<char> wopp(n, 0);
  for (uint32_t v = 0; v < n; ++v) wopp[v] = rest[v] && out.winner[v] == opp;
  auto pull = attractor(arena, opp, wopp, &mask);
  for (uint32_t v = 0; v < n; ++v) {
    if (!pull.in[v]) continue;
    out.winner[v] = opp;
    if (arena.owner(v) == opp && !wopp[v]) strat_opp[v] = pull.strategy[v];
    if (arena.owner(v) == i && !wopp[v]) strat_i[v] = kNoVertex;
  }
  std::vector<char> remainder(n, 0);
  for (uint32_t v = 0; v < n; ++v) remainder[v] = mask[v] && !pull.in[v];
  zielonka(arena, remainder, out);
}

}  // namespace

WinningRegions solve_parity(const Arena& arena) {
  if (arena.dims() != 1) throw std::invalid_argument("parity backend is one-dimensional");
  const uint32_t n = arena.size();
  WinningRegions r;
  r.winner.assign(n, Player::P1);
  r.strategy1.assign(n, kNoVertex);
  r.strategy2.assign(n, kNoVertex);
  std::vector<char> mask(n, 1);
  zielonka(arena, mask, r);
  return r;
}

WinningRegions solve_genreach(const Arena& arena,
                              const std::vector<std::vector<uint32_t>>& targets) {
  const uint32_t n = arena.size();
  const size_t k = targets.size();
  if (k == 0) throw std::invalid_argument("generalized reachability needs at least one target set");
  if (k > 20) throw std::invalid_argument("too many target sets for the subset product");

  std::vector<uint32_t> hits(n, 0);
  for (size_t m = 0; m < k; ++m)
    for (uint32_t v : targets[m]) {
      if (v >= n) throw std::invalid_argument("target vertex out of range");
      hits[v] |= 1u << m;
    }
  const uint32_t full = (k == 32 ? ~0u : (1u << k) - 1);

  // Visited-set product, built on the fly from every (v, hits(v)) seed.
  Arena product;
  std::unordered_map<uint64_t, uint32_t> index;
  std::vector<std::pair<uint32_t, uint32_t>> states;  // (source, mask)
  std::vector<uint32_t> init_of(n);
  std::deque<uint32_t> queue;
  auto intern = [&](uint32_t v, uint32_t mask) {
    uint64_t key = (static_cast<uint64_t>(mask) << 32) | v;
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    uint32_t id = product.add_vertex(arena.owner(v), {0});
    index.emplace(key, id);
    states.emplace_back(v, mask);
    queue.push_back(id);
    return id;
  };
  for (uint32_t v = 0; v < n; ++v) init_of[v] = intern(v, hits[v]);
  while (!queue.empty()) {
    uint32_t id = queue.front();
    queue.pop_front();
    auto [v, mask] = states[id];
    for (uint32_t w : arena.successors(v)) product.add_edge(id, intern(w, mask | hits[w]));
  }
  product.finalize();

  std::vector<uint32_t> goal;
  for (uint32_t id = 0; id < product.size(); ++id)
    if (states[id].second == full) goal.push_back(id);
  auto regions = solve_reachability(product, goal);

  WinningRegions r;
  r.winner.assign(n, Player::P2);
  r.strategy1.assign(n, kNoVertex);
  r.strategy2.assign(n, kNoVertex);
  for (uint32_t v = 0; v < n; ++v) r.winner[v] = regions.winner[init_of[v]];
  return r;
}

}  // namespace winpar

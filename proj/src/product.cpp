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

#include "winpar/product.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "winpar/objectives.hpp"

namespace winpar {

namespace {

constexpr uint64_t kMaxCode = uint64_t{1} << 62;
constexpr size_t kMaxProductStates = 80'000'000;

// Mixed-radix codec for payload vectors (values already shifted >= 0).
struct PayloadCodec {
  std::vector<uint64_t> weight;
  uint64_t space = 1;

  explicit PayloadCodec(const std::vector<uint64_t>& radix) {
    weight.resize(radix.size());
    for (size_t i = 0; i < radix.size(); ++i) {
      weight[i] = space;
      if (radix[i] == 0 || space > kMaxCode / radix[i])
        throw std::runtime_error("product too large");
      space *= radix[i];
    }
  }
  uint64_t encode(std::span<const int> shifted) const {
    uint64_t code = 0;
    for (size_t i = 0; i < shifted.size(); ++i) code += weight[i] * static_cast<uint64_t>(shifted[i]);
    return code;
  }
};

struct Builder {
  const Arena& source;
  ProductArena& out;
  std::unordered_map<uint64_t, uint32_t> index;
  std::deque<uint32_t> queue;
  uint64_t code_stride;

  Builder(const Arena& src, ProductArena& o, uint64_t payload_space)
      : source(src), out(o), code_stride(src.size()) {
    if (payload_space > kMaxCode / std::max<uint64_t>(code_stride, 1))
      throw std::runtime_error("product too large");
    if (payload_space > kMaxProductStates) throw std::runtime_error("product too large");
    out.payload_space = payload_space;
  }

  uint32_t intern(uint32_t v, std::vector<int> payload, uint64_t code) {
    uint64_t key = code * code_stride + v;
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    if (out.game.size() >= kMaxProductStates) throw std::runtime_error("product too large");
    uint32_t id = out.game.add_vertex(source.owner(v), {0});
    out.back_map.push_back(v);
    out.bad.push_back(0);
    out.payload.push_back(std::move(payload));
    out.overflow_choice.push_back(kNoVertex);
    index.emplace(key, id);
    queue.push_back(id);
    return id;
  }

  uint32_t add_beta(uint32_t v) {
    uint32_t id = out.game.add_vertex(Player::P2, {0});
    out.back_map.push_back(v);
    out.bad.push_back(1);
    out.payload.push_back(out.reset_payload);
    out.overflow_choice.push_back(kNoVertex);
    return id;
  }
};

}  // namespace

std::vector<uint32_t> ProductArena::bad_states() const {
  std::vector<uint32_t> s;
  for (uint32_t u = 0; u < size(); ++u)
    if (bad[u]) s.push_back(u);
  return s;
}

std::vector<uint32_t> ProductArena::good_states() const {
  std::vector<uint32_t> s;
  for (uint32_t u = 0; u < size(); ++u)
    if (!bad[u]) s.push_back(u);
  return s;
}

ProductArena build_fixwp_product(const Arena& arena, int lambda, bool direct) {
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  const uint32_t nv = arena.size();
  const int n = arena.dims();

  std::vector<uint64_t> radix;
  for (int m = 0; m < n; ++m) {
    radix.push_back(static_cast<uint64_t>(arena.max_priority(m)) + 1);
    radix.push_back(static_cast<uint64_t>(lambda));
  }
  PayloadCodec codec(radix);

  ProductArena prod;
  prod.kind = ProductKind::Window;
  prod.direct = direct;
  prod.game.set_dims(1);
  prod.reset_payload.assign(2 * n, 0);  // all-even marker: delta resets on any vertex
  Builder b(arena, prod, codec.space);

  auto reset_of = [&](uint32_t v) {
    std::vector<int> p(2 * n);
    for (int m = 0; m < n; ++m) {
      p[2 * m] = arena.priority(v, m);
      p[2 * m + 1] = 0;
    }
    return p;
  };

  prod.init_of.resize(nv);
  for (uint32_t v = 0; v < nv; ++v) {
    auto p = reset_of(v);
    uint64_t code = codec.encode(p);
    prod.init_of[v] = b.intern(v, std::move(p), code);
  }

  std::vector<uint32_t> beta_of(nv, kNoVertex);
  std::vector<int> next_payload(2 * n);
  while (!b.queue.empty()) {
    uint32_t u = b.queue.front();
    b.queue.pop_front();
    uint32_t v = prod.back_map[u];
    const std::vector<int> pay = prod.payload[u];  // copy: intern() reallocates payload storage
    for (uint32_t w : arena.successors(v)) {
      bool overflow = false;
      for (int m = 0; m < n && !overflow; ++m) {
        int c = pay[2 * m], l = pay[2 * m + 1];
        int pw = arena.priority(w, m);
        if (c % 2 == 0) {
          next_payload[2 * m] = pw;
          next_payload[2 * m + 1] = 0;
        } else if (l < lambda - 1) {
          next_payload[2 * m] = std::min(c, pw);
          next_payload[2 * m + 1] = l + 1;
        } else {
          overflow = true;
        }
      }
      if (!overflow) {
        uint64_t code = codec.encode(next_payload);
        prod.game.add_edge(u, b.intern(w, next_payload, code));
      } else if (direct) {
        if (prod.absorbing == kNoVertex) {
          prod.absorbing = prod.game.add_vertex(Player::P2, {0});
          prod.back_map.push_back(kNoVertex);
          prod.bad.push_back(1);
          prod.payload.push_back(prod.reset_payload);
          prod.overflow_choice.push_back(kNoVertex);
          prod.game.add_edge(prod.absorbing, prod.absorbing);
        }
        if (prod.overflow_choice[u] == kNoVertex) prod.overflow_choice[u] = w;
        prod.game.add_edge(u, prod.absorbing);
      } else {
        if (beta_of[w] == kNoVertex) {
          beta_of[w] = b.add_beta(w);
          prod.game.add_edge(beta_of[w], prod.init_of[w]);
        }
        prod.game.add_edge(u, beta_of[w]);
      }
    }
  }
  prod.game.finalize();
  return prod;
}

ProductArena build_fixpr_counter_product(const Arena& arena, int lambda, bool direct) {
  if (lambda < 2)
    throw std::invalid_argument("counter product needs lambda >= 2 (lambda = 1 is all-even safety)");
  const uint32_t nv = arena.size();
  const int n = arena.dims();

  // One counter per (dimension, odd priority), stored shifted by one so
  // that bot = 0 and values 0..lambda-2 become 1..lambda-1.
  std::vector<std::pair<int, int>> counters;
  for (int m = 0; m < n; ++m)
    for (int c = 1; c < arena.max_priority(m); c += 2) counters.emplace_back(m, c);
  std::vector<uint64_t> radix(counters.size(), static_cast<uint64_t>(lambda));
  PayloadCodec codec(radix);

  ProductArena prod;
  prod.kind = ProductKind::Counter;
  prod.direct = direct;
  prod.game.set_dims(1);
  prod.reset_payload.assign(counters.size(), 0);
  Builder b(arena, prod, codec.space);

  auto reset_of = [&](uint32_t v) {
    std::vector<int> p(counters.size(), 0);
    for (size_t i = 0; i < counters.size(); ++i)
      if (arena.priority(v, counters[i].first) == counters[i].second) p[i] = 1;
    return p;
  };

  prod.init_of.resize(nv);
  for (uint32_t v = 0; v < nv; ++v) {
    auto p = reset_of(v);
    uint64_t code = codec.encode(p);
    prod.init_of[v] = b.intern(v, std::move(p), code);
  }

  std::vector<uint32_t> beta_of(nv, kNoVertex);
  std::vector<int> next_payload(counters.size());
  while (!b.queue.empty()) {
    uint32_t u = b.queue.front();
    b.queue.pop_front();
    uint32_t v = prod.back_map[u];
    const std::vector<int> pay = prod.payload[u];  // copy: intern() reallocates payload storage
    for (uint32_t w : arena.successors(v)) {
      bool overflow = false;
      for (size_t i = 0; i < counters.size() && !overflow; ++i) {
        auto [m, c] = counters[i];
        int pw = arena.priority(w, m);
        if (pay[i] == lambda - 1 && !answers(pw, c)) overflow = true;
      }
      if (overflow) {
        if (direct) {
          if (prod.absorbing == kNoVertex) {
            prod.absorbing = prod.game.add_vertex(Player::P2, {0});
            prod.back_map.push_back(kNoVertex);
            prod.bad.push_back(1);
            prod.payload.push_back(prod.reset_payload);
            prod.overflow_choice.push_back(kNoVertex);
            prod.game.add_edge(prod.absorbing, prod.absorbing);
          }
          if (prod.overflow_choice[u] == kNoVertex) prod.overflow_choice[u] = w;
          prod.game.add_edge(u, prod.absorbing);
        } else {
          if (beta_of[w] == kNoVertex) {
            beta_of[w] = b.add_beta(w);
            prod.game.add_edge(beta_of[w], prod.init_of[w]);
          }
          prod.game.add_edge(u, beta_of[w]);
        }
        continue;
      }
      for (size_t i = 0; i < counters.size(); ++i) {
        auto [m, c] = counters[i];
        int pw = arena.priority(w, m);
        if (pay[i] != 0) {
          // A repeated occurrence of c does not reset a running counter.
          next_payload[i] = answers(pw, c) ? 0 : pay[i] + 1;
        } else {
          next_payload[i] = pw == c ? 1 : 0;
        }
      }
      uint64_t code = codec.encode(next_payload);
      prod.game.add_edge(u, b.intern(w, next_payload, code));
    }
  }
  prod.game.finalize();
  return prod;
}

ProductArena build_fixpr_history_product(const Arena& arena, int lambda, bool direct) {
  if (arena.dims() != 1) throw std::invalid_argument("history product is one-dimensional");
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  const uint32_t nv = arena.size();
  const int sentinel_priority = arena.max_priority(0);  // even, neutral filler

  // Payload = previous lambda-1 vertices, oldest first; slot value
  // nv encodes the sentinel.
  std::vector<uint64_t> radix(static_cast<size_t>(lambda) - 1, static_cast<uint64_t>(nv) + 1);
  PayloadCodec codec(radix);

  ProductArena prod;
  prod.kind = ProductKind::History;
  prod.direct = direct;
  prod.game.set_dims(1);
  prod.reset_payload.assign(static_cast<size_t>(lambda) - 1, static_cast<int>(nv));
  Builder b(arena, prod, codec.space);

  auto prio_of_slot = [&](int slot) {
    return slot == static_cast<int>(nv) ? sentinel_priority
                                        : arena.priority(static_cast<uint32_t>(slot), 0);
  };
  // Bad iff the oldest window entry is never answered inside the window.
  auto is_bad = [&](const std::vector<int>& hist, uint32_t current) {
    int first = hist.empty() ? static_cast<int>(current) : hist[0];
    int opened = prio_of_slot(first);
    if (opened % 2 == 0) return false;
    for (size_t i = 1; i < hist.size(); ++i)
      if (answers(prio_of_slot(hist[i]), opened)) return false;
    return !answers(arena.priority(current, 0), opened);
  };

  prod.init_of.resize(nv);
  for (uint32_t v = 0; v < nv; ++v)
    prod.init_of[v] = b.intern(v, prod.reset_payload, codec.encode(prod.reset_payload));

  std::vector<int> next_payload(static_cast<size_t>(lambda) - 1);
  while (!b.queue.empty()) {
    uint32_t u = b.queue.front();
    b.queue.pop_front();
    uint32_t v = prod.back_map[u];
    prod.bad[u] = is_bad(prod.payload[u], v) ? 1 : 0;
    if (lambda > 1) {
      const std::vector<int> pay = prod.payload[u];  // copy: intern() reallocates payload storage
      std::copy(pay.begin() + 1, pay.end(), next_payload.begin());
      next_payload[static_cast<size_t>(lambda) - 2] = static_cast<int>(v);
    }
    uint64_t code = codec.encode(next_payload);
    for (uint32_t w : arena.successors(v)) prod.game.add_edge(u, b.intern(w, next_payload, code));
  }
  prod.game.finalize();
  return prod;
}

ProductArena build_genreach_product(const Arena& arena,
                                    const std::vector<std::vector<uint32_t>>& targets) {
  const uint32_t nv = arena.size();
  const size_t k = targets.size();
  if (k == 0) throw std::invalid_argument("generalized reachability needs at least one target set");
  if (k > 20) throw std::invalid_argument("too many target sets for the subset product");

  std::vector<int> hits(nv, 0);
  for (size_t m = 0; m < k; ++m)
    for (uint32_t v : targets[m]) {
      if (v >= nv) throw std::invalid_argument("target vertex out of range");
      hits[v] |= 1 << m;
    }

  PayloadCodec codec({uint64_t{1} << k});
  ProductArena prod;
  prod.kind = ProductKind::Subset;
  prod.game.set_dims(1);
  prod.reset_payload.assign(1, 0);
  Builder b(arena, prod, codec.space);

  prod.init_of.resize(nv);
  for (uint32_t v = 0; v < nv; ++v)
    prod.init_of[v] = b.intern(v, {hits[v]}, static_cast<uint64_t>(hits[v]));
  while (!b.queue.empty()) {
    uint32_t u = b.queue.front();
    b.queue.pop_front();
    uint32_t v = prod.back_map[u];
    int mask = prod.payload[u][0];
    for (uint32_t w : arena.successors(v)) {
      int mask2 = mask | hits[w];
      prod.game.add_edge(u, b.intern(w, {mask2}, static_cast<uint64_t>(mask2)));
    }
  }
  prod.game.finalize();
  return prod;
}

ProductArena build_identity_product(const Arena& arena, bool mark_odd_bad, bool direct) {
  ProductArena prod;
  prod.kind = ProductKind::Identity;
  prod.direct = direct;
  prod.game = arena;
  const uint32_t nv = arena.size();
  prod.back_map.resize(nv);
  prod.init_of.resize(nv);
  prod.bad.assign(nv, 0);
  prod.payload.assign(nv, {});
  prod.overflow_choice.assign(nv, kNoVertex);
  prod.payload_space = 1;
  for (uint32_t v = 0; v < nv; ++v) {
    prod.back_map[v] = v;
    prod.init_of[v] = v;
    if (mark_odd_bad)
      for (int m = 0; m < arena.dims(); ++m)
        if (arena.priority(v, m) % 2 != 0) prod.bad[v] = 1;
  }
  return prod;
}

std::vector<RRPair> build_rr_instance(const Arena& arena) {
  std::vector<RRPair> pairs;
  for (int m = 0; m < arena.dims(); ++m) {
    for (int c = 1; c < arena.max_priority(m); c += 2) {
      RRPair pair;
      pair.dimension = m;
      pair.priority = c;
      for (uint32_t v = 0; v < arena.size(); ++v) {
        int p = arena.priority(v, m);
        if (p == c) pair.request.push_back(v);
        if (answers(p, c)) pair.response.push_back(v);
      }
      if (!pair.request.empty()) pairs.push_back(std::move(pair));
    }
  }
  return pairs;
}

ProductArena build_rr_product(const Arena& arena, const std::vector<RRPair>& pairs) {
  const uint32_t nv = arena.size();
  const int r = static_cast<int>(pairs.size());
  if (r < 1) throw std::invalid_argument("request-response product needs at least one pair");
  if (r > 20) throw std::invalid_argument("too many request-response pairs");

  std::vector<int> req(nv, 0), resp(nv, 0);
  for (int i = 0; i < r; ++i) {
    for (uint32_t v : pairs[i].request) req[v] |= 1 << i;
    for (uint32_t v : pairs[i].response) resp[v] |= 1 << i;
  }

  PayloadCodec codec({uint64_t{1} << r, static_cast<uint64_t>(r)});
  ProductArena prod;
  prod.kind = ProductKind::RequestResponse;
  prod.game.set_dims(1);
  prod.reset_payload = {0, 1};
  Builder b(arena, prod, codec.space);

  auto encode = [&](int pending, int pointer) {
    return static_cast<uint64_t>(pending) + (uint64_t{1} << r) * static_cast<uint64_t>(pointer - 1);
  };
  prod.init_of.resize(nv);
  for (uint32_t v = 0; v < nv; ++v)
    prod.init_of[v] = b.intern(v, {req[v], 1}, encode(req[v], 1));
  while (!b.queue.empty()) {
    uint32_t u = b.queue.front();
    b.queue.pop_front();
    uint32_t v = prod.back_map[u];
    int pending = prod.payload[u][0], pointer = prod.payload[u][1];
    int advanced = (pending >> (pointer - 1)) & 1 ? pointer : pointer % r + 1;
    for (uint32_t w : arena.successors(v)) {
      int pending2 = (pending & ~resp[w]) | req[w];
      prod.game.add_edge(u, b.intern(w, {pending2, advanced}, encode(pending2, advanced)));
    }
  }
  prod.game.finalize();
  // Pointer-wrap states form the acceptance set; mark the rest as "bad"
  // is not meaningful here, so `bad` stays clear.
  return prod;
}

namespace {

std::vector<uint32_t> rr_acceptance(const ProductArena& prod, int r) {
  std::vector<uint32_t> acc;
  for (uint32_t u = 0; u < prod.size(); ++u) {
    int pending = prod.payload[u][0], pointer = prod.payload[u][1];
    if (pointer == r && ((pending >> (r - 1)) & 1) == 0) acc.push_back(u);
  }
  return acc;
}

struct SubArena {
  Arena game;
  std::vector<uint32_t> to_sub;   // full -> sub or kNoVertex
  std::vector<uint32_t> to_full;  // sub -> full
};

SubArena restrict_to(const Arena& arena, const std::vector<char>& alive) {
  SubArena sub;
  sub.game.set_dims(arena.dims());
  sub.to_sub.assign(arena.size(), kNoVertex);
  for (uint32_t v = 0; v < arena.size(); ++v) {
    if (!alive[v]) continue;
    std::vector<int> prios(arena.priorities(v).begin(), arena.priorities(v).end());
    sub.to_sub[v] = sub.game.add_vertex(arena.owner(v), std::move(prios));
    sub.to_full.push_back(v);
  }
  for (uint32_t v = 0; v < arena.size(); ++v) {
    if (!alive[v]) continue;
    for (uint32_t w : arena.successors(v))
      if (alive[w]) sub.game.add_edge(sub.to_sub[v], sub.to_sub[w]);
  }
  sub.game.finalize();
  return sub;
}

// Winner of the *direct* bounded request-response game per vertex.
std::vector<Player> direct_rr_winner(const Arena& arena, const std::vector<RRPair>& pairs) {
  std::vector<Player> winner(arena.size(), Player::P1);
  if (pairs.empty()) return winner;
  auto prod = build_rr_product(arena, pairs);
  auto acc = rr_acceptance(prod, static_cast<int>(pairs.size()));
  auto regions = solve_buchi(prod.game, acc);
  for (uint32_t v = 0; v < arena.size(); ++v) winner[v] = regions.winner[prod.init_of[v]];
  return winner;
}

}  // namespace

WinningRegions solve_request_response(const Arena& arena, const std::vector<RRPair>& pairs,
                                      bool direct) {
  const uint32_t nv = arena.size();
  WinningRegions out;
  out.winner.assign(nv, Player::P2);
  out.strategy1.assign(nv, kNoVertex);
  out.strategy2.assign(nv, kNoVertex);
  if (pairs.empty()) {
    out.winner.assign(nv, Player::P1);
    for (uint32_t v = 0; v < nv; ++v)
      if (arena.owner(v) == Player::P1) out.strategy1[v] = arena.successors(v)[0];
    return out;
  }
  if (direct) {
    auto winner = direct_rr_winner(arena, pairs);
    out.winner = std::move(winner);
    return out;
  }

  // Layered fixpoint: accumulate P1 attractors of the direct winning
  // set of the remaining subgame until it comes up empty; the rest is a
  // P1-trap in which P2 wins the direct complement from everywhere.
  std::vector<char> alive(nv, 1);
  for (;;) {
    auto sub = restrict_to(arena, alive);
    if (sub.game.size() == 0) break;
    auto sub_winner = direct_rr_winner(sub.game, build_rr_instance(sub.game));
    std::vector<char> direct_win(nv, 0);
    bool any = false;
    for (uint32_t s = 0; s < sub.game.size(); ++s)
      if (sub_winner[s] == Player::P1) {
        direct_win[sub.to_full[s]] = 1;
        any = true;
      }
    if (!any) break;
    auto attr = attractor(arena, Player::P1, direct_win, &alive);
    for (uint32_t v = 0; v < nv; ++v)
      if (attr.in[v]) {
        out.winner[v] = Player::P1;
        alive[v] = 0;
      }
  }
  return out;
}

long long bounded_threshold(const Arena& arena, Objective kind) {
  if (kind != Objective::BndPR && kind != Objective::BndWP)
    throw std::invalid_argument("bounded_threshold applies to BndPR / BndWP");
  const unsigned __int128 V = arena.size();
  const unsigned __int128 d = static_cast<unsigned>(arena.max_priority());
  const unsigned __int128 n = static_cast<unsigned>(arena.dims());
  const unsigned __int128 cap = static_cast<unsigned __int128>(1) << 62;
  unsigned __int128 result;
  if (arena.dims() == 1) {
    result = kind == Objective::BndPR ? V : (d / 2) * V;
  } else {
    unsigned __int128 e = n * (d / 2);
    if (e >= 62) throw std::overflow_error("instance too large for bounded solving");
    unsigned __int128 b = V * (static_cast<unsigned __int128>(1) << static_cast<unsigned>(e)) * e;
    result = kind == Objective::BndPR ? b : b * (d / 2);
  }
  if (result >= cap) throw std::overflow_error("instance too large for bounded solving");
  long long r = static_cast<long long>(result);
  return std::max<long long>(r, 1);
}

std::vector<uint32_t> SolveResult::region(Player p) const {
  std::vector<uint32_t> out;
  for (uint32_t v = 0; v < source_winner.size(); ++v)
    if (source_winner[v] == p) out.push_back(v);
  return out;
}

WinningRegions solve_objective_on(const Arena& arena, const ProductObjective& objective) {
  switch (objective.kind) {
    case Objective::Parity: return solve_parity(arena);
    case Objective::Reach: return solve_reachability(arena, objective.set);
    case Objective::Safe: return solve_safety(arena, objective.set);
    case Objective::Buchi: return solve_buchi(arena, objective.set);
    case Objective::CoBuchi: return solve_cobuchi(arena, objective.set);
    default:
      throw std::logic_error("unsupported product objective");
  }
}

namespace {

ProductArena build_fixed_product(const Arena& arena, Objective kind, int lambda, bool direct,
                                 SolveVia via) {
  if (kind == Objective::FixWP) return build_fixwp_product(arena, lambda, direct);
  if (via == SolveVia::History) return build_fixpr_history_product(arena, lambda, direct);
  if (lambda == 1) return build_identity_product(arena, /*mark_odd_bad=*/true, direct);
  return build_fixpr_counter_product(arena, lambda, direct);
}

ProductObjective product_objective_for(const ProductArena& prod, bool direct) {
  ProductObjective obj;
  obj.kind = direct ? Objective::Safe : Objective::CoBuchi;
  obj.set = prod.good_states();
  return obj;
}

}  // namespace

SolveResult solve(const Arena& arena, const ObjectiveSpec& spec, SolveVia via) {
  if (!arena.finalized()) throw std::invalid_argument("arena not finalized");
  auto issues = validate_arena(arena);
  if (!issues.empty()) throw std::invalid_argument("invalid arena: " + issues.front().message);
  spec.validate(arena);

  SolveResult res;
  res.spec = spec;
  res.via = via;

  if (via == SolveVia::History && !(is_fixed_kind(spec.kind) && is_pr_kind(spec.kind)))
    throw std::invalid_argument("history product only applies to fixpr");
  if (via == SolveVia::RequestResponse && !is_bounded_kind(spec.kind))
    throw std::invalid_argument("request-response path only applies to bounded kinds");

  switch (spec.kind) {
    case Objective::Parity: {
      if (arena.dims() != 1) throw std::invalid_argument("parity backend is one-dimensional");
      res.product = build_identity_product(arena, false, false);
      res.product_objective = {Objective::Parity, {}};
      res.product_regions = solve_objective_on(res.product.game, res.product_objective);
      break;
    }
    case Objective::Reach:
    case Objective::Safe:
    case Objective::Buchi:
    case Objective::CoBuchi: {
      res.product = build_identity_product(arena, false, false);
      res.product_objective = {spec.kind, spec.targets[0]};
      res.product_regions = solve_objective_on(res.product.game, res.product_objective);
      break;
    }
    case Objective::GenReach: {
      res.product = build_genreach_product(arena, spec.targets);
      const int full = (1 << spec.targets.size()) - 1;
      ProductObjective obj;
      obj.kind = Objective::Reach;
      for (uint32_t u = 0; u < res.product.size(); ++u)
        if (res.product.payload[u][0] == full) obj.set.push_back(u);
      res.product_objective = std::move(obj);
      res.product_regions = solve_objective_on(res.product.game, res.product_objective);
      break;
    }
    case Objective::FixPR:
    case Objective::FixWP: {
      res.product = build_fixed_product(arena, spec.kind, *spec.lambda, spec.direct, via);
      res.product_objective = product_objective_for(res.product, spec.direct);
      res.product_regions = solve_objective_on(res.product.game, res.product_objective);
      break;
    }
    case Objective::BndPR:
    case Objective::BndWP: {
      if (via == SolveVia::RequestResponse) {
        auto pairs = build_rr_instance(arena);
        auto regions = solve_request_response(arena, pairs, spec.direct);
        if (pairs.empty()) {
          res.product = build_identity_product(arena, true, spec.direct);
          res.product_objective = product_objective_for(res.product, spec.direct);
        } else {
          res.product = build_rr_product(arena, pairs);
          res.product_objective = {Objective::Buchi,
                                   rr_acceptance(res.product, static_cast<int>(pairs.size()))};
        }
        res.product_regions = solve_objective_on(res.product.game, res.product_objective);
        res.source_winner = std::move(regions.winner);
        return res;
      }
      long long threshold = bounded_threshold(arena, spec.kind);
      res.threshold = threshold;
      Objective fixed = spec.kind == Objective::BndPR ? Objective::FixPR : Objective::FixWP;
      res.product = build_fixed_product(arena, fixed, static_cast<int>(threshold), spec.direct,
                                        SolveVia::Product);
      res.product_objective = product_objective_for(res.product, spec.direct);
      res.product_regions = solve_objective_on(res.product.game, res.product_objective);
      break;
    }
  }

  res.source_winner.resize(arena.size());
  for (uint32_t v = 0; v < arena.size(); ++v)
    res.source_winner[v] = res.product_regions.winner[res.product.init_of[v]];
  return res;
}

}  // namespace winpar

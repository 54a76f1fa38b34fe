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

#include "winpar/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "winpar/io.hpp"
#include "winpar/objectives.hpp"

namespace winpar {

namespace {

constexpr uint32_t kUnreached = UINT32_MAX;

bool is_beta(const ProductArena& prod, uint32_t u) {
  return prod.bad[u] &&
         (prod.kind == ProductKind::Window || prod.kind == ProductKind::Counter);
}

// BFS distances in the product, optionally confined to `allowed` states
// (beta states may still be traversed when `through_beta` is set, to
// let undirect stems pass bookkeeping resets).
std::vector<uint32_t> bfs(const Arena& g, uint32_t from, const std::vector<char>* allowed,
                          std::vector<uint32_t>* parent = nullptr) {
  std::vector<uint32_t> dist(g.size(), kUnreached);
  if (parent) parent->assign(g.size(), kNoVertex);
  std::deque<uint32_t> queue;
  dist[from] = 0;
  queue.push_back(from);
  while (!queue.empty()) {
    uint32_t u = queue.front();
    queue.pop_front();
    for (uint32_t w : g.successors(u)) {
      if (dist[w] != kUnreached) continue;
      if (allowed && !(*allowed)[w]) continue;
      dist[w] = dist[u] + 1;
      if (parent) (*parent)[w] = u;
      queue.push_back(w);
    }
  }
  return dist;
}

std::vector<uint32_t> path_from_parents(const std::vector<uint32_t>& parent, uint32_t from,
                                        uint32_t to) {
  std::vector<uint32_t> path;
  for (uint32_t u = to; u != from; u = parent[u]) path.push_back(u);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

// Shortest cycle through u within `allowed`, as a state sequence
// starting at u, or empty.
std::vector<uint32_t> cycle_through(const Arena& g, uint32_t u, const std::vector<char>* allowed,
                                    size_t bound) {
  std::vector<uint32_t> parent;
  auto dist = bfs(g, u, allowed, &parent);
  uint32_t best = kNoVertex;
  for (uint32_t w : g.predecessors(u)) {
    if (dist[w] == kUnreached || (allowed && !(*allowed)[w])) continue;
    if (dist[w] + 1 > bound) continue;
    if (best == kNoVertex || dist[w] < dist[best]) best = w;
  }
  if (best == kNoVertex) return {};
  return path_from_parents(parent, u, best);
}

std::vector<uint32_t> project_states(const ProductArena& prod, const std::vector<uint32_t>& states) {
  std::vector<uint32_t> out;
  for (uint32_t u : states)
    if (!is_beta(prod, u)) out.push_back(prod.back_map[u]);
  return out;
}

// Same play, smallest representation: reduce the cycle to its primitive
// root and absorb a stem tail that merely rotates the cycle.
void canonicalize(Lasso& lasso) {
  const size_t c = lasso.cycle.size();
  for (size_t p = 1; p <= c / 2; ++p) {
    if (c % p != 0) continue;
    bool periodic = true;
    for (size_t i = p; i < c && periodic; ++i) periodic = lasso.cycle[i] == lasso.cycle[i % p];
    if (periodic) {
      lasso.cycle.resize(p);
      break;
    }
  }
  while (!lasso.stem.empty() && lasso.stem.back() == lasso.cycle.back()) {
    lasso.stem.pop_back();
    lasso.cycle.insert(lasso.cycle.begin(), lasso.cycle.back());
    lasso.cycle.pop_back();
  }
}

}  // namespace

std::optional<Lasso> enumerate_lassos(const Arena& arena, uint32_t initial, size_t stem_bound,
                                      size_t cycle_bound, const ObjectiveSpec& spec) {
  if (arena.size() == 0) throw std::invalid_argument("empty arena");
  for (uint32_t v = 1; v < arena.size(); ++v)
    if (arena.owner(v) != arena.owner(0)) throw std::invalid_argument("arena is not one-player");
  if (initial >= arena.size()) throw std::invalid_argument("initial vertex out of range");
  spec.validate(arena);

  // Decide through the same product semantics the definitions induce,
  // but by plain graph search; the found witness is re-validated with
  // check_lasso.
  ObjectiveSpec effective = spec;
  if (is_bounded_kind(spec.kind)) {
    effective.kind = spec.kind == Objective::BndPR ? Objective::FixPR : Objective::FixWP;
    effective.lambda = static_cast<int>(bounded_threshold(arena, spec.kind));
  }

  SolveVia via = SolveVia::Product;
  SolveResult res = solve(arena, effective, via);
  const ProductArena& prod = res.product;
  const Arena& g = prod.game;
  const uint32_t start = prod.init_of[initial];

  // The search walks the product, where any satisfying run closes a
  // cycle within product size; the requested bounds apply to the
  // canonical source-level lasso.
  auto finish = [&](std::vector<uint32_t> stem_states, std::vector<uint32_t> cycle_states)
      -> std::optional<Lasso> {
    Lasso lasso;
    lasso.stem = project_states(prod, stem_states);
    lasso.cycle = project_states(prod, cycle_states);
    if (lasso.cycle.empty()) return std::nullopt;
    canonicalize(lasso);
    if (lasso.stem.size() > stem_bound || lasso.cycle.size() > cycle_bound) return std::nullopt;
    auto verdict = check_lasso(arena, lasso, spec);
    if (!verdict.holds) throw std::logic_error("enumerated witness fails check_lasso");
    return lasso;
  };

  const size_t horizon = g.size();
  const auto& obj = res.product_objective;

  std::vector<char> allowed;
  const std::vector<char>* cycle_filter = nullptr;
  const std::vector<char>* stem_filter = nullptr;
  std::vector<uint32_t> candidates;

  if (obj.kind == Objective::Safe || obj.kind == Objective::CoBuchi) {
    allowed = make_mask(g.size(), obj.set);
    cycle_filter = &allowed;
    if (obj.kind == Objective::Safe) {
      if (!allowed[start]) return std::nullopt;
      stem_filter = &allowed;
    }
  } else if (obj.kind == Objective::Buchi || obj.kind == Objective::Reach) {
    // candidates restricted to the acceptance / target set below
  } else if (obj.kind != Objective::Parity) {
    throw std::invalid_argument("enumerate_lassos does not support this objective kind");
  }

  std::vector<uint32_t> parent;
  auto dist = bfs(g, start, stem_filter, &parent);

  if (obj.kind == Objective::Reach) {
    // Shortest path into the target, then any cycle beyond it.
    uint32_t hit = kNoVertex;
    for (uint32_t u : obj.set)
      if (dist[u] != kUnreached && (hit == kNoVertex || dist[u] < dist[hit])) hit = u;
    if (hit == kNoVertex) return std::nullopt;
    std::vector<uint32_t> parent2;
    auto dist2 = bfs(g, hit, nullptr, &parent2);
    for (uint32_t x = 0; x < g.size(); ++x) {
      if (dist2[x] == kUnreached) continue;
      auto cyc = cycle_through(g, x, nullptr, horizon);
      if (cyc.empty()) continue;
      auto stem = path_from_parents(parent, start, hit);
      auto tail = path_from_parents(parent2, hit, x);
      stem.insert(stem.end(), tail.begin() + 1, tail.end());
      stem.pop_back();
      if (auto lasso = finish(std::move(stem), std::move(cyc))) return lasso;
    }
    return std::nullopt;
  }

  for (uint32_t u = 0; u < g.size(); ++u) {
    if (dist[u] == kUnreached || dist[u] > horizon) continue;
    if (cycle_filter && !allowed[u]) continue;
    if (obj.kind == Objective::Buchi &&
        std::find(obj.set.begin(), obj.set.end(), u) == obj.set.end())
      continue;
    if (obj.kind == Objective::Parity && g.priority(u, 0) % 2 != 0) continue;
    candidates.push_back(u);
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](uint32_t a, uint32_t b) { return dist[a] < dist[b]; });

  for (uint32_t u : candidates) {
    std::vector<char> high;
    const std::vector<char>* filter = cycle_filter;
    if (obj.kind == Objective::Parity) {
      high.assign(g.size(), 0);
      for (uint32_t x = 0; x < g.size(); ++x) high[x] = g.priority(x, 0) >= g.priority(u, 0);
      filter = &high;
    }
    auto cyc = cycle_through(g, u, filter, horizon);
    if (cyc.empty()) continue;
    auto stem = path_from_parents(parent, start, u);
    stem.pop_back();
    if (auto lasso = finish(std::move(stem), std::move(cyc))) return lasso;
  }
  return std::nullopt;
}

std::optional<Lasso> enumerate_lassos(const Arena& arena, uint32_t initial,
                                      const ObjectiveSpec& spec) {
  return enumerate_lassos(arena, initial, SIZE_MAX, SIZE_MAX, spec);
}

Arena random_arena(uint64_t seed, uint32_t num_vertices, double density, int dims,
                   int max_priority, double p1_ratio) {
  if (num_vertices == 0) throw std::invalid_argument("need at least one vertex");
  if (dims < 1) throw std::invalid_argument("dimension count must be >= 1");
  if (max_priority < 0) throw std::invalid_argument("max priority must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> prio(0, max_priority);

  Arena arena;
  arena.set_dims(dims);
  for (uint32_t v = 0; v < num_vertices; ++v) {
    Player owner = coin(rng) < p1_ratio ? Player::P1 : Player::P2;
    std::vector<int> prios(dims);
    for (int m = 0; m < dims; ++m) prios[m] = coin(rng) < 0.3 ? 0 : prio(rng);
    arena.add_vertex("v" + std::to_string(v), owner, std::move(prios));
  }
  std::vector<char> has_edge(num_vertices, 0);
  for (uint32_t v = 0; v < num_vertices; ++v)
    for (uint32_t w = 0; w < num_vertices; ++w)
      if (coin(rng) < density) {
        arena.add_edge(v, w);
        has_edge[v] = 1;
      }
  for (uint32_t v = 0; v < num_vertices; ++v)
    if (!has_edge[v]) arena.add_edge(v, v);
  arena.finalize();
  return arena;
}

namespace {

GalleryGame make_cycle_game(const std::vector<int>& priorities) {
  GalleryGame g;
  g.arena.set_dims(1);
  for (size_t i = 0; i < priorities.size(); ++i)
    g.arena.add_vertex("v" + std::to_string(i), Player::P1, {priorities[i]});
  for (size_t i = 0; i < priorities.size(); ++i)
    g.arena.add_edge(static_cast<uint32_t>(i), static_cast<uint32_t>((i + 1) % priorities.size()));
  g.arena.finalize();
  g.initial = 0;
  return g;
}

GalleryGame make_fig5() {
  GalleryGame g;
  g.arena.set_dims(1);
  uint32_t v0 = g.arena.add_vertex("v0", Player::P1, {1});
  uint32_t v1 = g.arena.add_vertex("v1", Player::P2, {2});
  uint32_t v2 = g.arena.add_vertex("v2", Player::P1, {0});
  g.arena.add_edge(v0, v1);
  g.arena.add_edge(v1, v1);
  g.arena.add_edge(v1, v2);
  g.arena.add_edge(v2, v0);
  g.arena.finalize();
  g.initial = v0;
  return g;
}

GalleryGame make_two_cycle(Player owner, const std::vector<int>& left,
                           const std::vector<int>& right, int hub_priority) {
  // Hub v0 with a choice between two simple cycles back to it.
  GalleryGame g;
  g.arena.set_dims(1);
  uint32_t v0 = g.arena.add_vertex("v0", owner, {hub_priority});
  uint32_t prev = v0;
  uint32_t name = 1;
  for (int p : left) {
    uint32_t v = g.arena.add_vertex("v" + std::to_string(name++), owner, {p});
    g.arena.add_edge(prev, v);
    prev = v;
  }
  g.arena.add_edge(prev, v0);
  prev = v0;
  for (int p : right) {
    uint32_t v = g.arena.add_vertex("v" + std::to_string(name++), owner, {p});
    g.arena.add_edge(prev, v);
    prev = v;
  }
  g.arena.add_edge(prev, v0);
  g.arena.finalize();
  g.initial = v0;
  return g;
}

GalleryGame make_fig8(int d) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("fig8 needs an even d >= 2");
  GalleryGame g;
  g.arena.set_dims(1);
  uint32_t v0 = g.arena.add_vertex("v0", Player::P2, {d});
  uint32_t hub = g.arena.add_vertex("G", Player::P1, {d});
  // P2 raises an odd priority c on a path of (c+1)/2 vertices; P1 must
  // answer with the even path ending in c-1.
  for (int c = d - 1; c >= 1; c -= 2) {
    uint32_t prev = v0;
    for (int i = 0; i < (c + 1) / 2; ++i) {
      int p = i == 0 ? c : d;
      uint32_t v = g.arena.add_vertex("q" + std::to_string(c) + "_" + std::to_string(i),
                                      Player::P1, {p});
      g.arena.add_edge(prev, v);
      prev = v;
    }
    g.arena.add_edge(prev, hub);
  }
  for (int e = d - 2; e >= 0; e -= 2) {
    uint32_t prev = hub;
    int len = (d - e) / 2;
    for (int i = 0; i < len; ++i) {
      int p = i == len - 1 ? e : d;
      uint32_t v = g.arena.add_vertex("a" + std::to_string(e) + "_" + std::to_string(i),
                                      Player::P1, {p});
      g.arena.add_edge(prev, v);
      prev = v;
    }
    g.arena.add_edge(prev, v0);
  }
  g.arena.finalize();
  g.initial = v0;
  return g;
}

GalleryGame make_fig9(int n) {
  if (n < 2) throw std::invalid_argument("fig9 needs n >= 2");
  GalleryGame g;
  g.arena.set_dims(1);
  uint32_t v0 = g.arena.add_vertex("v0", Player::P2, {1});
  std::vector<uint32_t> chooser(n);
  for (int i = 0; i < n; ++i) {
    chooser[i] = g.arena.add_vertex("c" + std::to_string(i + 1), Player::P1, {1});
    g.arena.add_edge(v0, chooser[i]);
  }
  std::vector<uint32_t> path_start(n);
  uint32_t ret = g.arena.add_vertex("w", Player::P1, {1});
  for (int j = 0; j < n; ++j) {
    uint32_t prev = kNoVertex;
    for (int k = 0; k < n; ++k) {
      int p = k == j ? 0 : 1;
      uint32_t v = g.arena.add_vertex("r" + std::to_string(j + 1) + "_" + std::to_string(k + 1),
                                      Player::P1, {p});
      if (k == 0)
        path_start[j] = v;
      else
        g.arena.add_edge(prev, v);
      prev = v;
    }
    g.arena.add_edge(prev, ret);
  }
  g.arena.add_edge(ret, v0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i) g.arena.add_edge(chooser[i], path_start[j]);
  g.arena.finalize();
  g.initial = v0;
  return g;
}

GalleryGame make_fig10(int n) {
  if (n < 1) throw std::invalid_argument("fig10 needs n >= 1");
  const int dims = 2 * n;
  GalleryGame g;
  g.arena.set_dims(dims);
  auto prios = [&](int special_dim, int value) {
    std::vector<int> p(dims, 2);
    if (special_dim >= 0) p[special_dim] = value;
    return p;
  };
  std::vector<uint32_t> v(n), vl(n), vr(n), u(n), ul(n), ur(n);
  for (int i = 0; i < n; ++i) {
    v[i] = g.arena.add_vertex("v" + std::to_string(i + 1), Player::P2, prios(-1, 0));
    vl[i] = g.arena.add_vertex("v" + std::to_string(i + 1) + "L", Player::P2, prios(2 * i, 1));
    vr[i] = g.arena.add_vertex("v" + std::to_string(i + 1) + "R", Player::P2, prios(2 * i + 1, 1));
  }
  for (int i = 0; i < n; ++i) {
    u[i] = g.arena.add_vertex("u" + std::to_string(i + 1), Player::P1, prios(-1, 0));
    ul[i] = g.arena.add_vertex("u" + std::to_string(i + 1) + "L", Player::P1, prios(2 * i, 0));
    ur[i] = g.arena.add_vertex("u" + std::to_string(i + 1) + "R", Player::P1, prios(2 * i + 1, 0));
  }
  for (int i = 0; i < n; ++i) {
    g.arena.add_edge(v[i], vl[i]);
    g.arena.add_edge(v[i], vr[i]);
    uint32_t next = i + 1 < n ? v[i + 1] : u[0];
    g.arena.add_edge(vl[i], next);
    g.arena.add_edge(vr[i], next);
    g.arena.add_edge(u[i], ul[i]);
    g.arena.add_edge(u[i], ur[i]);
    uint32_t unext = i + 1 < n ? u[i + 1] : v[0];
    g.arena.add_edge(ul[i], unext);
    g.arena.add_edge(ur[i], unext);
  }
  g.arena.finalize();
  g.initial = v[0];
  return g;
}

}  // namespace

GalleryGame paper_gallery(const std::string& name, int param) {
  if (name == "fig4") return make_cycle_game({3, 1, 2, 0});
  if (name == "fig5") return make_fig5();
  if (name == "fig6") return make_two_cycle(Player::P1, {2, 1}, {1, 0, 3, 3}, 3);
  if (name == "fig7") return make_two_cycle(Player::P2, {0, 1}, {1, 0}, 1);
  if (name == "fig8") return make_fig8(param < 0 ? 6 : param);
  if (name == "fig9") return make_fig9(param < 0 ? 2 : param);
  if (name == "fig10") return make_fig10(param < 0 ? 2 : param);
  throw std::invalid_argument("unknown gallery name '" + name + "'");
}

GenReachReduction genreach_to_fixwp(const Arena& arena,
                                    const std::vector<std::vector<uint32_t>>& targets,
                                    uint32_t initial) {
  const uint32_t nv = arena.size();
  const int k = static_cast<int>(targets.size());
  if (k < 1) throw std::invalid_argument("need at least one target set");
  if (initial >= nv) throw std::invalid_argument("initial vertex out of range");

  std::vector<std::vector<char>> in_target(k, std::vector<char>(nv, 0));
  for (int m = 0; m < k; ++m)
    for (uint32_t v : targets[m]) in_target[m][v] = 1;

  GenReachReduction red;
  red.dims = k;
  red.lambda = 2 * k * static_cast<int>(nv);
  red.arena.set_dims(k);

  std::vector<uint32_t> orig(nv);
  for (uint32_t v = 0; v < nv; ++v) {
    std::vector<int> prios(k);
    for (int m = 0; m < k; ++m) {
      if (v == initial)
        prios[m] = in_target[m][v] ? 0 : 1;
      else
        prios[m] = in_target[m][v] ? 0 : 2;
    }
    orig[v] = red.arena.add_vertex(arena.id(v), arena.owner(v), std::move(prios));
  }
  uint32_t restart =
      red.arena.add_vertex("__restart", Player::P2, std::vector<int>(k, 0));
  size_t edge_id = 0;
  for (uint32_t v = 0; v < nv; ++v) {
    for (uint32_t w : arena.successors(v)) {
      uint32_t branch = red.arena.add_vertex("__b" + std::to_string(edge_id++), Player::P2,
                                             std::vector<int>(k, 2));
      red.arena.add_edge(orig[v], branch);
      red.arena.add_edge(branch, orig[w]);
      red.arena.add_edge(branch, restart);
    }
  }
  red.arena.add_edge(restart, orig[initial]);
  red.arena.finalize();
  red.initial = restart;
  return red;
}

void CrossCheckReport::merge(const CrossCheckReport& other) {
  arenas += other.arenas;
  checks += other.checks;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

namespace {

struct Checker {
  const Arena& arena;
  CrossCheckReport& report;
  std::string arena_text;

  void expect(bool ok, const std::string& check, const std::string& detail) {
    ++report.checks;
    if (!ok) report.violations.push_back({check, detail, arena_text});
  }
  static bool subset(const std::vector<Player>& a, const std::vector<Player>& b) {
    for (size_t v = 0; v < a.size(); ++v)
      if (a[v] == Player::P1 && b[v] != Player::P1) return false;
    return true;
  }
  static bool equal(const std::vector<Player>& a, const std::vector<Player>& b) {
    return a == b;
  }
};

size_t window_space(const Arena& arena, long long lambda) {
  size_t space = 1;
  for (int m = 0; m < arena.dims(); ++m) {
    size_t dim = static_cast<size_t>(arena.max_priority(m) + 1) * static_cast<size_t>(lambda);
    if (dim != 0 && space > 1'000'000'000 / dim) return SIZE_MAX;
    space *= dim;
  }
  return space * arena.size();
}

size_t counter_space(const Arena& arena, long long lambda) {
  size_t space = 1;
  for (int m = 0; m < arena.dims(); ++m)
    for (int c = 1; c < arena.max_priority(m); c += 2) {
      if (space > 1'000'000'000 / static_cast<size_t>(lambda)) return SIZE_MAX;
      space *= static_cast<size_t>(lambda);
    }
  return space * arena.size();
}

constexpr size_t kFeasible = 400'000;

}  // namespace

CrossCheckReport cross_check(const Arena& arena, const std::vector<int>& lambdas) {
  CrossCheckReport report;
  report.arenas = 1;
  Checker ck{arena, report, write_game(arena)};

  const int d = arena.max_priority();
  auto win = [&](const ObjectiveSpec& spec, SolveVia via = SolveVia::Product) {
    return solve(arena, spec, via).source_winner;
  };

  struct FixKey {
    Objective kind;
    bool direct;
    int lambda;
    bool operator<(const FixKey& o) const {
      if (kind != o.kind) return kind < o.kind;
      if (direct != o.direct) return direct < o.direct;
      return lambda < o.lambda;
    }
  };
  std::map<FixKey, std::vector<Player>> fixed;
  auto fixed_win = [&](Objective kind, bool direct, int lambda) -> const std::vector<Player>& {
    FixKey key{kind, direct, lambda};
    auto it = fixed.find(key);
    if (it == fixed.end())
      it = fixed.emplace(key, win(ObjectiveSpec::fixed(kind, lambda, direct))).first;
    return it->second;
  };

  for (bool direct : {true, false}) {
    for (int lambda : lambdas) {
      const auto& wp = fixed_win(Objective::FixWP, direct, lambda);
      const auto& pr = fixed_win(Objective::FixPR, direct, lambda);
      std::string tag = std::string(direct ? "Dir" : "") + "@" + std::to_string(lambda);

      ck.expect(Checker::subset(fixed_win(Objective::FixWP, true, lambda),
                                fixed_win(Objective::FixWP, false, lambda)),
                "direct-inclusion-wp", tag);
      ck.expect(Checker::subset(fixed_win(Objective::FixPR, true, lambda),
                                fixed_win(Objective::FixPR, false, lambda)),
                "direct-inclusion-pr", tag);
      ck.expect(Checker::subset(wp, pr), "wp-in-pr", tag);
      int big = std::max(1, d / 2 * lambda);
      ck.expect(Checker::subset(pr, fixed_win(Objective::FixWP, direct, big)),
                "pr-in-wp-scaled", tag);
      if (d <= 2) ck.expect(Checker::equal(pr, wp), "d2-coincidence", tag);

      for (int l2 : lambdas)
        if (l2 > lambda) {
          ck.expect(Checker::subset(fixed_win(Objective::FixWP, direct, lambda),
                                    fixed_win(Objective::FixWP, direct, l2)),
                    "lambda-monotone-wp", tag);
          ck.expect(Checker::subset(fixed_win(Objective::FixPR, direct, lambda),
                                    fixed_win(Objective::FixPR, direct, l2)),
                    "lambda-monotone-pr", tag);
        }

      // Counter vs history construction equality (one dimension).
      if (arena.dims() == 1 && lambda <= 4 && arena.size() <= 8) {
        auto hist = win(ObjectiveSpec::fixed(Objective::FixPR, lambda, direct), SolveVia::History);
        ck.expect(Checker::equal(pr, hist), "counter-vs-history", tag);
      }
    }
  }

  // Bounded kinds: threshold path where feasible, request-response path
  // always (pairs are few at desk scale); the two must agree.
  for (bool direct : {true, false}) {
    std::string tag = direct ? "Dir" : "";
    std::optional<std::vector<Player>> bnd_pr, bnd_wp;
    long long tpr = bounded_threshold(arena, Objective::BndPR);
    long long twp = bounded_threshold(arena, Objective::BndWP);
    bool pr_feasible = counter_space(arena, tpr + 1) <= kFeasible;
    bool wp_feasible = window_space(arena, twp + 1) <= kFeasible;

    auto rr_pr = win(ObjectiveSpec::bounded(Objective::BndPR, direct), SolveVia::RequestResponse);
    auto rr_wp = win(ObjectiveSpec::bounded(Objective::BndWP, direct), SolveVia::RequestResponse);
    ck.expect(Checker::equal(rr_pr, rr_wp), "bndpr-eq-bndwp-rr", tag);

    if (pr_feasible) {
      bnd_pr = win(ObjectiveSpec::bounded(Objective::BndPR, direct));
      ck.expect(Checker::equal(*bnd_pr, rr_pr), "threshold-vs-rr-pr", tag);
      ck.expect(Checker::equal(*bnd_pr,
                               fixed_win(Objective::FixPR, direct, static_cast<int>(tpr))),
                "threshold-stability-pr", tag);
      ck.expect(Checker::equal(*bnd_pr,
                               fixed_win(Objective::FixPR, direct, static_cast<int>(tpr) + 1)),
                "threshold-stability-pr+1", tag);
    }
    if (wp_feasible) {
      bnd_wp = win(ObjectiveSpec::bounded(Objective::BndWP, direct));
      ck.expect(Checker::equal(*bnd_wp, rr_wp), "threshold-vs-rr-wp", tag);
      ck.expect(Checker::equal(*bnd_wp,
                               fixed_win(Objective::FixWP, direct, static_cast<int>(twp))),
                "threshold-stability-wp", tag);
      ck.expect(Checker::equal(*bnd_wp,
                               fixed_win(Objective::FixWP, direct, static_cast<int>(twp) + 1)),
                "threshold-stability-wp+1", tag);
    }
    if (bnd_pr && bnd_wp)
      ck.expect(Checker::equal(*bnd_pr, *bnd_wp), "bndpr-eq-bndwp-threshold", tag);

    // Fixed within bounded.
    for (int lambda : lambdas) {
      ck.expect(Checker::subset(fixed_win(Objective::FixPR, direct, lambda), rr_pr),
                "fix-in-bnd-pr", tag + "@" + std::to_string(lambda));
      ck.expect(Checker::subset(fixed_win(Objective::FixWP, direct, lambda), rr_wp),
                "fix-in-bnd-wp", tag + "@" + std::to_string(lambda));
    }

    if (arena.dims() == 1) {
      auto parity = win(ObjectiveSpec::parity());
      ck.expect(Checker::subset(rr_wp, parity), "bnd-in-parity", tag);
    }
  }

  return report;
}

CrossCheckReport cross_check_corpus(uint64_t seed_begin, uint64_t seed_end, uint32_t max_vertices,
                                    int max_lambda, int max_priority, int max_dims) {
  CrossCheckReport total;
  for (uint64_t seed = seed_begin; seed < seed_end; ++seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    uint32_t nv = 1 + static_cast<uint32_t>(rng() % max_vertices);
    int dims = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_dims));
    int d = static_cast<int>(rng() % static_cast<uint64_t>(max_priority + 1));
    double density = 0.15 + 0.35 * (static_cast<double>(rng() % 1000) / 1000.0);
    Arena arena = random_arena(seed, nv, density, dims, d, 0.5);
    std::vector<int> lambdas;
    for (int l = 1; l <= max_lambda; ++l) lambdas.push_back(l);
    total.merge(cross_check(arena, lambdas));
  }
  return total;
}

}  // namespace winpar

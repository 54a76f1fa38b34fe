#pragma once

#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "winpar/arena.hpp"
#include "winpar/objectives.hpp"
#include "winpar/oracle.hpp"
#include "winpar/solvers.hpp"

namespace winpar::test {

struct VertexSpec {
  std::string id;
  Player owner;
  std::vector<int> priorities;
};

inline Arena build_arena(int dims, const std::vector<VertexSpec>& vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
  Arena a;
  a.set_dims(dims);
  for (const auto& v : vertices) a.add_vertex(v.id, v.owner, v.priorities);
  for (const auto& [s, d] : edges) a.add_edge(*a.index_of(s), *a.index_of(d));
  a.finalize();
  return a;
}

inline Lasso lasso_of(const Arena& a, const std::vector<std::string>& stem,
                      const std::vector<std::string>& cycle) {
  Lasso l;
  for (const auto& id : stem) l.stem.push_back(*a.index_of(id));
  for (const auto& id : cycle) l.cycle.push_back(*a.index_of(id));
  return l;
}

// Definition-level membership evaluated position by position on a long
// unrolled prefix, with no use of the S+C cutoff the library relies on.
inline bool naive_direct_holds(const Arena& a, const Lasso& lasso, Objective kind, int lambda,
                               size_t from, size_t positions) {
  const bool pr = kind == Objective::FixPR || kind == Objective::BndPR;
  for (int m = 0; m < a.dims(); ++m) {
    std::vector<int> p;
    for (size_t i = 0; i < positions + lambda; ++i) p.push_back(a.priority(lasso.at(i), m));
    for (size_t j = from; j < positions; ++j) {
      bool ok = false;
      int min_seen = p[j];
      for (int l = 0; l < lambda && !ok; ++l) {
        min_seen = std::min(min_seen, p[j + l]);
        if (pr)
          ok = p[j + l] % 2 == 0 && p[j + l] <= p[j];
        else
          ok = p[j + l] % 2 == 0 && p[j + l] == min_seen;
      }
      if (!ok) return false;
    }
  }
  return true;
}

// Reference decision for all eight window/PR objectives: the direct
// definition over a horizon well past the implementation's cutoff, and
// brute force over lambda in [1, S+2C] for the bounded kinds.
inline bool naive_member(const Arena& a, const Lasso& lasso, const ObjectiveSpec& spec) {
  const size_t S = lasso.stem.size(), C = lasso.cycle.size();
  const size_t horizon = S + 3 * C;
  const size_t from = spec.direct ? 0 : S;
  if (is_fixed_kind(spec.kind))
    return naive_direct_holds(a, lasso, spec.kind, *spec.lambda, from, horizon);
  for (int lambda = 1; lambda <= static_cast<int>(S + 2 * C); ++lambda)
    if (naive_direct_holds(a, lasso, spec.kind, lambda, from, horizon)) return true;
  return false;
}

// Brute-force attractor by fixpoint iteration (no BFS bookkeeping).
inline std::vector<char> naive_attractor(const Arena& a, Player player,
                                         const std::vector<char>& target) {
  std::vector<char> in = target;
  bool changed = true;
  while (changed) {
    changed = false;
    for (uint32_t v = 0; v < a.size(); ++v) {
      if (in[v]) continue;
      bool join;
      if (a.owner(v) == player) {
        join = false;
        for (uint32_t w : a.successors(v)) join = join || in[w];
      } else {
        join = true;
        for (uint32_t w : a.successors(v)) join = join && in[w];
      }
      if (join) {
        in[v] = 1;
        changed = true;
      }
    }
  }
  return in;
}

// All memoryless strategies of a player, as Moore machines with |M|=1.
inline std::vector<MooreStrategy> memoryless_strategies(const Arena& a, Player player) {
  std::vector<uint32_t> owned;
  for (uint32_t v = 0; v < a.size(); ++v)
    if (a.owner(v) == player) owned.push_back(v);
  std::vector<MooreStrategy> out;
  std::vector<size_t> choice(owned.size(), 0);
  for (;;) {
    MooreStrategy s = MooreStrategy::make(player, a.size(), 1);
    for (size_t i = 0; i < owned.size(); ++i)
      s.set_next(0, owned[i], a.successors(owned[i])[choice[i]]);
    out.push_back(std::move(s));
    size_t i = 0;
    for (; i < owned.size(); ++i) {
      if (++choice[i] < a.successors(owned[i]).size()) break;
      choice[i] = 0;
    }
    if (i == owned.size()) break;
  }
  return out;
}

// A random lasso from a random-walk until a vertex repeats.
inline Lasso random_lasso(const Arena& a, std::mt19937_64& rng, uint32_t start) {
  std::vector<uint32_t> walk;
  std::vector<int> seen_at(a.size(), -1);
  uint32_t v = start;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    auto succ = a.successors(v);
    v = succ[rng() % succ.size()];
  }
  Lasso l;
  l.stem.assign(walk.begin(), walk.begin() + seen_at[v]);
  l.cycle.assign(walk.begin() + seen_at[v], walk.end());
  return l;
}

inline Arena swap_owners(const Arena& a) {
  Arena b;
  b.set_dims(a.dims());
  for (uint32_t v = 0; v < a.size(); ++v) {
    std::vector<int> prios(a.priorities(v).begin(), a.priorities(v).end());
    b.add_vertex(a.id(v), opponent(a.owner(v)), std::move(prios));
  }
  for (uint32_t v = 0; v < a.size(); ++v)
    for (uint32_t w : a.successors(v)) b.add_edge(v, w);
  b.finalize();
  return b;
}

inline std::vector<uint32_t> all_vertices(const Arena& a) {
  std::vector<uint32_t> out(a.size());
  for (uint32_t v = 0; v < a.size(); ++v) out[v] = v;
  return out;
}

}  // namespace winpar::test

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

#include "winpar/objectives.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace winpar {

namespace {

std::vector<int> unroll_priorities(const Arena& arena, const Lasso& lasso, int dim, size_t k) {
  std::vector<int> out;
  out.reserve(k);
  for (size_t i = 0; i < k; ++i) out.push_back(arena.priority(lasso.at(i), dim));
  return out;
}

bool in_set(const std::vector<uint32_t>& set, uint32_t v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

MembershipResult classical_membership(const Arena& arena, const Lasso& lasso,
                                      const ObjectiveSpec& spec) {
  const size_t S = lasso.stem.size(), C = lasso.cycle.size();
  MembershipResult r;
  switch (spec.kind) {
    case Objective::Parity: {
      for (int m = 0; m < arena.dims(); ++m) {
        int best = arena.priority(lasso.cycle[0], m);
        size_t pos = S;
        for (size_t i = 0; i < C; ++i) {
          int p = arena.priority(lasso.cycle[i], m);
          if (p < best) {
            best = p;
            pos = S + i;
          }
        }
        if (best % 2 != 0) return {false, pos, m};
      }
      return r;
    }
    case Objective::Reach: {
      for (size_t i = 0; i < S + C; ++i)
        if (in_set(spec.targets[0], lasso.at(i))) return r;
      return {false, 0, 0};
    }
    case Objective::Safe: {
      for (size_t i = 0; i < S + C; ++i)
        if (!in_set(spec.targets[0], lasso.at(i))) return {false, i, 0};
      return r;
    }
    case Objective::Buchi: {
      for (size_t i = 0; i < C; ++i)
        if (in_set(spec.targets[0], lasso.cycle[i])) return r;
      return {false, S, 0};
    }
    case Objective::CoBuchi: {
      for (size_t i = 0; i < C; ++i)
        if (!in_set(spec.targets[0], lasso.cycle[i])) return {false, S + i, 0};
      return r;
    }
    case Objective::GenReach: {
      for (size_t m = 0; m < spec.targets.size(); ++m) {
        bool hit = false;
        for (size_t i = 0; i < S + C && !hit; ++i) hit = in_set(spec.targets[m], lasso.at(i));
        if (!hit) return {false, 0, static_cast<int>(m)};
      }
      return r;
    }
    default:
      throw std::logic_error("not a classical objective");
  }
}

}  // namespace

WindowVerdict window_close(std::span<const int> priorities, size_t j, int lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  if (j + lambda > priorities.size()) throw std::invalid_argument("insufficient horizon");
  int min_seen = priorities[j];
  for (int l = 0; l < lambda; ++l) {
    int p = priorities[j + l];
    min_seen = std::min(min_seen, p);
    if (p % 2 == 0 && p == min_seen) return {j, true, static_cast<size_t>(l)};
  }
  return {j, false, 0};
}

WindowVerdict window_close(const Arena& arena, std::span<const uint32_t> prefix, size_t j,
                           int dim, int lambda) {
  std::vector<int> prios;
  prios.reserve(prefix.size());
  for (uint32_t v : prefix) prios.push_back(arena.priority(v, dim));
  return window_close(prios, j, lambda);
}

WindowVerdict window_close(const Arena& arena, const Lasso& lasso, size_t j, int dim, int lambda) {
  auto prios = unroll_priorities(arena, lasso, dim, j + static_cast<size_t>(lambda));
  return window_close(prios, j, lambda);
}

std::optional<size_t> response_offset(std::span<const int> priorities, size_t j, int lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  if (j + lambda > priorities.size()) throw std::invalid_argument("insufficient horizon");
  for (int l = 0; l < lambda; ++l)
    if (answers(priorities[j + l], priorities[j])) return static_cast<size_t>(l);
  return std::nullopt;
}

MembershipResult check_lasso(const Arena& arena, const Lasso& lasso, const ObjectiveSpec& spec) {
  validate_lasso(arena, lasso);
  spec.validate(arena);
  if (!is_window_kind(spec.kind)) return classical_membership(arena, lasso, spec);

  const size_t S = lasso.stem.size(), C = lasso.cycle.size();
  const int lambda = is_bounded_kind(spec.kind) ? static_cast<int>(S + 2 * C) : *spec.lambda;
  const bool pr = is_pr_kind(spec.kind);
  const size_t from = spec.direct ? 0 : S;

  // All positions beyond S+C repeat the cyclic ones, so this range decides.
  MembershipResult best;
  for (int m = 0; m < arena.dims(); ++m) {
    auto prios = unroll_priorities(arena, lasso, m, S + C + static_cast<size_t>(lambda));
    for (size_t j = from; j < S + C; ++j) {
      bool ok = pr ? response_offset(prios, j, lambda).has_value()
                   : window_close(prios, j, lambda).closed;
      if (!ok) {
        if (best.holds || j < best.position) best = {false, j, m};
        break;  // only the smallest failing position per dimension matters
      }
    }
  }
  return best;
}

std::optional<GoodDecomposition> good_decomposition(const Arena& arena, const Lasso& lasso,
                                                    int lambda, int dim, bool direct) {
  validate_lasso(arena, lasso);
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  const size_t S = lasso.stem.size(), C = lasso.cycle.size();
  auto prios = unroll_priorities(arena, lasso, dim,
                                 S + (C + 2) * static_cast<size_t>(lambda + 1) + lambda);
  const size_t from = direct ? 0 : S;
  for (size_t j = from; j < S + C; ++j)
    if (!window_close(prios, j, lambda).closed) return std::nullopt;

  // Greedy split: each k_{i+1} is the position right after the window
  // at k_i closes. Positions >= S behave C-periodically, so the k's
  // become periodic once a cyclic residue repeats.
  GoodDecomposition dec;
  std::unordered_map<size_t, size_t> residue_at;  // residue -> index count when first seen
  size_t k = direct ? 0 : S;
  for (;;) {
    if (k >= S) {
      size_t residue = (k - S) % C;
      auto it = residue_at.find(residue);
      if (it != residue_at.end()) {
        // k at this residue was previously some k' with k - k' a multiple of C.
        size_t first_k = dec.indices[it->second];
        dec.period = k - first_k;
        break;
      }
      residue_at.emplace(residue, dec.indices.size());
    }
    dec.indices.push_back(k);
    auto verdict = window_close(prios, k, lambda);
    if (!verdict.closed) return std::nullopt;  // cannot happen after the check above
    k += verdict.closing_offset + 1;
  }
  return dec;
}

std::optional<int> min_sufficient_lambda(const Arena& arena, const Lasso& lasso, Objective kind,
                                         bool direct, int dim) {
  if (kind != Objective::FixPR && kind != Objective::FixWP)
    throw std::invalid_argument("min_sufficient_lambda applies to FixPR / FixWP");
  validate_lasso(arena, lasso);
  const size_t S = lasso.stem.size(), C = lasso.cycle.size();
  const int limit = static_cast<int>(S + 2 * C);
  const bool pr = kind == Objective::FixPR;
  const size_t from = direct ? 0 : S;
  for (int lambda = 1; lambda <= limit; ++lambda) {
    auto prios = unroll_priorities(arena, lasso, dim, S + C + static_cast<size_t>(lambda));
    bool ok = true;
    for (size_t j = from; j < S + C && ok; ++j)
      ok = pr ? response_offset(prios, j, lambda).has_value()
              : window_close(prios, j, lambda).closed;
    if (ok) return lambda;
  }
  return std::nullopt;
}

}  // namespace winpar

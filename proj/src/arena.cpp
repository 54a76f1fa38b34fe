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

#include "winpar/arena.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace winpar {

void Arena::set_dims(int n) {
  if (finalized_) throw std::logic_error("set_dims on finalized arena");
  if (!owner_.empty()) throw std::logic_error("set_dims after add_vertex");
  if (n < 1) throw std::invalid_argument("dimension count must be >= 1");
  dims_ = n;
}

uint32_t Arena::add_vertex(std::string id, Player owner, std::vector<int> priorities) {
  if (finalized_) throw std::logic_error("add_vertex on finalized arena");
  if (static_cast<int>(priorities.size()) != dims_)
    throw std::invalid_argument("vertex priority count does not match arena dimensions");
  if (ids_.size() != owner_.size())
    throw std::logic_error("mixing named and unnamed vertices");
  uint32_t v = static_cast<uint32_t>(owner_.size());
  if (!index_.emplace(id, v).second)
    throw std::invalid_argument("duplicate vertex id: " + id);
  ids_.push_back(std::move(id));
  owner_.push_back(owner);
  priority_.insert(priority_.end(), priorities.begin(), priorities.end());
  return v;
}

uint32_t Arena::add_vertex(Player owner, std::vector<int> priorities) {
  if (finalized_) throw std::logic_error("add_vertex on finalized arena");
  if (static_cast<int>(priorities.size()) != dims_)
    throw std::invalid_argument("vertex priority count does not match arena dimensions");
  if (!ids_.empty()) throw std::logic_error("mixing named and unnamed vertices");
  uint32_t v = static_cast<uint32_t>(owner_.size());
  owner_.push_back(owner);
  priority_.insert(priority_.end(), priorities.begin(), priorities.end());
  return v;
}

void Arena::add_edge(uint32_t src, uint32_t dst) {
  if (finalized_) throw std::logic_error("add_edge on finalized arena");
  pending_edges_.emplace_back(src, dst);
}

void Arena::finalize() {
  if (finalized_) return;
  uint32_t n = size();
  for (auto [s, d] : pending_edges_)
    if (s >= n || d >= n) throw std::invalid_argument("edge endpoint out of range");
  std::sort(pending_edges_.begin(), pending_edges_.end());
  pending_edges_.erase(std::unique(pending_edges_.begin(), pending_edges_.end()),
                       pending_edges_.end());

  succ_first_.assign(n + 1, 0);
  for (auto [s, d] : pending_edges_) ++succ_first_[s + 1];
  for (uint32_t v = 0; v < n; ++v) succ_first_[v + 1] += succ_first_[v];
  succ_dst_.resize(pending_edges_.size());
  {
    std::vector<uint32_t> cursor(succ_first_.begin(), succ_first_.end() - 1);
    for (auto [s, d] : pending_edges_) succ_dst_[cursor[s]++] = d;
  }

  pred_first_.assign(n + 1, 0);
  for (auto [s, d] : pending_edges_) ++pred_first_[d + 1];
  for (uint32_t v = 0; v < n; ++v) pred_first_[v + 1] += pred_first_[v];
  pred_src_.resize(pending_edges_.size());
  {
    std::vector<uint32_t> cursor(pred_first_.begin(), pred_first_.end() - 1);
    for (auto [s, d] : pending_edges_) pred_src_[cursor[d]++] = s;
  }
  pending_edges_.clear();
  pending_edges_.shrink_to_fit();

  max_priority_.assign(dims_, 0);
  for (uint32_t v = 0; v < n; ++v)
    for (int m = 0; m < dims_; ++m)
      max_priority_[m] = std::max(max_priority_[m], priority(v, m));
  for (int m = 0; m < dims_; ++m)
    if (max_priority_[m] % 2 != 0) ++max_priority_[m];

  finalized_ = true;
}

bool Arena::has_edge(uint32_t src, uint32_t dst) const {
  auto s = successors(src);
  return std::binary_search(s.begin(), s.end(), dst);
}

int Arena::max_priority() const {
  int d = 0;
  for (int m = 0; m < dims_; ++m) d = std::max(d, max_priority_[m]);
  return d;
}

std::string Arena::id(uint32_t v) const {
  if (v < ids_.size()) return ids_[v];
  return "#" + std::to_string(v);
}

std::optional<uint32_t> Arena::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<ValidationIssue> validate_arena(const Arena& arena) {
  std::vector<ValidationIssue> issues;
  if (arena.size() == 0) {
    issues.push_back({ValidationIssue::Kind::NoVertices, kNoVertex, "no vertices"});
    return issues;
  }
  for (uint32_t v = 0; v < arena.size(); ++v) {
    if (arena.successors(v).empty())
      issues.push_back({ValidationIssue::Kind::Deadlock, v, "deadlock at " + arena.id(v)});
    for (int m = 0; m < arena.dims(); ++m)
      if (arena.priority(v, m) < 0)
        issues.push_back({ValidationIssue::Kind::NegativePriority, v,
                          "negative priority at " + arena.id(v) + " dimension " + std::to_string(m + 1)});
  }
  return issues;
}

void validate_lasso(const Arena& arena, const Lasso& lasso) {
  if (lasso.cycle.empty()) throw std::invalid_argument("lasso cycle is empty");
  auto check_vertex = [&](uint32_t v) {
    if (v >= arena.size()) throw std::invalid_argument("lasso vertex out of range");
  };
  for (uint32_t v : lasso.stem) check_vertex(v);
  for (uint32_t v : lasso.cycle) check_vertex(v);
  auto check_edge = [&](uint32_t a, uint32_t b) {
    if (!arena.has_edge(a, b))
      throw std::invalid_argument("lasso uses missing edge " + arena.id(a) + " -> " + arena.id(b));
  };
  for (size_t i = 0; i + 1 < lasso.stem.size(); ++i) check_edge(lasso.stem[i], lasso.stem[i + 1]);
  if (!lasso.stem.empty()) check_edge(lasso.stem.back(), lasso.cycle.front());
  for (size_t i = 0; i + 1 < lasso.cycle.size(); ++i) check_edge(lasso.cycle[i], lasso.cycle[i + 1]);
  check_edge(lasso.cycle.back(), lasso.cycle.front());
}

std::vector<uint32_t> unroll(const Lasso& lasso, size_t k) {
  std::vector<uint32_t> out;
  out.reserve(k);
  for (size_t i = 0; i < k; ++i) out.push_back(lasso.at(i));
  return out;
}

const char* objective_name(Objective o) {
  switch (o) {
    case Objective::Parity: return "parity";
    case Objective::FixPR: return "fixpr";
    case Objective::FixWP: return "fixwp";
    case Objective::BndPR: return "bndpr";
    case Objective::BndWP: return "bndwp";
    case Objective::Reach: return "reach";
    case Objective::Safe: return "safe";
    case Objective::Buchi: return "buchi";
    case Objective::CoBuchi: return "cobuchi";
    case Objective::GenReach: return "genreach";
  }
  return "?";
}

std::optional<Objective> objective_from_name(const std::string& name) {
  static const std::pair<const char*, Objective> table[] = {
      {"parity", Objective::Parity}, {"fixpr", Objective::FixPR},   {"fixwp", Objective::FixWP},
      {"bndpr", Objective::BndPR},   {"bndwp", Objective::BndWP},   {"reach", Objective::Reach},
      {"safe", Objective::Safe},     {"buchi", Objective::Buchi},   {"cobuchi", Objective::CoBuchi},
      {"genreach", Objective::GenReach},
  };
  for (auto& [n, o] : table)
    if (name == n) return o;
  return std::nullopt;
}

ObjectiveSpec ObjectiveSpec::fixed(Objective kind, int lambda, bool direct) {
  ObjectiveSpec s;
  s.kind = kind;
  s.direct = direct;
  s.lambda = lambda;
  return s;
}

ObjectiveSpec ObjectiveSpec::bounded(Objective kind, bool direct) {
  ObjectiveSpec s;
  s.kind = kind;
  s.direct = direct;
  return s;
}

ObjectiveSpec ObjectiveSpec::with_set(Objective kind, std::vector<uint32_t> set) {
  ObjectiveSpec s;
  s.kind = kind;
  s.targets.push_back(std::move(set));
  return s;
}

ObjectiveSpec ObjectiveSpec::genreach(std::vector<std::vector<uint32_t>> sets) {
  ObjectiveSpec s;
  s.kind = Objective::GenReach;
  s.targets = std::move(sets);
  return s;
}

void ObjectiveSpec::validate(const Arena& arena) const {
  if (is_fixed_kind(kind)) {
    if (!lambda) throw std::invalid_argument("lambda required for fixed objectives");
    if (*lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  } else if (lambda) {
    throw std::invalid_argument("lambda only applies to fixed objectives");
  }
  if (is_window_kind(kind) || kind == Objective::Parity) {
    if (!targets.empty()) throw std::invalid_argument("target sets only apply to classical objectives");
    return;
  }
  if (direct) throw std::invalid_argument("direct flag only applies to window/PR objectives");
  if (kind == Objective::GenReach) {
    if (targets.empty()) throw std::invalid_argument("generalized reachability needs at least one target set");
  } else {
    if (targets.size() != 1) throw std::invalid_argument("objective needs exactly one vertex set");
  }
  for (const auto& set : targets)
    for (uint32_t v : set)
      if (v >= arena.size()) throw std::invalid_argument("target vertex out of range");
}

MooreStrategy MooreStrategy::make(Player player, uint32_t num_vertices, uint32_t num_memory) {
  MooreStrategy s;
  s.player = player;
  s.num_vertices = num_vertices;
  s.memory_names.resize(num_memory);
  for (uint32_t m = 0; m < num_memory; ++m) s.memory_names[m] = "m" + std::to_string(m);
  s.update.assign(static_cast<size_t>(num_memory) * num_vertices, 0);
  s.next.assign(static_cast<size_t>(num_memory) * num_vertices, kNoVertex);
  return s;
}

void validate_strategy(const Arena& arena, const MooreStrategy& s) {
  if (s.num_vertices != arena.size())
    throw std::invalid_argument("strategy built for a different arena size");
  if (s.memory_names.empty()) throw std::invalid_argument("strategy has no memory states");
  if (s.initial >= s.memory_size()) throw std::invalid_argument("initial memory out of range");
  for (uint32_t m = 0; m < s.memory_size(); ++m) {
    for (uint32_t v = 0; v < arena.size(); ++v) {
      if (s.update_at(m, v) >= s.memory_size())
        throw std::invalid_argument("update map leaves the memory set");
      if (arena.owner(v) == s.player) {
        uint32_t nv = s.next_at(m, v);
        if (nv == kNoVertex || !arena.has_edge(v, nv))
          throw std::invalid_argument("next action at " + arena.id(v) + " is not an edge successor");
      }
    }
  }
}

Lasso outcome(const Arena& arena, uint32_t initial, const MooreStrategy& s1, const MooreStrategy& s2) {
  struct Config {
    uint32_t v, m1, m2;
    bool operator==(const Config&) const = default;
  };
  std::vector<uint32_t> seq;
  std::unordered_map<uint64_t, size_t> seen;
  uint32_t v = initial, m1 = s1.initial, m2 = s2.initial;
  for (;;) {
    uint64_t key = (static_cast<uint64_t>(v) * s1.memory_size() + m1) * s2.memory_size() + m2;
    auto [it, fresh] = seen.emplace(key, seq.size());
    if (!fresh) {
      size_t start = it->second;
      Lasso lasso;
      lasso.stem.assign(seq.begin(), seq.begin() + start);
      lasso.cycle.assign(seq.begin() + start, seq.end());
      return lasso;
    }
    seq.push_back(v);
    uint32_t nv;
    if (arena.owner(v) == s1.player)
      nv = s1.next_at(m1, v);
    else
      nv = s2.next_at(m2, v);
    m1 = s1.update_at(m1, v);
    m2 = s2.update_at(m2, v);
    v = nv;
  }
}

}  // namespace winpar

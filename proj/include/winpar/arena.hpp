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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace winpar {

inline constexpr uint32_t kNoVertex = UINT32_MAX;

enum class Player : uint8_t { P1 = 1, P2 = 2 };

inline Player opponent(Player p) { return p == Player::P1 ? Player::P2 : Player::P1; }
inline int player_index(Player p) { return p == Player::P1 ? 1 : 2; }

/// A finite turn-based game graph. Vertices carry an owner and one
/// priority per dimension. Construction is incremental (add_vertex /
/// add_edge); finalize() freezes the arena into CSR adjacency and
/// derives the per-dimension maximum priority d_m, rounded up to even.
/// Finalized arenas are immutable and safe to share across threads.
class Arena {
public:
  Arena() = default;

  void set_dims(int n);
  int dims() const { return dims_; }

  uint32_t add_vertex(std::string id, Player owner, std::vector<int> priorities);
  uint32_t add_vertex(Player owner, std::vector<int> priorities);
  void add_edge(uint32_t src, uint32_t dst);

  /// Builds successor/predecessor CSR, sorts and dedupes edges, and
  /// computes the padded maxima. Idempotent.
  void finalize();
  bool finalized() const { return finalized_; }

  uint32_t size() const { return static_cast<uint32_t>(owner_.size()); }
  Player owner(uint32_t v) const { return owner_[v]; }
  int priority(uint32_t v, int dim) const { return priority_[static_cast<size_t>(v) * dims_ + dim]; }
  std::span<const int> priorities(uint32_t v) const {
    return {priority_.data() + static_cast<size_t>(v) * dims_, static_cast<size_t>(dims_)};
  }

  std::span<const uint32_t> successors(uint32_t v) const {
    return {succ_dst_.data() + succ_first_[v], succ_dst_.data() + succ_first_[v + 1]};
  }
  std::span<const uint32_t> predecessors(uint32_t v) const {
    return {pred_src_.data() + pred_first_[v], pred_src_.data() + pred_first_[v + 1]};
  }
  size_t edge_count() const { return succ_dst_.size(); }
  bool has_edge(uint32_t src, uint32_t dst) const;

  /// Per-dimension maximum priority, rounded up to the next even value.
  int max_priority(int dim) const { return max_priority_[dim]; }
  /// d = max over dimensions of the padded maxima.
  int max_priority() const;

  /// External id of a vertex. Vertices added without an id (product
  /// states) get a synthesized "#<index>" name.
  std::string id(uint32_t v) const;
  bool has_ids() const { return !ids_.empty(); }
  std::optional<uint32_t> index_of(const std::string& id) const;

private:
  int dims_ = 1;
  bool finalized_ = false;
  std::vector<Player> owner_;
  std::vector<int> priority_;  // size() * dims_
  std::vector<std::string> ids_;
  std::unordered_map<std::string, uint32_t> index_;
  std::vector<std::pair<uint32_t, uint32_t>> pending_edges_;
  std::vector<uint32_t> succ_first_, succ_dst_;
  std::vector<uint32_t> pred_first_, pred_src_;
  std::vector<int> max_priority_;
};

struct ValidationIssue {
  enum class Kind { Deadlock, NegativePriority, DanglingEdge, NoVertices };
  Kind kind;
  uint32_t vertex = kNoVertex;
  std::string message;
};

/// Report-style validation: deadlocked vertices, negative priorities,
/// empty arenas. Returns an empty vector when the arena is well formed.
std::vector<ValidationIssue> validate_arena(const Arena& arena);

/// Finite representation of an ultimately periodic play stem.cycle^omega.
struct Lasso {
  std::vector<uint32_t> stem;
  std::vector<uint32_t> cycle;

  /// Vertex at absolute play position pos.
  uint32_t at(size_t pos) const {
    if (pos < stem.size()) return stem[pos];
    return cycle[(pos - stem.size()) % cycle.size()];
  }
};

/// Throws std::invalid_argument if the lasso is empty-cycled or not
/// edge-connected (including the stem->cycle junction and the wrap).
void validate_lasso(const Arena& arena, const Lasso& lasso);

/// First k vertices of stem.cycle^omega.
std::vector<uint32_t> unroll(const Lasso& lasso, size_t k);

enum class Objective {
  Parity,
  FixPR,
  FixWP,
  BndPR,
  BndWP,
  Reach,
  Safe,
  Buchi,
  CoBuchi,
  GenReach,
};

inline bool is_fixed_kind(Objective o) { return o == Objective::FixPR || o == Objective::FixWP; }
inline bool is_bounded_kind(Objective o) { return o == Objective::BndPR || o == Objective::BndWP; }
inline bool is_window_kind(Objective o) { return is_fixed_kind(o) || is_bounded_kind(o); }
inline bool is_pr_kind(Objective o) { return o == Objective::FixPR || o == Objective::BndPR; }

const char* objective_name(Objective o);
std::optional<Objective> objective_from_name(const std::string& name);

/// Which objective to solve or check. The direct flag and lambda are
/// meaningful only for the window/PR kinds; target sets only for the
/// classical kinds (GenReach takes one set per conjunct).
struct ObjectiveSpec {
  Objective kind = Objective::Parity;
  bool direct = false;
  std::optional<int> lambda;
  std::vector<std::vector<uint32_t>> targets;

  static ObjectiveSpec parity() { return {Objective::Parity, false, {}, {}}; }
  static ObjectiveSpec fixed(Objective kind, int lambda, bool direct);
  static ObjectiveSpec bounded(Objective kind, bool direct);
  static ObjectiveSpec with_set(Objective kind, std::vector<uint32_t> set);
  static ObjectiveSpec genreach(std::vector<std::vector<uint32_t>> sets);

  /// Throws std::invalid_argument on ill-formed specs (missing or
  /// extraneous lambda, lambda < 1, bad target sets, dimension misuse).
  void validate(const Arena& arena) const;
};

/// Finite-memory strategy as a Moore machine: next-action reads the
/// memory accumulated over the history *excluding* the current vertex.
struct MooreStrategy {
  Player player = Player::P1;
  std::vector<std::string> memory_names;
  uint32_t initial = 0;
  uint32_t num_vertices = 0;
  std::vector<uint32_t> update;  // [m * num_vertices + v] -> m'
  std::vector<uint32_t> next;    // [m * num_vertices + v] -> v' (kNoVertex off-player)

  uint32_t memory_size() const { return static_cast<uint32_t>(memory_names.size()); }
  uint32_t update_at(uint32_t m, uint32_t v) const {
    return update[static_cast<size_t>(m) * num_vertices + v];
  }
  uint32_t next_at(uint32_t m, uint32_t v) const {
    return next[static_cast<size_t>(m) * num_vertices + v];
  }
  void set_update(uint32_t m, uint32_t v, uint32_t m2) {
    update[static_cast<size_t>(m) * num_vertices + v] = m2;
  }
  void set_next(uint32_t m, uint32_t v, uint32_t v2) {
    next[static_cast<size_t>(m) * num_vertices + v] = v2;
  }

  static MooreStrategy make(Player player, uint32_t num_vertices, uint32_t num_memory);
};

/// Throws std::invalid_argument unless update is total and every
/// next(m, v) on the player's vertices is an edge successor of v.
void validate_strategy(const Arena& arena, const MooreStrategy& strategy);

/// The unique outcome from `initial` when both players follow the given
/// machines, folded into a lasso (cut at the first repeated
/// (vertex, memory1, memory2) configuration).
Lasso outcome(const Arena& arena, uint32_t initial, const MooreStrategy& s1, const MooreStrategy& s2);

}  // namespace winpar

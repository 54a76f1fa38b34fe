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
#include <string>
#include <vector>

#include "winpar/arena.hpp"
#include "winpar/product.hpp"

namespace winpar {

/// Exhaustive witness search on one-player arenas: returns a lasso with
/// stem and cycle within the bounds whose play satisfies the objective,
/// or nullopt. A miss is not an emptiness proof unless the bounds cover
/// the relevant product (window witnesses can need non-simple cycles).
/// Throws std::invalid_argument unless all vertices share one owner.
std::optional<Lasso> enumerate_lassos(const Arena& arena, uint32_t initial, size_t stem_bound,
                                      size_t cycle_bound, const ObjectiveSpec& spec);

/// Same with both bounds defaulted to the product-state count of the
/// relevant construction, which suffices: product plays are ultimately
/// periodic within product size.
std::optional<Lasso> enumerate_lassos(const Arena& arena, uint32_t initial,
                                      const ObjectiveSpec& spec);

/// Seed-deterministic random arena; ~30% of priorities are forced to 0
/// so that nontrivial winning regions occur; deadlocks are patched with
/// self-loops. Always passes validate_arena.
Arena random_arena(uint64_t seed, uint32_t num_vertices, double density, int dims,
                   int max_priority, double p1_ratio);

struct GalleryGame {
  Arena arena;
  uint32_t initial = 0;
};

/// The worked examples as executable arenas: fig4 .. fig7 are fixed,
/// fig8 is parameterized by the even maximum priority d, fig9 and fig10
/// by n. Throws std::invalid_argument on unknown names or bad params.
GalleryGame paper_gallery(const std::string& name, int param = -1);

struct GenReachReduction {
  Arena arena;
  uint32_t initial = 0;  // the restart vertex
  int lambda = 0;
  int dims = 0;
};

/// Edge-splitting reduction from generalized reachability: P1 wins
/// GenReach(U_1..U_k) from v0 iff P1 wins the conjunction of
/// FixWP(2k|V|) objectives from the restart vertex (and likewise for
/// the direct and bounded kinds).
GenReachReduction genreach_to_fixwp(const Arena& arena,
                                    const std::vector<std::vector<uint32_t>>& targets,
                                    uint32_t initial);

struct CrossCheckViolation {
  std::string check;
  std::string detail;
  std::string arena_text;
};

struct CrossCheckReport {
  size_t arenas = 0;
  size_t checks = 0;
  std::vector<CrossCheckViolation> violations;

  bool ok() const { return violations.empty(); }
  void merge(const CrossCheckReport& other);
};

/// Solves the dispatcher across all window/PR kinds on the lambda grid
/// and asserts the winning-set lattice: direct inclusions, lambda
/// monotonicity, the WP/PR sandwich, BndPR = BndWP, Bnd within Parity
/// (one dimension), the d<=2 coincidence, threshold stability, and the
/// counter/history and threshold/request-response construction
/// equalities where feasible.
CrossCheckReport cross_check(const Arena& arena, const std::vector<int>& lambdas);

/// cross_check over seeded random arenas.
CrossCheckReport cross_check_corpus(uint64_t seed_begin, uint64_t seed_end, uint32_t max_vertices,
                                    int max_lambda, int max_priority = 4, int max_dims = 2);

}  // namespace winpar

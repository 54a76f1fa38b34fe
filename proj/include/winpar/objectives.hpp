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
#include <span>
#include <vector>

#include "winpar/arena.hpp"

namespace winpar {

/// c answers c' when c is even and c <= c'.
inline bool answers(int c, int cprime) { return c % 2 == 0 && c <= cprime; }

/// Status of the window opened at `position`: either closed at the
/// minimal offset l < lambda whose priority is even and minimal over
/// the segment, or still open at the lambda horizon.
struct WindowVerdict {
  size_t position = 0;
  bool closed = false;
  size_t closing_offset = 0;
};

/// Window status over an explicit priority prefix (one dimension).
/// Throws std::invalid_argument("insufficient horizon") when the prefix
/// does not cover positions j .. j+lambda-1.
WindowVerdict window_close(std::span<const int> priorities, size_t j, int lambda);

/// Same over a play prefix given as vertices, or directly on a lasso.
WindowVerdict window_close(const Arena& arena, std::span<const uint32_t> prefix, size_t j,
                           int dim, int lambda);
WindowVerdict window_close(const Arena& arena, const Lasso& lasso, size_t j, int dim, int lambda);

/// Offset of the first priority answering priorities[j] within the
/// lambda window, or nullopt (the parity-response analogue).
std::optional<size_t> response_offset(std::span<const int> priorities, size_t j, int lambda);

struct MembershipResult {
  bool holds = true;
  // Violation witness: smallest failing position, then smallest dimension.
  size_t position = 0;
  int dimension = 0;
};

/// Exact membership of stem.cycle^omega in the objective. Window/PR
/// kinds are decided on positions j < S+C (direct) or S <= j < S+C
/// (undirect); bounded kinds as the fixed kind at lambda* = S + 2C.
/// Classical kinds are decided from the cycle / visited sets.
MembershipResult check_lasso(const Arena& arena, const Lasso& lasso, const ObjectiveSpec& spec);

/// Increasing indices k_0 < k_1 < ... splitting the play into
/// lambda-good segments; finitely represented by the indices up to the
/// first periodic repeat plus the period length.
struct GoodDecomposition {
  std::vector<size_t> indices;
  size_t period = 0;
};

/// A lambda-good decomposition of the lasso in dimension `dim`
/// (k_0 = 0 when direct, k_0 = stem length otherwise), or nullopt when
/// the corresponding (Dir)FixWP objective does not hold.
std::optional<GoodDecomposition> good_decomposition(const Arena& arena, const Lasso& lasso,
                                                    int lambda, int dim, bool direct);

/// Smallest lambda in [1, S+2C] making the fixed objective hold on the
/// lasso in dimension `dim`, or nullopt (the window can stay open
/// forever). Decides the bounded kinds constructively.
std::optional<int> min_sufficient_lambda(const Arena& arena, const Lasso& lasso, Objective kind,
                                         bool direct, int dim);

}  // namespace winpar

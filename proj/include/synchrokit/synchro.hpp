// Copyright 2026 The synchrokit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "synchrokit/dfa.hpp"

namespace synchrokit {

/// Subset searches up to this many states use a direct-indexed visited table
/// of 2^n entries; larger automata (up to 64 states) fall back to hashing.
inline constexpr std::size_t kDirectIndexMaxStates = 25;

struct RtResult {
  std::size_t threshold = 0;
  Word witness;
  State q0 = 0;  // Q.witness == {q0}
};

struct LevelProfile {
  State q0 = 0;
  /// widths[i] = number of distinct nonempty subsets at backward distance i
  /// from {q0}.
  std::vector<std::size_t> widths;
  std::optional<std::size_t> depth_to_full;

  std::size_t max_width() const;
};

/// Pair-merging criterion: every pair of states can be mapped to one state.
bool is_synchronizing(const Dfa& dfa);

/// Forward BFS over images from Q to the first singleton. Letters are tried
/// in declared order, so the witness is deterministic.
RtResult reset_threshold_exact(const Dfa& dfa);

/// Backward BFS over preimages from all singletons to Q. Independent of
/// reset_threshold_exact and always agrees with it on the threshold.
RtResult reset_threshold_backward(const Dfa& dfa);

/// Shortest w with |S.w^-1| > |S|. Throws kDomain for empty or full S and
/// kNotExtensible when no such word exists.
Word shortest_extending_word(const Dfa& dfa, const StateSet& s);

/// Layer widths of the backward BFS from {q0}, stopping at Q, at max_depth,
/// or when the frontier empties. The empty set is a dead end and not counted.
LevelProfile backward_level_profile(const Dfa& dfa, State q0, std::size_t max_depth);

}  // namespace synchrokit

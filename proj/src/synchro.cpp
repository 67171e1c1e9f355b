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

#include "synchrokit/synchro.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>

namespace synchrokit {

namespace {

// Visited set with back pointers: mask -> (parent mask, letter).
class VisitedTable {
 public:
  VisitedTable(std::size_t n, std::size_t k)
      : direct_(n <= kDirectIndexMaxStates && k < kRootMark) {
    if (direct_) {
      parent_.assign(std::size_t{1} << n, 0);
      letter_.assign(std::size_t{1} << n, kUnvisited);
    }
  }

  bool contains(std::uint64_t mask) const {
    if (direct_) return letter_[mask] != kUnvisited;
    return map_.count(mask) != 0;
  }

  // Roots carry the sentinel letter; returns false if already present.
  bool insert(std::uint64_t mask, std::uint64_t parent, Letter a) {
    if (direct_) {
      if (letter_[mask] != kUnvisited) return false;
      parent_[mask] = static_cast<std::uint32_t>(parent);
      letter_[mask] = static_cast<std::uint8_t>(a == kRoot ? kRootMark : a);
      return true;
    }
    return map_.emplace(mask, std::pair{parent, a}).second;
  }

  bool is_root(std::uint64_t mask) const {
    if (direct_) return letter_[mask] == kRootMark;
    return map_.at(mask).second == kRoot;
  }

  std::pair<std::uint64_t, Letter> back(std::uint64_t mask) const {
    if (direct_) return {parent_[mask], letter_[mask]};
    return map_.at(mask);
  }

  // Letters from the root to `mask`, in the order the search applied them.
  Word path_to(std::uint64_t mask) const {
    Word path;
    while (!is_root(mask)) {
      auto [parent, a] = back(mask);
      path.push_back(a);
      mask = parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  std::uint64_t root_of(std::uint64_t mask) const {
    while (!is_root(mask)) mask = back(mask).first;
    return mask;
  }

  static constexpr Letter kRoot = std::numeric_limits<Letter>::max();

 private:
  static constexpr std::uint8_t kUnvisited = 0xff;
  static constexpr std::uint8_t kRootMark = 0xfe;

  bool direct_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> letter_;
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, Letter>> map_;
};

void require_search_size(const Dfa& dfa) {
  dfa.require_subsets();
}

}  // namespace

std::size_t LevelProfile::max_width() const {
  return widths.empty() ? 0 : *std::max_element(widths.begin(), widths.end());
}

bool is_synchronizing(const Dfa& dfa) {
  dfa.require_subsets();
  const std::size_t n = dfa.states();
  if (n == 1) return true;
  // merged[p * n + q]: {p, q} can be collapsed by some word. Diagonal pairs
  // seed a backward search through letter preimages.
  std::vector<bool> merged(n * n, false);
  std::vector<std::pair<State, State>> queue;
  queue.reserve(n * n);
  for (State x = 0; x < n; ++x) {
    merged[x * n + x] = true;
    queue.emplace_back(x, x);
  }
  std::size_t marked_pairs = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [x, y] = queue[head];
    for (Letter a = 0; a < dfa.letter_count(); ++a) {
      const std::uint64_t px = dfa.preimage_mask(std::uint64_t{1} << x, a);
      const std::uint64_t py = dfa.preimage_mask(std::uint64_t{1} << y, a);
      for_each_bit(px, [&](State p) {
        for_each_bit(py, [&](State q) {
          if (p == q || merged[p * n + q]) return;
          merged[p * n + q] = merged[q * n + p] = true;
          ++marked_pairs;
          queue.emplace_back(p, q);
        });
      });
    }
  }
  return marked_pairs == n * (n - 1) / 2;
}

RtResult reset_threshold_exact(const Dfa& dfa) {
  require_search_size(dfa);
  const std::uint64_t full = dfa.full_mask();
  if (std::popcount(full) == 1) return RtResult{0, {}, 0};

  VisitedTable visited(dfa.states(), dfa.letter_count());
  visited.insert(full, 0, VisitedTable::kRoot);
  std::deque<std::uint64_t> queue{full};
  while (!queue.empty()) {
    const std::uint64_t s = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < dfa.letter_count(); ++a) {
      const std::uint64_t t = dfa.image_mask(s, a);
      if (!visited.insert(t, s, a)) continue;
      if (std::popcount(t) == 1) {
        Word witness = visited.path_to(t);
        const std::size_t len = witness.size();
        return RtResult{len, std::move(witness), static_cast<State>(std::countr_zero(t))};
      }
      queue.push_back(t);
    }
  }
  throw Error(ErrorCode::kNotSynchronizing, "automaton is not synchronizing");
}

RtResult reset_threshold_backward(const Dfa& dfa) {
  require_search_size(dfa);
  const std::uint64_t full = dfa.full_mask();
  if (std::popcount(full) == 1) return RtResult{0, {}, 0};

  VisitedTable visited(dfa.states(), dfa.letter_count());
  std::deque<std::uint64_t> queue;
  for (State q = 0; q < dfa.states(); ++q) {
    const std::uint64_t s = std::uint64_t{1} << q;
    visited.insert(s, 0, VisitedTable::kRoot);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const std::uint64_t s = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < dfa.letter_count(); ++a) {
      const std::uint64_t t = dfa.preimage_mask(s, a);
      if (t == 0 || !visited.insert(t, s, a)) continue;
      if (t == full) {
        // The search prepends letters: the first preimage taken is the last
        // letter of the reset word.
        Word witness = reversed(visited.path_to(t));
        const std::size_t len = witness.size();
        return RtResult{len, std::move(witness),
                        static_cast<State>(std::countr_zero(visited.root_of(t)))};
      }
      queue.push_back(t);
    }
  }
  throw Error(ErrorCode::kNotSynchronizing, "automaton is not synchronizing");
}

Word shortest_extending_word(const Dfa& dfa, const StateSet& s) {
  dfa.check_set(s);
  if (s.is_empty() || s.is_full()) {
    throw Error(ErrorCode::kDomain, "extending words are defined for proper nonempty subsets");
  }
  const std::uint64_t start = s.mask();
  const int size = std::popcount(start);
  VisitedTable visited(dfa.states(), dfa.letter_count());
  visited.insert(start, 0, VisitedTable::kRoot);
  std::deque<std::uint64_t> queue{start};
  while (!queue.empty()) {
    const std::uint64_t cur = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < dfa.letter_count(); ++a) {
      const std::uint64_t t = dfa.preimage_mask(cur, a);
      if (!visited.insert(t, cur, a)) continue;
      if (std::popcount(t) > size) return reversed(visited.path_to(t));
      queue.push_back(t);
    }
  }
  throw Error(ErrorCode::kNotExtensible, "subset " + s.to_string() + " has no extending word");
}

LevelProfile backward_level_profile(const Dfa& dfa, State q0, std::size_t max_depth) {
  dfa.check_state(q0);
  if (dfa.states() > kDirectIndexMaxStates) {
    throw Error(ErrorCode::kSize, "level profiles support at most " +
                                      std::to_string(kDirectIndexMaxStates) + " states");
  }
  const std::uint64_t full = dfa.full_mask();
  LevelProfile profile{q0, {1}, std::nullopt};
  std::vector<bool> seen(std::size_t{1} << dfa.states(), false);
  std::vector<std::uint64_t> layer{std::uint64_t{1} << q0};
  seen[layer.front()] = true;
  if (layer.front() == full) {
    profile.depth_to_full = 0;
    return profile;
  }
  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    std::vector<std::uint64_t> next;
    bool reached_full = false;
    for (std::uint64_t s : layer) {
      for (Letter a = 0; a < dfa.letter_count(); ++a) {
        const std::uint64_t t = dfa.preimage_mask(s, a);
        if (t == 0 || seen[t]) continue;
        seen[t] = true;
        next.push_back(t);
        reached_full |= t == full;
      }
    }
    if (next.empty()) break;
    profile.widths.push_back(next.size());
    if (reached_full) {
      profile.depth_to_full = depth;
      break;
    }
    layer = std::move(next);
  }
  return profile;
}

}  // namespace synchrokit

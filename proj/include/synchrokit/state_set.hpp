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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "synchrokit/error.hpp"

namespace synchrokit {

using State = std::uint32_t;

inline constexpr std::size_t kMaxSubsetStates = 64;

/// A subset of {0, ..., universe-1} stored as one 64-bit mask.
///
/// Equality compares members and universe. Binary set operations require
/// both operands to share a universe.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe, std::uint64_t mask = 0);
  StateSet(std::size_t universe, std::initializer_list<State> members);

  static StateSet empty(std::size_t universe) { return StateSet(universe); }
  static StateSet full(std::size_t universe);
  static StateSet singleton(std::size_t universe, State q);
  static StateSet of(std::size_t universe, const std::vector<State>& members);

  std::size_t universe() const noexcept { return universe_; }
  std::uint64_t mask() const noexcept { return mask_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
  bool is_empty() const noexcept { return mask_ == 0; }
  bool is_full() const noexcept { return mask_ == universe_mask(universe_); }

  bool contains(State q) const noexcept { return q < universe_ && ((mask_ >> q) & 1U) != 0; }
  void insert(State q);
  void erase(State q);

  bool is_subset_of(const StateSet& other) const;
  StateSet operator|(const StateSet& other) const;
  StateSet operator&(const StateSet& other) const;
  StateSet operator-(const StateSet& other) const;

  std::vector<State> members() const;
  std::string to_string() const;  // "{0,1,4}"

  friend bool operator==(const StateSet&, const StateSet&) = default;

  static constexpr std::uint64_t universe_mask(std::size_t universe) noexcept {
    return universe >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
  }

 private:
  void check_same_universe(const StateSet& other) const;

  std::uint64_t mask_ = 0;
  std::size_t universe_ = 0;
};

// Iterates set bits of a mask in increasing order.
template <typename Fn>
inline void for_each_bit(std::uint64_t mask, Fn&& fn) {
  while (mask != 0) {
    fn(static_cast<State>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

}  // namespace synchrokit

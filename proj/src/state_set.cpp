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

#include "synchrokit/state_set.hpp"

namespace synchrokit {

namespace {

void check_universe(std::size_t universe) {
  if (universe > kMaxSubsetStates) {
    throw Error(ErrorCode::kSize, "state sets support at most 64 states, got " +
                                      std::to_string(universe));
  }
}

}  // namespace

StateSet::StateSet(std::size_t universe, std::uint64_t mask) : mask_(mask), universe_(universe) {
  check_universe(universe);
  if ((mask & ~universe_mask(universe)) != 0) {
    throw Error(ErrorCode::kInvalidState, "state set mask has members outside the universe");
  }
}

StateSet::StateSet(std::size_t universe, std::initializer_list<State> members)
    : StateSet(universe) {
  for (State q : members) insert(q);
}

StateSet StateSet::full(std::size_t universe) {
  check_universe(universe);
  return StateSet(universe, universe_mask(universe));
}

StateSet StateSet::singleton(std::size_t universe, State q) {
  StateSet s(universe);
  s.insert(q);
  return s;
}

StateSet StateSet::of(std::size_t universe, const std::vector<State>& members) {
  StateSet s(universe);
  for (State q : members) s.insert(q);
  return s;
}

void StateSet::insert(State q) {
  if (q >= universe_) {
    throw Error(ErrorCode::kInvalidState, "state " + std::to_string(q) + " outside universe of " +
                                              std::to_string(universe_));
  }
  mask_ |= std::uint64_t{1} << q;
}

void StateSet::erase(State q) {
  if (q < universe_) mask_ &= ~(std::uint64_t{1} << q);
}

void StateSet::check_same_universe(const StateSet& other) const {
  if (universe_ != other.universe_) {
    throw Error(ErrorCode::kInvalidArgument, "state sets over different universes");
  }
}

bool StateSet::is_subset_of(const StateSet& other) const {
  check_same_universe(other);
  return (mask_ & ~other.mask_) == 0;
}

StateSet StateSet::operator|(const StateSet& other) const {
  check_same_universe(other);
  return StateSet(universe_, mask_ | other.mask_);
}

StateSet StateSet::operator&(const StateSet& other) const {
  check_same_universe(other);
  return StateSet(universe_, mask_ & other.mask_);
}

StateSet StateSet::operator-(const StateSet& other) const {
  check_same_universe(other);
  return StateSet(universe_, mask_ & ~other.mask_);
}

std::vector<State> StateSet::members() const {
  std::vector<State> out;
  out.reserve(size());
  for_each_bit(mask_, [&](State q) { out.push_back(q); });
  return out;
}

std::string StateSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each_bit(mask_, [&](State q) {
    if (!first) out += ',';
    out += std::to_string(q);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace synchrokit

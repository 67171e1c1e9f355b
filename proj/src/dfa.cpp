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

#include "synchrokit/dfa.hpp"

#include <algorithm>

namespace synchrokit {

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word concat(const Word& u, const Word& v) {
  Word out(u);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Dfa::Dfa(std::size_t n, std::vector<std::string> letters, std::vector<State> table)
    : n_(n), letters_(std::move(letters)), table_(std::move(table)) {
  validate_and_index();
}

Dfa::Dfa(std::vector<std::string> letters, const std::vector<std::vector<State>>& delta)
    : n_(delta.size()), letters_(std::move(letters)) {
  const std::size_t k = letters_.size();
  table_.resize(n_ * k);
  for (std::size_t q = 0; q < n_; ++q) {
    if (delta[q].size() != k) {
      throw Error(ErrorCode::kInvalidArgument,
                  "transition row " + std::to_string(q) + " has " + std::to_string(delta[q].size()) +
                      " entries, expected " + std::to_string(k));
    }
    for (std::size_t a = 0; a < k; ++a) table_[a * n_ + q] = delta[q][a];
  }
  validate_and_index();
}

Dfa Dfa::from_columns(std::size_t n, std::vector<std::string> letters,
                      const std::vector<std::vector<State>>& columns) {
  if (columns.size() != letters.size()) {
    throw Error(ErrorCode::kInvalidArgument, "column count does not match letter count");
  }
  std::vector<State> table;
  table.reserve(n * columns.size());
  for (const auto& col : columns) {
    if (col.size() != n) {
      throw Error(ErrorCode::kInvalidArgument, "transition column has wrong length");
    }
    table.insert(table.end(), col.begin(), col.end());
  }
  return Dfa(n, std::move(letters), std::move(table));
}

void Dfa::validate_and_index() {
  if (n_ == 0) throw Error(ErrorCode::kInvalidArgument, "automaton needs at least one state");
  if (letters_.empty()) throw Error(ErrorCode::kInvalidArgument, "automaton needs at least one letter");
  for (std::size_t a = 0; a < letters_.size(); ++a) {
    if (letters_[a].empty()) throw Error(ErrorCode::kInvalidArgument, "letter names must be nonempty");
    for (std::size_t b = 0; b < a; ++b) {
      if (letters_[a] == letters_[b]) {
        throw Error(ErrorCode::kInvalidArgument, "duplicate letter name '" + letters_[a] + "'");
      }
    }
  }
  for (State t : table_) {
    if (t >= n_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "transition target " + std::to_string(t) + " out of range for " +
                      std::to_string(n_) + " states");
    }
  }
  if (!supports_subsets()) return;
  preimages_.assign(table_.size(), 0);
  for (std::size_t a = 0; a < letters_.size(); ++a) {
    for (std::size_t q = 0; q < n_; ++q) {
      preimages_[a * n_ + table_[a * n_ + q]] |= std::uint64_t{1} << q;
    }
  }
}

const std::string& Dfa::letter_name(Letter a) const {
  check_letter(a);
  return letters_[a];
}

std::optional<Letter> Dfa::find_letter(std::string_view name) const {
  auto it = std::find(letters_.begin(), letters_.end(), name);
  if (it == letters_.end()) return std::nullopt;
  return static_cast<Letter>(it - letters_.begin());
}

State Dfa::transition(State q, Letter a) const {
  check_state(q);
  check_letter(a);
  return next(q, a);
}

std::span<const State> Dfa::column(Letter a) const {
  check_letter(a);
  return std::span<const State>(table_.data() + a * n_, n_);
}

std::vector<std::vector<State>> Dfa::rows() const {
  std::vector<std::vector<State>> out(n_, std::vector<State>(letters_.size()));
  for (std::size_t q = 0; q < n_; ++q) {
    for (std::size_t a = 0; a < letters_.size(); ++a) out[q][a] = table_[a * n_ + q];
  }
  return out;
}

void Dfa::check_letter(Letter a) const {
  if (a >= letters_.size()) {
    throw Error(ErrorCode::kInvalidLetter, "letter index " + std::to_string(a) +
                                               " out of range for " +
                                               std::to_string(letters_.size()) + " letters");
  }
}

void Dfa::check_state(State q) const {
  if (q >= n_) {
    throw Error(ErrorCode::kInvalidState,
                "state " + std::to_string(q) + " out of range for " + std::to_string(n_) + " states");
  }
}

void Dfa::check_word(const Word& w) const {
  for (Letter a : w) check_letter(a);
}

void Dfa::require_subsets() const {
  if (!supports_subsets()) {
    throw Error(ErrorCode::kSize, "subset operations support at most 64 states, automaton has " +
                                      std::to_string(n_));
  }
}

void Dfa::check_set(const StateSet& s) const {
  require_subsets();
  if (s.universe() != n_) {
    throw Error(ErrorCode::kInvalidArgument, "state set universe " + std::to_string(s.universe()) +
                                                 " does not match automaton size " +
                                                 std::to_string(n_));
  }
}

StateSet image(const Dfa& dfa, const StateSet& s, Letter a) {
  dfa.check_set(s);
  dfa.check_letter(a);
  return StateSet(dfa.states(), dfa.image_mask(s.mask(), a));
}

StateSet preimage(const Dfa& dfa, const StateSet& s, Letter a) {
  dfa.check_set(s);
  dfa.check_letter(a);
  return StateSet(dfa.states(), dfa.preimage_mask(s.mask(), a));
}

StateSet apply_word(const Dfa& dfa, const StateSet& s, const Word& w) {
  dfa.check_set(s);
  dfa.check_word(w);
  std::uint64_t mask = s.mask();
  for (Letter a : w) mask = dfa.image_mask(mask, a);
  return StateSet(dfa.states(), mask);
}

StateSet apply_word_inverse(const Dfa& dfa, const StateSet& s, const Word& w) {
  dfa.check_set(s);
  dfa.check_word(w);
  // S.(xv)^-1 = (S.v^-1).x^-1, so the last letter is inverted first.
  std::uint64_t mask = s.mask();
  for (auto it = w.rbegin(); it != w.rend(); ++it) mask = dfa.preimage_mask(mask, *it);
  return StateSet(dfa.states(), mask);
}

State apply_word(const Dfa& dfa, State q, const Word& w) {
  dfa.check_state(q);
  dfa.check_word(w);
  for (Letter a : w) q = dfa.next(q, a);
  return q;
}

LetterProfile classify_letter(const Dfa& dfa, Letter a) {
  auto col = dfa.column(a);
  const std::size_t n = dfa.states();
  LetterProfile profile;

  std::vector<bool> hit(n, false);
  std::size_t distinct = 0;
  std::size_t moved = 0;
  for (State q = 0; q < n; ++q) {
    if (!hit[col[q]]) {
      hit[col[q]] = true;
      ++distinct;
    }
    if (col[q] != q) {
      if (moved == 0) profile.moved_state = std::pair{q, col[q]};
      ++moved;
    }
  }
  profile.permutational = distinct == n;
  profile.involutory = true;
  for (State q = 0; q < n; ++q) {
    if (col[col[q]] != q) {
      profile.involutory = false;
      break;
    }
  }
  profile.unitary = moved == 1;
  if (!profile.unitary) profile.moved_state.reset();
  return profile;
}

namespace {

// Reachability from state 0 over the support digraph, forward or reversed.
std::size_t reach_count(const Dfa& dfa, bool reverse) {
  const std::size_t n = dfa.states();
  std::vector<std::vector<State>> adj(n);
  for (Letter a = 0; a < dfa.letter_count(); ++a) {
    for (State q = 0; q < n; ++q) {
      State t = dfa.next(q, a);
      if (reverse) adj[t].push_back(q);
      else adj[q].push_back(t);
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<State> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State t : adj[q]) {
      if (!seen[t]) {
        seen[t] = true;
        ++count;
        stack.push_back(t);
      }
    }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const Dfa& dfa) {
  return reach_count(dfa, false) == dfa.states() && reach_count(dfa, true) == dfa.states();
}

bool is_eulerian(const Dfa& dfa) {
  const std::size_t n = dfa.states();
  const std::size_t k = dfa.letter_count();
  std::vector<std::size_t> indegree(n, 0);
  for (Letter a = 0; a < k; ++a) {
    for (State q = 0; q < n; ++q) ++indegree[dfa.next(q, a)];
  }
  for (std::size_t d : indegree) {
    if (d != k) return false;
  }
  return is_strongly_connected(dfa);
}

bool is_extensible(const Dfa& dfa, const StateSet& s, Letter a) {
  return preimage(dfa, s, a).size() > s.size();
}

}  // namespace synchrokit

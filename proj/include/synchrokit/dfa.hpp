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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "synchrokit/error.hpp"
#include "synchrokit/state_set.hpp"

namespace synchrokit {

using Letter = std::uint32_t;

/// A word is a sequence of letter indices; validity depends on the Dfa it is
/// applied to.
using Word = std::vector<Letter>;

Word reversed(const Word& w);
Word concat(const Word& u, const Word& v);

/// A complete deterministic automaton (Q, Sigma, delta) with named letters.
///
/// Immutable after construction. When n <= 64 the constructor also builds
/// per-letter preimage tables (state -> bitmask of predecessors) which back
/// every subset operation; larger automata support only state-level queries.
class Dfa {
 public:
  /// `delta[q][a]` is the successor of state q under letter a.
  Dfa(std::vector<std::string> letters, const std::vector<std::vector<State>>& delta);

  /// `columns[a][q]` is the successor of state q under letter a.
  static Dfa from_columns(std::size_t n, std::vector<std::string> letters,
                          const std::vector<std::vector<State>>& columns);

  std::size_t states() const noexcept { return n_; }
  std::size_t letter_count() const noexcept { return letters_.size(); }
  const std::vector<std::string>& letters() const noexcept { return letters_; }
  const std::string& letter_name(Letter a) const;
  std::optional<Letter> find_letter(std::string_view name) const;

  bool supports_subsets() const noexcept { return n_ <= kMaxSubsetStates; }

  /// Unchecked successor.
  State next(State q, Letter a) const noexcept { return table_[a * n_ + q]; }
  /// Checked successor.
  State transition(State q, Letter a) const;
  std::span<const State> column(Letter a) const;
  std::vector<std::vector<State>> rows() const;

  // Mask-level kernels; no validation. Callers must have checked
  // supports_subsets() and the letter index.
  std::uint64_t image_mask(std::uint64_t mask, Letter a) const noexcept {
    std::uint64_t out = 0;
    const State* col = table_.data() + a * n_;
    for_each_bit(mask, [&](State q) { out |= std::uint64_t{1} << col[q]; });
    return out;
  }
  std::uint64_t preimage_mask(std::uint64_t mask, Letter a) const noexcept {
    std::uint64_t out = 0;
    const std::uint64_t* pre = preimages_.data() + a * n_;
    for_each_bit(mask, [&](State q) { out |= pre[q]; });
    return out;
  }
  std::uint64_t full_mask() const noexcept { return StateSet::universe_mask(n_); }

  void check_letter(Letter a) const;
  void check_state(State q) const;
  void check_word(const Word& w) const;
  void check_set(const StateSet& s) const;
  void require_subsets() const;

  friend bool operator==(const Dfa& x, const Dfa& y) {
    return x.n_ == y.n_ && x.letters_ == y.letters_ && x.table_ == y.table_;
  }

 private:
  Dfa(std::size_t n, std::vector<std::string> letters, std::vector<State> table);
  void validate_and_index();

  std::size_t n_ = 0;
  std::vector<std::string> letters_;
  std::vector<State> table_;              // letter-major: table_[a * n + q]
  std::vector<std::uint64_t> preimages_;  // letter-major: states mapped to q by a
};

/// Structural classification of a single letter.
struct LetterProfile {
  bool permutational = false;
  bool involutory = false;
  bool unitary = false;
  /// (p, p.a) for a unitary letter a = (p -> r); absent otherwise.
  std::optional<std::pair<State, State>> moved_state;

  friend bool operator==(const LetterProfile&, const LetterProfile&) = default;
};

StateSet image(const Dfa& dfa, const StateSet& s, Letter a);
StateSet preimage(const Dfa& dfa, const StateSet& s, Letter a);
StateSet apply_word(const Dfa& dfa, const StateSet& s, const Word& w);
/// S.w^-1, the set of states mapped into S by w.
StateSet apply_word_inverse(const Dfa& dfa, const StateSet& s, const Word& w);
/// q.w for a single state; works for any n.
State apply_word(const Dfa& dfa, State q, const Word& w);

LetterProfile classify_letter(const Dfa& dfa, Letter a);
bool is_strongly_connected(const Dfa& dfa);
bool is_eulerian(const Dfa& dfa);
/// True iff |S.a^-1| > |S|.
bool is_extensible(const Dfa& dfa, const StateSet& s, Letter a);

}  // namespace synchrokit

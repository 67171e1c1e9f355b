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

#include <optional>
#include <string>
#include <vector>

#include "synchrokit/dfa.hpp"

namespace synchrokit {

/// Q.w = {q0} if w is a reset word; works for any number of states.
std::optional<State> verify_reset(const Dfa& dfa, const Word& w);

struct TraceRow {
  std::size_t suffix_len = 0;
  StateSet subset;                     // {q0}.(suffix of this length)^-1
  std::vector<Letter> extender_letters;  // letters a with |subset.a^-1| > |subset|
};

/// Preimages of a singleton under the suffixes of a word, shortest first.
struct PreimageChain {
  State q0 = 0;
  std::vector<TraceRow> rows;  // rows[i].suffix_len == i, i = 0..|w|
};

PreimageChain preimage_chain(const Dfa& dfa, const Word& w, State q0);

// Both checks take q0 explicitly so they also apply to words that are not
// (yet) reset words.

/// No suffix preimage is contained in (or equal to) the preimage of a
/// strictly shorter suffix.
bool is_straight(const Dfa& dfa, const Word& w, State q0);

/// Whenever some letter extends the preimage of a proper suffix v, the
/// letter preceding v in w extends it too.
bool is_greedy(const Dfa& dfa, const Word& w, State q0);

/// Compares S.w^-1 with S.w^R. Throws kPrecondition unless every letter of w
/// is involutory, in which case the two always agree.
bool involutory_reversal_holds(const Dfa& dfa, const StateSet& s, const Word& w);

/// Occurrences of the factors that a greedy straight reset word of the
/// extremal series must avoid, resolved by the letter names a, b, w0, w1.
struct FactorReport {
  bool has_aa = false;
  bool has_bb = false;
  bool has_w0b = false;
  bool has_w1b = false;
  std::optional<Letter> last_letter;

  bool any_forbidden() const { return has_aa || has_bb || has_w0b || has_w1b; }
};

/// Throws kInvalidLetter when one of "a", "b", "w0", "w1" is missing.
FactorReport forbidden_factor_check(const Word& w, const Dfa& dfa);

}  // namespace synchrokit

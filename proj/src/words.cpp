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

#include "synchrokit/words.hpp"

namespace synchrokit {

std::optional<State> verify_reset(const Dfa& dfa, const Word& w) {
  dfa.check_word(w);
  std::optional<State> target;
  for (State q = 0; q < dfa.states(); ++q) {
    State r = q;
    for (Letter a : w) r = dfa.next(r, a);
    if (!target) target = r;
    else if (*target != r) return std::nullopt;
  }
  return target;
}

PreimageChain preimage_chain(const Dfa& dfa, const Word& w, State q0) {
  dfa.require_subsets();
  dfa.check_word(w);
  dfa.check_state(q0);
  PreimageChain chain{q0, {}};
  chain.rows.reserve(w.size() + 1);
  std::uint64_t mask = std::uint64_t{1} << q0;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    if (i > 0) mask = dfa.preimage_mask(mask, w[w.size() - i]);
    TraceRow row{i, StateSet(dfa.states(), mask), {}};
    const auto size = row.subset.size();
    for (Letter a = 0; a < dfa.letter_count(); ++a) {
      if (static_cast<std::size_t>(std::popcount(dfa.preimage_mask(mask, a))) > size) {
        row.extender_letters.push_back(a);
      }
    }
    chain.rows.push_back(std::move(row));
  }
  return chain;
}

namespace {

std::vector<std::uint64_t> chain_masks(const Dfa& dfa, const Word& w, State q0) {
  dfa.require_subsets();
  dfa.check_word(w);
  dfa.check_state(q0);
  std::vector<std::uint64_t> masks;
  masks.reserve(w.size() + 1);
  masks.push_back(std::uint64_t{1} << q0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    masks.push_back(dfa.preimage_mask(masks.back(), *it));
  }
  return masks;
}

bool extends(const Dfa& dfa, std::uint64_t mask, Letter a) {
  return std::popcount(dfa.preimage_mask(mask, a)) > std::popcount(mask);
}

}  // namespace

bool is_straight(const Dfa& dfa, const Word& w, State q0) {
  const auto masks = chain_masks(dfa, w, q0);
  for (std::size_t j = 1; j < masks.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if ((masks[j] & ~masks[i]) == 0) return false;
    }
  }
  return true;
}

bool is_greedy(const Dfa& dfa, const Word& w, State q0) {
  const auto masks = chain_masks(dfa, w, q0);
  // masks[i] belongs to the suffix of length i; the letter in front of it is
  // w[|w| - i - 1].
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter preceding = w[w.size() - i - 1];
    if (extends(dfa, masks[i], preceding)) continue;
    for (Letter x = 0; x < dfa.letter_count(); ++x) {
      if (extends(dfa, masks[i], x)) return false;
    }
  }
  return true;
}

bool involutory_reversal_holds(const Dfa& dfa, const StateSet& s, const Word& w) {
  dfa.check_word(w);
  for (Letter a : w) {
    if (!classify_letter(dfa, a).involutory) {
      throw Error(ErrorCode::kPrecondition,
                  "letter '" + dfa.letter_name(a) + "' is not involutory");
    }
  }
  return apply_word_inverse(dfa, s, w) == apply_word(dfa, s, reversed(w));
}

FactorReport forbidden_factor_check(const Word& w, const Dfa& dfa) {
  dfa.check_word(w);
  auto resolve = [&](const char* name) {
    auto a = dfa.find_letter(name);
    if (!a) throw Error(ErrorCode::kInvalidLetter, std::string("automaton has no letter '") + name + "'");
    return *a;
  };
  const Letter alpha = resolve("a");
  const Letter beta = resolve("b");
  const Letter omega0 = resolve("w0");
  const Letter omega1 = resolve("w1");

  FactorReport report;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const Letter x = w[i];
    const Letter y = w[i + 1];
    report.has_aa |= x == alpha && y == alpha;
    report.has_bb |= x == beta && y == beta;
    report.has_w0b |= x == omega0 && y == beta;
    report.has_w1b |= x == omega1 && y == beta;
  }
  if (!w.empty()) report.last_letter = w.back();
  return report;
}

}  // namespace synchrokit

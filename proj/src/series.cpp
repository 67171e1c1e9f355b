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

#include "synchrokit/series.hpp"

#include <string>

namespace synchrokit::series {

SeriesParams::SeriesParams(std::uint32_t m) : m_(m) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "series parameter m must be at least 1");
  if (m > (UINT32_MAX - 1) / 4) throw Error(ErrorCode::kInvalidArgument, "series parameter m too large");
}

SeriesParams SeriesParams::from_states(std::uint32_t n) {
  if (n < 5 || n % 4 != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "series state count must be 4m+1 with m >= 1, got " + std::to_string(n));
  }
  return SeriesParams((n - 1) / 4);
}

Dfa build_am(std::uint32_t m) {
  const SeriesParams params(m);
  const std::uint32_t n = params.n();
  std::vector<std::vector<State>> delta(n, std::vector<State>(4));
  for (State q = 0; q < n; ++q) {
    delta[q][kAlpha] = (2 * n - q - 1) % n;
    delta[q][kBeta] = (2 * n - q + 1) % n;
    delta[q][kOmega0] = q == 1 ? 0 : q;
    delta[q][kOmega1] = q == 0 ? 1 : q;
  }
  return Dfa({"a", "b", "w0", "w1"}, delta);
}

Word build_t(std::uint32_t i) {
  if (i == 0 || i % 2 == 0) {
    throw Error(ErrorCode::kInvalidArgument, "t_i needs an odd positive i, got " + std::to_string(i));
  }
  Word t{kAlpha};
  for (std::uint32_t r = 0; r < (i - 1) / 2; ++r) {
    t.push_back(kBeta);
    t.push_back(kAlpha);
  }
  return t;
}

Word build_v(const SeriesParams& params, std::uint32_t j) {
  const std::uint32_t n = params.n();
  if (j < 2 || j > n - 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "v_j needs 2 <= j <= N-1, got j=" + std::to_string(j));
  }
  if (j % 2 == 0) return concat(Word{kOmega1}, build_t(n - j));
  // t_{j-2} with j = 3 is t_1.
  return concat(Word{kOmega0}, build_t(j - 2));
}

Word build_w(std::uint32_t m) {
  const SeriesParams params(m);
  const std::uint32_t n = params.n();
  Word w;
  w.reserve((static_cast<std::size_t>(n) * n - 5) / 2);
  for (std::uint32_t j = n - 1; j >= 2; --j) {
    const Word v = build_v(params, j);
    w.insert(w.end(), v.begin(), v.end());
    if (j > 2) w.push_back(kBeta);
  }
  return w;
}

Word build_reset_word(std::uint32_t m) {
  Word w = build_w(m);
  w.push_back(kOmega0);
  return w;
}

std::uint64_t predicted_rt(std::uint32_t m) {
  const std::uint64_t n = SeriesParams(m).n();
  return (n * n - 3) / 2;
}

StateSet subset_family(const SeriesParams& params, FamilyKind kind, std::uint32_t j) {
  const std::uint32_t n = params.n();
  if (n > kMaxSubsetStates) {
    throw Error(ErrorCode::kSize, "subset families need N <= 64");
  }
  if (j > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "subset family index must satisfy 0 <= j <= N, got " + std::to_string(j));
  }
  StateSet q_j(n, StateSet::universe_mask(j));
  StateSet r_j(n);
  for (State q : q_j.members()) r_j.insert((2 * n - q + 1) % n);
  switch (kind) {
    case FamilyKind::kQ: return q_j;
    case FamilyKind::kR: return r_j;
    case FamilyKind::kQDiamond: q_j.erase(0); return q_j;
    case FamilyKind::kRDiamond: r_j.erase(1); return r_j;
  }
  return q_j;
}

Dfa build_cerny(std::uint32_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "Cerny automaton needs n >= 2");
  std::vector<std::vector<State>> delta(n, std::vector<State>(2));
  for (State q = 0; q < n; ++q) {
    delta[q][0] = (q + 1) % n;
    delta[q][1] = q == 0 ? 1 : q;
  }
  return Dfa({"a", "b"}, delta);
}

Word cerny_reset_word(std::uint32_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "Cerny automaton needs n >= 2");
  Word w;
  for (std::uint32_t r = 0; r + 2 < n; ++r) {
    w.push_back(1);
    w.insert(w.end(), n - 1, 0);
  }
  w.push_back(1);
  return w;
}

}  // namespace synchrokit::series

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

#include <algorithm>

#include <doctest.h>

#include "oracles.hpp"
#include "series_properties.hpp"
#include "synchrokit/dfa_io.hpp"
#include "synchrokit/series.hpp"
#include "synchrokit/synchro.hpp"
#include "synchrokit/words.hpp"
#include "test_util.hpp"

using namespace synchrokit;
using namespace synchrokit::series;

namespace {

std::vector<State> column_of(const Dfa& dfa, Letter a) {
  auto c = dfa.column(a);
  return {c.begin(), c.end()};
}

}  // namespace

TEST_CASE("build_am") {
  const Dfa a1 = build_am(1);
  CHECK(a1.letters() == std::vector<std::string>{"a", "b", "w0", "w1"});
  CHECK(column_of(a1, kAlpha) == std::vector<State>{4, 3, 2, 1, 0});
  CHECK(column_of(a1, kBeta) == std::vector<State>{1, 0, 4, 3, 2});
  CHECK(column_of(a1, kOmega0) == std::vector<State>{0, 0, 2, 3, 4});
  CHECK(column_of(a1, kOmega1) == std::vector<State>{1, 1, 2, 3, 4});
  CHECK(classify_letter(a1, kAlpha).involutory);
  CHECK(classify_letter(a1, kBeta).involutory);
  CHECK(classify_letter(a1, kOmega0).unitary);
  CHECK(classify_letter(a1, kOmega1).unitary);
  for (std::uint32_t m = 1; m <= 8; ++m) {
    const Dfa am = build_am(m);
    const int n = static_cast<int>(4 * m + 1);
    CHECK(am.states() == static_cast<std::size_t>(n));
    CHECK(is_eulerian(am));
    const auto rows = oracle::rows_of(am);
    for (int q = 0; q < n; ++q) {
      CHECK(rows[q][0] == ((-q - 1) % n + n) % n);
      CHECK(rows[q][1] == ((-q + 1) % n + n) % n);
      CHECK(rows[q][2] == (q == 1 ? 0 : q));
      CHECK(rows[q][3] == (q == 0 ? 1 : q));
    }
  }
  CHECK(error_of([] { build_am(0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("SeriesParams") {
  CHECK(SeriesParams(3).n() == 13);
  CHECK(SeriesParams::from_states(9).m() == 2);
  CHECK(error_of([] { SeriesParams::from_states(8); }) == ErrorCode::kInvalidArgument);
  CHECK(error_of([] { SeriesParams::from_states(1); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("build_t") {
  CHECK(build_t(1) == Word{kAlpha});
  CHECK(build_t(3) == Word{kAlpha, kBeta, kAlpha});
  const Word t5 = build_t(5);
  CHECK(t5 == Word{kAlpha, kBeta, kAlpha, kBeta, kAlpha});
  for (std::uint32_t i = 1; i < 40; i += 2) {
    const Word t = build_t(i);
    CHECK(t.size() == i);
    CHECK(reversed(t) == t);
  }
  CHECK(error_of([] { build_t(4); }) == ErrorCode::kInvalidArgument);
  CHECK(error_of([] { build_t(0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("build_v") {
  const SeriesParams p(1);
  const Dfa a1 = build_am(1);
  CHECK(format_word(a1, build_v(p, 2)) == "w1 a b a");
  CHECK(format_word(a1, build_v(p, 3)) == "w0 a");
  CHECK(format_word(a1, build_v(p, 4)) == "w1 a");
  CHECK(error_of([&] { build_v(p, 1); }) == ErrorCode::kInvalidArgument);
  CHECK(error_of([&] { build_v(p, 5); }) == ErrorCode::kInvalidArgument);
  for (std::uint32_t m = 1; m <= 4; ++m) {
    const SeriesParams q(m);
    for (std::uint32_t j = 2; j < q.n(); ++j) {
      CHECK(build_v(q, j).size() == (j % 2 == 0 ? 1 + q.n() - j : j - 1));
    }
  }
}

TEST_CASE("build_w and the reset word") {
  const Dfa a1 = build_am(1);
  CHECK(format_word(a1, build_w(1)) == "w1 a b w0 a b w1 a b a");
  CHECK(build_w(1).size() == 10);
  CHECK(build_reset_word(1).size() == 11);
  CHECK(build_reset_word(2).size() == 39);
  for (std::uint32_t m = 1; m <= 6; ++m) {
    const std::uint64_t n = 4 * m + 1;
    CHECK(build_w(m).size() == (n * n - 5) / 2);
    const Word rw = build_reset_word(m);
    CHECK(rw.size() == (n * n - 3) / 2);
    CHECK(rw.back() == kOmega0);
    CHECK(verify_reset(build_am(m), rw) == State{0});
  }
  CHECK(error_of([] { build_w(0); }) == ErrorCode::kInvalidArgument);
  CHECK(error_of([] { build_reset_word(0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("predicted_rt") {
  CHECK(predicted_rt(1) == 11);
  CHECK(predicted_rt(2) == 39);
  CHECK(predicted_rt(3) == 83);
}

TEST_CASE("subset families") {
  const SeriesParams p(1);
  CHECK(subset_family(p, FamilyKind::kQ, 3) == StateSet(5, {0, 1, 2}));
  CHECK(subset_family(p, FamilyKind::kR, 3) == StateSet(5, {0, 1, 4}));
  CHECK(subset_family(p, FamilyKind::kQDiamond, 3) == StateSet(5, {1, 2}));
  CHECK(subset_family(p, FamilyKind::kRDiamond, 3) == StateSet(5, {0, 4}));
  CHECK(subset_family(p, FamilyKind::kQ, 0).is_empty());
  CHECK(subset_family(p, FamilyKind::kQ, 5).is_full());
  CHECK(error_of([&] { subset_family(p, FamilyKind::kQ, 6); }) == ErrorCode::kInvalidArgument);
  const Dfa a1 = build_am(1);
  for (std::uint32_t m = 1; m <= 3; ++m) {
    const SeriesParams q(m);
    const Dfa am = build_am(m);
    for (std::uint32_t j = 0; j <= q.n(); ++j) {
      const StateSet qj = subset_family(q, FamilyKind::kQ, j);
      CHECK(qj.size() == j);
      CHECK(subset_family(q, FamilyKind::kR, j) == image(am, qj, kBeta));
      CHECK(subset_family(q, FamilyKind::kQDiamond, j) == qj - StateSet(q.n(), {0}));
      CHECK(subset_family(q, FamilyKind::kRDiamond, j) ==
            subset_family(q, FamilyKind::kR, j) - StateSet(q.n(), {1}));
    }
  }
}

TEST_CASE("Cerny automaton") {
  for (std::uint32_t n = 2; n <= 7; ++n) {
    const Dfa c = build_cerny(n);
    const Word rw = cerny_reset_word(n);
    CHECK(rw.size() == (n - 1) * (n - 1));
    CHECK(verify_reset(c, rw).has_value());
    CHECK(oracle::reset_threshold(oracle::rows_of(c)) == (n - 1) * (n - 1));
  }
  CHECK(error_of([] { build_cerny(1); }) == ErrorCode::kInvalidArgument);
  CHECK(error_of([] { cerny_reset_word(1); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("series identities for m <= 3") {
  for (std::uint32_t m = 1; m <= 3; ++m) {
    CAPTURE(m);
    for (const auto& t : {series_props::explicit_transitions(m), series_props::t_involutory(m),
                          series_props::zigzag(m), series_props::block_preimages(m),
                          series_props::no_idle_unitary(m), series_props::greedy_conditions(m)}) {
      CHECK(t.checks > 0);
      CHECK(t.failures == 0);
    }
  }
}

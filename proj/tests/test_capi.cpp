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

// Exercises the shared library through its C interface only.

#include <cstring>
#include <string>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "synchrokit/synchrokit.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  sk_string_free(s);
  return out;
}

const char* kA1 =
    R"({"n": 5, "letters": ["a","b","w0","w1"], "delta": [[4,1,0,1],[3,0,0,1],[2,4,2,2],[1,3,3,3],[0,2,4,4]]})";

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(sk_version()) == "0.1.0");
  CHECK(std::string(sk_status_name(SK_OK)) == "ok");
  CHECK(std::string(sk_status_name(SK_ERR_PARSE)) == "parse-error");
}

TEST_CASE("JSON in and out") {
  sk_dfa* dfa = nullptr;
  REQUIRE(sk_dfa_from_json(kA1, &dfa) == SK_OK);
  CHECK(sk_dfa_states(dfa) == 5);
  CHECK(sk_dfa_letters(dfa) == 4);
  CHECK(std::string(sk_dfa_letter_name(dfa, 2)) == "w0");
  CHECK(sk_dfa_letter_name(dfa, 9) == nullptr);
  char* text = nullptr;
  REQUIRE(sk_dfa_to_json(dfa, &text) == SK_OK);
  CHECK(take(text) == kA1);
  sk_dfa* copy = nullptr;
  REQUIRE(sk_dfa_clone(dfa, &copy) == SK_OK);
  uint32_t t = 0;
  CHECK(sk_dfa_transition(copy, 0, 0, &t) == SK_OK);
  CHECK(t == 4);
  CHECK(sk_dfa_transition(copy, 5, 0, &t) == SK_ERR_INVALID_STATE);
  CHECK(sk_dfa_transition(copy, 0, 4, &t) == SK_ERR_INVALID_LETTER);
  sk_dfa_free(copy);
  sk_dfa_free(dfa);

  sk_dfa* bad = nullptr;
  CHECK(sk_dfa_from_json("{\"n\": 1}", &bad) == SK_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::strlen(sk_last_error()) > 0);
  CHECK(sk_dfa_from_json(nullptr, &bad) == SK_ERR_INVALID_ARGUMENT);
  sk_dfa_free(nullptr);
  sk_string_free(nullptr);
}

TEST_CASE("construction from arrays") {
  const char* names[] = {"a", "b"};
  const uint32_t delta[] = {1, 1, 2, 2, 0, 0};
  sk_dfa* dfa = nullptr;
  REQUIRE(sk_dfa_new(3, 2, names, delta, &dfa) == SK_OK);
  int eulerian = -1;
  CHECK(sk_dfa_is_eulerian(dfa, &eulerian) == SK_OK);
  CHECK(eulerian == 1);
  int sync = -1;
  CHECK(sk_is_synchronizing(dfa, &sync) == SK_OK);
  CHECK(sync == 0);
  sk_rt_result r{};
  CHECK(sk_reset_threshold(dfa, SK_RT_FORWARD, &r) == SK_ERR_NOT_SYNCHRONIZING);
  sk_dfa_free(dfa);
  const uint32_t out_of_range[] = {3, 0, 0, 0, 0, 0};
  CHECK(sk_dfa_new(3, 2, names, out_of_range, &dfa) == SK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("subset algebra") {
  sk_dfa* dfa = nullptr;
  REQUIRE(sk_series_am(1, &dfa) == SK_OK);
  uint64_t out = 0;
  CHECK(sk_image(dfa, 0x1f, 3, &out) == SK_OK);
  CHECK(out == 0x1e);
  CHECK(sk_preimage(dfa, 0x1, 2, &out) == SK_OK);
  CHECK(out == 0x3);
  CHECK(sk_preimage(dfa, 0x1, 7, &out) == SK_ERR_INVALID_LETTER);
  CHECK(sk_preimage(dfa, 0x20, 0, &out) == SK_ERR_INVALID_STATE);
  int ext = -1;
  CHECK(sk_is_extensible(dfa, 0x1, 2, &ext) == SK_OK);
  CHECK(ext == 1);
  CHECK(sk_apply_word(dfa, 0x1, "a b a", 0, &out) == SK_OK);
  CHECK(out == 0x4);
  CHECK(sk_apply_word_inverse(dfa, 0x1, "a b a w0", 0, &out) == SK_OK);
  CHECK(out == 0x6);
  CHECK(sk_apply_word(dfa, 0x1, "a q", 0, &out) == SK_ERR_INVALID_LETTER);
  sk_letter_profile p{};
  CHECK(sk_dfa_classify_letter(dfa, 2, &p) == SK_OK);
  CHECK(p.unitary == 1);
  CHECK(p.moved_from == 1);
  CHECK(p.moved_to == 0);
  int holds = 0;
  CHECK(sk_involutory_reversal_holds(dfa, 0x5, "a b b a", 0, &holds) == SK_OK);
  CHECK(holds == 1);
  CHECK(sk_involutory_reversal_holds(dfa, 0x2, "w0", 0, &holds) == SK_ERR_PRECONDITION);
  sk_dfa_free(dfa);
}

TEST_CASE("words, traces and thresholds") {
  sk_dfa* dfa = nullptr;
  REQUIRE(sk_series_am(2, &dfa) == SK_OK);
  char* word = nullptr;
  REQUIRE(sk_series_word(2, SK_SERIES_RESET, &word) == SK_OK);
  const std::string rw = take(word);

  sk_word_report report{};
  REQUIRE(sk_verify_word(dfa, rw.c_str(), 0, &report) == SK_OK);
  CHECK(report.reset == 1);
  CHECK(report.q0 == 0);
  CHECK(report.length == 39);
  CHECK(report.straight == 1);
  CHECK(report.greedy == 1);
  CHECK(report.factors.available == 1);
  CHECK(report.factors.has_w0b == 0);
  CHECK(report.factors.last_letter == 2);

  sk_rt_result r{};
  REQUIRE(sk_reset_threshold(dfa, SK_RT_BACKWARD, &r) == SK_OK);
  CHECK(r.threshold == 39);
  take(r.word);
  REQUIRE(sk_reset_threshold(dfa, SK_RT_FORWARD, &r) == SK_OK);
  CHECK(take(r.word) == rw);
  uint64_t predicted = 0;
  CHECK(sk_series_predicted_rt(2, &predicted) == SK_OK);
  CHECK(predicted == 39);

  sk_chain* chain = nullptr;
  REQUIRE(sk_trace(dfa, rw.c_str(), 0, 0, &chain) == SK_OK);
  CHECK(sk_chain_rows(chain) == 40);
  uint64_t subset = 0;
  uint64_t extenders = 0;
  CHECK(sk_chain_row(chain, 39, &subset, &extenders) == SK_OK);
  CHECK(subset == 0x1ff);
  CHECK(sk_chain_row(chain, 40, &subset, &extenders) == SK_ERR_INVALID_ARGUMENT);
  sk_chain_free(chain);

  char* ext = nullptr;
  uint64_t length = 0;
  uint64_t grown = 0;
  REQUIRE(sk_shortest_extending_word(dfa, 0x3, &ext, &length, &grown) == SK_OK);
  CHECK(length == 8);
  take(ext);
  CHECK(sk_shortest_extending_word(dfa, 0, &ext, &length, &grown) == SK_ERR_DOMAIN);

  sk_levels* levels = nullptr;
  REQUIRE(sk_backward_levels(dfa, 0, 1000, &levels) == SK_OK);
  uint64_t depth = 0;
  CHECK(sk_levels_depth_to_full(levels, &depth) == 1);
  CHECK(depth == 39);
  CHECK(sk_levels_width(levels, 0) == 1);
  sk_levels_free(levels);
  sk_dfa_free(dfa);

  CHECK(sk_series_am(0, &dfa) == SK_ERR_INVALID_ARGUMENT);
  REQUIRE(sk_series_cerny(5, &dfa) == SK_OK);
  REQUIRE(sk_reset_threshold(dfa, SK_RT_FORWARD, &r) == SK_OK);
  CHECK(r.threshold == 16);
  take(r.word);
  REQUIRE(sk_series_cerny_reset_word(5, &word) == SK_OK);
  REQUIRE(sk_verify_word(dfa, word, 0, &report) == SK_OK);
  take(word);
  CHECK(report.reset == 1);
  CHECK(report.factors.available == 0);
  sk_dfa_free(dfa);
}

TEST_CASE("census through the C API") {
  sk_census_spec spec;
  sk_census_spec_init(&spec);
  spec.n = 5;
  spec.k = 2;
  spec.up_to_iso = 1;
  spec.bound_mode = SK_BOUND_AUTO;
  spec.jobs = 2;
  double estimate = 0;
  CHECK(sk_census_estimate(&spec, &estimate) == SK_OK);
  CHECK(estimate == doctest::Approx(113400));
  sk_census* census = nullptr;
  REQUIRE(sk_census_run(&spec, &census) == SK_OK);
  sk_census_summary s{};
  REQUIRE(sk_census_summary_get(census, &s) == SK_OK);
  CHECK(s.has_max_rt == 1);
  CHECK(s.max_rt == 10);
  CHECK(s.has_bound == 1);
  CHECK(s.bound == 10);
  CHECK(s.bound_holds == 1);
  REQUIRE(sk_census_witness_count(census) == 1);
  sk_dfa* w = nullptr;
  REQUIRE(sk_census_witness(census, 0, &w) == SK_OK);
  sk_dfa* canon = nullptr;
  REQUIRE(sk_canonical_form(w, &canon) == SK_OK);
  char* a = nullptr;
  char* b = nullptr;
  sk_dfa_to_json(w, &a);
  sk_dfa_to_json(canon, &b);
  CHECK(take(a) == take(b));
  sk_dfa_free(canon);
  sk_dfa_free(w);
  CHECK(sk_census_witness(census, 1, &w) == SK_ERR_INVALID_ARGUMENT);
  CHECK(sk_census_violation_count(census) == 0);
  sk_census_free(census);

  spec.n = 9;
  spec.k = 3;
  CHECK(sk_census_run(&spec, &census) == SK_ERR_BUDGET);
  spec.n = 2;
  spec.bound_mode = SK_BOUND_AUTO;
  CHECK(sk_census_run(&spec, &census) == SK_ERR_DOMAIN);
}

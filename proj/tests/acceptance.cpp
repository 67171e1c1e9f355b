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

// Acceptance suite: one PASS/FAIL line per criterion. Expected values,
// tolerances and time limits are fixed constants below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "series_properties.hpp"
#include "synchrokit/census.hpp"
#include "synchrokit/series.hpp"
#include "synchrokit/synchro.hpp"
#include "synchrokit/words.hpp"

using namespace synchrokit;

namespace {

// Exact expectations. Thresholds are integers; no tolerance applies.
constexpr std::size_t kSeriesRt[] = {11, 39, 83};  // m = 1, 2, 3
constexpr std::size_t kCernyRt[] = {4, 9, 16, 25};  // n = 3..6
constexpr std::size_t kBinaryMaxRt5 = 10;
constexpr std::size_t kBinaryMaxRt5Classes = 1;
constexpr std::uint64_t kBinaryTables5 = 113400;
constexpr std::size_t kBinaryCeiling6 = 15;
constexpr std::size_t kBinaryMaxRt6 = 14;  // regression value from the first full run
constexpr std::size_t kLevelMaxWidth = 3;  // regression value, m = 1..3
constexpr std::size_t kRandomSamples = 200;
constexpr std::size_t kReversalTrials = 1000;
constexpr std::size_t kReversalExhaustiveLength = 6;

// Wall-clock limits in seconds.
constexpr double kLimitC1 = 1;
constexpr double kLimitC2 = 1;
constexpr double kLimitC3 = 10;
constexpr double kLimitC4 = 5;
constexpr double kLimitC5n5 = 60;
constexpr double kLimitC5n6 = 30 * 60;
constexpr double kLimitC5small = 1;
constexpr double kLimitC6 = 10 * 60;
constexpr double kLimitC7 = 60;
constexpr double kLimitC8 = 10;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Totals for criterion 9, accumulated over every census run in this suite.
struct StructuralTotals {
  std::uint64_t automata = 0;
  std::uint64_t kari_violations = 0;
  std::uint64_t extension_checks = 0;
  std::uint64_t extension_violations = 0;
  bool lengths_within = true;
  void add(const census::CensusRecord& r) {
    automata += r.eulerian_synchronizing;
    kari_violations += r.kari_violations;
    extension_checks += r.extension_checks;
    extension_violations += r.extension_violations;
    if (r.max_extension_length + 1 > r.spec.n) lengths_within = false;
  }
};
StructuralTotals g_structural;

census::CensusRecord run_census(std::size_t n, std::size_t k, std::optional<std::int64_t> bound,
                                unsigned jobs) {
  census::CensusSpec spec;
  spec.n = n;
  spec.k = k;
  spec.eulerian_only = true;
  spec.up_to_iso = true;
  spec.bound_to_check = bound;
  census::CensusOptions options;
  options.jobs = jobs;
  options.extension_samples = -1;  // every proper nonempty subset
  census::CensusRecord r = census::census_run(spec, options);
  g_structural.add(r);
  return r;
}

Outcome c1_series_threshold() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (std::uint32_t m = 1; m <= 3; ++m) {
    const RtResult r = reset_threshold_exact(series::build_am(m));
    o.detail << " rt(A_" << m << ")=" << r.threshold;
    o.require(r.threshold == kSeriesRt[m - 1], "rt(A_" + std::to_string(m) + ")");
    o.require(r.threshold == series::predicted_rt(m), "formula");
  }
  const double t = seconds_since(start);
  o.detail << " time=" << t << "s";
  o.require(t < kLimitC1, "time");
  return o;
}

Outcome c2_constructed_word() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (std::uint32_t m = 1; m <= 5; ++m) {
    const Dfa am = series::build_am(m);
    const Word rw = series::build_reset_word(m);
    const std::string tag = "m=" + std::to_string(m);
    o.require(rw.size() == series::predicted_rt(m), tag + " length");
    o.require(verify_reset(am, rw) == State{0}, tag + " reset to 0");
    o.require(is_straight(am, rw, 0), tag + " straight");
    o.require(is_greedy(am, rw, 0), tag + " greedy");
    o.require(!forbidden_factor_check(rw, am).any_forbidden(), tag + " factors");
  }
  const double t = seconds_since(start);
  o.detail << " m=1..5 checked, time=" << t << "s";
  o.require(t < kLimitC2, "time");
  return o;
}

Outcome c3_lemma_suite() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  series_props::Tally total;
  for (std::uint32_t m = 1; m <= 3; ++m) {
    const std::pair<const char*, series_props::Tally> parts[] = {
        {"reversal", series_props::reversal_law(m, kReversalExhaustiveLength, kReversalTrials,
                                                0x5eed + m)},
        {"explicit", series_props::explicit_transitions(m)},
        {"t-involution", series_props::t_involutory(m)},
        {"zigzag", series_props::zigzag(m)},
        {"blocks", series_props::block_preimages(m)},
        {"unitary-extends", series_props::no_idle_unitary(m)},
        {"greedy-sets", series_props::greedy_conditions(m)},
    };
    for (const auto& [name, tally] : parts) {
      total += tally;
      o.require(tally.checks > 0, std::string(name) + " ran");
      o.require(tally.failures == 0, std::string(name) + " m=" + std::to_string(m));
    }
  }
  const double t = seconds_since(start);
  o.detail << " checks=" << total.checks << " failures=" << total.failures << " time=" << t << "s";
  o.require(t < kLimitC3, "time");
  return o;
}

Outcome c4_extending_word() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (std::uint32_t m = 1; m <= 3; ++m) {
    const series::SeriesParams p(m);
    const Dfa am = series::build_am(m);
    const StateSet q2 = series::subset_family(p, series::FamilyKind::kQ, 2);
    const Word w = shortest_extending_word(am, q2);
    const Word v2 = series::build_v(p, 2);
    o.detail << " |ext(A_" << m << ")|=" << w.size();
    o.require(w.size() == p.n() - 1, "length m=" + std::to_string(m));
    o.require(v2.size() == p.n() - 1, "|v_2| m=" + std::to_string(m));
    o.require(apply_word_inverse(am, q2, v2).size() > q2.size(), "v_2 extends");
  }
  const double t = seconds_since(start);
  o.detail << " time=" << t << "s";
  o.require(t < kLimitC4, "time");
  return o;
}

Outcome c5_binary_census() {
  Outcome o;
  // n = 5
  auto start = std::chrono::steady_clock::now();
  const auto r5 = run_census(5, 2, census::conjectured_bound(5, 2), 1);
  double t = seconds_since(start);
  o.detail << " n=5: max_rt=" << (r5.max_rt ? *r5.max_rt : 0) << " classes=" << r5.witnesses.size()
           << " tables=" << r5.tables_scanned << " time=" << t << "s;";
  o.require(r5.max_rt == kBinaryMaxRt5, "n=5 max_rt");
  o.require(r5.witnesses.size() == kBinaryMaxRt5Classes, "n=5 unique class");
  o.require(r5.tables_scanned <= kBinaryTables5, "n=5 table count");
  o.require(r5.tables_scanned == oracle::multinomial(5, 2), "n=5 multinomial");
  o.require(r5.bound_holds == true, "n=5 bound");
  for (const auto& w : r5.witnesses) {
    o.require(oracle::reset_threshold(oracle::rows_of(census::dfa_from_table(5, 2, w))) ==
                  kBinaryMaxRt5,
              "n=5 witness rt by oracle");
  }
  o.require(t < kLimitC5n5, "n=5 time");

  // n = 6
  start = std::chrono::steady_clock::now();
  const auto r6 = run_census(6, 2, census::conjectured_bound(6, 2), 8);
  t = seconds_since(start);
  o.detail << " n=6: max_rt=" << (r6.max_rt ? *r6.max_rt : 0) << " classes=" << r6.witnesses.size()
           << " time=" << t << "s;";
  o.require(r6.max_rt && *r6.max_rt <= kBinaryCeiling6, "n=6 ceiling");
  o.require(r6.max_rt == kBinaryMaxRt6, "n=6 regression value");
  o.require(r6.bound_holds == true, "n=6 bound");
  for (const auto& w : r6.witnesses) {
    o.require(oracle::reset_threshold(oracle::rows_of(census::dfa_from_table(6, 2, w))) ==
                  kBinaryMaxRt6,
              "n=6 witness rt by oracle");
  }
  o.require(t < kLimitC5n6, "n=6 time");

  // n = 3, 4
  for (std::size_t n : {3, 4}) {
    start = std::chrono::steady_clock::now();
    const auto r = run_census(n, 2, census::conjectured_bound(n, 2), 1);
    t = seconds_since(start);
    o.detail << " n=" << n << ": max_rt=" << (r.max_rt ? *r.max_rt : 0)
             << " bound=" << census::conjectured_bound(n, 2) << ";";
    o.require(r.bound_holds == true, "n=" + std::to_string(n) + " bound");
    o.require(t < kLimitC5small, "n=" + std::to_string(n) + " time");
  }
  return o;
}

Outcome c6_beyond_binary() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n : {3, 4}) {
    for (std::size_t k : {1, 2, 3}) {
      const std::int64_t bound = static_cast<std::int64_t>((n * n - 3) / 2);
      const auto r = run_census(n, k, bound, 1);
      o.detail << " (" << n << "," << k << "):";
      if (r.max_rt) o.detail << *r.max_rt << "<=" << bound;
      else o.detail << "none";
      o.require(r.bound_holds == true,
                "n=" + std::to_string(n) + " k=" + std::to_string(k));
      o.require(r.bound_violations == 0, "violations");
    }
  }
  const double t = seconds_since(start);
  o.detail << " time=" << t << "s";
  o.require(t < kLimitC6, "time");
  return o;
}

Outcome c7_oracle_equivalence() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  auto agree = [&](const Dfa& dfa, const std::string& tag) -> std::size_t {
    const RtResult fwd = reset_threshold_exact(dfa);
    const RtResult back = reset_threshold_backward(dfa);
    o.require(fwd.threshold == back.threshold, tag + " forward/backward");
    o.require(is_straight(dfa, fwd.witness, fwd.q0), tag + " forward witness straight");
    o.require(is_straight(dfa, back.witness, back.q0), tag + " backward witness straight");
    o.require(verify_reset(dfa, fwd.witness) == fwd.q0, tag + " forward witness resets");
    o.require(verify_reset(dfa, back.witness) == back.q0, tag + " backward witness resets");
    return fwd.threshold;
  };
  for (std::uint32_t m = 1; m <= 3; ++m) agree(series::build_am(m), "A_" + std::to_string(m));
  for (std::uint32_t n = 3; n <= 6; ++n) {
    const Dfa c = series::build_cerny(n);
    const std::string tag = "C_" + std::to_string(n);
    const std::size_t rt = agree(c, tag);
    o.require(rt == kCernyRt[n - 3], tag + " value");
    o.require(oracle::reset_threshold(oracle::rows_of(c)) == kCernyRt[n - 3], tag + " oracle");
  }
  std::mt19937_64 rng(0x5eed);
  std::size_t sampled = 0;
  while (sampled < kRandomSamples) {
    const Dfa dfa = oracle::random_dfa(rng, 1 + rng() % 6, 1 + rng() % 3);
    const auto expected = oracle::reset_threshold(oracle::rows_of(dfa));
    if (!expected) continue;
    ++sampled;
    o.require(agree(dfa, "random #" + std::to_string(sampled)) == *expected, "random vs oracle");
  }
  const double t = seconds_since(start);
  o.detail << " A_1..A_3, C_3..C_6, " << sampled << " random; time=" << t << "s";
  o.require(t < kLimitC7, "time");
  return o;
}

Outcome c8_backward_tractability() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (std::uint32_t m = 1; m <= 3; ++m) {
    const Dfa am = series::build_am(m);
    const LevelProfile p = backward_level_profile(am, 0, 10 * series::predicted_rt(m));
    std::size_t oracle_depth = 0;
    const auto widths = oracle::level_widths(oracle::rows_of(am), 0, &oracle_depth);
    o.detail << " m=" << m << ":width=" << p.max_width();
    o.require(p.max_width() == kLevelMaxWidth, "width m=" + std::to_string(m));
    o.require(p.depth_to_full == series::predicted_rt(m), "depth m=" + std::to_string(m));
    o.require(p.widths == widths, "oracle layers m=" + std::to_string(m));
    o.require(oracle_depth == series::predicted_rt(m), "oracle depth m=" + std::to_string(m));
  }
  const double t = seconds_since(start);
  o.detail << " time=" << t << "s";
  o.require(t < kLimitC8, "time");
  return o;
}

Outcome c9_structural_bounds() {
  Outcome o;
  o.detail << " automata=" << g_structural.automata << " kari_violations="
           << g_structural.kari_violations << " extension_checks=" << g_structural.extension_checks
           << " extension_violations=" << g_structural.extension_violations;
  o.require(g_structural.automata > 0, "census ran");
  o.require(g_structural.extension_checks > 0, "subsets checked");
  o.require(g_structural.kari_violations == 0, "Kari bound");
  o.require(g_structural.extension_violations == 0, "extension bound");
  o.require(g_structural.lengths_within, "max extension length");
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"C1 extremal-series reset threshold", c1_series_threshold},
      {"C2 constructed reset word", c2_constructed_word},
      {"C3 series lemma suite", c3_lemma_suite},
      {"C4 shortest extending word of {0,1}", c4_extending_word},
      {"C5 binary Eulerian census", c5_binary_census},
      {"C6 bound beyond binary (n<=4, k<=3)", c6_beyond_binary},
      {"C7 forward/backward oracle equivalence", c7_oracle_equivalence},
      {"C8 backward tractability", c8_backward_tractability},
      {"C9 structural bounds on census automata", c9_structural_bounds},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    if (!o.pass) ++failed;
    std::printf("%s  %s:%s\n", o.pass ? "PASS" : "FAIL", name, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}

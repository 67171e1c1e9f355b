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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "synchrokit/dfa.hpp"

namespace synchrokit::census {

/// Flattened transition table in row-major order: table[q * k + a].
using Table = std::vector<State>;

struct CensusSpec {
  std::size_t n = 0;
  std::size_t k = 0;
  bool eulerian_only = true;
  bool up_to_iso = false;
  std::optional<std::int64_t> bound_to_check;
};

struct CensusOptions {
  unsigned jobs = 1;
  /// Ceiling on the table count estimate; 0 selects default_budget().
  double budget = 0;
  bool force = false;
  /// Extending-word checks per Eulerian synchronizing automaton: 0 disables,
  /// a negative value checks every proper nonempty subset, otherwise that
  /// many subsets are sampled.
  int extension_samples = 0;
  std::uint64_t seed = 0x5eed;
};

struct CensusRecord {
  CensusSpec spec;
  std::uint64_t tables_scanned = 0;     // tables passing the in-degree filter
  std::uint64_t total_enumerated = 0;   // visited automata
  std::uint64_t synchronizing_count = 0;
  std::optional<std::size_t> max_rt;
  std::vector<Table> witnesses;         // canonical forms attaining max_rt, sorted
  std::uint64_t witness_automata = 0;   // visited automata attaining max_rt
  std::optional<bool> bound_holds;
  std::uint64_t bound_violations = 0;
  std::vector<Table> violation_witnesses;  // canonical, sorted, capped

  // Structural checks on Eulerian synchronizing automata.
  std::uint64_t eulerian_synchronizing = 0;
  std::uint64_t kari_violations = 0;
  std::uint64_t extension_checks = 0;
  std::uint64_t extension_violations = 0;
  std::size_t max_extension_length = 0;

  friend bool operator==(const CensusRecord& x, const CensusRecord& y);
};

inline constexpr double kDefaultBudget = 1e9;
inline constexpr std::size_t kMaxViolationWitnesses = 64;

/// kDefaultBudget unless SYNCHROKIT_BUDGET holds a positive number.
double default_budget();

/// Number of tables the generator scans: (nk)! / (k!)^n for Eulerian runs,
/// n^(nk) otherwise.
double estimate_tables(const CensusSpec& spec);

/// Throws kBudget when the estimate exceeds the ceiling and force is off.
void check_budget(const CensusSpec& spec, const CensusOptions& options);

/// Visits every complete n-state, k-letter automaton in the class described by `spec`.
/// Eulerian runs extend the table column by column, pruning any state whose
/// in-degree would exceed k, and keep the strongly connected results. With
/// up_to_iso exactly one canonical representative per class is visited.
/// Returns the number of visited automata.
std::uint64_t enumerate_automata(const CensusSpec& spec, const CensusOptions& options,
                                 const std::function<void(const Dfa&)>& visitor);

/// Lexicographically least row-major table over all state and letter
/// relabelings. Strongly connected inputs use first-visit labeling from each
/// start state; others fall back to canonical_form_bruteforce.
Table canonical_form(const Dfa& dfa);
Table canonical_form_bruteforce(const Dfa& dfa);

/// state_perm[q] is the new name of state q, letter_perm[a] the new index of
/// letter a (which keeps its name).
Dfa relabel(const Dfa& dfa, const std::vector<State>& state_perm,
            const std::vector<Letter>& letter_perm);

Table table_of(const Dfa& dfa);
/// Letters are named a, b, c, ...
Dfa dfa_from_table(std::size_t n, std::size_t k, const Table& table);

CensusRecord census_run(const CensusSpec& spec, const CensusOptions& options = {});

/// floor((n^2 - 3) / 2), or floor((n^2 - 5) / 2) for binary alphabets; n >= 3.
std::int64_t conjectured_bound(std::size_t n, std::size_t k);

/// (n-1)(n-2) + 1.
std::int64_t kari_bound(std::size_t n);

/// census_run with the conjectured bound; the record carries violations.
CensusRecord verify_conjecture(CensusSpec spec, const CensusOptions& options = {});

}  // namespace synchrokit::census

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

#include "synchrokit/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "synchrokit/synchro.hpp"

namespace synchrokit::census {

namespace {

constexpr std::size_t kShardDepth = 2;
constexpr std::size_t kBruteForceMaxStates = 8;
constexpr std::size_t kMaxLetterPermutations = 8;

std::vector<std::string> default_letter_names(std::size_t k) {
  std::vector<std::string> names;
  names.reserve(k);
  for (std::size_t a = 0; a < k; ++a) {
    names.push_back(a < 26 ? std::string(1, static_cast<char>('a' + a)) : "x" + std::to_string(a));
  }
  return names;
}

void validate_spec(const CensusSpec& spec) {
  if (spec.n == 0 || spec.k == 0) {
    throw Error(ErrorCode::kInvalidArgument, "census needs n >= 1 and k >= 1");
  }
  if (spec.n > kMaxSubsetStates) {
    throw Error(ErrorCode::kSize, "census supports at most 64 states");
  }
}

bool table_strongly_connected(const Table& t, std::size_t n, std::size_t k) {
  std::uint64_t succ[kMaxSubsetStates] = {};
  std::uint64_t pred[kMaxSubsetStates] = {};
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t a = 0; a < k; ++a) {
      const State r = t[q * k + a];
      succ[q] |= std::uint64_t{1} << r;
      pred[r] |= std::uint64_t{1} << q;
    }
  }
  const std::uint64_t full = StateSet::universe_mask(n);
  for (const std::uint64_t* adj : {succ, pred}) {
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for_each_bit(frontier, [&](State q) { next |= adj[q]; });
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != full) return false;
  }
  return true;
}

// First-visit relabeling of a strongly connected table: `start` becomes 0,
// letter order[a'] becomes a', and states are named in order of first
// appearance while scanning rows. Writes the result into `out` and compares
// it with `bound` lexicographically, returning early once it is larger.
int labeled_compare(const Table& t, std::size_t n, std::size_t k, State start,
                    const std::vector<Letter>& order, const State* bound, State* out) {
  State label[kMaxSubsetStates];
  State by_label[kMaxSubsetStates];
  std::fill(label, label + n, static_cast<State>(n));
  label[start] = 0;
  by_label[0] = start;
  State next_label = 1;
  int cmp = 0;
  for (std::size_t nq = 0; nq < n; ++nq) {
    const State old_q = by_label[nq];
    for (std::size_t na = 0; na < k; ++na) {
      const State target = t[old_q * k + order[na]];
      if (label[target] == n) {
        label[target] = next_label;
        by_label[next_label++] = target;
      }
      const State v = label[target];
      const std::size_t pos = nq * k + na;
      out[pos] = v;
      if (cmp == 0 && bound != nullptr && v != bound[pos]) {
        cmp = v < bound[pos] ? -1 : 1;
        if (cmp > 0) return cmp;
      }
    }
  }
  return cmp;
}

std::vector<std::vector<Letter>> letter_orders(std::size_t k) {
  if (k > kMaxLetterPermutations) {
    throw Error(ErrorCode::kBudget, "canonical forms support at most 8 letters");
  }
  std::vector<Letter> order(k);
  std::iota(order.begin(), order.end(), Letter{0});
  std::vector<std::vector<Letter>> all;
  do {
    all.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return all;
}

Table canonical_sc(const Table& t, std::size_t n, std::size_t k,
                   const std::vector<std::vector<Letter>>& orders) {
  Table best(t.size());
  Table scratch(t.size());
  bool have = false;
  for (const auto& order : orders) {
    for (State p = 0; p < n; ++p) {
      const int cmp = labeled_compare(t, n, k, p, order, have ? best.data() : nullptr, scratch.data());
      if (!have || cmp < 0) {
        best.swap(scratch);
        have = true;
      }
    }
  }
  return best;
}

bool is_canonical_sc(const Table& t, std::size_t n, std::size_t k,
                     const std::vector<std::vector<Letter>>& orders, Table& scratch) {
  bool found_equal = false;
  for (const auto& order : orders) {
    for (State p = 0; p < n; ++p) {
      const int cmp = labeled_compare(t, n, k, p, order, t.data(), scratch.data());
      if (cmp < 0) return false;
      found_equal |= cmp == 0;
    }
  }
  return found_equal;
}

Table canonical_brute(const Table& t, std::size_t n, std::size_t k) {
  if (n > kBruteForceMaxStates) {
    throw Error(ErrorCode::kBudget, "brute-force canonical forms support at most 8 states");
  }
  const auto orders = letter_orders(k);
  std::vector<State> perm(n);
  std::iota(perm.begin(), perm.end(), State{0});
  Table best;
  Table cand(t.size());
  do {
    for (const auto& order : orders) {
      // order[new letter] = old letter
      for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t na = 0; na < k; ++na) {
          cand[perm[q] * k + na] = perm[t[q * k + order[na]]];
        }
      }
      if (best.empty() || cand < best) best = cand;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::uint64_t table_hash(const Table& t, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (State v : t) {
    h ^= v + 1;
    h *= 1099511628211ULL;
  }
  return h;
}

// Partial results of one shard; merging is associative and commutative.
struct Accumulator {
  std::uint64_t tables_scanned = 0;
  std::uint64_t total = 0;
  std::uint64_t synchronizing = 0;
  std::optional<std::size_t> max_rt;
  std::set<Table> witnesses;
  std::uint64_t witness_automata = 0;
  std::uint64_t bound_violations = 0;
  std::set<Table> violation_witnesses;
  std::uint64_t eulerian_synchronizing = 0;
  std::uint64_t kari_violations = 0;
  std::uint64_t extension_checks = 0;
  std::uint64_t extension_violations = 0;
  std::size_t max_extension_length = 0;

  void add_violation(Table t) {
    violation_witnesses.insert(std::move(t));
    if (violation_witnesses.size() > kMaxViolationWitnesses) {
      violation_witnesses.erase(std::prev(violation_witnesses.end()));
    }
  }

  void merge(const Accumulator& o) {
    tables_scanned += o.tables_scanned;
    total += o.total;
    synchronizing += o.synchronizing;
    if (o.max_rt) {
      if (!max_rt || *o.max_rt > *max_rt) {
        max_rt = o.max_rt;
        witnesses = o.witnesses;
        witness_automata = o.witness_automata;
      } else if (*o.max_rt == *max_rt) {
        witnesses.insert(o.witnesses.begin(), o.witnesses.end());
        witness_automata += o.witness_automata;
      }
    }
    bound_violations += o.bound_violations;
    for (const auto& t : o.violation_witnesses) add_violation(t);
    eulerian_synchronizing += o.eulerian_synchronizing;
    kari_violations += o.kari_violations;
    extension_checks += o.extension_checks;
    extension_violations += o.extension_violations;
    max_extension_length = std::max(max_extension_length, o.max_extension_length);
  }
};

// Depth-first generator over column-major positions p = a * n + q.
class Generator {
 public:
  Generator(const CensusSpec& spec)
      : n_(spec.n), k_(spec.k), eulerian_(spec.eulerian_only), iso_(spec.up_to_iso),
        cols_(spec.n * spec.k, 0), indeg_(spec.n, 0), row_(spec.n * spec.k, 0),
        scratch_(spec.n * spec.k, 0) {
    if (iso_) orders_ = letter_orders(k_);
  }

  // All valid assignments of the first `depth` positions, in lexicographic order.
  std::vector<std::vector<State>> prefixes(std::size_t depth) {
    std::vector<std::vector<State>> out;
    std::vector<State> cur;
    collect_prefixes(depth, cur, out);
    return out;
  }

  // Runs the subtree below `prefix`. `leaf` receives each accepted row-major
  // table; `scanned` counts tables before the connectivity and iso filters.
  template <typename Leaf>
  void run(const std::vector<State>& prefix, std::uint64_t& scanned, Leaf&& leaf) {
    std::fill(indeg_.begin(), indeg_.end(), 0);
    for (std::size_t p = 0; p < prefix.size(); ++p) {
      cols_[p] = prefix[p];
      ++indeg_[prefix[p]];
    }
    descend(prefix.size(), scanned, leaf);
  }

 private:
  void collect_prefixes(std::size_t depth, std::vector<State>& cur,
                        std::vector<std::vector<State>>& out) {
    if (cur.size() == depth) {
      out.push_back(cur);
      return;
    }
    for (State t = 0; t < n_; ++t) {
      if (eulerian_ && static_cast<std::size_t>(std::count(cur.begin(), cur.end(), t)) >= k_) continue;
      cur.push_back(t);
      collect_prefixes(depth, cur, out);
      cur.pop_back();
    }
  }

  template <typename Leaf>
  void descend(std::size_t pos, std::uint64_t& scanned, Leaf& leaf) {
    if (pos == cols_.size()) {
      ++scanned;
      for (std::size_t a = 0; a < k_; ++a) {
        for (std::size_t q = 0; q < n_; ++q) row_[q * k_ + a] = cols_[a * n_ + q];
      }
      if (accept()) leaf(row_);
      return;
    }
    for (State t = 0; t < n_; ++t) {
      if (eulerian_ && indeg_[t] == k_) continue;
      cols_[pos] = t;
      ++indeg_[t];
      descend(pos + 1, scanned, leaf);
      --indeg_[t];
    }
  }

  bool accept() {
    const bool sc = table_strongly_connected(row_, n_, k_);
    if (eulerian_ && !sc) return false;
    if (!iso_) return true;
    if (sc) return is_canonical_sc(row_, n_, k_, orders_, scratch_);
    return canonical_brute(row_, n_, k_) == row_;
  }

  std::size_t n_;
  std::size_t k_;
  bool eulerian_;
  bool iso_;
  Table cols_;
  std::vector<std::size_t> indeg_;
  Table row_;
  Table scratch_;
  std::vector<std::vector<Letter>> orders_;
};

Table canonical_of(const Table& t, std::size_t n, std::size_t k) {
  if (table_strongly_connected(t, n, k)) return canonical_sc(t, n, k, letter_orders(k));
  return canonical_brute(t, n, k);
}

void examine(const CensusSpec& spec, const CensusOptions& options, const Table& t,
             const std::vector<std::string>& names, Accumulator& acc) {
  ++acc.total;
  std::vector<std::vector<State>> rows(spec.n, std::vector<State>(spec.k));
  for (std::size_t q = 0; q < spec.n; ++q) {
    for (std::size_t a = 0; a < spec.k; ++a) rows[q][a] = t[q * spec.k + a];
  }
  const Dfa dfa(names, rows);
  if (!is_synchronizing(dfa)) return;
  ++acc.synchronizing;
  const std::size_t rt = reset_threshold_exact(dfa).threshold;

  auto canonical = [&] { return spec.up_to_iso ? t : canonical_of(t, spec.n, spec.k); };
  if (!acc.max_rt || rt > *acc.max_rt) {
    acc.max_rt = rt;
    acc.witnesses.clear();
    acc.witness_automata = 0;
  }
  if (rt == *acc.max_rt) {
    acc.witnesses.insert(canonical());
    ++acc.witness_automata;
  }
  if (spec.bound_to_check && static_cast<std::int64_t>(rt) > *spec.bound_to_check) {
    ++acc.bound_violations;
    acc.add_violation(canonical());
  }

  if (!spec.eulerian_only && !is_eulerian(dfa)) return;
  ++acc.eulerian_synchronizing;
  if (static_cast<std::int64_t>(rt) > kari_bound(spec.n)) ++acc.kari_violations;
  if (options.extension_samples == 0 || spec.n < 2) return;

  const std::uint64_t full = dfa.full_mask();
  auto check_subset = [&](std::uint64_t mask) {
    ++acc.extension_checks;
    try {
      const std::size_t len = shortest_extending_word(dfa, StateSet(spec.n, mask)).size();
      acc.max_extension_length = std::max(acc.max_extension_length, len);
      if (len > spec.n - 1) ++acc.extension_violations;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotExtensible) throw;
      ++acc.extension_violations;
    }
  };
  if (options.extension_samples < 0) {
    for (std::uint64_t mask = 1; mask < full; ++mask) check_subset(mask);
  } else {
    std::mt19937_64 rng(table_hash(t, options.seed));
    std::uniform_int_distribution<std::uint64_t> pick(1, full - 1);
    for (int i = 0; i < options.extension_samples; ++i) check_subset(pick(rng));
  }
}

}  // namespace

bool operator==(const CensusRecord& x, const CensusRecord& y) {
  return x.spec.n == y.spec.n && x.spec.k == y.spec.k &&
         x.spec.eulerian_only == y.spec.eulerian_only && x.spec.up_to_iso == y.spec.up_to_iso &&
         x.spec.bound_to_check == y.spec.bound_to_check && x.tables_scanned == y.tables_scanned &&
         x.total_enumerated == y.total_enumerated &&
         x.synchronizing_count == y.synchronizing_count && x.max_rt == y.max_rt &&
         x.witnesses == y.witnesses && x.witness_automata == y.witness_automata &&
         x.bound_holds == y.bound_holds && x.bound_violations == y.bound_violations &&
         x.violation_witnesses == y.violation_witnesses &&
         x.eulerian_synchronizing == y.eulerian_synchronizing &&
         x.kari_violations == y.kari_violations && x.extension_checks == y.extension_checks &&
         x.extension_violations == y.extension_violations &&
         x.max_extension_length == y.max_extension_length;
}

double default_budget() {
  if (const char* env = std::getenv("SYNCHROKIT_BUDGET")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return kDefaultBudget;
}

double estimate_tables(const CensusSpec& spec) {
  validate_spec(spec);
  long double count = 1;
  if (spec.eulerian_only) {
    for (std::size_t i = 2; i <= spec.n * spec.k; ++i) count *= static_cast<long double>(i);
    long double kfact = 1;
    for (std::size_t i = 2; i <= spec.k; ++i) kfact *= static_cast<long double>(i);
    count /= std::pow(kfact, static_cast<long double>(spec.n));
  } else {
    count = std::pow(static_cast<long double>(spec.n), static_cast<long double>(spec.n * spec.k));
  }
  return static_cast<double>(std::round(count));
}

void check_budget(const CensusSpec& spec, const CensusOptions& options) {
  const double estimate = estimate_tables(spec);
  const double ceiling = options.budget > 0 ? options.budget : default_budget();
  if (estimate > ceiling && !options.force) {
    std::ostringstream msg;
    msg << "census of n=" << spec.n << ", k=" << spec.k << " would scan about " << estimate
        << " tables, above the budget of " << ceiling << "; pass force to run anyway";
    throw Error(ErrorCode::kBudget, msg.str());
  }
}

Table table_of(const Dfa& dfa) {
  Table t(dfa.states() * dfa.letter_count());
  for (State q = 0; q < dfa.states(); ++q) {
    for (Letter a = 0; a < dfa.letter_count(); ++a) t[q * dfa.letter_count() + a] = dfa.next(q, a);
  }
  return t;
}

Dfa dfa_from_table(std::size_t n, std::size_t k, const Table& table) {
  if (table.size() != n * k) throw Error(ErrorCode::kInvalidArgument, "table size must be n*k");
  std::vector<std::vector<State>> rows(n, std::vector<State>(k));
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t a = 0; a < k; ++a) rows[q][a] = table[q * k + a];
  }
  return Dfa(default_letter_names(k), rows);
}

Dfa relabel(const Dfa& dfa, const std::vector<State>& state_perm,
            const std::vector<Letter>& letter_perm) {
  const std::size_t n = dfa.states();
  const std::size_t k = dfa.letter_count();
  auto is_perm = [](auto perm, std::size_t size) {
    if (perm.size() != size) return false;
    std::sort(perm.begin(), perm.end());
    for (std::size_t i = 0; i < size; ++i) {
      if (perm[i] != i) return false;
    }
    return true;
  };
  if (!is_perm(state_perm, n) || !is_perm(letter_perm, k)) {
    throw Error(ErrorCode::kInvalidArgument, "relabeling needs permutations of states and letters");
  }
  std::vector<std::string> letters(k);
  std::vector<std::vector<State>> rows(n, std::vector<State>(k));
  for (Letter a = 0; a < k; ++a) letters[letter_perm[a]] = dfa.letters()[a];
  for (State q = 0; q < n; ++q) {
    for (Letter a = 0; a < k; ++a) rows[state_perm[q]][letter_perm[a]] = state_perm[dfa.next(q, a)];
  }
  return Dfa(std::move(letters), rows);
}

Table canonical_form(const Dfa& dfa) {
  dfa.require_subsets();
  const Table t = table_of(dfa);
  if (table_strongly_connected(t, dfa.states(), dfa.letter_count())) {
    return canonical_sc(t, dfa.states(), dfa.letter_count(), letter_orders(dfa.letter_count()));
  }
  return canonical_brute(t, dfa.states(), dfa.letter_count());
}

Table canonical_form_bruteforce(const Dfa& dfa) {
  return canonical_brute(table_of(dfa), dfa.states(), dfa.letter_count());
}

std::uint64_t enumerate_automata(const CensusSpec& spec, const CensusOptions& options,
                                 const std::function<void(const Dfa&)>& visitor) {
  check_budget(spec, options);
  const auto names = default_letter_names(spec.k);
  Generator gen(spec);
  std::uint64_t scanned = 0;
  std::uint64_t visited = 0;
  for (const auto& prefix : gen.prefixes(std::min(kShardDepth, spec.n))) {
    gen.run(prefix, scanned, [&](const Table& t) {
      ++visited;
      visitor(dfa_from_table(spec.n, spec.k, t));
    });
  }
  return visited;
}

CensusRecord census_run(const CensusSpec& spec, const CensusOptions& options) {
  check_budget(spec, options);
  const auto names = default_letter_names(spec.k);
  const auto prefixes = Generator(spec).prefixes(std::min(kShardDepth, spec.n));
  std::vector<Accumulator> shards(prefixes.size());

  std::atomic<std::size_t> next_shard{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      Generator gen(spec);
      for (std::size_t i = next_shard++; i < prefixes.size(); i = next_shard++) {
        Accumulator& acc = shards[i];
        gen.run(prefixes[i], acc.tables_scanned,
                [&](const Table& t) { examine(spec, options, t, names, acc); });
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next_shard = prefixes.size();
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(prefixes.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  Accumulator total;
  for (const auto& acc : shards) total.merge(acc);

  CensusRecord record;
  record.spec = spec;
  record.tables_scanned = total.tables_scanned;
  record.total_enumerated = total.total;
  record.synchronizing_count = total.synchronizing;
  record.max_rt = total.max_rt;
  record.witnesses.assign(total.witnesses.begin(), total.witnesses.end());
  record.witness_automata = total.witness_automata;
  if (spec.bound_to_check) record.bound_holds = total.bound_violations == 0;
  record.bound_violations = total.bound_violations;
  record.violation_witnesses.assign(total.violation_witnesses.begin(), total.violation_witnesses.end());
  record.eulerian_synchronizing = total.eulerian_synchronizing;
  record.kari_violations = total.kari_violations;
  record.extension_checks = total.extension_checks;
  record.extension_violations = total.extension_violations;
  record.max_extension_length = total.max_extension_length;
  return record;
}

std::int64_t conjectured_bound(std::size_t n, std::size_t k) {
  if (n < 3) throw Error(ErrorCode::kDomain, "the conjectured bound applies to n >= 3");
  const auto sq = static_cast<std::int64_t>(n * n);
  return k == 2 ? (sq - 5) / 2 : (sq - 3) / 2;
}

std::int64_t kari_bound(std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return (m - 1) * (m - 2) + 1;
}

CensusRecord verify_conjecture(CensusSpec spec, const CensusOptions& options) {
  spec.bound_to_check = conjectured_bound(spec.n, spec.k);
  return census_run(spec, options);
}

}  // namespace synchrokit::census

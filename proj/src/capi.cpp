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

#include "synchrokit/synchrokit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "synchrokit/census.hpp"
#include "synchrokit/dfa.hpp"
#include "synchrokit/dfa_io.hpp"
#include "synchrokit/series.hpp"
#include "synchrokit/synchro.hpp"
#include "synchrokit/words.hpp"

struct sk_dfa {
  synchrokit::Dfa dfa;
};

struct sk_chain {
  synchrokit::PreimageChain chain;
};

struct sk_levels {
  synchrokit::LevelProfile profile;
};

struct sk_census {
  synchrokit::census::CensusRecord record;
};

namespace {

using synchrokit::Error;
using synchrokit::ErrorCode;

thread_local std::string last_error;

sk_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return SK_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParse: return SK_ERR_PARSE;
    case ErrorCode::kInvalidLetter: return SK_ERR_INVALID_LETTER;
    case ErrorCode::kInvalidState: return SK_ERR_INVALID_STATE;
    case ErrorCode::kSize: return SK_ERR_SIZE;
    case ErrorCode::kNotSynchronizing: return SK_ERR_NOT_SYNCHRONIZING;
    case ErrorCode::kNotExtensible: return SK_ERR_NOT_EXTENSIBLE;
    case ErrorCode::kDomain: return SK_ERR_DOMAIN;
    case ErrorCode::kPrecondition: return SK_ERR_PRECONDITION;
    case ErrorCode::kBudget: return SK_ERR_BUDGET;
  }
  return SK_ERR_INTERNAL;
}

template <typename Fn>
sk_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return SK_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SK_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must not be null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sk_dfa* wrap(synchrokit::Dfa dfa) { return new sk_dfa{std::move(dfa)}; }

synchrokit::StateSet to_set(const synchrokit::Dfa& dfa, uint64_t mask) {
  dfa.require_subsets();
  return synchrokit::StateSet(dfa.states(), mask);
}

synchrokit::Word word_of(const synchrokit::Dfa& dfa, const char* text, int compact) {
  require(text, "word");
  return synchrokit::parse_word(dfa, text, compact != 0);
}

}  // namespace

extern "C" {

const char* sk_version(void) { return "0.1.0"; }

const char* sk_status_name(sk_status status) {
  switch (status) {
    case SK_OK: return "ok";
    case SK_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case SK_ERR_PARSE: return "parse-error";
    case SK_ERR_INVALID_LETTER: return "invalid-letter";
    case SK_ERR_INVALID_STATE: return "invalid-state";
    case SK_ERR_SIZE: return "size-error";
    case SK_ERR_NOT_SYNCHRONIZING: return "not-synchronizing";
    case SK_ERR_NOT_EXTENSIBLE: return "not-extensible";
    case SK_ERR_DOMAIN: return "domain-error";
    case SK_ERR_PRECONDITION: return "precondition-error";
    case SK_ERR_BUDGET: return "budget-exceeded";
    case SK_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* sk_last_error(void) { return last_error.c_str(); }

void sk_string_free(char* s) { std::free(s); }

sk_status sk_dfa_new(uint32_t n, uint32_t k, const char* const* letter_names,
                     const uint32_t* delta, sk_dfa** out) {
  return guarded([&] {
    require(letter_names, "letter_names");
    require(delta, "delta");
    require(out, "out");
    std::vector<std::string> names;
    for (uint32_t a = 0; a < k; ++a) {
      require(letter_names[a], "letter name");
      names.emplace_back(letter_names[a]);
    }
    std::vector<std::vector<synchrokit::State>> rows(n);
    for (uint32_t q = 0; q < n; ++q) rows[q].assign(delta + q * k, delta + (q + 1) * k);
    *out = wrap(synchrokit::Dfa(std::move(names), rows));
  });
}

sk_status sk_dfa_from_json(const char* json, sk_dfa** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = wrap(synchrokit::dfa_from_json(json));
  });
}

sk_status sk_dfa_to_json(const sk_dfa* dfa, char** out) {
  return guarded([&] {
    require(dfa, "dfa");
    require(out, "out");
    *out = dup_string(synchrokit::to_json(dfa->dfa));
  });
}

sk_status sk_dfa_clone(const sk_dfa* dfa, sk_dfa** out) {
  return guarded([&] {
    require(dfa, "dfa");
    require(out, "out");
    *out = wrap(dfa->dfa);
  });
}

void sk_dfa_free(sk_dfa* dfa) { delete dfa; }

uint32_t sk_dfa_states(const sk_dfa* dfa) {
  return dfa == nullptr ? 0 : static_cast<uint32_t>(dfa->dfa.states());
}

uint32_t sk_dfa_letters(const sk_dfa* dfa) {
  return dfa == nullptr ? 0 : static_cast<uint32_t>(dfa->dfa.letter_count());
}

const char* sk_dfa_letter_name(const sk_dfa* dfa, uint32_t letter) {
  if (dfa == nullptr || letter >= dfa->dfa.letter_count()) return nullptr;
  return dfa->dfa.letters()[letter].c_str();
}

sk_status sk_dfa_transition(const sk_dfa* dfa, uint32_t state, uint32_t letter, uint32_t* out) {
  return guarded([&] {
    require(dfa, "dfa");
    require(out, "out");
    *out = dfa->dfa.transition(state, letter);
  });
}

sk_status sk_dfa_classify_letter(const sk_dfa* dfa, uint32_t letter, sk_letter_profile* out) {
  return guarded([&] {
    require(dfa, "dfa");
    require(out, "out");
    const auto profile = synchrokit::classify_letter(dfa->dfa, letter);
    *out = sk_letter_profile{profile.permutational, profile.involutory, profile.unitary, 0, 0};
    if (profile.moved_state) {
      out->moved_from = profile.moved_state->first;
      out->moved_to = profile.moved_state->second;
    }
  });
}

sk_status sk_dfa_is_eulerian(const sk_dfa* dfa, int* out) {
  return guarded([&] {
    require(dfa, "dfa");
    require(out, "out");
    *out = synchrokit::is_eulerian(dfa->dfa);
  });
}

sk_status sk_image(const sk_dfa* dfa, uint64_t set, uint32_t letter, uint64_t* out) {
  return guarded([&] {
    require(dfa, "dfa");
    require(out, "out");
    *out = synchrokit::image(dfa->dfa, to_set(dfa->dfa, set), letter).mask();
  });
}

sk_status sk_preimage(const sk_dfa* dfa, uint64_t set, uint32_t letter, uint64_t* out) {
  return guarded([&] {
    require(dfa, "dfa");
    require(out, "out");
    *out = synchrokit::preimage(dfa->dfa, to_set(dfa->dfa, set), letter).mask();
  });
}

sk_status sk_is_extensible(const sk_dfa* dfa, uint64_t set, uint32_t letter, int* out) {
  return guarded([&] {
    require(dfa, "dfa");
    require(out, "out");
    *out = synchrokit::is_extensible(dfa->dfa, to_set(dfa->dfa, set), letter);
  });
}

sk_status sk_apply_word(const sk_dfa* dfa, uint64_t set, const char* word, int compact,
                        uint64_t* out) {
  return guarded([&] {
    require(dfa, "dfa");
    require(out, "out");
    const auto w = word_of(dfa->dfa, word, compact);
    *out = synchrokit::apply_word(dfa->dfa, to_set(dfa->dfa, set), w).mask();
  });
}

sk_status sk_apply_word_inverse(const sk_dfa* dfa, uint64_t set, const char* word, int compact,
                                uint64_t* out) {
  return guarded([&] {
    require(dfa, "dfa");
    require(out, "out");
    const auto w = word_of(dfa->dfa, word, compact);
    *out = synchrokit::apply_word_inverse(dfa->dfa, to_set(dfa->dfa, set), w).mask();
  });
}

sk_status sk_verify_word(const sk_dfa* dfa, const char* word, int compact, sk_word_report* out) {
  return guarded([&] {
    require(dfa, "dfa");
    require(out, "out");
    const auto& d = dfa->dfa;
    const auto w = word_of(d, word, compact);
    sk_word_report report{};
    report.length = w.size();
    if (const auto q0 = synchrokit::verify_reset(d, w)) {
      report.reset = 1;
      report.q0 = *q0;
      report.straight = synchrokit::is_straight(d, w, *q0);
      report.greedy = synchrokit::is_greedy(d, w, *q0);
    }
    try {
      const auto factors = synchrokit::forbidden_factor_check(w, d);
      report.factors.available = 1;
      report.factors.has_aa = factors.has_aa;
      report.factors.has_bb = factors.has_bb;
      report.factors.has_w0b = factors.has_w0b;
      report.factors.has_w1b = factors.has_w1b;
      report.factors.has_last = factors.last_letter.has_value();
      report.factors.last_letter = factors.last_letter.value_or(0);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInvalidLetter) throw;
    }
    *out = report;
  });
}

sk_status sk_check_word_at(const sk_dfa* dfa, const char* word, int compact, uint32_t q0,
                           int* straight, int* greedy) {
  return guarded([&] {
    require(dfa, "dfa");
    require(straight, "straight");
    require(greedy, "greedy");
    const auto w = word_of(dfa->dfa, word, compact);
    *straight = synchrokit::is_straight(dfa->dfa, w, q0);
    *greedy = synchrokit::is_greedy(dfa->dfa, w, q0);
  });
}

sk_status sk_involutory_reversal_holds(const sk_dfa* dfa, uint64_t set, const char* word,
                                       int compact, int* out) {
  return guarded([&] {
    require(dfa, "dfa");
    require(out, "out");
    const auto w = word_of(dfa->dfa, word, compact);
    *out = synchrokit::involutory_reversal_holds(dfa->dfa, to_set(dfa->dfa, set), w);
  });
}

sk_status sk_trace(const sk_dfa* dfa, const char* word, int compact, uint32_t q0, sk_chain** out) {
  return guarded([&] {
    require(dfa, "dfa");
    require(out, "out");
    if (dfa->dfa.letter_count() > 64) {
      throw Error(ErrorCode::kSize, "traces report extenders for at most 64 letters");
    }
    const auto w = word_of(dfa->dfa, word, compact);
    *out = new sk_chain{synchrokit::preimage_chain(dfa->dfa, w, q0)};
  });
}

size_t sk_chain_rows(const sk_chain* chain) { return chain == nullptr ? 0 : chain->chain.rows.size(); }

sk_status sk_chain_row(const sk_chain* chain, size_t index, uint64_t* subset, uint64_t* extenders) {
  return guarded([&] {
    require(chain, "chain");
    if (index >= chain->chain.rows.size()) {
      throw Error(ErrorCode::kInvalidArgument, "chain row index out of range");
    }
    const auto& row = chain->chain.rows[index];
    if (subset != nullptr) *subset = row.subset.mask();
    if (extenders != nullptr) {
      uint64_t mask = 0;
      for (auto a : row.extender_letters) mask |= uint64_t{1} << a;
      *extenders = mask;
    }
  });
}

void sk_chain_free(sk_chain* chain) { delete chain; }

sk_status sk_is_synchronizing(const sk_dfa* dfa, int* out) {
  return guarded([&] {
    require(dfa, "dfa");
    require(out, "out");
    *out = synchrokit::is_synchronizing(dfa->dfa);
  });
}

sk_status sk_reset_threshold(const sk_dfa* dfa, sk_rt_method method, sk_rt_result* out) {
  return guarded([&] {
    require(dfa, "dfa");
    require(out, "out");
    const auto result = method == SK_RT_BACKWARD ? synchrokit::reset_threshold_backward(dfa->dfa)
                                                 : synchrokit::reset_threshold_exact(dfa->dfa);
    *out = sk_rt_result{result.threshold, result.q0,
                        dup_string(synchrokit::format_word(dfa->dfa, result.witness))};
  });
}

sk_status sk_shortest_extending_word(const sk_dfa* dfa, uint64_t set, char** word,
                                     uint64_t* length, uint64_t* grown) {
  return guarded([&] {
    require(dfa, "dfa");
    const auto s = to_set(dfa->dfa, set);
    const auto w = synchrokit::shortest_extending_word(dfa->dfa, s);
    if (length != nullptr) *length = w.size();
    if (grown != nullptr) *grown = synchrokit::apply_word_inverse(dfa->dfa, s, w).mask();
    if (word != nullptr) *word = dup_string(synchrokit::format_word(dfa->dfa, w));
  });
}

sk_status sk_backward_levels(const sk_dfa* dfa, uint32_t q0, uint64_t max_depth, sk_levels** out) {
  return guarded([&] {
    require(dfa, "dfa");
    require(out, "out");
    *out = new sk_levels{synchrokit::backward_level_profile(dfa->dfa, q0, max_depth)};
  });
}

size_t sk_levels_count(const sk_levels* levels) {
  return levels == nullptr ? 0 : levels->profile.widths.size();
}

uint64_t sk_levels_width(const sk_levels* levels, size_t depth) {
  if (levels == nullptr || depth >= levels->profile.widths.size()) return 0;
  return levels->profile.widths[depth];
}

int sk_levels_depth_to_full(const sk_levels* levels, uint64_t* depth) {
  if (levels == nullptr || !levels->profile.depth_to_full) return 0;
  if (depth != nullptr) *depth = *levels->profile.depth_to_full;
  return 1;
}

void sk_levels_free(sk_levels* levels) { delete levels; }

sk_status sk_series_am(uint32_t m, sk_dfa** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(synchrokit::series::build_am(m));
  });
}

sk_status sk_series_word(uint32_t m, sk_series_word_kind kind, char** out) {
  return guarded([&] {
    require(out, "out");
    const auto w = kind == SK_SERIES_RESET ? synchrokit::series::build_reset_word(m)
                                           : synchrokit::series::build_w(m);
    // Letter names of A_m are fixed, so the word can be rendered without
    // materializing the automaton.
    static const char* const kNames[] = {"a", "b", "w0", "w1"};
    std::string text;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) text += ' ';
      text += kNames[w[i]];
    }
    *out = dup_string(text);
  });
}

sk_status sk_series_predicted_rt(uint32_t m, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = synchrokit::series::predicted_rt(m);
  });
}

sk_status sk_series_cerny(uint32_t n, sk_dfa** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(synchrokit::series::build_cerny(n));
  });
}

sk_status sk_series_cerny_reset_word(uint32_t n, char** out) {
  return guarded([&] {
    require(out, "out");
    const auto dfa = synchrokit::series::build_cerny(n);
    *out = dup_string(synchrokit::format_word(dfa, synchrokit::series::cerny_reset_word(n)));
  });
}

void sk_census_spec_init(sk_census_spec* spec) {
  if (spec == nullptr) return;
  *spec = sk_census_spec{};
  spec->eulerian_only = 1;
  spec->bound_mode = SK_BOUND_NONE;
  spec->jobs = 1;
  spec->seed = synchrokit::census::CensusOptions{}.seed;
}

namespace {

std::pair<synchrokit::census::CensusSpec, synchrokit::census::CensusOptions> convert(
    const sk_census_spec& in) {
  synchrokit::census::CensusSpec spec;
  spec.n = in.n;
  spec.k = in.k;
  spec.eulerian_only = in.eulerian_only != 0;
  spec.up_to_iso = in.up_to_iso != 0;
  if (in.bound_mode == SK_BOUND_AUTO) spec.bound_to_check = synchrokit::census::conjectured_bound(in.n, in.k);
  else if (in.bound_mode == SK_BOUND_VALUE) spec.bound_to_check = in.bound;
  synchrokit::census::CensusOptions options;
  options.jobs = in.jobs == 0 ? 1 : in.jobs;
  options.budget = in.budget;
  options.force = in.force != 0;
  options.extension_samples = in.extension_samples;
  options.seed = in.seed;
  return {spec, options};
}

}  // namespace

sk_status sk_census_estimate(const sk_census_spec* spec, double* out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = synchrokit::census::estimate_tables(convert(*spec).first);
  });
}

sk_status sk_census_run(const sk_census_spec* spec, sk_census** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    const auto [s, options] = convert(*spec);
    *out = new sk_census{synchrokit::census::census_run(s, options)};
  });
}

void sk_census_free(sk_census* census) { delete census; }

sk_status sk_census_summary_get(const sk_census* census, sk_census_summary* out) {
  return guarded([&] {
    require(census, "census");
    require(out, "out");
    const auto& r = census->record;
    sk_census_summary s{};
    s.tables_scanned = r.tables_scanned;
    s.total = r.total_enumerated;
    s.synchronizing = r.synchronizing_count;
    s.has_max_rt = r.max_rt.has_value();
    s.max_rt = r.max_rt.value_or(0);
    s.witness_automata = r.witness_automata;
    s.has_bound = r.spec.bound_to_check.has_value();
    s.bound = r.spec.bound_to_check.value_or(0);
    s.bound_holds = r.bound_holds.value_or(true);
    s.bound_violations = r.bound_violations;
    s.eulerian_synchronizing = r.eulerian_synchronizing;
    s.kari_violations = r.kari_violations;
    s.extension_checks = r.extension_checks;
    s.extension_violations = r.extension_violations;
    s.max_extension_length = r.max_extension_length;
    *out = s;
  });
}

size_t sk_census_witness_count(const sk_census* census) {
  return census == nullptr ? 0 : census->record.witnesses.size();
}

sk_status sk_census_witness(const sk_census* census, size_t index, sk_dfa** out) {
  return guarded([&] {
    require(census, "census");
    require(out, "out");
    const auto& r = census->record;
    if (index >= r.witnesses.size()) throw Error(ErrorCode::kInvalidArgument, "witness index out of range");
    *out = wrap(synchrokit::census::dfa_from_table(r.spec.n, r.spec.k, r.witnesses[index]));
  });
}

size_t sk_census_violation_count(const sk_census* census) {
  return census == nullptr ? 0 : census->record.violation_witnesses.size();
}

sk_status sk_census_violation(const sk_census* census, size_t index, sk_dfa** out) {
  return guarded([&] {
    require(census, "census");
    require(out, "out");
    const auto& r = census->record;
    if (index >= r.violation_witnesses.size()) {
      throw Error(ErrorCode::kInvalidArgument, "violation index out of range");
    }
    *out = wrap(synchrokit::census::dfa_from_table(r.spec.n, r.spec.k, r.violation_witnesses[index]));
  });
}

sk_status sk_canonical_form(const sk_dfa* dfa, sk_dfa** out) {
  return guarded([&] {
    require(dfa, "dfa");
    require(out, "out");
    const auto& d = dfa->dfa;
    *out = wrap(synchrokit::census::dfa_from_table(d.states(), d.letter_count(),
                                                   synchrokit::census::canonical_form(d)));
  });
}

}  // extern "C"

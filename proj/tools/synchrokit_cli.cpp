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

// Command-line front end. Talks to the library exclusively through the C API.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "synchrokit/synchrokit.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitBoundViolated = 1;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

struct DfaDeleter {
  void operator()(sk_dfa* d) const { sk_dfa_free(d); }
};
struct ChainDeleter {
  void operator()(sk_chain* c) const { sk_chain_free(c); }
};
struct LevelsDeleter {
  void operator()(sk_levels* l) const { sk_levels_free(l); }
};
struct CensusDeleter {
  void operator()(sk_census* c) const { sk_census_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { sk_string_free(s); }
};
using DfaPtr = std::unique_ptr<sk_dfa, DfaDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

// A failed library call, carrying the exit code the CLI should return.
struct CommandError {
  int exit_code;
  std::string message;
};

int exit_code_for(sk_status status) {
  switch (status) {
    case SK_ERR_INVALID_ARGUMENT:
    case SK_ERR_PARSE:
    case SK_ERR_INVALID_LETTER:
    case SK_ERR_INVALID_STATE:
      return kExitInput;
    default:
      return kExitDomain;
  }
}

void check(sk_status status) {
  if (status != SK_OK) {
    throw CommandError{exit_code_for(status),
                       std::string(sk_status_name(status)) + ": " + sk_last_error()};
  }
}

std::string take(char* s) {
  OwnedString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError{kExitInput, "cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

DfaPtr load_dfa(const std::string& text) {
  sk_dfa* raw = nullptr;
  check(sk_dfa_from_json(text.c_str(), &raw));
  return DfaPtr(raw);
}

json dfa_json(const sk_dfa* dfa) {
  char* raw = nullptr;
  check(sk_dfa_to_json(dfa, &raw));
  return json::parse(take(raw));
}

json members(std::uint64_t mask) {
  json out = json::array();
  for (unsigned q = 0; q < 64; ++q) {
    if ((mask >> q) & 1U) out.push_back(q);
  }
  return out;
}

std::uint64_t parse_subset(const std::string& text, std::uint32_t n) {
  std::uint64_t mask = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long q = 0;
    try {
      q = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw CommandError{kExitInput, "bad state '" + item + "' in subset"};
    if (q >= n || q >= 64) throw CommandError{kExitInput, "state " + item + " out of range"};
    mask |= std::uint64_t{1} << q;
  }
  return mask;
}

struct Output {
  // Exactly one of these is emitted on stdout.
  std::optional<json> payload;
  std::optional<std::string> text;
  int exit_code = kExitOk;
};

struct Common {
  bool envelope = false;
  bool compact = false;
};

Output cmd_rt(const std::string& source, bool verify) {
  auto dfa = load_dfa(source);
  sk_rt_result fwd{};
  check(sk_reset_threshold(dfa.get(), SK_RT_FORWARD, &fwd));
  const std::string word = take(fwd.word);
  json result = {{"threshold", fwd.threshold}, {"word", word}, {"q0", fwd.q0}, {"verified", nullptr}};
  if (verify) {
    sk_rt_result back{};
    check(sk_reset_threshold(dfa.get(), SK_RT_BACKWARD, &back));
    take(back.word);
    sk_word_report report{};
    check(sk_verify_word(dfa.get(), word.c_str(), 0, &report));
    result["verified"] = back.threshold == fwd.threshold && report.reset && report.q0 == fwd.q0 &&
                         report.straight;
  }
  return {result, std::nullopt};
}

json factors_json(const sk_dfa* dfa, const sk_factor_report& f) {
  if (!f.available) return nullptr;
  return {{"aa", static_cast<bool>(f.has_aa)},
          {"bb", static_cast<bool>(f.has_bb)},
          {"w0b", static_cast<bool>(f.has_w0b)},
          {"w1b", static_cast<bool>(f.has_w1b)},
          {"last", f.has_last ? json(sk_dfa_letter_name(dfa, f.last_letter)) : json(nullptr)}};
}

Output cmd_verify_word(const std::string& source, const std::string& word, bool compact,
                       std::optional<std::uint32_t> q0) {
  auto dfa = load_dfa(source);
  sk_word_report report{};
  check(sk_verify_word(dfa.get(), word.c_str(), compact, &report));
  json result = {{"reset", static_cast<bool>(report.reset)},
                 {"q0", report.reset ? json(report.q0) : json(nullptr)},
                 {"length", report.length},
                 {"straight", static_cast<bool>(report.straight)},
                 {"greedy", static_cast<bool>(report.greedy)},
                 {"factors", factors_json(dfa.get(), report.factors)}};
  if (q0 && !(report.reset && report.q0 == *q0)) {
    int straight = 0;
    int greedy = 0;
    check(sk_check_word_at(dfa.get(), word.c_str(), compact, *q0, &straight, &greedy));
    result["q0"] = *q0;
    result["straight"] = static_cast<bool>(straight);
    result["greedy"] = static_cast<bool>(greedy);
  }
  return {result, std::nullopt};
}

Output cmd_series(const std::string& family, std::uint32_t param, const std::string& emit) {
  if (family == "am") {
    if (emit == "dfa") {
      sk_dfa* raw = nullptr;
      check(sk_series_am(param, &raw));
      DfaPtr dfa(raw);
      char* text = nullptr;
      check(sk_dfa_to_json(dfa.get(), &text));
      return {std::nullopt, take(text)};
    }
    char* text = nullptr;
    check(sk_series_word(param, emit == "word" ? SK_SERIES_W : SK_SERIES_RESET, &text));
    return {std::nullopt, take(text)};
  }
  if (emit == "word") throw CommandError{kExitInput, "cerny supports --emit dfa|resetword"};
  char* text = nullptr;
  if (emit == "dfa") {
    sk_dfa* raw = nullptr;
    check(sk_series_cerny(param, &raw));
    DfaPtr dfa(raw);
    check(sk_dfa_to_json(dfa.get(), &text));
  } else {
    check(sk_series_cerny_reset_word(param, &text));
  }
  return {std::nullopt, take(text)};
}

Output cmd_extend(const std::string& source, const std::string& subset) {
  auto dfa = load_dfa(source);
  const std::uint64_t mask = parse_subset(subset, sk_dfa_states(dfa.get()));
  char* word = nullptr;
  std::uint64_t length = 0;
  std::uint64_t grown = 0;
  check(sk_shortest_extending_word(dfa.get(), mask, &word, &length, &grown));
  json result = {{"subset", members(mask)},
                 {"length", length},
                 {"word", take(word)},
                 {"preimage", members(grown)}};
  return {result, std::nullopt};
}

Output cmd_trace(const std::string& source, const std::string& word, bool compact,
                 std::optional<std::uint32_t> q0) {
  auto dfa = load_dfa(source);
  if (!q0) {
    sk_word_report report{};
    check(sk_verify_word(dfa.get(), word.c_str(), compact, &report));
    if (!report.reset) throw CommandError{kExitInput, "word is not a reset word; pass --q0"};
    q0 = report.q0;
  }
  sk_chain* raw = nullptr;
  check(sk_trace(dfa.get(), word.c_str(), compact, *q0, &raw));
  std::unique_ptr<sk_chain, ChainDeleter> chain(raw);
  json rows = json::array();
  for (std::size_t i = 0; i < sk_chain_rows(chain.get()); ++i) {
    std::uint64_t subset = 0;
    std::uint64_t extenders = 0;
    check(sk_chain_row(chain.get(), i, &subset, &extenders));
    json names = json::array();
    for (std::uint32_t a = 0; a < sk_dfa_letters(dfa.get()); ++a) {
      if ((extenders >> a) & 1U) names.push_back(sk_dfa_letter_name(dfa.get(), a));
    }
    rows.push_back({{"suffix_len", i}, {"subset", members(subset)}, {"extenders", names}});
  }
  return {json{{"q0", *q0}, {"rows", rows}}, std::nullopt};
}

Output cmd_levels(const std::string& source, std::uint32_t q0, std::uint64_t max_depth) {
  auto dfa = load_dfa(source);
  sk_levels* raw = nullptr;
  check(sk_backward_levels(dfa.get(), q0, max_depth, &raw));
  std::unique_ptr<sk_levels, LevelsDeleter> levels(raw);
  json widths = json::array();
  std::uint64_t max_width = 0;
  for (std::size_t i = 0; i < sk_levels_count(levels.get()); ++i) {
    const std::uint64_t w = sk_levels_width(levels.get(), i);
    widths.push_back(w);
    max_width = std::max(max_width, w);
  }
  std::uint64_t depth = 0;
  const bool full = sk_levels_depth_to_full(levels.get(), &depth) != 0;
  return {json{{"q0", q0},
               {"widths", widths},
               {"max_width", max_width},
               {"depth_to_full", full ? json(depth) : json(nullptr)}},
          std::nullopt};
}

Output cmd_check(const std::string& source) {
  auto dfa = load_dfa(source);
  int eulerian = 0;
  check(sk_dfa_is_eulerian(dfa.get(), &eulerian));
  int sync = 0;
  json synchronizing = nullptr;
  if (sk_is_synchronizing(dfa.get(), &sync) == SK_OK) synchronizing = static_cast<bool>(sync);
  json letters = json::array();
  for (std::uint32_t a = 0; a < sk_dfa_letters(dfa.get()); ++a) {
    sk_letter_profile p{};
    check(sk_dfa_classify_letter(dfa.get(), a, &p));
    letters.push_back({{"name", sk_dfa_letter_name(dfa.get(), a)},
                       {"permutational", static_cast<bool>(p.permutational)},
                       {"involutory", static_cast<bool>(p.involutory)},
                       {"unitary", static_cast<bool>(p.unitary)},
                       {"moved", p.unitary ? json::array({p.moved_from, p.moved_to}) : json(nullptr)}});
  }
  return {json{{"n", sk_dfa_states(dfa.get())},
               {"k", sk_dfa_letters(dfa.get())},
               {"eulerian", static_cast<bool>(eulerian)},
               {"synchronizing", synchronizing},
               {"letters", letters}},
          std::nullopt};
}

struct CensusArgs {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  bool eulerian = false;
  bool iso = false;
  std::string bound;
  unsigned jobs = 1;
  std::string out = "json";
  std::string witness_dir;
  bool force = false;
  int extension_samples = 0;
  std::uint64_t seed = 0x5eed;
};

Output cmd_census(const CensusArgs& args) {
  sk_census_spec spec;
  sk_census_spec_init(&spec);
  spec.n = args.n;
  spec.k = args.k;
  spec.eulerian_only = args.eulerian;
  spec.up_to_iso = args.iso;
  spec.jobs = args.jobs;
  spec.force = args.force;
  spec.extension_samples = args.extension_samples;
  spec.seed = args.seed;
  if (args.bound == "auto") {
    spec.bound_mode = SK_BOUND_AUTO;
  } else if (!args.bound.empty()) {
    try {
      std::size_t used = 0;
      spec.bound = std::stoll(args.bound, &used);
      if (used != args.bound.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw CommandError{kExitInput, "--bound takes 'auto' or an integer"};
    }
    spec.bound_mode = SK_BOUND_VALUE;
  }

  sk_census* raw = nullptr;
  check(sk_census_run(&spec, &raw));
  std::unique_ptr<sk_census, CensusDeleter> census(raw);
  sk_census_summary s{};
  check(sk_census_summary_get(census.get(), &s));

  auto collect = [&](std::size_t count, sk_status (*get)(const sk_census*, std::size_t, sk_dfa**)) {
    std::vector<DfaPtr> out;
    for (std::size_t i = 0; i < count; ++i) {
      sk_dfa* d = nullptr;
      check(get(census.get(), i, &d));
      out.emplace_back(d);
    }
    return out;
  };
  const auto witnesses = collect(sk_census_witness_count(census.get()), sk_census_witness);
  const auto violations = collect(sk_census_violation_count(census.get()), sk_census_violation);

  if (!args.witness_dir.empty()) {
    std::filesystem::create_directories(args.witness_dir);
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      char* text = nullptr;
      check(sk_dfa_to_json(witnesses[i].get(), &text));
      const auto path = std::filesystem::path(args.witness_dir) /
                        ("witness_n" + std::to_string(args.n) + "_k" + std::to_string(args.k) +
                         "_" + std::to_string(i) + ".json");
      std::ofstream(path) << take(text) << '\n';
    }
  }

  const int code = s.has_bound && !s.bound_holds ? kExitBoundViolated : kExitOk;
  const json max_rt = s.has_max_rt ? json(s.max_rt) : json(nullptr);
  const json bound = s.has_bound ? json(s.bound) : json(nullptr);
  const json holds = s.has_bound ? json(static_cast<bool>(s.bound_holds)) : json(nullptr);
  if (args.out == "csv") {
    auto cell = [](const json& v) { return v.is_null() ? std::string() : v.dump(); };
    std::ostringstream csv;
    csv << "n,k,total,synchronizing,max_rt,bound,bound_holds\n"
        << args.n << ',' << args.k << ',' << s.total << ',' << s.synchronizing << ','
        << cell(max_rt) << ',' << cell(bound) << ',' << cell(holds);
    return {std::nullopt, csv.str(), code};
  }
  json wit = json::array();
  for (const auto& d : witnesses) wit.push_back(dfa_json(d.get()));
  json viol = json::array();
  for (const auto& d : violations) viol.push_back(dfa_json(d.get()));
  json result = {{"n", args.n},
                 {"k", args.k},
                 {"eulerian", args.eulerian},
                 {"iso", args.iso},
                 {"tables_scanned", s.tables_scanned},
                 {"total", s.total},
                 {"synchronizing", s.synchronizing},
                 {"max_rt", max_rt},
                 {"bound", bound},
                 {"bound_holds", holds},
                 {"bound_violations", s.bound_violations},
                 {"witness_classes", witnesses.size()},
                 {"witness_automata", s.witness_automata},
                 {"eulerian_synchronizing", s.eulerian_synchronizing},
                 {"kari_violations", s.kari_violations},
                 {"extension_checks", s.extension_checks},
                 {"extension_violations", s.extension_violations},
                 {"max_extension_length", s.max_extension_length},
                 {"witnesses", wit},
                 {"violations", viol}};
  return {result, std::nullopt, code};
}

void emit(const std::string& command, const std::string& digest_source, const Output& out,
          bool envelope, double elapsed_ms) {
  if (envelope) {
    json report = {{"command", command},
                   {"input_digest", fnv1a_hex(digest_source)},
                   {"result", out.payload ? *out.payload : json(*out.text)},
                   {"elapsed_ms", elapsed_ms}};
    std::cout << report.dump() << '\n';
    return;
  }
  if (out.payload) std::cout << out.payload->dump() << '\n';
  else std::cout << *out.text << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"synchrokit: synchronizing automata toolkit"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--envelope", common.envelope,
               "Wrap the result in {command, input_digest, result, elapsed_ms}");

  std::string path;
  std::string word;
  std::optional<std::uint32_t> q0;
  bool verify = false;
  bool compact = false;

  auto* rt = app.add_subcommand("rt", "Exact reset threshold with a shortest reset word");
  rt->add_option("dfa", path, "DFA JSON file")->required();
  rt->add_flag("--verify", verify, "Cross-check against the backward search");

  auto* vw = app.add_subcommand("verify-word", "Check reset, straight, greedy and factor properties");
  vw->add_option("dfa", path, "DFA JSON file")->required();
  vw->add_option("word", word, "Whitespace-separated letter names")->required();
  vw->add_option("--q0", q0, "Final state to trace from when the word is not a reset word");
  vw->add_flag("--compact", compact, "One character per letter");

  std::string family;
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::string emit_kind = "dfa";
  auto* series = app.add_subcommand("series", "Build A_m or the Cerny automaton");
  series->require_subcommand(1);
  auto* am = series->add_subcommand("am", "The quaternary Eulerian series A_m");
  am->add_option("--m", m, "Series index m >= 1")->required();
  am->add_option("--emit", emit_kind, "dfa, word or resetword")
      ->check(CLI::IsMember({"dfa", "word", "resetword"}));
  auto* cerny = series->add_subcommand("cerny", "Cerny automaton C_n");
  cerny->add_option("--n", n, "Number of states >= 2")->required();
  cerny->add_option("--emit", emit_kind, "dfa or resetword")
      ->check(CLI::IsMember({"dfa", "resetword"}));

  std::string subset;
  auto* extend = app.add_subcommand("extend", "Shortest extending word of a subset");
  extend->add_option("dfa", path, "DFA JSON file")->required();
  extend->add_option("--subset", subset, "Comma-separated states, e.g. 0,1")->required();

  auto* trace = app.add_subcommand("trace", "Preimage chain of a word");
  trace->add_option("dfa", path, "DFA JSON file")->required();
  trace->add_option("--word", word, "Whitespace-separated letter names")->required();
  trace->add_option("--q0", q0, "Singleton to trace from (defaults to the reset state)");
  trace->add_flag("--compact", compact, "One character per letter");

  std::uint32_t level_q0 = 0;
  std::uint64_t max_depth = 1000;
  auto* levels = app.add_subcommand("levels", "Backward BFS layer widths from a singleton");
  levels->add_option("dfa", path, "DFA JSON file")->required();
  levels->add_option("--q0", level_q0, "Start state")->required();
  levels->add_option("--max-depth", max_depth, "Maximum depth");

  CensusArgs cargs;
  auto* census = app.add_subcommand("census", "Exhaustive enumeration of small automata");
  census->add_option("--n", cargs.n, "Number of states")->required();
  census->add_option("--k", cargs.k, "Number of letters")->required();
  census->add_flag("--eulerian", cargs.eulerian, "Only Eulerian automata");
  census->add_flag("--iso", cargs.iso, "One representative per isomorphism class");
  census->add_option("--bound", cargs.bound, "auto or an integer bound on the reset threshold");
  census->add_option("--jobs", cargs.jobs, "Worker threads")->check(CLI::PositiveNumber);
  census->add_option("--out", cargs.out, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  census->add_option("--witness-dir", cargs.witness_dir, "Write witnesses as DFA JSON files here");
  census->add_flag("--force", cargs.force, "Ignore the table-count budget");
  census->add_option("--extension-samples", cargs.extension_samples,
                     "Extending-word checks per automaton: 0 off, -1 all subsets");
  census->add_option("--seed", cargs.seed, "Seed for sampled extension checks");

  auto* chk = app.add_subcommand("check", "Eulerian test and letter classes");
  chk->add_option("dfa", path, "DFA JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string command;
  std::string digest_source;
  try {
    Output out;
    if (rt->parsed()) {
      command = "rt";
      digest_source = read_file(path);
      out = cmd_rt(digest_source, verify);
    } else if (vw->parsed()) {
      command = "verify-word";
      digest_source = read_file(path);
      out = cmd_verify_word(digest_source, word, compact, q0);
      digest_source += '\n' + word;
    } else if (series->parsed()) {
      command = "series";
      const bool is_am = am->parsed();
      digest_source = (is_am ? "am " + std::to_string(m) : "cerny " + std::to_string(n)) + ' ' + emit_kind;
      out = cmd_series(is_am ? "am" : "cerny", is_am ? m : n, emit_kind);
    } else if (extend->parsed()) {
      command = "extend";
      digest_source = read_file(path);
      out = cmd_extend(digest_source, subset);
    } else if (trace->parsed()) {
      command = "trace";
      digest_source = read_file(path);
      out = cmd_trace(digest_source, word, compact, q0);
    } else if (levels->parsed()) {
      command = "levels";
      digest_source = read_file(path);
      out = cmd_levels(digest_source, level_q0, max_depth);
    } else if (census->parsed()) {
      command = "census";
      digest_source = "census " + std::to_string(cargs.n) + ' ' + std::to_string(cargs.k) + ' ' +
                      (cargs.eulerian ? "eulerian" : "all") + ' ' + (cargs.iso ? "iso" : "labeled") +
                      ' ' + cargs.bound;
      out = cmd_census(cargs);
    } else {
      command = "check";
      digest_source = read_file(path);
      out = cmd_check(digest_source);
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(command, digest_source, out, common.envelope, elapsed);
    if (out.exit_code == kExitBoundViolated) {
      std::cerr << "bound violated\n";
    }
    return out.exit_code;
  } catch (const CommandError& e) {
    std::cerr << "synchrokit " << command << ": " << e.message << '\n';
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "synchrokit " << command << ": " << e.what() << '\n';
    return kExitDomain;
  }
}

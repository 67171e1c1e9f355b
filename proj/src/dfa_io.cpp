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

#include "synchrokit/dfa_io.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

namespace synchrokit {

using nlohmann::json;

std::string to_json(const Dfa& dfa) {
  std::string out = "{\"n\": " + std::to_string(dfa.states()) + ", \"letters\": [";
  for (std::size_t a = 0; a < dfa.letter_count(); ++a) {
    if (a != 0) out += ',';
    out += json(dfa.letters()[a]).dump();
  }
  out += "], \"delta\": [";
  for (State q = 0; q < dfa.states(); ++q) {
    if (q != 0) out += ',';
    out += '[';
    for (Letter a = 0; a < dfa.letter_count(); ++a) {
      if (a != 0) out += ',';
      out += std::to_string(dfa.next(q, a));
    }
    out += ']';
  }
  out += "]}";
  return out;
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::kParse, "invalid DFA JSON: " + what);
}

}  // namespace

Dfa dfa_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
  if (!doc.is_object()) parse_fail("top level must be an object");
  for (const char* key : {"n", "letters", "delta"}) {
    if (!doc.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  }
  const json& jn = doc["n"];
  if (!jn.is_number_integer() || jn.get<long long>() < 1) parse_fail("'n' must be a positive integer");
  const auto n = static_cast<std::size_t>(jn.get<long long>());

  const json& jletters = doc["letters"];
  if (!jletters.is_array()) parse_fail("'letters' must be an array");
  std::vector<std::string> letters;
  for (const auto& name : jletters) {
    if (!name.is_string()) parse_fail("letter names must be strings");
    letters.push_back(name.get<std::string>());
  }

  const json& jdelta = doc["delta"];
  if (!jdelta.is_array() || jdelta.size() != n) parse_fail("'delta' must have exactly n rows");
  std::vector<std::vector<State>> delta;
  delta.reserve(n);
  for (const auto& row : jdelta) {
    if (!row.is_array() || row.size() != letters.size()) {
      parse_fail("every delta row must have one entry per letter");
    }
    std::vector<State> r;
    for (const auto& t : row) {
      if (!t.is_number_integer() || t.get<long long>() < 0 ||
          static_cast<std::size_t>(t.get<long long>()) >= n) {
        parse_fail("delta entries must be states in 0..n-1");
      }
      r.push_back(static_cast<State>(t.get<long long>()));
    }
    delta.push_back(std::move(r));
  }
  try {
    return Dfa(std::move(letters), delta);
  } catch (const Error& e) {
    parse_fail(e.what());
  }
}

std::string format_word(const Dfa& dfa, const Word& w, bool compact) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0 && !compact) out += ' ';
    out += dfa.letter_name(w[i]);
  }
  return out;
}

Word parse_word(const Dfa& dfa, std::string_view text, bool compact) {
  Word w;
  if (compact) {
    const auto& names = dfa.letters();
    if (!std::all_of(names.begin(), names.end(), [](const std::string& s) { return s.size() == 1; })) {
      throw Error(ErrorCode::kInvalidArgument, "compact words need single-character letter names");
    }
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      auto a = dfa.find_letter(std::string_view(&c, 1));
      if (!a) throw Error(ErrorCode::kInvalidLetter, std::string("unknown letter '") + c + "'");
      w.push_back(*a);
    }
    return w;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) {
      auto token = text.substr(i, j - i);
      auto a = dfa.find_letter(token);
      if (!a) throw Error(ErrorCode::kInvalidLetter, "unknown letter '" + std::string(token) + "'");
      w.push_back(*a);
    }
    i = j;
  }
  return w;
}

}  // namespace synchrokit

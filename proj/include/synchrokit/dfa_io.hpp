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

#include <string>
#include <string_view>

#include "synchrokit/dfa.hpp"

namespace synchrokit {

/// Canonical JSON form: {"n": N, "letters": ["a","b"], "delta": [[..],..]}
/// with delta[q][a]. Serialization is byte-stable, so parse followed by
/// serialize reproduces canonical input exactly.
std::string to_json(const Dfa& dfa);
Dfa dfa_from_json(std::string_view text);

/// Words are whitespace-separated letter names. With `compact`, every
/// character is one letter; this requires all letter names to be one
/// character long.
std::string format_word(const Dfa& dfa, const Word& w, bool compact = false);
Word parse_word(const Dfa& dfa, std::string_view text, bool compact = false);

}  // namespace synchrokit

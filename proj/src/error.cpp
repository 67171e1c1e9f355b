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

#include "synchrokit/error.hpp"

namespace synchrokit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kInvalidLetter: return "invalid-letter";
    case ErrorCode::kInvalidState: return "invalid-state";
    case ErrorCode::kSize: return "size-error";
    case ErrorCode::kNotSynchronizing: return "not-synchronizing";
    case ErrorCode::kNotExtensible: return "not-extensible";
    case ErrorCode::kDomain: return "domain-error";
    case ErrorCode::kPrecondition: return "precondition-error";
    case ErrorCode::kBudget: return "budget-exceeded";
  }
  return "unknown";
}

}  // namespace synchrokit

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

#include "synchrokit/dfa.hpp"

namespace synchrokit::series {

// Letter order of A_m is fixed; golden files depend on it.
inline constexpr Letter kAlpha = 0;
inline constexpr Letter kBeta = 1;
inline constexpr Letter kOmega0 = 2;
inline constexpr Letter kOmega1 = 3;

/// The pair (m, N = 4m + 1) of the quaternary Eulerian series A_m.
class SeriesParams {
 public:
  explicit SeriesParams(std::uint32_t m);
  /// Recovers m from N; throws unless N = 4m + 1 with m >= 1.
  static SeriesParams from_states(std::uint32_t n);

  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t n() const noexcept { return 4 * m_ + 1; }

 private:
  std::uint32_t m_;
};

/// A_m on states 0..N-1 with letters [a, b, w0, w1]:
///   q.a = (-q-1) mod N,  q.b = (-q+1) mod N,  w0 = (1 -> 0),  w1 = (0 -> 1).
Dfa build_am(std::uint32_t m);

/// t_i = a (b a)^((i-1)/2) for odd i >= 1; a palindrome of length i.
Word build_t(std::uint32_t i);

/// v_j = w1 t_{N-j} for even j, w0 t_{j-2} for odd j, 2 <= j <= N-1.
Word build_v(const SeriesParams& params, std::uint32_t j);

/// w = v_{N-1} b v_{N-2} b ... b v_3 b v_2, of length (N^2 - 5) / 2.
Word build_w(std::uint32_t m);

/// w w0, the shortest reset word of A_m.
Word build_reset_word(std::uint32_t m);

/// (N^2 - 3) / 2.
std::uint64_t predicted_rt(std::uint32_t m);

enum class FamilyKind { kQ, kR, kQDiamond, kRDiamond };

/// Q_j = {0..j-1}, R_j = Q_j.b, Q_j<> = Q_j \ {0}, R_j<> = R_j \ {1}.
StateSet subset_family(const SeriesParams& params, FamilyKind kind, std::uint32_t j);

/// Cerny automaton C_n: letter "a" is the cycle q -> q+1 mod n, letter "b"
/// is (0 -> 1). Its reset threshold is (n-1)^2.
Dfa build_cerny(std::uint32_t n);

/// (b a^(n-1))^(n-2) b, a reset word of C_n of length (n-1)^2.
Word cerny_reset_word(std::uint32_t n);

}  // namespace synchrokit::series

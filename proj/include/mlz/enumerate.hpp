// Copyright 2026 The Authors.
//
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

#ifndef MLZ_ENUMERATE_HPP_
#define MLZ_ENUMERATE_HPP_

#include <optional>
#include <vector>

#include "mlz/matroid.hpp"

namespace mlz {

// Kernels with an OpenMP path keep the serial loop as the reference; both
// produce identical output.
enum class Execution { kSerial, kParallel };

inline constexpr int kMaxEnumerationGround = 6;

// Every labeled matroid on {1..n} (optionally of one rank), each once, ordered
// by rank and then lexicographically by basis family. Throws MatroidError for
// n outside 1..6.
std::vector<Matroid> enumerate_matroids(
    int n, std::optional<int> rank = std::nullopt,
    Execution execution = Execution::kParallel);

// True iff the r-subset family encoded by `family` (bit i set when the i-th
// r-subset of {1..n}, in increasing mask order, is a basis) satisfies the
// exchange axiom. Returns on the first violation.
bool family_satisfies_exchange(int n, int r, std::uint64_t family);

}  // namespace mlz

#endif  // MLZ_ENUMERATE_HPP_

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


// Independent reference implementations used only by tests. Each one takes a
// different route from the library code it checks.

#ifndef MLZ_TESTS_ORACLES_HPP_
#define MLZ_TESTS_ORACLES_HPP_

#include <vector>

#include "mlz/linalg.hpp"
#include "mlz/matroid.hpp"
#include "mlz/polynomial.hpp"

namespace mlz::oracle {

// Basis families of every matroid on {1..n}, found by enumerating flat
// families (intersection closed, containing the ground set, with minimal
// superflats partitioning each complement) and reading off bases through
// the closure operator. Each family is sorted by lex_less.
std::vector<std::vector<Subset>> matroids_via_flats(int n);

// max |B & s| over bases.
int rank_from_bases(const Matroid& m, Subset s);

// Faddeev-LeVerrier, lowest degree first.
std::vector<Rational> char_poly_leverrier(const RationalMatrix& a);

// Symmetric LDL^T with 1x1 and 2x2 pivots.
Inertia inertia_by_congruence(const SymMatrix& a);

// Plain Gauss-Jordan over the rationals.
std::size_t rank_by_gauss(const RationalMatrix& a);

// Hessian entry by differentiating twice and evaluating.
Rational second_partial_at(const HomogPoly& p, int var_i, int var_j,
                           const RationalPoint& a);

// Maps satisfying the rank-difference form of the morphism definition with
// full image rank, by brute force over all maps. Lexicographic order.
std::vector<std::vector<int>> morphism_maps_by_rank(const Matroid& source,
                                                    const Matroid& target);

}  // namespace mlz::oracle

#endif  // MLZ_TESTS_ORACLES_HPP_

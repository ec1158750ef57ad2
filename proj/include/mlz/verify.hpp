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


// Verdict suites that bind the log-concavity statements to exact
// computations, and the exhaustive survey over small matroids and morphisms.

#ifndef MLZ_VERIFY_HPP_
#define MLZ_VERIFY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mlz/enumerate.hpp"
#include "mlz/matroid.hpp"
#include "mlz/morphism.hpp"
#include "mlz/polynomial.hpp"

namespace mlz {

// f(a) f_ij(a) against 2(1 - 1/r) f_i(a) f_j(a) for the basis polynomial.
struct MasonBasisReport {
  int i = 0, j = 0;
  bool weighted = false;
  bool loop_argument = false;  // degenerate row: lhs = rhs = 0
  bool parallel = false;
  int parallel_classes = 0;
  // At the all-ones point these are |B|, |B_i|, |B_j|, |B_ij|.
  Rational f, f_i, f_j, f_ij;
  Rational lhs, rhs;
  bool equal = false;
  std::optional<bool> predicted_equal;
  bool consistent = true;

  bool holds() const { return lhs <= rhs; }
};

// Without a point, evaluates at all ones and predicts equality exactly when
// i, j are not parallel and there are two parallel classes. At a weighted
// point strictness is predicted for parallel pairs and for three or more
// classes; two classes carry no prediction. Requires rank >= 2, i != j.
MasonBasisReport mason_basis_check(
    const Matroid& m, int i, int j,
    const std::optional<RationalPoint>& a = std::nullopt);

// (f_{k-1}/C(n,k-1)) (f_{k+1}/C(n,k+1)) against (f_k/C(n,k))^2 with
// f_{r+1} = 0.
struct MasonIndepReport {
  int k = 0;
  bool weighted = false;
  Rational lhs, rhs;
  bool equal = false;
  std::optional<bool> predicted_equal;
  bool consistent = true;

  bool holds() const { return lhs <= rhs; }
};

// At all ones equality is predicted iff k + 1 < girth; for a free matroid
// and k = n the missing ratio I_{n+1}/C(n,n+1) is taken to be 1, as for
// every other size below the girth. At a weighted point k + 1 >= girth
// predicts strictness; the free k = n row is undefined there and throws.
MasonIndepReport mason_indep_check(
    const Matroid& m, int k, const std::optional<RationalPoint>& a = std::nullopt);

enum class CheckStatus { kPass, kFail, kNotApplicable, kRecorded };
std::string to_string(CheckStatus s);

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  nlohmann::json data;
};

struct SuiteReport {
  std::vector<CheckEntry> entries;

  void add(std::string name, bool passed, nlohmann::json data = {});
  void record(std::string name, nlohmann::json data);
  void not_applicable(std::string name, nlohmann::json data = {});
  bool passed() const;
  std::vector<CheckEntry> failures() const;
};

struct SuiteOptions {
  int sampled_points = 3;
  int weighted_points = 5;
  int lorentz_max_n = 5;
  bool hodge_pairs = true;
};

// Checks for one matroid, as applicable to its structure: gradient ranks,
// Hessian signatures and HRR1 of the basis and reduced polynomials at the
// all-ones point and seeded points, derivative identities, the flat
// partition, Hodge pair determinants and the sampled Lorentzian witness.
SuiteReport theorem_suite(const Matroid& m, std::uint64_t seed,
                          const SuiteOptions& options = {});

// Inequality rows for every non-loop pair and every k, at all ones and at
// seeded weighted points.
SuiteReport mason_suite(const Matroid& m, std::uint64_t seed,
                        const SuiteOptions& options = {});

// Dependency of the partials of the reduced polynomial against the A/B/C
// conditions (simple sources only), annihilator exactness, basis-level
// structure, the Eur-Huh profile, and recorded SLP1/HRR1 verdicts.
SuiteReport morphism_suite(const MatroidMorphism& phi, std::uint64_t seed);

struct Tally {
  long pass = 0, fail = 0, not_applicable = 0, recorded = 0;
};

struct SurveyOptions {
  int n_max = 4;
  int morphism_max_source = 5;  // clipped to n_max
  bool morphisms = true;
  SuiteOptions suite;
  Execution execution = Execution::kParallel;
};

struct SurveyReport {
  std::uint64_t seed = 0;
  int n_max = 0;
  int morphism_max_source = 0;
  std::size_t matroids = 0;
  std::size_t morphisms = 0;
  std::map<std::string, Tally> tallies;
  std::vector<nlohmann::json> counterexamples;
  std::vector<nlohmann::json> mason_basis_equalities;
  std::vector<nlohmann::json> mason_indep_equalities;
  std::vector<nlohmann::json> eur_huh_equalities;
  // One object per check in canonical (item, check) order.
  std::vector<nlohmann::json> records;

  std::string to_jsonl() const;
  std::string to_tsv() const;
};

SurveyReport survey(const SurveyOptions& options, std::uint64_t seed);

// Targets used by the survey: every matroid on 1..3 elements.
std::vector<Matroid> morphism_targets();

}  // namespace mlz

#endif  // MLZ_VERIFY_HPP_

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


// Morphisms of matroids: maps whose flat preimages are flats, their bases,
// generating polynomials, and the linear dependencies among the partial
// derivatives of the reduced polynomial.

#ifndef MLZ_MORPHISM_HPP_
#define MLZ_MORPHISM_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlz/enumerate.hpp"
#include "mlz/matroid.hpp"
#include "mlz/polynomial.hpp"

namespace mlz {

enum class MorphismErrorKind {
  kFlatPreimageViolation,
  kImageRankDeficient,
  kConditionMismatch,
  kInvalidMap,
  kBoundsExceeded,
};

class MorphismError : public std::invalid_argument {
 public:
  MorphismError(MorphismErrorKind kind, const std::string& what,
                Subset flat = Subset())
      : std::invalid_argument(what), kind_(kind), flat_(flat) {}
  MorphismErrorKind kind() const { return kind_; }
  // The offending flat of the target for kFlatPreimageViolation.
  Subset flat() const { return flat_; }

 private:
  MorphismErrorKind kind_;
  Subset flat_;
};

class AnnihilatorCheckFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class MatroidMorphism {
 public:
  const Matroid& source() const { return source_; }
  const Matroid& target() const { return target_; }
  // map()[i-1] is the image of element i.
  const std::vector<int>& map() const { return map_; }

  Subset image(Subset s) const;
  Subset preimage(Subset t) const;
  Subset phi_loops() const { return preimage(closure(target_, Subset())); }

  bool operator==(const MatroidMorphism&) const = default;

 private:
  friend MatroidMorphism validate_morphism(const Matroid&, const Matroid&,
                                           const std::vector<int>&);
  friend std::vector<MatroidMorphism> enumerate_morphisms(
      const Matroid&, const std::vector<Matroid>&, Execution);
  MatroidMorphism(Matroid source, Matroid target, std::vector<int> map)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(map)) {}

  Matroid source_;
  Matroid target_;
  std::vector<int> map_;
};

// Checks that every flat of N pulls back to a flat of M and that the image
// has full rank in N. For n <= 5 the rank-difference form of the definition
// is evaluated over all nested pairs as well; disagreement throws
// kConditionMismatch.
MatroidMorphism validate_morphism(const Matroid& source, const Matroid& target,
                                  const std::vector<int>& map);

// Loops part is the set of phi-loops; classes are preimages of parallel
// classes of N, ordered by smallest element.
ParallelDecomposition phi_decomposition(const MatroidMorphism& phi);

struct MorphismBases {
  int min_size = 0;  // rank of the target
  int max_size = 0;  // rank of the source
  std::vector<std::vector<Subset>> by_size;  // index k, ascending by mask

  const std::vector<Subset>& of_size(int k) const {
    return by_size.at(static_cast<std::size_t>(k));
  }
  std::size_t count(int k) const {
    return k < 0 || k >= static_cast<int>(by_size.size()) ? 0 : of_size(k).size();
  }
};

MorphismBases morphism_bases(const MatroidMorphism& phi);

struct MorphismPolys {
  HomogPoly full;     // degree n over x0..xn
  HomogPoly reduced;  // degree r
};

MorphismPolys morphism_poly(const MatroidMorphism& phi);

enum class DegeneracyCondition { kA, kB, kC };
std::string to_string(DegeneracyCondition c);

struct DegeneracyVerdict {
  std::vector<DegeneracyCondition> classes;
  // Coefficients over x0..xn of a linear form killing the reduced polynomial.
  std::optional<RationalPoint> annihilator;
  std::optional<DegeneracyCondition> annihilator_from;
  bool source_simple = false;

  bool has(DegeneracyCondition c) const;
  // "{A,C}", "{}" when empty.
  std::string classes_string() const;
};

// Evaluates A: r = r'; B: r - r' = 1 and exactly one phi-loop; C: M restricted
// to the phi-loops is uniform and exactly r' elements are not phi-loops. Every
// condition that holds has its annihilator verified exactly; for a simple
// source a failure throws AnnihilatorCheckFailed, otherwise the first
// verified annihilator is kept.
DegeneracyVerdict degeneracy_class(const MatroidMorphism& phi);

struct EurHuhEntry {
  int k = 0;
  Rational lhs, rhs;
  bool equal = false;
};

// For r' < k < r: (b_{k-1}/C(n,k-1)) (b_{k+1}/C(n,k+1)) against (b_k/C(n,k))^2
// with b_k = |B(phi)_k|.
std::vector<EurHuhEntry> eur_huh_profile(const MatroidMorphism& phi);

inline constexpr int kMaxMorphismSource = 5;
inline constexpr int kMaxMorphismTarget = 3;

// All valid morphisms from `source` to each target, ordered by target index
// and then lexicographically by map.
std::vector<MatroidMorphism> enumerate_morphisms(
    const Matroid& source, const std::vector<Matroid>& targets,
    Execution execution = Execution::kParallel);

}  // namespace mlz

#endif  // MLZ_MORPHISM_HPP_

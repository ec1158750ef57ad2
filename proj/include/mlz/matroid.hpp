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

// Matroids on small ground sets, stored by their bases. Every matroid keeps a
// rank table over all 2^n subsets, so rank, independence and closure queries
// are table lookups.

#ifndef MLZ_MATROID_HPP_
#define MLZ_MATROID_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mlz/rational.hpp"
#include "mlz/subset.hpp"

namespace mlz {

enum class MatroidErrorKind {
  kEmptyBases,
  kUnequalCardinality,
  kExchangeViolation,
  kOutOfRange,
  kLoopContraction,
  kInvalidArgument,
};

class MatroidError : public std::invalid_argument {
 public:
  MatroidError(MatroidErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  MatroidErrorKind kind() const { return kind_; }

 private:
  MatroidErrorKind kind_;
};

// Raised when (B1 - {x}) + {y} is not a basis for any y in B2 - B1.
class ExchangeViolation : public MatroidError {
 public:
  ExchangeViolation(Subset b1, Subset b2, int x);
  Subset b1() const { return b1_; }
  Subset b2() const { return b2_; }
  int x() const { return x_; }

 private:
  Subset b1_, b2_;
  int x_;
};

// Minimum circuit size. A free matroid has no circuits and infinite girth.
class Girth {
 public:
  static Girth infinite() { return Girth(); }
  static Girth finite(int value) { return Girth(value); }

  bool is_infinite() const { return !value_.has_value(); }
  int value() const { return value_.value(); }
  // k < girth, with every integer below infinity.
  bool exceeds(int k) const { return is_infinite() || k < *value_; }
  std::string to_string() const {
    return is_infinite() ? "inf" : std::to_string(*value_);
  }
  bool operator==(const Girth&) const = default;

 private:
  Girth() = default;
  explicit Girth(int v) : value_(v) {}
  std::optional<int> value_;
};

class Matroid {
 public:
  // Rank tables are materialized over all 2^n subsets.
  static constexpr int kMaxGround = 20;

  int ground_size() const { return n_; }
  int rank() const { return r_; }
  Subset ground() const { return Subset::full(n_); }
  // Bases in lexicographic order.
  const std::vector<Subset>& bases() const { return bases_; }

  int rank_of(Subset s) const { return rank_[s.mask()]; }
  bool is_independent(Subset s) const { return rank_of(s) == s.size(); }
  bool is_basis(Subset s) const {
    return s.size() == r_ && is_independent(s);
  }
  bool is_loop(int e) const { return rank_of(Subset::singleton(e)) == 0; }
  bool is_coloop(int e) const { return rank_of(ground().without(e)) < r_; }
  bool are_parallel(int i, int j) const;
  bool is_loopless() const;
  bool is_simple() const;
  bool is_uniform() const;

  // All independent sets of the given size, ascending by mask.
  std::vector<Subset> independent_sets(int size) const;

  bool operator==(const Matroid& other) const {
    return n_ == other.n_ && bases_ == other.bases_;
  }

  std::string to_string() const;

 private:
  friend Matroid make_matroid_unchecked(int n, std::vector<Subset> bases);
  Matroid() = default;

  int n_ = 0;
  int r_ = 0;
  std::vector<Subset> bases_;
  std::vector<std::uint8_t> rank_;
};

struct ParallelDecomposition {
  Subset loops;
  // Ordered by smallest element.
  std::vector<Subset> classes;
};

struct IndepProfile {
  std::vector<Integer> counts;       // I_0 .. I_r
  std::vector<Rational> normalized;  // I_k / C(n,k)
};

// A minor relabeled onto {1..m}; ground[k] is the original label of k+1.
struct Minor {
  Matroid matroid;
  std::vector<int> ground;
};

struct Simplification {
  Matroid matroid;
  // representatives[c] is the smallest element of parallel class c+1, which
  // becomes element c+1 of the simplification.
  std::vector<int> representatives;
  ParallelDecomposition decomposition;
};

enum class MinorKind { kContract, kDelete, kRestrict };

// Builds a matroid from a basis family, checking the exchange axiom.
Matroid validate_bases(int n, const std::vector<Subset>& candidate);

// Skips validation; the caller guarantees the family is a matroid. The empty
// ground set (n = 0, bases {{}}) is accepted here for minors.
Matroid make_matroid_unchecked(int n, std::vector<Subset> bases);

Matroid uniform(int r, int n);
Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges);
Matroid direct_sum(const Matroid& m1, const Matroid& m2);

int rank_of(const Matroid& m, Subset s);
Subset closure(const Matroid& m, Subset s);

// Flats ordered by size, then mask.
std::vector<Subset> flats(const Matroid& m);
// Minimal flats properly containing the flat f.
std::vector<Subset> minimal_superflats(const Matroid& m, Subset f);

struct CircuitsAndGirth {
  std::vector<Subset> circuits;  // size, then mask
  Girth girth;
};
CircuitsAndGirth circuits_and_girth(const Matroid& m);

ParallelDecomposition parallel_decomposition(const Matroid& m);

Minor contract(const Matroid& m, int e);
Minor delete_element(const Matroid& m, int e);
Minor restrict_to(const Matroid& m, Subset x);
// Dispatches on kind; `arg` is a single element for contract/delete.
Minor minor(const Matroid& m, MinorKind kind, Subset arg);

Matroid truncate(const Matroid& m, int steps);
Simplification simplify(const Matroid& m);
IndepProfile indep_profile(const Matroid& m);

}  // namespace mlz

#endif  // MLZ_MATROID_HPP_

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


// Degree-one Lefschetz and Hodge-Riemann checks at a point, decided from the
// exact inertia of the Hessian, plus a sampled Lorentzian witness.

#ifndef MLZ_SPECTRA_HPP_
#define MLZ_SPECTRA_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mlz/linalg.hpp"
#include "mlz/polynomial.hpp"

namespace mlz {

enum class PointClass { kStrictLorentz, kLorentzDegenerate, kNotLogConcave };

PointClass classify(const Inertia& in);
PointClass point_class(const HomogPoly& p, const RationalPoint& a);
std::string to_string(PointClass c);

// kInapplicable: the polynomial is not positive at the point, where the
// Hessian criterion says nothing.
enum class Verdict { kHolds, kFails, kInapplicable };
std::string to_string(Verdict v);

struct DegreeOneCheck {
  Verdict verdict = Verdict::kInapplicable;
  Inertia inertia;
  std::size_t hessian_rank = 0;
  std::size_t gradient_rank = 0;
  Rational value;  // p(a)

  bool holds() const { return verdict == Verdict::kHolds; }
};

std::size_t gradient_rank(const HomogPoly& p);

// SLP1 holds iff rank H_p(a) equals the gradient rank.
DegreeOneCheck check_slp1(const HomogPoly& p, const RationalPoint& a);
DegreeOneCheck check_slp1(const HomogPoly& p, const RationalPoint& a,
                          std::size_t gradient_rank);

// HRR1 holds iff inertia H_p(a) = (1, g-1, m-g) with g the gradient rank and
// m the number of active variables.
DegreeOneCheck check_hrr1(const HomogPoly& p, const RationalPoint& a);
DegreeOneCheck check_hrr1(const HomogPoly& p, const RationalPoint& a,
                          std::size_t gradient_rank);

struct WitnessFailure {
  int e0 = 0;    // order of the x0 derivative
  Subset vars;   // differentiated x1..xn variables
  std::optional<RationalPoint> point;  // absent for the quadratic stage
  Inertia inertia;
};

// Sampled witness: a pass is evidence at the supplied points, not a proof
// over the open orthant. Derivatives of degree two are checked exactly.
struct LorentzianWitness {
  bool passed = true;
  int derivatives = 0;
  int zero_derivatives = 0;
  int quadratic_checks = 0;
  int point_checks = 0;
  std::optional<WitnessFailure> failure;
};

// Visits every derivative x0^k0 * prod(vars) of total order <= deg - 2.
// Throws PolyError on a point with a non-positive coordinate.
LorentzianWitness lorentzian_witness(const HomogPoly& p,
                                     const std::vector<RationalPoint>& points);

// Rationals num/den with num, den uniform in 1..16.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed);
  // Independent stream for item `index` of a run seeded with `seed`.
  PointSampler(std::uint64_t seed, std::uint64_t index);

  Rational next();
  RationalPoint positive(std::size_t size);

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<int> dist_{1, 16};
};

struct HodgePair {
  bool applicable = false;  // independent in the quotient and Q(l1,l1) > 0
  Rational q11, q12, q22;   // (l l' p)(a)
  Rational det;
};

// Linear forms are coefficient vectors over the active variables.
HodgePair hodge_pair_determinant(const HomogPoly& p, const RationalPoint& a,
                                 const RationalPoint& l1,
                                 const RationalPoint& l2);
// Same, from a Hessian at the point and the gradient matrix.
HodgePair hodge_pair_determinant(const SymMatrix& hessian,
                                 const RationalMatrix& gradient,
                                 const RationalPoint& l1,
                                 const RationalPoint& l2);

// Mixes a run seed with an item index into a new 64-bit seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace mlz

#endif  // MLZ_SPECTRA_HPP_

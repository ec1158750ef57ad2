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


#include <gtest/gtest.h>

#include "generators.hpp"
#include "mlz/morphism.hpp"
#include "mlz/spectra.hpp"
#include "oracles.hpp"

namespace mlz {
namespace {

using Cond = DegeneracyCondition;

Matroid loop_plus_coloop() { return direct_sum(uniform(0, 1), uniform(1, 1)); }

std::vector<Matroid> small_targets() {
  std::vector<Matroid> t;
  for (int m = 1; m <= 3; ++m) {
    for (Matroid& x : enumerate_matroids(m)) t.push_back(std::move(x));
  }
  return t;
}

std::vector<Matroid> simple_sources() {
  std::vector<Matroid> s;
  for (const Matroid& m : gen::catalog(5)) {
    if (m.is_simple()) s.push_back(m);
  }
  return s;
}

const std::vector<MatroidMorphism>& all_morphisms() {
  static const std::vector<MatroidMorphism> all = [] {
    std::vector<MatroidMorphism> out;
    const std::vector<Matroid> targets = small_targets();
    for (const Matroid& m : simple_sources()) {
      for (MatroidMorphism& phi : enumerate_morphisms(m, targets)) {
        out.push_back(std::move(phi));
      }
    }
    return out;
  }();
  return all;
}

TEST(ValidateMorphism, Examples) {
  const Matroid m = uniform(2, 3);
  EXPECT_NO_THROW(validate_morphism(m, uniform(0, 1), {1, 1, 1}));
  EXPECT_NO_THROW(validate_morphism(m, truncate(m, 1), {1, 2, 3}));
  try {
    validate_morphism(uniform(1, 2), uniform(2, 2), {1, 2});
    FAIL();
  } catch (const MorphismError& e) {
    EXPECT_EQ(e.kind(), MorphismErrorKind::kFlatPreimageViolation);
  }
  try {
    validate_morphism(uniform(2, 2), uniform(2, 2), {1, 1});
    FAIL();
  } catch (const MorphismError& e) {
    EXPECT_EQ(e.kind(), MorphismErrorKind::kImageRankDeficient);
  }
  EXPECT_THROW(validate_morphism(m, uniform(0, 1), {1, 2, 1}), MorphismError);
  EXPECT_THROW(validate_morphism(m, uniform(0, 1), {1, 1}), MorphismError);
}

TEST(PhiDecomposition, Examples) {
  const auto all_loops =
      phi_decomposition(validate_morphism(uniform(2, 3), uniform(0, 1), {1, 1, 1}));
  EXPECT_EQ(all_loops.loops, Subset({1, 2, 3}));
  EXPECT_TRUE(all_loops.classes.empty());
  const auto b = phi_decomposition(
      validate_morphism(uniform(2, 3), loop_plus_coloop(), {1, 2, 2}));
  EXPECT_EQ(b.loops, Subset{1});
  EXPECT_EQ(b.classes, (std::vector<Subset>{{2, 3}}));
  const auto id =
      phi_decomposition(validate_morphism(uniform(2, 3), uniform(2, 3), {1, 2, 3}));
  EXPECT_TRUE(id.loops.empty());
  EXPECT_EQ(id.classes, (std::vector<Subset>{{1}, {2}, {3}}));
}

TEST(MorphismBases, Examples) {
  const auto final_ex =
      morphism_bases(validate_morphism(uniform(3, 3), uniform(1, 1), {1, 1, 1}));
  EXPECT_EQ(final_ex.count(0), 0u);
  EXPECT_EQ(final_ex.count(1), 3u);
  EXPECT_EQ(final_ex.count(2), 3u);
  EXPECT_EQ(final_ex.count(3), 1u);
  const Matroid m = direct_sum(uniform(2, 3), uniform(1, 1));
  const auto to_loop = morphism_bases(validate_morphism(m, uniform(0, 1), {1, 1, 1, 1}));
  for (int k = 0; k <= m.rank(); ++k) {
    EXPECT_EQ(to_loop.of_size(k), m.independent_sets(k));
  }
}

TEST(MorphismPoly, FinalExample) {
  const auto phi = validate_morphism(uniform(3, 3), uniform(1, 1), {1, 1, 1});
  EXPECT_EQ(morphism_poly(phi).reduced.to_string(),
            "x0^2*x1 + x0^2*x2 + x0^2*x3 + x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + "
            "x1*x2*x3");
}

TEST(MorphismPoly, EqualRanksGiveBasisPolynomial) {
  const Matroid m = direct_sum(uniform(2, 3), uniform(0, 1));
  const auto phi = validate_morphism(m, m, {1, 2, 3, 4});
  EXPECT_EQ(morphism_poly(phi).full, times_x0_power(basis_poly(m), 2));
}

TEST(MorphismPoly, CaseBInstance) {
  const auto phi = validate_morphism(uniform(2, 3), loop_plus_coloop(), {1, 2, 2});
  EXPECT_EQ(morphism_poly(phi).reduced.to_string(),
            "2*x0*x2 + 2*x0*x3 + x1*x2 + x1*x3 + x2*x3");
}

TEST(DegeneracyClass, Identity) {
  const Matroid m = uniform(2, 4);
  const DegeneracyVerdict v =
      degeneracy_class(validate_morphism(m, m, {1, 2, 3, 4}));
  EXPECT_EQ(v.classes_string(), "{A}");
  ASSERT_TRUE(v.annihilator.has_value());
  EXPECT_EQ(v.annihilator->coords, (std::vector<Rational>{1, 0, 0, 0, 0}));
}

TEST(DegeneracyClass, CaseB) {
  const auto phi = validate_morphism(uniform(2, 3), loop_plus_coloop(), {1, 2, 2});
  const DegeneracyVerdict v = degeneracy_class(phi);
  EXPECT_EQ(v.classes_string(), "{B}");
  ASSERT_TRUE(v.annihilator.has_value());
  EXPECT_EQ(v.annihilator->coords, (std::vector<Rational>{1, -2, 0, 0}));
  const HomogPoly p = morphism_poly(phi).reduced;
  EXPECT_EQ(partial(p, 0), scaled(partial(p, 1), 2));
  EXPECT_EQ(partial(p, 0).to_string(), "2*x2 + 2*x3");
}

TEST(DegeneracyClass, CaseC) {
  const Matroid m = direct_sum(uniform(1, 2), uniform(1, 1));
  const DegeneracyVerdict v =
      degeneracy_class(validate_morphism(m, loop_plus_coloop(), {1, 1, 2}));
  EXPECT_EQ(v.classes_string(), "{C}");
  ASSERT_TRUE(v.annihilator.has_value());
  EXPECT_EQ(v.annihilator->coords, (std::vector<Rational>{-1, 1, 1, 0}));
}

TEST(DegeneracyClass, FinalExampleIsNone) {
  const DegeneracyVerdict v =
      degeneracy_class(validate_morphism(uniform(3, 3), uniform(1, 1), {1, 1, 1}));
  EXPECT_TRUE(v.classes.empty());
  EXPECT_FALSE(v.annihilator.has_value());
}

TEST(DegeneracyClass, NonSimpleSourceMayLackTheCaseBForm) {
  // Element 1 is a loop of the source; condition B holds syntactically but
  // its linear form does not kill the reduced polynomial.
  const Matroid m = direct_sum(uniform(0, 1), uniform(2, 2));
  const auto phi = validate_morphism(m, loop_plus_coloop(), {1, 2, 2});
  const DegeneracyVerdict v = degeneracy_class(phi);
  EXPECT_FALSE(v.source_simple);
  EXPECT_EQ(v.classes_string(), "{B}");
  EXPECT_FALSE(v.annihilator.has_value());
  EXPECT_EQ(morphism_poly(phi).reduced.to_string(),
            "2*x0*x2 + 2*x0*x3 + x2*x3");
}

TEST(EurHuh, Examples) {
  EXPECT_TRUE(
      eur_huh_profile(validate_morphism(uniform(3, 4), uniform(2, 4), {1, 2, 3, 4}))
          .empty());
  const auto p =
      eur_huh_profile(validate_morphism(uniform(3, 3), uniform(1, 1), {1, 1, 1}));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].k, 2);
  EXPECT_EQ(p[0].lhs, 1);
  EXPECT_EQ(p[0].rhs, 1);
  EXPECT_TRUE(p[0].equal);
}

TEST(EurHuh, LoopTargetGivesMasonProfile) {
  for (const Matroid& m : gen::catalog(4)) {
    const auto phi = validate_morphism(
        m, uniform(0, 1), std::vector<int>(static_cast<std::size_t>(m.ground_size()), 1));
    const auto prof = eur_huh_profile(phi);
    const IndepProfile ip = indep_profile(m);
    ASSERT_EQ(prof.size(), m.rank() >= 1 ? static_cast<std::size_t>(m.rank() - 1) : 0u);
    for (const EurHuhEntry& e : prof) {
      const auto k = static_cast<std::size_t>(e.k);
      ASSERT_EQ(e.lhs, ip.normalized[k - 1] * ip.normalized[k + 1]);
      ASSERT_EQ(e.rhs, ip.normalized[k] * ip.normalized[k]);
    }
  }
}

TEST(EnumerateMorphisms, Examples) {
  const auto to_loop = enumerate_morphisms(uniform(2, 3), {uniform(0, 1)});
  ASSERT_EQ(to_loop.size(), 1u);
  EXPECT_EQ(to_loop[0].map(), (std::vector<int>{1, 1, 1}));
  EXPECT_THROW(enumerate_morphisms(uniform(2, 6), {uniform(0, 1)}), MorphismError);
  EXPECT_THROW(enumerate_morphisms(uniform(2, 3), {uniform(2, 4)}), MorphismError);
}

TEST(EnumerateMorphisms, AgreesWithRankOracle) {
  const std::vector<Matroid> targets = small_targets();
  for (const Matroid& m : gen::catalog(4)) {
    for (const Matroid& t : targets) {
      std::vector<std::vector<int>> got;
      for (const MatroidMorphism& phi : enumerate_morphisms(m, {t})) {
        got.push_back(phi.map());
      }
      ASSERT_EQ(got, oracle::morphism_maps_by_rank(m, t))
          << m.to_string() << " -> " << t.to_string();
    }
  }
}

TEST(EnumerateMorphisms, SerialAndParallelAgree) {
  const std::vector<Matroid> targets = small_targets();
  const Matroid m = uniform(3, 5);
  EXPECT_EQ(enumerate_morphisms(m, targets, Execution::kSerial),
            enumerate_morphisms(m, targets, Execution::kParallel));
}

// Properties over every morphism from a simple source on at most five
// elements to a matroid on at most three.

TEST(MorphismProperties, RevalidateWithoutDuplicates) {
  const auto& all = all_morphisms();
  ASSERT_GT(all.size(), 1000u);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const MatroidMorphism& phi = all[i];
    ASSERT_EQ(validate_morphism(phi.source(), phi.target(), phi.map()), phi);
    if (i > 0) ASSERT_FALSE(all[i - 1] == phi);
  }
}

TEST(MorphismProperties, BasisLevelsAreMatroids) {
  for (const MatroidMorphism& phi : all_morphisms()) {
    const MorphismBases b = morphism_bases(phi);
    std::vector<Subset> top = b.of_size(b.max_size);
    std::sort(top.begin(), top.end(), lex_less);
    ASSERT_EQ(top, phi.source().bases());
    for (int k = b.min_size; k <= b.max_size; ++k) {
      ASSERT_NO_THROW(validate_bases(phi.source().ground_size(), b.of_size(k)));
    }
    for (int k = 0; k < b.min_size; ++k) ASSERT_EQ(b.count(k), 0u);
  }
}

TEST(MorphismProperties, MinimalBasesAvoidLoopsAndExtend) {
  for (const MatroidMorphism& phi : all_morphisms()) {
    const MorphismBases b = morphism_bases(phi);
    const Subset loops = phi.phi_loops();
    const Matroid& m = phi.source();
    for (Subset i : b.of_size(b.min_size)) {
      ASSERT_TRUE((i & loops).empty());
      for (std::uint32_t j = loops.mask();; j = (j - 1) & loops.mask()) {
        const Subset u = i | Subset(j);
        const auto& level = b.of_size(u.size() <= b.max_size ? u.size() : 0);
        const bool in_b = u.size() <= b.max_size &&
                          std::find(level.begin(), level.end(), u) != level.end();
        ASSERT_EQ(in_b, m.is_independent(Subset(j)));
        if (j == 0) break;
      }
    }
  }
}

TEST(MorphismProperties, ReducedIsRepeatedX0Derivative) {
  for (const MatroidMorphism& phi : all_morphisms()) {
    const MorphismPolys p = morphism_poly(phi);
    ASSERT_EQ(p.reduced,
              partial0_power(p.full, phi.source().ground_size() - phi.source().rank()));
  }
}

TEST(MorphismProperties, DependencyIffDegenerate) {
  for (const MatroidMorphism& phi : all_morphisms()) {
    const HomogPoly p = morphism_poly(phi).reduced;
    const DegeneracyVerdict v = degeneracy_class(phi);
    const int n = phi.source().ground_size();
    if (p.degree() == 0) continue;
    const bool deficient = gradient_rank(p) < static_cast<std::size_t>(n + 1);
    ASSERT_EQ(deficient, !v.classes.empty())
        << phi.source().to_string() << " -> " << phi.target().to_string();
    ASSERT_EQ(v.annihilator.has_value(), !v.classes.empty());
    if (v.annihilator) ASSERT_TRUE(linear_apply(p, *v.annihilator).is_zero());
  }
}

TEST(MorphismProperties, EurHuhInequality) {
  for (const MatroidMorphism& phi : all_morphisms()) {
    for (const EurHuhEntry& e : eur_huh_profile(phi)) ASSERT_LE(e.lhs, e.rhs);
  }
}

}  // namespace
}  // namespace mlz

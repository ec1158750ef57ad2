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
#include "mlz/spectra.hpp"

namespace mlz {
namespace {

RationalPoint point(std::vector<Rational> c) { return RationalPoint{std::move(c)}; }

// x1*x2*x3 + x0*(x1x2 + x1x3 + x2x3) + x0^2*(x1 + x2 + x3)
HomogPoly final_example_poly() {
  HomogPoly p(3, {0, 1, 2, 3}, 3);
  p.add_term(0, Subset{1, 2, 3}, 1);
  for (Subset s : {Subset{1, 2}, Subset{1, 3}, Subset{2, 3}}) p.add_term(1, s, 1);
  for (int i = 1; i <= 3; ++i) p.add_term(2, Subset{i}, 1);
  return p;
}

TEST(PointClass, Examples) {
  EXPECT_EQ(point_class(basis_poly(uniform(2, 3)), all_ones(3)),
            PointClass::kStrictLorentz);
  EXPECT_EQ(point_class(reduced_indep_poly(uniform(2, 3)), all_ones(4)),
            PointClass::kLorentzDegenerate);
  EXPECT_EQ(classify(Inertia{1, 1, 0}), PointClass::kStrictLorentz);
  EXPECT_EQ(classify(Inertia{2, 0, 0}), PointClass::kNotLogConcave);
}

TEST(PointClass, DegenerateQuadratic) {
  HomogPoly p(1, {0, 1}, 2);
  p.add_term(2, Subset(), 1);
  EXPECT_EQ(inertia(hessian_at(p, all_ones(2))), (Inertia{1, 0, 1}));
  EXPECT_EQ(point_class(p, all_ones(2)), PointClass::kLorentzDegenerate);
}

TEST(PointClass, IndefiniteCubicIsNotLogConcave) {
  // x1*x2 + x1*x3 - x2*x3 has Hessian eigenvalues 1, 1, -2.
  HomogPoly p(3, {1, 2, 3}, 2);
  p.add_term(0, Subset{1, 2}, 1);
  p.add_term(0, Subset{1, 3}, 1);
  p.add_term(0, Subset{2, 3}, -1);
  EXPECT_EQ(point_class(p, all_ones(3)), PointClass::kNotLogConcave);
}

TEST(Slp1, Examples) {
  EXPECT_TRUE(check_slp1(basis_poly(uniform(2, 3)), all_ones(3)).holds());
  const DegreeOneCheck fin = check_slp1(final_example_poly(), point({0, 1, 1, 1}));
  EXPECT_EQ(fin.verdict, Verdict::kFails);
  EXPECT_EQ(fin.hessian_rank, 3u);
  EXPECT_EQ(fin.gradient_rank, 4u);
  const DegreeOneCheck u = check_slp1(reduced_indep_poly(uniform(2, 3)), all_ones(4));
  EXPECT_TRUE(u.holds());
  EXPECT_EQ(u.hessian_rank, 3u);
  EXPECT_EQ(u.gradient_rank, 3u);
}

TEST(Hrr1, Examples) {
  const DegreeOneCheck f = check_hrr1(basis_poly(uniform(2, 3)), all_ones(3));
  EXPECT_TRUE(f.holds());
  EXPECT_EQ(f.inertia, (Inertia{1, 2, 0}));
  EXPECT_EQ(f.gradient_rank, 3u);
  const DegreeOneCheck u = check_hrr1(reduced_indep_poly(uniform(2, 3)), all_ones(4));
  EXPECT_TRUE(u.holds());
  EXPECT_EQ(u.inertia, (Inertia{1, 2, 1}));
  const Matroid s = direct_sum(uniform(2, 3), uniform(1, 1));
  const DegreeOneCheck b = check_hrr1(reduced_indep_poly(s), point({0, 1, 1, 1, 1}));
  EXPECT_TRUE(b.holds());
  EXPECT_EQ(b.inertia, (Inertia{1, 4, 0}));
}

TEST(Hrr1, InapplicableWhenNotPositive) {
  HomogPoly p(2, {1, 2}, 2);
  p.add_term(0, Subset{1, 2}, -1);
  EXPECT_EQ(check_hrr1(p, all_ones(2)).verdict, Verdict::kInapplicable);
  EXPECT_EQ(check_slp1(p, all_ones(2)).verdict, Verdict::kInapplicable);
}

TEST(Hrr1, SimpleCatalogAtOnes) {
  for (const Matroid& m : gen::catalog(6)) {
    if (!m.is_simple() || m.rank() < 2) continue;
    const DegreeOneCheck c = check_hrr1(basis_poly(m), all_ones(m.ground_size()));
    ASSERT_TRUE(c.holds()) << m.to_string();
    ASSERT_EQ(c.inertia.zero, 0);
    if (!m.is_uniform()) {
      std::vector<Rational> a(static_cast<std::size_t>(m.ground_size()) + 1, 1);
      a[0] = 0;
      const DegreeOneCheck r = check_hrr1(reduced_indep_poly(m), point(a));
      ASSERT_TRUE(r.holds()) << m.to_string();
      ASSERT_EQ(r.inertia.zero, 0);
    }
  }
}

TEST(LorentzianWitness, CatalogPasses) {
  PointSampler sampler(42);
  for (const Matroid& m : gen::catalog(4)) {
    for (const HomogPoly& p : {basis_poly(m), indep_poly(m)}) {
      std::vector<RationalPoint> pts;
      for (int k = 0; k < 3; ++k) pts.push_back(sampler.positive(p.active().size()));
      const LorentzianWitness w = lorentzian_witness(p, pts);
      ASSERT_TRUE(w.passed) << m.to_string();
    }
  }
}

TEST(LorentzianWitness, QuadraticStage) {
  HomogPoly p(3, {1, 2, 3}, 2);
  p.add_term(0, Subset{1, 2}, 1);
  p.add_term(0, Subset{1, 3}, 1);
  p.add_term(0, Subset{2, 3}, -1);
  const LorentzianWitness w = lorentzian_witness(p, {});
  EXPECT_FALSE(w.passed);
  ASSERT_TRUE(w.failure.has_value());
  EXPECT_FALSE(w.failure->point.has_value());
  EXPECT_EQ(w.failure->inertia.pos, 2);

  const LorentzianWitness ok = lorentzian_witness(basis_poly(uniform(2, 3)), {});
  EXPECT_TRUE(ok.passed);
  EXPECT_EQ(ok.point_checks, 0);
  EXPECT_EQ(ok.quadratic_checks, 1);
}

TEST(LorentzianWitness, RejectsNonPositivePoint) {
  EXPECT_THROW(lorentzian_witness(basis_poly(uniform(2, 3)), {point({1, 0, 1})}),
               PolyError);
}

TEST(LorentzianWitness, RecordsZeroDerivatives) {
  const Matroid m = direct_sum(uniform(3, 3), uniform(0, 1));
  const LorentzianWitness w = lorentzian_witness(basis_poly(m), {all_ones(4)});
  EXPECT_TRUE(w.passed);
  EXPECT_GT(w.zero_derivatives, 0);
}

TEST(PointSampler, RangeAndDeterminism) {
  PointSampler a(9), b(9), c(9, 1), d(9, 1);
  for (int i = 0; i < 200; ++i) {
    const Rational x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_EQ(c.next(), d.next());
    EXPECT_GT(x, 0);
    EXPECT_LE(x, 16);
    EXPECT_GE(x, Rational(1, 16));
    EXPECT_LE(x.get_den(), 16);
  }
}

// Properties over the catalog.

TEST(SpectraProperties, AtMostOnePositiveEigenvalueOnClosedOrthant) {
  PointSampler s(5);
  for (const Matroid& m : gen::catalog(5)) {
    for (const HomogPoly& p : {basis_poly(m), indep_poly(m), reduced_indep_poly(m)}) {
      if (p.degree() < 2) continue;
      RationalPoint a = s.positive(p.active().size());
      a.coords[0] = 0;  // a boundary point
      ASSERT_LE(inertia(hessian_at(p, a)).pos, 1) << m.to_string();
    }
  }
}

TEST(SpectraProperties, Slp1EqualsHrr1AtPositivePoints) {
  PointSampler s(6);
  for (const Matroid& m : gen::catalog(5)) {
    for (const HomogPoly& p : {basis_poly(m), indep_poly(m)}) {
      if (p.degree() < 2) continue;
      const std::size_t g = gradient_rank(p);
      for (int k = 0; k < 2; ++k) {
        const RationalPoint a = s.positive(p.active().size());
        const DegreeOneCheck slp = check_slp1(p, a, g);
        const DegreeOneCheck hrr = check_hrr1(p, a, g);
        if (slp.value <= 0) continue;
        ASSERT_TRUE(hrr.holds()) << m.to_string();
        ASSERT_EQ(slp.verdict, hrr.verdict) << m.to_string();
      }
    }
  }
}

TEST(SpectraProperties, UniformKernelVector) {
  PointSampler s(8);
  for (int n = 2; n <= 6; ++n) {
    for (int r = 2; r <= n; ++r) {
      const HomogPoly p = reduced_indep_poly(uniform(r, n));
      std::vector<Rational> v(static_cast<std::size_t>(n) + 1, 1);
      v[0] = -1;
      const RationalPoint kernel = point(v);
      const SymMatrix h = hessian_at(p, s.positive(p.active().size()));
      for (std::size_t i = 0; i < h.size(); ++i) {
        Rational row = 0;
        for (std::size_t j = 0; j < h.size(); ++j) row += h(i, j) * kernel[j];
        ASSERT_EQ(row, 0) << "U(" << r << "," << n << ")";
      }
      ASSERT_GE(inertia(h).zero, 1);
      ASSERT_EQ(gradient_rank(p), static_cast<std::size_t>(n));
    }
  }
}

TEST(HodgePair, NegativeDeterminantForBasisPolynomials) {
  PointSampler s(10);
  for (const Matroid& m : gen::catalog(5)) {
    if (m.rank() < 2) continue;
    const HomogPoly f = basis_poly(m);
    const int n = m.ground_size();
    const RationalPoint a = s.positive(static_cast<std::size_t>(n));
    if (!check_hrr1(f, a).holds()) continue;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        for (int t : {0, 1, -1}) {
          std::vector<Rational> l2(static_cast<std::size_t>(n), 0);
          l2[static_cast<std::size_t>(i - 1)] += 1;
          l2[static_cast<std::size_t>(j - 1)] += t;
          const HodgePair h = hodge_pair_determinant(f, a, a, point(l2));
          if (h.applicable) ASSERT_LT(h.det, 0) << m.to_string();
        }
      }
    }
  }
}

}  // namespace
}  // namespace mlz

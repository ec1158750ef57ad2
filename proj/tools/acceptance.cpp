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


// Acceptance suite: each criterion is an exhaustive loop over the small
// catalogs with exact arithmetic. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "generators.hpp"
#include "mlz/enumerate.hpp"
#include "mlz/io.hpp"
#include "mlz/morphism.hpp"
#include "mlz/spectra.hpp"
#include "mlz/verify.hpp"
#include "oracles.hpp"

namespace mlz {
namespace {

// Every statement checked here is an exact identity or inequality over the
// rationals: no numeric tolerance, and no failure is allowed.
constexpr long kAllowedFailures = 0;
constexpr std::uint64_t kSeed = 1;
constexpr int kCatalogMax = 6;
constexpr int kWitnessMax = 5;
constexpr int kSampledPoints = 3;
constexpr int kWeightedPoints = 5;
constexpr int kCongruenceMatrices = 50;
constexpr int kCongruenceTransforms = 10;

struct Outcome {
  long checks = 0;
  long failures = 0;
  std::string first_failure;
  std::mutex mu;

  void check(bool ok, const std::function<std::string()>& describe) {
    std::lock_guard<std::mutex> lock(mu);
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
};

const std::vector<Matroid>& catalog() {
  static const std::vector<Matroid> all = [] {
    std::vector<Matroid> out;
    for (int n = 1; n <= kCatalogMax; ++n) {
      for (Matroid& m : enumerate_matroids(n)) out.push_back(std::move(m));
    }
    return out;
  }();
  return all;
}

const std::vector<MatroidMorphism>& morphisms() {
  static const std::vector<MatroidMorphism> all = [] {
    const std::vector<Matroid> targets = morphism_targets();
    std::vector<const Matroid*> sources;
    for (const Matroid& m : catalog()) {
      if (m.is_simple() && m.ground_size() <= kMaxMorphismSource) {
        sources.push_back(&m);
      }
    }
    std::vector<std::vector<MatroidMorphism>> per(sources.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < sources.size(); ++i) {
      per[i] = enumerate_morphisms(*sources[i], targets, Execution::kSerial);
    }
    std::vector<MatroidMorphism> out;
    for (auto& v : per) {
      for (MatroidMorphism& phi : v) out.push_back(std::move(phi));
    }
    return out;
  }();
  return all;
}

// Runs body(index) for every catalog matroid in parallel.
void over_catalog(int max_n, const std::function<void(std::size_t)>& body) {
  const auto& cat = catalog();
  const auto total = static_cast<std::int64_t>(cat.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < total; ++i) {
    if (cat[static_cast<std::size_t>(i)].ground_size() <= max_n) {
      body(static_cast<std::size_t>(i));
    }
  }
}

std::string describe(const Matroid& m, const std::string& what) {
  return matroid_to_json(m).dump() + " " + what;
}

RationalPoint ones_after(const Rational& a0, int n) {
  RationalPoint p = all_ones(static_cast<std::size_t>(n) + 1);
  p.coords[0] = a0;
  return p;
}

void basis_hessian_signature(Outcome& o) {
  over_catalog(kCatalogMax, [&](std::size_t idx) {
    const Matroid& m = catalog()[idx];
    if (!m.is_simple() || m.rank() < 2) return;
    const int n = m.ground_size();
    const HomogPoly f = basis_poly(m);
    PointSampler s(kSeed, idx);
    std::vector<RationalPoint> pts{all_ones(static_cast<std::size_t>(n))};
    for (int t = 0; t < kSampledPoints; ++t) {
      pts.push_back(s.positive(static_cast<std::size_t>(n)));
    }
    for (const RationalPoint& a : pts) {
      const Inertia in = inertia(hessian_at(f, a));
      o.check(in == Inertia{1, n - 1, 0}, [&] {
        return describe(m, "at " + a.to_string() + " inertia " + in.to_string());
      });
    }
  });
}

void reduced_hessian_signature(Outcome& o) {
  over_catalog(kCatalogMax, [&](std::size_t idx) {
    const Matroid& m = catalog()[idx];
    if (!m.is_simple() || m.is_uniform() || m.rank() < 2) return;
    const int n = m.ground_size();
    const HomogPoly p = reduced_indep_poly(m);
    PointSampler s(kSeed, idx);
    std::vector<RationalPoint> pts{ones_after(0, n), ones_after(1, n)};
    for (int t = 0; t < kSampledPoints; ++t) {
      RationalPoint a = s.positive(static_cast<std::size_t>(n) + 1);
      if (t == 0) a.coords[0] = 0;
      pts.push_back(std::move(a));
    }
    for (const RationalPoint& a : pts) {
      const Inertia in = inertia(hessian_at(p, a));
      o.check(in == Inertia{1, n, 0}, [&] {
        return describe(m, "at " + a.to_string() + " inertia " + in.to_string());
      });
    }
  });
}

void partials_independence(Outcome& o) {
  over_catalog(kCatalogMax, [&](std::size_t idx) {
    const Matroid& m = catalog()[idx];
    const int n = m.ground_size();
    if (m.is_simple()) {
      const std::size_t g = gradient_rank(basis_poly(m));
      o.check(g == static_cast<std::size_t>(n),
              [&] { return describe(m, "f gradient rank " + std::to_string(g)); });
      const std::size_t gp = gradient_rank(reduced_indep_poly(m));
      const bool ok = m.is_uniform() ? gp < static_cast<std::size_t>(n) + 1
                                     : gp == static_cast<std::size_t>(n) + 1;
      o.check(ok, [&] {
        return describe(m, "reduced gradient rank " + std::to_string(gp));
      });
    }
    if (m.is_uniform()) {
      RationalPoint kernel = all_ones(static_cast<std::size_t>(n) + 1);
      kernel.coords[0] = -1;
      o.check(linear_apply(reduced_indep_poly(m), kernel).is_zero(),
              [&] { return describe(m, "kernel vector does not annihilate"); });
    }
  });
}

void pair_equality_cases(Outcome& o) {
  over_catalog(kCatalogMax, [&](std::size_t idx) {
    const Matroid& m = catalog()[idx];
    if (m.rank() < 2) return;
    const int n = m.ground_size();
    const std::size_t classes = parallel_decomposition(m).classes.size();
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (m.is_loop(i) || m.is_loop(j)) continue;
        const MasonBasisReport r = mason_basis_check(m, i, j);
        const bool predicted = !m.are_parallel(i, j) && classes == 2;
        o.check(r.lhs <= r.rhs && r.equal == predicted, [&] {
          return describe(m, "pair " + std::to_string(i) + "," +
                                 std::to_string(j) + " lhs " +
                                 to_string(r.lhs) + " rhs " + to_string(r.rhs));
        });
      }
    }
  });
}

void indep_equality_cases(Outcome& o) {
  over_catalog(kCatalogMax, [&](std::size_t idx) {
    const Matroid& m = catalog()[idx];
    if (m.rank() < 2) return;
    const Girth girth = circuits_and_girth(m).girth;
    for (int k = 1; k <= m.rank(); ++k) {
      const MasonIndepReport r = mason_indep_check(m, k);
      o.check(r.lhs <= r.rhs && r.equal == girth.exceeds(k + 1), [&] {
        return describe(m, "k " + std::to_string(k) + " lhs " +
                               to_string(r.lhs) + " rhs " + to_string(r.rhs));
      });
    }
  });
}

void weighted_strictness(Outcome& o) {
  over_catalog(kCatalogMax, [&](std::size_t idx) {
    const Matroid& m = catalog()[idx];
    if (m.rank() < 2) return;
    const int n = m.ground_size();
    const std::size_t classes = parallel_decomposition(m).classes.size();
    const Girth girth = circuits_and_girth(m).girth;
    PointSampler s(kSeed, idx);
    for (int t = 0; t < kWeightedPoints; ++t) {
      const RationalPoint a = s.positive(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if (m.is_loop(i) || m.is_loop(j)) continue;
          const MasonBasisReport r = mason_basis_check(m, i, j, a);
          const bool strict = classes >= 3 && !m.are_parallel(i, j);
          o.check(strict ? r.lhs < r.rhs : r.lhs <= r.rhs, [&] {
            return describe(m, "pair at " + a.to_string());
          });
        }
      }
      for (int k = 1; k <= m.rank() && k < n; ++k) {
        const MasonIndepReport r = mason_indep_check(m, k, a);
        const bool strict = !girth.exceeds(k + 1);
        o.check(strict ? r.lhs < r.rhs : r.lhs <= r.rhs, [&] {
          return describe(m, "k " + std::to_string(k) + " at " + a.to_string());
        });
      }
    }
  });
}

void derivative_identities(Outcome& o) {
  over_catalog(kCatalogMax, [&](std::size_t idx) {
    const Matroid& m = catalog()[idx];
    const int n = m.ground_size();
    const HomogPoly f = basis_poly(m), p = indep_poly(m);
    for (int i = 1; i <= n; ++i) {
      const HomogPoly fi = partial(f, i), pi = partial(p, i);
      if (m.is_loop(i)) {
        o.check(fi.is_zero() && pi.is_zero(),
                [&] { return describe(m, "loop partial " + std::to_string(i)); });
        continue;
      }
      const Minor c = contract(m, i);
      o.check(fi == relabel(basis_poly(c.matroid), c.ground, n) &&
                  pi == relabel(indep_poly(c.matroid), c.ground, n),
              [&] { return describe(m, "contraction " + std::to_string(i)); });
    }
    if (m.rank() >= 1) {
      const Simplification s = simplify(m);
      o.check(f == substitute_class_sums(basis_poly(s.matroid),
                                         s.decomposition.classes, n, 0),
              [&] { return describe(m, "parallel substitution"); });
    }
    for (Subset fl : flats(m)) {
      Subset covered;
      bool ok = true;
      for (Subset g : minimal_superflats(m, fl)) {
        ok = ok && (covered & (g - fl)).empty();
        covered = covered | (g - fl);
      }
      o.check(ok && covered == m.ground() - fl, [&] {
        return describe(m, "flat partition of " + subset_to_json(fl).dump());
      });
    }
  });
}

void lorentzian_witnesses(Outcome& o) {
  over_catalog(kWitnessMax, [&](std::size_t idx) {
    const Matroid& m = catalog()[idx];
    PointSampler s(kSeed, idx);
    const HomogPoly f = basis_poly(m), p = indep_poly(m);
    for (const HomogPoly* q : {&f, &p}) {
      const char* tag = q == &f ? "basis" : "indep";
      std::vector<RationalPoint> pts;
      for (int t = 0; t < kSampledPoints; ++t) {
        pts.push_back(s.positive(q->active().size()));
      }
      const LorentzianWitness w = lorentzian_witness(*q, pts);
      o.check(w.passed, [&] { return describe(m, std::string(tag) + " witness"); });
      if (q->degree() < 2) continue;
      const std::size_t g = gradient_rank(*q);
      for (const RationalPoint& a : pts) {
        const DegreeOneCheck hrr = check_hrr1(*q, a, g);
        const DegreeOneCheck slp = check_slp1(*q, a, g);
        o.check(hrr.holds(), [&] {
          return describe(m, std::string(tag) + " hrr1 at " + a.to_string());
        });
        if (hrr.value > 0) {
          o.check(slp.verdict == hrr.verdict, [&] {
            return describe(m, std::string(tag) + " slp1 vs hrr1 at " +
                                   a.to_string());
          });
        }
      }
    }
  });
}

void degeneracy_trichotomy(Outcome& o) {
  const auto& all = morphisms();
  const auto total = static_cast<std::int64_t>(all.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < total; ++i) {
    const MatroidMorphism& phi = all[static_cast<std::size_t>(i)];
    const HomogPoly reduced = morphism_poly(phi).reduced;
    const std::size_t n = static_cast<std::size_t>(phi.source().ground_size());
    std::string err;
    std::optional<DegeneracyVerdict> v;
    try {
      v = degeneracy_class(phi);
    } catch (const std::exception& e) {
      err = e.what();
    }
    const auto text = [&] { return morphism_to_json(phi).dump() + " " + err; };
    o.check(v.has_value(), text);
    if (!v) continue;
    const bool deficient = gradient_rank(reduced) < n + 1;
    o.check(deficient == !v->classes.empty(), text);
    if (v->annihilator) {
      o.check(linear_apply(reduced, *v->annihilator).is_zero(), text);
    }
  }
}

void final_example(Outcome& o) {
  const MatroidMorphism phi =
      validate_morphism(uniform(3, 3), uniform(1, 1), {1, 1, 1});
  HomogPoly expected(3, {0, 1, 2, 3}, 3);
  expected.add_term(0, Subset{1, 2, 3}, 1);
  for (Subset s : {Subset{1, 2}, Subset{1, 3}, Subset{2, 3}}) {
    expected.add_term(1, s, 1);
  }
  for (int i = 1; i <= 3; ++i) expected.add_term(2, Subset{i}, 1);
  const HomogPoly got = morphism_poly(phi).reduced;
  o.check(got == expected, [&] { return "polynomial " + got.to_string(); });
  const RationalPoint a{{0, 1, 1, 1}};
  const SymMatrix h = hessian_at(got, a);
  o.check(matrix_rank(h) < 4,
          [&] { return "Hessian rank " + std::to_string(matrix_rank(h)); });
  o.check(char_poly(h).front() == 0, [] { return "Hessian determinant nonzero"; });
  o.check(check_slp1(got, a).verdict == Verdict::kFails,
          [] { return "slp1 not false"; });
  const DegeneracyVerdict v = degeneracy_class(phi);
  o.check(v.classes.empty(), [&] { return "classes " + v.classes_string(); });
}

void eur_huh(Outcome& o) {
  const auto& all = morphisms();
  const auto total = static_cast<std::int64_t>(all.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < total; ++i) {
    const MatroidMorphism& phi = all[static_cast<std::size_t>(i)];
    for (const EurHuhEntry& e : eur_huh_profile(phi)) {
      o.check(e.lhs <= e.rhs, [&] {
        return morphism_to_json(phi).dump() + " k " + std::to_string(e.k);
      });
    }
  }
  SurveyOptions opts;
  opts.n_max = kMaxMorphismSource;
  const SurveyReport a = survey(opts, kSeed);
  const SurveyReport b = survey(opts, kSeed);
  o.check(a.morphisms == all.size(), [&] {
    return "survey covered " + std::to_string(a.morphisms) + " morphisms";
  });
  o.check(!a.eur_huh_equalities.empty() &&
              a.eur_huh_equalities == b.eur_huh_equalities &&
              a.to_jsonl() == b.to_jsonl(),
          [] { return "equality catalog differs between runs"; });
  o.check(a.counterexamples.empty(), [&] {
    return "survey counterexample " + a.counterexamples.front().dump();
  });
}

void infrastructure(Outcome& o) {
  for (int n = 1; n <= 4; ++n) {
    auto expected = oracle::matroids_via_flats(n);
    std::vector<std::vector<Subset>> got;
    for (const Matroid& m : enumerate_matroids(n)) got.push_back(m.bases());
    std::sort(expected.begin(), expected.end(), family_lex_less);
    std::sort(got.begin(), got.end(), family_lex_less);
    o.check(got == expected, [&] { return "catalog differs at n=" + std::to_string(n); });
  }
  gen::Gen g(kSeed);
  for (int t = 0; t < kCongruenceMatrices; ++t) {
    const auto n = static_cast<std::size_t>(g.uniform_int(2, 7));
    const SymMatrix a = t % 2 ? g.symmetric(n, 4, 3)
                              : g.low_rank_symmetric(n, g.uniform_int(1, 5));
    const Inertia in = inertia(a);
    o.check(in == oracle::inertia_by_congruence(a),
            [&] { return "oracle disagrees on matrix " + std::to_string(t); });
    for (int k = 0; k < kCongruenceTransforms; ++k) {
      const Inertia moved = inertia(gen::congruent(a, g.unimodular(n)));
      o.check(moved == in, [&] {
        return "matrix " + std::to_string(t) + " transform " + std::to_string(k);
      });
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  void (*run)(Outcome&);
};

}  // namespace
}  // namespace mlz

int main() {
  using namespace mlz;
  const Criterion criteria[] = {
      {1, "basis polynomial Hessian signature (simple, n<=6)", basis_hessian_signature},
      {2, "reduced polynomial Hessian signature (simple non-uniform, n<=6)",
       reduced_hessian_signature},
      {3, "gradient ranks and the uniform kernel vector", partials_independence},
      {4, "pair inequality equality cases at all ones", pair_equality_cases},
      {5, "independent set inequality equality cases", indep_equality_cases},
      {6, "weighted strict inequalities at seeded points", weighted_strictness},
      {7, "derivative identities and flat partition", derivative_identities},
      {8, "Lorentzian witness, HRR1 and SLP1 = HRR1 (n<=5)", lorentzian_witnesses},
      {9, "morphism degeneracy trichotomy and annihilators", degeneracy_trichotomy},
      {10, "final morphism example loses SLP1", final_example},
      {11, "Eur-Huh inequality and deterministic equality catalog", eur_huh},
      {12, "enumeration oracle and congruence invariance of inertia", infrastructure},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.check(false, [&] { return std::string("exception: ") + e.what(); });
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    const bool pass = o.checks > 0 && o.failures <= kAllowedFailures;
    failed += !pass;
    std::printf("%s criterion %2d: %s (%ld checks, %ld failures, %.1fs)\n",
                pass ? "PASS" : "FAIL", c.id, c.name, o.checks, o.failures, secs);
    if (!o.first_failure.empty()) {
      std::printf("     first failure: %s\n", o.first_failure.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d of 12 criteria passed\n", 12 - failed);
  return failed == 0 ? 0 : 1;
}

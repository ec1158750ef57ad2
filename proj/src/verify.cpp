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


#include "mlz/verify.hpp"

#include <algorithm>
#include <sstream>

#include "mlz/io.hpp"
#include "mlz/spectra.hpp"

namespace mlz {
namespace {

using nlohmann::json;

std::string str(const Rational& q) { return to_string(q); }

RationalPoint ones_with_x0(int n, int a0) {
  RationalPoint p = all_ones(static_cast<std::size_t>(n) + 1);
  p.coords[0] = a0;
  return p;
}

RationalPoint unit(std::size_t size, std::size_t i) {
  RationalPoint p{std::vector<Rational>(size, 0)};
  p.coords[i] = 1;
  return p;
}

json check_json(const DegreeOneCheck& c, const RationalPoint& a) {
  return json{{"point", point_to_json(a)},
              {"verdict", to_string(c.verdict)},
              {"inertia", inertia_to_json(c.inertia)},
              {"hessian_rank", c.hessian_rank},
              {"grad_rank", c.gradient_rank}};
}

void check_point_matches(const Matroid& m, const RationalPoint& a) {
  if (a.size() != static_cast<std::size_t>(m.ground_size())) {
    throw PolyError("point must have " + std::to_string(m.ground_size()) +
                    " coordinates");
  }
  for (const Rational& c : a.coords) {
    if (c <= 0) throw PolyError("point must be strictly positive");
  }
}

void derivative_identities(const Matroid& m, SuiteReport& rep) {
  const int n = m.ground_size();
  const HomogPoly f = basis_poly(m), p = indep_poly(m);
  bool loops_ok = true, f_ok = true, p_ok = true;
  int loops = 0;
  for (int i = 1; i <= n; ++i) {
    const HomogPoly fi = partial(f, i), pi = partial(p, i);
    if (m.is_loop(i)) {
      ++loops;
      loops_ok = loops_ok && fi.is_zero() && pi.is_zero();
      continue;
    }
    const Minor c = contract(m, i);
    f_ok = f_ok && fi == relabel(basis_poly(c.matroid), c.ground, n);
    p_ok = p_ok && pi == relabel(indep_poly(c.matroid), c.ground, n);
  }
  if (loops > 0) {
    rep.add("loop_partials_vanish", loops_ok, json{{"loops", loops}});
  } else {
    rep.not_applicable("loop_partials_vanish");
  }
  rep.add("partial_is_contraction", f_ok);
  rep.add("indep_partial_is_contraction", p_ok);

  const ParallelDecomposition d = parallel_decomposition(m);
  bool par_ok = true, any_par = false;
  for (Subset c : d.classes) {
    const auto e = c.elements();
    for (std::size_t k = 1; k < e.size(); ++k) {
      any_par = true;
      par_ok = par_ok && partial(f, e[0]) == partial(f, e[k]);
    }
  }
  if (any_par) {
    rep.add("parallel_partials_equal", par_ok);
  } else {
    rep.not_applicable("parallel_partials_equal");
  }
  if (m.rank() >= 1) {
    const Simplification s = simplify(m);
    rep.add("class_sum_substitution",
            f == substitute_class_sums(basis_poly(s.matroid), d.classes, n, 0));
  } else {
    rep.not_applicable("class_sum_substitution");
  }
  rep.add("reduced_is_x0_derivative",
          reduced_indep_poly(m) == partial0_power(p, n - m.rank()));
  if (m.rank() >= 2) {
    rep.add("x0_partial_is_truncation",
            partial(reduced_indep_poly(m), 0) ==
                reduced_indep_poly(truncate(m, 1)));
  } else {
    rep.not_applicable("x0_partial_is_truncation");
  }
}

void flat_partition(const Matroid& m, SuiteReport& rep) {
  bool ok = true;
  const auto fl = flats(m);
  for (Subset f : fl) {
    Subset covered;
    for (Subset g : minimal_superflats(m, f)) {
      ok = ok && (covered & (g - f)).empty();
      covered = covered | (g - f);
    }
    ok = ok && covered == m.ground() - f;
  }
  rep.add("flat_partition", ok, json{{"flats", fl.size()}});
}

void hodge_pairs(const Matroid& m, const HomogPoly& f, const RationalPoint& a,
                 SuiteReport& rep) {
  const int n = m.ground_size();
  const auto size = static_cast<std::size_t>(n);
  const SymMatrix h = hessian_at(f, a);
  const RationalMatrix g = gradient_matrix(f);
  int applicable = 0;
  bool ok = true;
  for (int i = 1; i <= n; ++i) {
    if (m.is_loop(i)) continue;
    for (int j = 1; j <= n; ++j) {
      if (j == i || m.is_loop(j)) continue;
      for (int t : {0, 1, -1}) {
        RationalPoint l2 = unit(size, static_cast<std::size_t>(i - 1));
        l2.coords[static_cast<std::size_t>(j - 1)] += t;
        const HodgePair hp = hodge_pair_determinant(h, g, a, l2);
        if (!hp.applicable) continue;
        ++applicable;
        ok = ok && hp.det < 0;
      }
    }
  }
  rep.add("hodge_pair_determinant", ok,
          json{{"point", point_to_json(a)}, {"pairs", applicable}});
}

}  // namespace

MasonBasisReport mason_basis_check(const Matroid& m, int i, int j,
                                   const std::optional<RationalPoint>& a) {
  const int n = m.ground_size(), r = m.rank();
  if (r < 2) {
    throw MatroidError(MatroidErrorKind::kInvalidArgument,
                       "pair inequality needs rank >= 2");
  }
  if (i < 1 || i > n || j < 1 || j > n || i == j) {
    throw MatroidError(MatroidErrorKind::kOutOfRange,
                       "pair must be two distinct elements of 1.." +
                           std::to_string(n));
  }
  if (a) check_point_matches(m, *a);
  const RationalPoint pt = a ? *a : all_ones(static_cast<std::size_t>(n));
  MasonBasisReport rep;
  rep.i = i;
  rep.j = j;
  rep.weighted = a.has_value();
  rep.parallel_classes =
      static_cast<int>(parallel_decomposition(m).classes.size());
  const HomogPoly f = basis_poly(m);
  rep.f = eval(f, pt);
  rep.f_i = eval(partial(f, i), pt);
  rep.f_j = eval(partial(f, j), pt);
  rep.f_ij = eval(partial(partial(f, i), j), pt);
  rep.lhs = rep.f * rep.f_ij;
  rep.rhs = 2 * (1 - Rational(1, r)) * rep.f_i * rep.f_j;
  rep.equal = rep.lhs == rep.rhs;
  rep.loop_argument = m.is_loop(i) || m.is_loop(j);
  if (rep.loop_argument) return rep;
  rep.parallel = m.are_parallel(i, j);
  if (!rep.weighted) {
    rep.predicted_equal = !rep.parallel && rep.parallel_classes == 2;
  } else if (rep.parallel || rep.parallel_classes >= 3) {
    rep.predicted_equal = false;
  }
  rep.consistent = !rep.predicted_equal || *rep.predicted_equal == rep.equal;
  return rep;
}

MasonIndepReport mason_indep_check(const Matroid& m, int k,
                                   const std::optional<RationalPoint>& a) {
  const int n = m.ground_size(), r = m.rank();
  if (k < 1 || k > r) {
    throw MatroidError(MatroidErrorKind::kOutOfRange,
                       "k = " + std::to_string(k) + " outside 1.." +
                           std::to_string(r));
  }
  if (a) check_point_matches(m, *a);
  const Girth girth = circuits_and_girth(m).girth;
  MasonIndepReport rep;
  rep.k = k;
  rep.weighted = a.has_value();
  if (k + 1 > n && rep.weighted) {
    throw MatroidError(MatroidErrorKind::kOutOfRange,
                       "weighted ratio at k = n is undefined");
  }
  const RationalPoint pt = a ? *a : all_ones(static_cast<std::size_t>(n));
  auto ratio = [&](int s) -> Rational {
    if (s > n) return 1;  // no sets of this size exist and none are missing
    const Rational v = s > r ? Rational(0) : eval(f_slice(m, s), pt);
    Rational q = v / Rational(binomial(n, s));
    q.canonicalize();
    return q;
  };
  rep.lhs = ratio(k - 1) * ratio(k + 1);
  rep.rhs = ratio(k) * ratio(k);
  rep.equal = rep.lhs == rep.rhs;
  if (!rep.weighted) {
    rep.predicted_equal = girth.exceeds(k + 1);
  } else if (!girth.exceeds(k + 1)) {
    rep.predicted_equal = false;
  }
  rep.consistent = !rep.predicted_equal || *rep.predicted_equal == rep.equal;
  return rep;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kNotApplicable:
      return "n/a";
    case CheckStatus::kRecorded:
      return "recorded";
  }
  return "?";
}

void SuiteReport::add(std::string name, bool passed, json data) {
  entries.push_back(CheckEntry{std::move(name),
                               passed ? CheckStatus::kPass : CheckStatus::kFail,
                               std::move(data)});
}

void SuiteReport::record(std::string name, json data) {
  entries.push_back(
      CheckEntry{std::move(name), CheckStatus::kRecorded, std::move(data)});
}

void SuiteReport::not_applicable(std::string name, json data) {
  entries.push_back(
      CheckEntry{std::move(name), CheckStatus::kNotApplicable, std::move(data)});
}

bool SuiteReport::passed() const {
  return std::none_of(entries.begin(), entries.end(), [](const CheckEntry& e) {
    return e.status == CheckStatus::kFail;
  });
}

std::vector<CheckEntry> SuiteReport::failures() const {
  std::vector<CheckEntry> out;
  for (const CheckEntry& e : entries) {
    if (e.status == CheckStatus::kFail) out.push_back(e);
  }
  return out;
}

SuiteReport theorem_suite(const Matroid& m, std::uint64_t seed,
                          const SuiteOptions& options) {
  SuiteReport rep;
  const int n = m.ground_size(), r = m.rank();
  const auto size = static_cast<std::size_t>(n);
  const bool simple = m.is_simple();
  const auto classes = parallel_decomposition(m).classes.size();

  derivative_identities(m, rep);
  flat_partition(m, rep);

  const HomogPoly f = basis_poly(m);
  const HomogPoly reduced = reduced_indep_poly(m);
  std::size_t f_rank = 0, reduced_rank = 0;
  if (r >= 1) {
    f_rank = gradient_rank(f);
    reduced_rank = gradient_rank(reduced);
    rep.add("f_gradient_rank", f_rank == classes,
            json{{"rank", f_rank}, {"classes", classes}});
  } else {
    rep.not_applicable("f_gradient_rank");
  }
  if (m.is_uniform()) {
    RationalPoint kernel = all_ones(size + 1);
    kernel.coords[0] = -1;
    rep.add("uniform_kernel", linear_apply(reduced, kernel).is_zero());
  }
  if (simple && r >= 2) {
    const std::size_t expected = m.is_uniform() ? size : size + 1;
    rep.add("reduced_gradient_rank", reduced_rank == expected,
            json{{"rank", reduced_rank}, {"expected", expected}});
  }

  if (r >= 2) {
    PointSampler fs(seed, 0), ps(seed, 1);
    std::vector<RationalPoint> f_points{all_ones(size)};
    for (int k = 0; k < options.sampled_points; ++k) {
      f_points.push_back(fs.positive(size));
    }
    for (const RationalPoint& a : f_points) {
      const DegreeOneCheck c = check_hrr1(f, a, f_rank);
      rep.add("f_hrr1", c.holds(), check_json(c, a));
      if (simple) {
        rep.add("f_hessian_signature",
                c.inertia == Inertia{1, n - 1, 0}, check_json(c, a));
      }
      if (options.hodge_pairs && c.holds()) hodge_pairs(m, f, a, rep);
    }
    std::vector<RationalPoint> reduced_points{ones_with_x0(n, 0),
                                              ones_with_x0(n, 1)};
    for (int k = 0; k < options.sampled_points; ++k) {
      RationalPoint a = ps.positive(size + 1);
      if (k == 0) a.coords[0] = 0;
      reduced_points.push_back(std::move(a));
    }
    for (const RationalPoint& a : reduced_points) {
      const DegreeOneCheck c = check_hrr1(reduced, a, reduced_rank);
      rep.add("reduced_hrr1", c.holds(), check_json(c, a));
      if (simple && !m.is_uniform()) {
        rep.add("reduced_hessian_signature", c.inertia == Inertia{1, n, 0},
                check_json(c, a));
      }
    }
  }

  if (n <= options.lorentz_max_n) {
    PointSampler ws(seed, 2);
    const HomogPoly p = indep_poly(m);
    for (const HomogPoly* q : {&f, &p}) {
      const std::string tag = q == &f ? "f" : "p";
      std::vector<RationalPoint> pts;
      for (int k = 0; k < options.sampled_points; ++k) {
        pts.push_back(ws.positive(q->active().size()));
      }
      const LorentzianWitness w = lorentzian_witness(*q, pts);
      json data{{"derivatives", w.derivatives},
                {"zero", w.zero_derivatives},
                {"quadratic", w.quadratic_checks},
                {"point_checks", w.point_checks}};
      if (w.failure) {
        data["failure"] = json{{"e0", w.failure->e0},
                               {"vars", subset_to_json(w.failure->vars)},
                               {"inertia", inertia_to_json(w.failure->inertia)}};
      }
      rep.add("lorentzian_witness_" + tag, w.passed, data);
      if (q->degree() < 2) continue;
      const std::size_t g = gradient_rank(*q);
      for (const RationalPoint& a : pts) {
        const DegreeOneCheck hrr = check_hrr1(*q, a, g);
        const DegreeOneCheck slp = check_slp1(*q, a, g);
        rep.add("witness_hrr1_" + tag, hrr.holds(), check_json(hrr, a));
        if (hrr.value > 0) {
          rep.add("slp1_equals_hrr1_" + tag, hrr.verdict == slp.verdict,
                  json{{"point", point_to_json(a)},
                       {"slp1", to_string(slp.verdict)},
                       {"hrr1", to_string(hrr.verdict)}});
        }
      }
    }
  }
  return rep;
}

SuiteReport mason_suite(const Matroid& m, std::uint64_t seed,
                        const SuiteOptions& options) {
  SuiteReport rep;
  const int n = m.ground_size(), r = m.rank();
  if (r < 2) {
    rep.not_applicable("mason_pair", json{{"reason", "rank below 2"}});
    rep.not_applicable("mason_indep", json{{"reason", "rank below 2"}});
    return rep;
  }
  PointSampler sampler(seed, 4);
  std::vector<RationalPoint> weights;
  for (int k = 0; k < options.weighted_points; ++k) {
    weights.push_back(sampler.positive(static_cast<std::size_t>(n)));
  }
  auto pair_json = [](const MasonBasisReport& b) {
    json j{{"i", b.i},       {"j", b.j},         {"lhs", str(b.lhs)},
           {"rhs", str(b.rhs)}, {"equal", b.equal}, {"parallel", b.parallel},
           {"classes", b.parallel_classes}};
    j["predicted_equal"] =
        b.predicted_equal ? json(*b.predicted_equal) : json(nullptr);
    return j;
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const MasonBasisReport b = mason_basis_check(m, i, j);
      if (b.loop_argument) {
        rep.record("mason_pair_loop", pair_json(b));
        continue;
      }
      rep.add("mason_pair", b.holds() && b.consistent, pair_json(b));
      for (const RationalPoint& a : weights) {
        const MasonBasisReport w = mason_basis_check(m, i, j, a);
        json d = pair_json(w);
        d["point"] = point_to_json(a);
        rep.add("mason_pair_weighted", w.holds() && w.consistent, d);
      }
    }
  }
  const Girth girth = circuits_and_girth(m).girth;
  auto indep_json = [&](const MasonIndepReport& x) {
    json j{{"k", x.k},       {"lhs", str(x.lhs)},     {"rhs", str(x.rhs)},
           {"equal", x.equal}, {"girth", girth.to_string()}};
    j["predicted_equal"] =
        x.predicted_equal ? json(*x.predicted_equal) : json(nullptr);
    return j;
  };
  for (int k = 1; k <= r; ++k) {
    const MasonIndepReport x = mason_indep_check(m, k);
    rep.add("mason_indep", x.holds() && x.consistent, indep_json(x));
    if (k + 1 > n) continue;
    for (const RationalPoint& a : weights) {
      const MasonIndepReport w = mason_indep_check(m, k, a);
      json d = indep_json(w);
      d["point"] = point_to_json(a);
      rep.add("mason_indep_weighted", w.holds() && w.consistent, d);
    }
  }
  return rep;
}

SuiteReport morphism_suite(const MatroidMorphism& phi, std::uint64_t seed) {
  SuiteReport rep;
  const Matroid& m = phi.source();
  const int n = m.ground_size(), r = m.rank();
  const auto size = static_cast<std::size_t>(n);
  const MorphismPolys polys = morphism_poly(phi);
  const HomogPoly& reduced = polys.reduced;
  const std::size_t g = reduced.degree() >= 1 ? gradient_rank(reduced) : 0;

  std::optional<DegeneracyVerdict> verdict;
  try {
    verdict = degeneracy_class(phi);
  } catch (const AnnihilatorCheckFailed& e) {
    rep.add("annihilator_exact", false, json{{"error", e.what()}});
  }
  if (verdict) {
    json d{{"grad_rank", g}, {"classes", verdict->classes_string()}};
    if (!verdict->source_simple) {
      rep.not_applicable("dependency_iff_degenerate",
                         json{{"reason", "precondition unmet: source not simple"}});
    } else {
      const bool deficient = g < size + 1;
      rep.add("dependency_iff_degenerate",
              deficient == !verdict->classes.empty(), d);
    }
    if (verdict->annihilator) {
      rep.add("annihilator_exact",
              linear_apply(reduced, *verdict->annihilator).is_zero(),
              json{{"form", point_to_json(*verdict->annihilator)},
                   {"condition", to_string(*verdict->annihilator_from)}});
    } else {
      rep.not_applicable("annihilator_exact");
    }
  }

  const MorphismBases b = morphism_bases(phi);
  bool levels_ok = true;
  std::vector<Subset> top = b.of_size(r);
  std::sort(top.begin(), top.end(), lex_less);
  levels_ok = top == m.bases();
  for (int k = b.min_size; k <= b.max_size && levels_ok; ++k) {
    try {
      validate_bases(n, b.of_size(k));
    } catch (const MatroidError&) {
      levels_ok = false;
    }
  }
  rep.add("basis_levels", levels_ok);

  const Subset loops = phi.phi_loops();
  bool extend_ok = true;
  for (Subset i : b.of_size(b.min_size)) {
    extend_ok = extend_ok && (i & loops).empty();
    for (std::uint32_t j = loops.mask();; j = (j - 1) & loops.mask()) {
      const Subset u = i | Subset(j);
      bool in_b = false;
      if (u.size() <= b.max_size) {
        const auto& level = b.of_size(u.size());
        in_b = std::find(level.begin(), level.end(), u) != level.end();
      }
      extend_ok = extend_ok && in_b == m.is_independent(Subset(j));
      if (j == 0) break;
    }
  }
  rep.add("minimal_bases_extend", extend_ok);

  rep.add("morphism_reduced_is_x0_derivative",
          reduced == partial0_power(polys.full, n - r));
  if (r == phi.target().rank()) {
    rep.add("equal_rank_polynomial",
            polys.full == times_x0_power(basis_poly(m), n - r));
  }
  if (phi.target().rank() == 0) {
    rep.add("rank_zero_target_polynomial", polys.full == indep_poly(m));
  }

  bool eh_ok = true;
  json profile = json::array();
  for (const EurHuhEntry& e : eur_huh_profile(phi)) {
    eh_ok = eh_ok && e.lhs <= e.rhs;
    profile.push_back(json{{"k", e.k},
                           {"lhs", str(e.lhs)},
                           {"rhs", str(e.rhs)},
                           {"equal", e.equal}});
  }
  rep.add("eur_huh", eh_ok, json{{"profile", profile}});

  if (reduced.degree() >= 2) {
    PointSampler s(seed, 0);
    std::vector<RationalPoint> pts{ones_with_x0(n, 1), ones_with_x0(n, 0),
                                   s.positive(size + 1)};
    for (const RationalPoint& a : pts) {
      rep.record("morphism_reduced_hrr1", check_json(check_hrr1(reduced, a, g), a));
      rep.record("morphism_reduced_slp1", check_json(check_slp1(reduced, a, g), a));
    }
  }
  return rep;
}

std::vector<Matroid> morphism_targets() {
  std::vector<Matroid> t;
  for (int m = 1; m <= kMaxMorphismTarget; ++m) {
    for (Matroid& x : enumerate_matroids(m, std::nullopt, Execution::kSerial)) {
      t.push_back(std::move(x));
    }
  }
  return t;
}

namespace {

struct ItemResult {
  std::vector<CheckEntry> entries;
};

void merge(SurveyReport& out, const char* kind, std::size_t index,
           const json& item, const std::vector<CheckEntry>& entries) {
  for (const CheckEntry& e : entries) {
    Tally& t = out.tallies[e.name];
    switch (e.status) {
      case CheckStatus::kPass:
        ++t.pass;
        break;
      case CheckStatus::kFail:
        ++t.fail;
        break;
      case CheckStatus::kNotApplicable:
        ++t.not_applicable;
        break;
      case CheckStatus::kRecorded:
        ++t.recorded;
        break;
    }
    json rec{{"kind", kind},
             {"index", index},
             {"check", e.name},
             {"status", to_string(e.status)}};
    if (!e.data.is_null()) rec["data"] = e.data;
    if (e.status == CheckStatus::kFail) {
      json ce = rec;
      ce["item"] = item;
      out.counterexamples.push_back(std::move(ce));
    }
    if (e.status == CheckStatus::kPass && e.data.is_object()) {
      if (e.name == "mason_pair" && e.data.value("equal", false)) {
        out.mason_basis_equalities.push_back(json{{"index", index},
                                                  {"matroid", item},
                                                  {"i", e.data["i"]},
                                                  {"j", e.data["j"]},
                                                  {"classes", e.data["classes"]}});
      } else if (e.name == "mason_indep" && e.data.value("equal", false)) {
        out.mason_indep_equalities.push_back(json{{"index", index},
                                                  {"matroid", item},
                                                  {"k", e.data["k"]},
                                                  {"girth", e.data["girth"]}});
      } else if (e.name == "eur_huh") {
        for (const json& row : e.data["profile"]) {
          if (!row["equal"].get<bool>()) continue;
          out.eur_huh_equalities.push_back(json{{"index", index},
                                                {"morphism", item},
                                                {"k", row["k"]},
                                                {"value", row["lhs"]}});
        }
      }
    }
    out.records.push_back(std::move(rec));
  }
}

}  // namespace

SurveyReport survey(const SurveyOptions& options, std::uint64_t seed) {
  if (options.n_max < 1 || options.n_max > kMaxEnumerationGround) {
    throw MatroidError(MatroidErrorKind::kOutOfRange,
                       "survey supports 1 <= n <= " +
                           std::to_string(kMaxEnumerationGround));
  }
  SurveyReport out;
  out.seed = seed;
  out.n_max = options.n_max;
  out.morphism_max_source =
      options.morphisms ? std::min({options.n_max, options.morphism_max_source,
                                    kMaxMorphismSource})
                        : 0;

  std::vector<Matroid> catalog;
  for (int n = 1; n <= options.n_max; ++n) {
    for (Matroid& m : enumerate_matroids(n, std::nullopt, options.execution)) {
      catalog.push_back(std::move(m));
    }
  }
  out.matroids = catalog.size();

  const auto total = static_cast<std::int64_t>(catalog.size());
  std::vector<ItemResult> results(catalog.size());
  auto run_matroid = [&](std::int64_t idx) {
    const Matroid& m = catalog[static_cast<std::size_t>(idx)];
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(idx));
    SuiteReport a = theorem_suite(m, s, options.suite);
    SuiteReport b = mason_suite(m, s, options.suite);
    auto& entries = results[static_cast<std::size_t>(idx)].entries;
    entries = std::move(a.entries);
    entries.insert(entries.end(), std::make_move_iterator(b.entries.begin()),
                   std::make_move_iterator(b.entries.end()));
  };
  if (options.execution == Execution::kSerial) {
    for (std::int64_t i = 0; i < total; ++i) run_matroid(i);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < total; ++i) run_matroid(i);
  }
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    merge(out, "matroid", i, matroid_to_json(catalog[i]), results[i].entries);
  }

  if (out.morphism_max_source > 0) {
    const std::vector<Matroid> targets = morphism_targets();
    std::vector<Matroid> sources;
    for (const Matroid& m : catalog) {
      if (m.is_simple() && m.ground_size() <= out.morphism_max_source) {
        sources.push_back(m);
      }
    }
    const auto ns = static_cast<std::int64_t>(sources.size());
    std::vector<std::vector<MatroidMorphism>> per_source(sources.size());
    auto enum_source = [&](std::int64_t i) {
      per_source[static_cast<std::size_t>(i)] = enumerate_morphisms(
          sources[static_cast<std::size_t>(i)], targets, Execution::kSerial);
    };
    if (options.execution == Execution::kSerial) {
      for (std::int64_t i = 0; i < ns; ++i) enum_source(i);
    } else {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::int64_t i = 0; i < ns; ++i) enum_source(i);
    }
    std::vector<MatroidMorphism> all;
    for (auto& v : per_source) {
      for (MatroidMorphism& phi : v) all.push_back(std::move(phi));
    }
    out.morphisms = all.size();
    std::vector<ItemResult> mres(all.size());
    const auto nm = static_cast<std::int64_t>(all.size());
    const std::uint64_t base = std::uint64_t{1} << 32;
    auto run_morphism = [&](std::int64_t i) {
      mres[static_cast<std::size_t>(i)].entries =
          morphism_suite(all[static_cast<std::size_t>(i)],
                         derive_seed(seed, base + static_cast<std::uint64_t>(i)))
              .entries;
    };
    if (options.execution == Execution::kSerial) {
      for (std::int64_t i = 0; i < nm; ++i) run_morphism(i);
    } else {
#pragma omp parallel for schedule(dynamic, 8)
      for (std::int64_t i = 0; i < nm; ++i) run_morphism(i);
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      merge(out, "morphism", i, morphism_to_json(all[i]), mres[i].entries);
    }
  }
  return out;
}

std::string SurveyReport::to_jsonl() const {
  std::ostringstream os;
  os << json{{"kind", "header"},
             {"seed", std::to_string(seed)},
             {"n_max", n_max},
             {"morphism_max_source", morphism_max_source},
             {"matroids", matroids},
             {"morphisms", morphisms}}
            .dump()
     << "\n";
  for (const json& r : records) os << r.dump() << "\n";
  for (const json& c : mason_basis_equalities) {
    os << json{{"kind", "equality"}, {"family", "mason_pair"}, {"case", c}}.dump()
       << "\n";
  }
  for (const json& c : mason_indep_equalities) {
    os << json{{"kind", "equality"}, {"family", "mason_indep"}, {"case", c}}.dump()
       << "\n";
  }
  for (const json& c : eur_huh_equalities) {
    os << json{{"kind", "equality"}, {"family", "eur_huh"}, {"case", c}}.dump()
       << "\n";
  }
  for (const json& c : counterexamples) {
    os << json{{"kind", "counterexample"}, {"case", c}}.dump() << "\n";
  }
  return os.str();
}

std::string SurveyReport::to_tsv() const {
  std::ostringstream os;
  os << "seed\t" << seed << "\n";
  os << "n_max\t" << n_max << "\n";
  os << "morphism_max_source\t" << morphism_max_source << "\n";
  os << "matroids\t" << matroids << "\n";
  os << "morphisms\t" << morphisms << "\n";
  os << "check\tpass\tfail\tnot_applicable\trecorded\n";
  for (const auto& [name, t] : tallies) {
    os << name << "\t" << t.pass << "\t" << t.fail << "\t" << t.not_applicable
       << "\t" << t.recorded << "\n";
  }
  os << "mason_pair_equalities\t" << mason_basis_equalities.size() << "\n";
  os << "mason_indep_equalities\t" << mason_indep_equalities.size() << "\n";
  os << "eur_huh_equalities\t" << eur_huh_equalities.size() << "\n";
  os << "counterexamples\t" << counterexamples.size() << "\n";
  return os.str();
}

}  // namespace mlz

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


#include "mlz/morphism.hpp"

#include <algorithm>
#include <cstdint>

namespace mlz {
namespace {

bool is_flat(const Matroid& m, Subset s) { return closure(m, s) == s; }

Subset image_of(const std::vector<int>& map, Subset s) {
  Subset out;
  for (int e : s.elements()) out = out.with(map[static_cast<std::size_t>(e - 1)]);
  return out;
}

Subset preimage_of(const std::vector<int>& map, Subset t) {
  Subset out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (t.contains(map[i])) out = out.with(static_cast<int>(i) + 1);
  }
  return out;
}

// Rank-difference form over all nested pairs S1 <= S2.
bool rank_condition_holds(const Matroid& m, const Matroid& n,
                          const std::vector<int>& map) {
  const std::uint32_t total = std::uint32_t{1} << m.ground_size();
  std::vector<int> image_rank(total);
  for (std::uint32_t s = 0; s < total; ++s) {
    image_rank[s] = n.rank_of(image_of(map, Subset(s)));
  }
  for (std::uint32_t s2 = 0; s2 < total; ++s2) {
    for (std::uint32_t s1 = s2;; s1 = (s1 - 1) & s2) {
      if (image_rank[s2] - image_rank[s1] >
          m.rank_of(Subset(s2)) - m.rank_of(Subset(s1))) {
        return false;
      }
      if (s1 == 0) break;
    }
  }
  return true;
}

// Returns the first target flat whose preimage is not a flat.
std::optional<Subset> flat_violation(const Matroid& m,
                                     const std::vector<Subset>& target_flats,
                                     const std::vector<int>& map) {
  for (Subset f : target_flats) {
    if (!is_flat(m, preimage_of(map, f))) return f;
  }
  return std::nullopt;
}

void check_map_values(const Matroid& source, const Matroid& target,
                      const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != source.ground_size()) {
    throw MorphismError(MorphismErrorKind::kInvalidMap,
                        "map: expected " + std::to_string(source.ground_size()) +
                            " entries, got " + std::to_string(map.size()));
  }
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] < 1 || map[i] > target.ground_size()) {
      throw MorphismError(MorphismErrorKind::kInvalidMap,
                          "map[" + std::to_string(i + 1) + "] = " +
                              std::to_string(map[i]) + " outside 1.." +
                              std::to_string(target.ground_size()));
    }
  }
}

// Null when the map is a morphism with full image rank.
std::optional<MorphismError> check_morphism(
    const Matroid& source, const Matroid& target,
    const std::vector<Subset>& target_flats, const std::vector<int>& map) {
  const std::optional<Subset> bad = flat_violation(source, target_flats, map);
  if (source.ground_size() <= kMaxMorphismSource &&
      rank_condition_holds(source, target, map) != !bad.has_value()) {
    return MorphismError(MorphismErrorKind::kConditionMismatch,
                         "flat and rank conditions disagree");
  }
  if (bad) {
    return MorphismError(MorphismErrorKind::kFlatPreimageViolation,
                         "preimage of flat " + bad->to_string() +
                             " is not a flat of the source",
                         *bad);
  }
  if (target.rank_of(image_of(map, source.ground())) != target.rank()) {
    return MorphismError(MorphismErrorKind::kImageRankDeficient,
                         "image of the ground set has rank below " +
                             std::to_string(target.rank()));
  }
  return std::nullopt;
}

bool uniform_restriction(const Matroid& m, Subset l) {
  const int rank = m.rank_of(l);
  for (std::uint32_t s = l.mask();; s = (s - 1) & l.mask()) {
    if (std::popcount(s) == rank && !m.is_independent(Subset(s))) return false;
    if (s == 0) break;
  }
  return true;
}

RationalPoint zero_form(int n) {
  return RationalPoint{std::vector<Rational>(static_cast<std::size_t>(n) + 1, 0)};
}

}  // namespace

Subset MatroidMorphism::image(Subset s) const { return image_of(map_, s); }

Subset MatroidMorphism::preimage(Subset t) const { return preimage_of(map_, t); }

MatroidMorphism validate_morphism(const Matroid& source, const Matroid& target,
                                  const std::vector<int>& map) {
  check_map_values(source, target, map);
  if (auto err = check_morphism(source, target, flats(target), map)) throw *err;
  return MatroidMorphism(source, target, map);
}

ParallelDecomposition phi_decomposition(const MatroidMorphism& phi) {
  ParallelDecomposition d;
  d.loops = phi.phi_loops();
  for (Subset c : parallel_decomposition(phi.target()).classes) {
    const Subset pre = phi.preimage(c);
    if (!pre.empty()) d.classes.push_back(pre);
  }
  std::sort(d.classes.begin(), d.classes.end(), [](Subset a, Subset b) {
    return a.min_element() < b.min_element();
  });
  return d;
}

MorphismBases morphism_bases(const MatroidMorphism& phi) {
  const Matroid& m = phi.source();
  MorphismBases b;
  b.min_size = phi.target().rank();
  b.max_size = m.rank();
  b.by_size.resize(static_cast<std::size_t>(m.rank()) + 1);
  for (int k = 0; k <= m.rank(); ++k) {
    for (Subset i : m.independent_sets(k)) {
      if (phi.target().rank_of(phi.image(i)) == phi.target().rank()) {
        b.by_size[static_cast<std::size_t>(k)].push_back(i);
      }
    }
  }
  return b;
}

MorphismPolys morphism_poly(const MatroidMorphism& phi) {
  const int n = phi.source().ground_size(), r = phi.source().rank();
  std::vector<int> vars(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) vars[static_cast<std::size_t>(i)] = i;
  MorphismPolys out{HomogPoly(n, vars, n), HomogPoly(n, vars, r)};
  const MorphismBases b = morphism_bases(phi);
  for (int k = 0; k <= r; ++k) {
    const Rational c(factorial(n - k) / factorial(r - k));
    for (Subset i : b.of_size(k)) {
      out.full.add_term(n - k, i, 1);
      out.reduced.add_term(r - k, i, c);
    }
  }
  return out;
}

std::string to_string(DegeneracyCondition c) {
  switch (c) {
    case DegeneracyCondition::kA:
      return "A";
    case DegeneracyCondition::kB:
      return "B";
    case DegeneracyCondition::kC:
      return "C";
  }
  return "?";
}

bool DegeneracyVerdict::has(DegeneracyCondition c) const {
  return std::find(classes.begin(), classes.end(), c) != classes.end();
}

std::string DegeneracyVerdict::classes_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) s += ",";
    s += to_string(classes[i]);
  }
  return s + "}";
}

DegeneracyVerdict degeneracy_class(const MatroidMorphism& phi) {
  const Matroid& m = phi.source();
  const int n = m.ground_size(), r = m.rank(), rp = phi.target().rank();
  const Subset loops = phi.phi_loops();
  DegeneracyVerdict v;
  v.source_simple = m.is_simple();

  std::vector<std::pair<DegeneracyCondition, RationalPoint>> candidates;
  if (r == rp) {
    RationalPoint l = zero_form(n);
    l.coords[0] = 1;
    candidates.emplace_back(DegeneracyCondition::kA, l);
  }
  if (r - rp == 1 && loops.size() == 1) {
    RationalPoint l = zero_form(n);
    l.coords[0] = 1;
    l.coords[static_cast<std::size_t>(loops.min_element())] = -(n - r + 1);
    candidates.emplace_back(DegeneracyCondition::kB, l);
  }
  if (uniform_restriction(m, loops) && n - loops.size() == rp) {
    RationalPoint l = zero_form(n);
    l.coords[0] = -1;
    for (int e : loops.elements()) l.coords[static_cast<std::size_t>(e)] = 1;
    candidates.emplace_back(DegeneracyCondition::kC, l);
  }
  if (candidates.empty()) return v;

  const HomogPoly reduced = morphism_poly(phi).reduced;
  for (auto& [cond, form] : candidates) {
    v.classes.push_back(cond);
    const bool kills = linear_apply(reduced, form).is_zero();
    if (!kills && v.source_simple) {
      throw AnnihilatorCheckFailed("condition " + to_string(cond) +
                                   " holds but its linear form does not "
                                   "annihilate the reduced polynomial");
    }
    if (kills && !v.annihilator) {
      v.annihilator = form;
      v.annihilator_from = cond;
    }
  }
  return v;
}

std::vector<EurHuhEntry> eur_huh_profile(const MatroidMorphism& phi) {
  const int n = phi.source().ground_size();
  const MorphismBases b = morphism_bases(phi);
  auto normalized = [&](int k) {
    Rational q(Integer(static_cast<long>(b.count(k))), binomial(n, k));
    q.canonicalize();
    return q;
  };
  std::vector<EurHuhEntry> out;
  for (int k = b.min_size + 1; k < b.max_size; ++k) {
    EurHuhEntry e;
    e.k = k;
    e.lhs = normalized(k - 1) * normalized(k + 1);
    e.rhs = normalized(k) * normalized(k);
    e.equal = e.lhs == e.rhs;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<MatroidMorphism> enumerate_morphisms(
    const Matroid& source, const std::vector<Matroid>& targets,
    Execution execution) {
  const int n = source.ground_size();
  if (n > kMaxMorphismSource) {
    throw MorphismError(MorphismErrorKind::kBoundsExceeded,
                        "source has " + std::to_string(n) +
                            " elements; at most " +
                            std::to_string(kMaxMorphismSource) + " supported");
  }
  std::vector<MatroidMorphism> out;
  for (const Matroid& target : targets) {
    const int m = target.ground_size();
    if (m > kMaxMorphismTarget) {
      throw MorphismError(MorphismErrorKind::kBoundsExceeded,
                          "target has " + std::to_string(m) +
                              " elements; at most " +
                              std::to_string(kMaxMorphismTarget) + " supported");
    }
    const std::vector<Subset> target_flats = flats(target);
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= m;
    // Code c enumerates maps lexicographically, first element most
    // significant.
    auto decode = [&](std::int64_t c) {
      std::vector<int> map(static_cast<std::size_t>(n));
      for (int i = n - 1; i >= 0; --i) {
        map[static_cast<std::size_t>(i)] = static_cast<int>(c % m) + 1;
        c /= m;
      }
      return map;
    };
    auto accept = [&](const std::vector<int>& map) {
      const auto err = check_morphism(source, target, target_flats, map);
      if (err && err->kind() == MorphismErrorKind::kConditionMismatch) throw *err;
      return !err.has_value();
    };
    std::vector<std::int64_t> codes;
    if (execution == Execution::kSerial) {
      for (std::int64_t c = 0; c < total; ++c) {
        if (accept(decode(c))) codes.push_back(c);
      }
    } else {
      std::vector<char> ok(static_cast<std::size_t>(total), 0);
      bool mismatch = false;
#pragma omp parallel for schedule(dynamic, 16)
      for (std::int64_t c = 0; c < total; ++c) {
        try {
          ok[static_cast<std::size_t>(c)] = accept(decode(c)) ? 1 : 0;
        } catch (const MorphismError&) {
#pragma omp critical
          mismatch = true;
        }
      }
      if (mismatch) {
        throw MorphismError(MorphismErrorKind::kConditionMismatch,
                            "flat and rank conditions disagree");
      }
      for (std::int64_t c = 0; c < total; ++c) {
        if (ok[static_cast<std::size_t>(c)]) codes.push_back(c);
      }
    }
    for (std::int64_t c : codes) out.push_back(MatroidMorphism(source, target, decode(c)));
  }
  return out;
}

}  // namespace mlz

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

#include "mlz/matroid.hpp"

#include <algorithm>
#include <numeric>

namespace mlz {
namespace {

// Compresses the bits of `s` selected by `kept` into the low bits, in order.
Subset compress(Subset s, Subset kept) {
  std::uint32_t out = 0;
  int pos = 0;
  for (int e : kept.elements()) {
    if (s.contains(e)) out |= std::uint32_t{1} << pos;
    ++pos;
  }
  return Subset(out);
}

Minor relabeled(Subset kept, const std::vector<Subset>& bases) {
  std::vector<Subset> mapped;
  mapped.reserve(bases.size());
  for (Subset b : bases) mapped.push_back(compress(b, kept));
  std::sort(mapped.begin(), mapped.end(), lex_less);
  mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
  return Minor{make_matroid_unchecked(kept.size(), std::move(mapped)),
               kept.elements()};
}

void check_element(const Matroid& m, int e) {
  if (e < 1 || e > m.ground_size()) {
    throw MatroidError(MatroidErrorKind::kOutOfRange,
                       "element " + std::to_string(e) +
                           " outside ground set {1.." +
                           std::to_string(m.ground_size()) + "}");
  }
}

void check_subset(const Matroid& m, Subset s) {
  if (!m.ground().contains(s)) {
    throw MatroidError(MatroidErrorKind::kOutOfRange,
                       "subset " + s.to_string() + " outside ground set");
  }
}

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n) + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

ExchangeViolation::ExchangeViolation(Subset b1, Subset b2, int x)
    : MatroidError(MatroidErrorKind::kExchangeViolation,
                   "exchange axiom fails for B1=" + b1.to_string() +
                       ", B2=" + b2.to_string() + ", x=" + std::to_string(x)),
      b1_(b1),
      b2_(b2),
      x_(x) {}

Matroid make_matroid_unchecked(int n, std::vector<Subset> bases) {
  Matroid m;
  m.n_ = n;
  std::sort(bases.begin(), bases.end(), lex_less);
  m.bases_ = std::move(bases);
  m.r_ = m.bases_.front().size();

  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint8_t> indep(count, 0);
  for (Subset b : m.bases_) indep[b.mask()] = 1;
  // Supersets have larger masks, so a descending sweep sees them first.
  for (std::size_t s = count; s-- > 0;) {
    if (indep[s] || std::popcount(s) >= m.r_) continue;
    for (int e = 0; e < n; ++e) {
      std::size_t bit = std::size_t{1} << e;
      if (!(s & bit) && indep[s | bit]) {
        indep[s] = 1;
        break;
      }
    }
  }
  m.rank_.assign(count, 0);
  for (std::size_t s = 1; s < count; ++s) {
    if (indep[s]) {
      m.rank_[s] = static_cast<std::uint8_t>(std::popcount(s));
      continue;
    }
    std::uint8_t best = 0;
    for (std::size_t t = s; t != 0; t &= t - 1) {
      std::size_t bit = t & (~t + 1);
      best = std::max(best, m.rank_[s & ~bit]);
    }
    m.rank_[s] = best;
  }
  return m;
}

Matroid validate_bases(int n, const std::vector<Subset>& candidate) {
  if (n < 1 || n > Matroid::kMaxGround) {
    throw MatroidError(MatroidErrorKind::kOutOfRange,
                       "ground size " + std::to_string(n) + " outside 1.." +
                           std::to_string(Matroid::kMaxGround));
  }
  if (candidate.empty()) {
    throw MatroidError(MatroidErrorKind::kEmptyBases, "basis family is empty");
  }
  const Subset ground = Subset::full(n);
  std::vector<Subset> bases = candidate;
  std::sort(bases.begin(), bases.end(), lex_less);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  for (Subset b : bases) {
    if (!ground.contains(b)) {
      throw MatroidError(MatroidErrorKind::kOutOfRange,
                         "basis " + b.to_string() + " outside ground set {1.." +
                             std::to_string(n) + "}");
    }
    if (b.size() != bases.front().size()) {
      throw MatroidError(MatroidErrorKind::kUnequalCardinality,
                         "bases " + bases.front().to_string() + " and " +
                             b.to_string() + " differ in size");
    }
  }
  std::vector<bool> member(std::size_t{1} << n, false);
  for (Subset b : bases) member[b.mask()] = true;
  for (Subset b1 : bases) {
    for (Subset b2 : bases) {
      for (int x : (b1 - b2).elements()) {
        bool found = false;
        for (int y : (b2 - b1).elements()) {
          if (member[b1.without(x).with(y).mask()]) {
            found = true;
            break;
          }
        }
        if (!found) throw ExchangeViolation(b1, b2, x);
      }
    }
  }
  return make_matroid_unchecked(n, std::move(bases));
}

bool Matroid::are_parallel(int i, int j) const {
  if (i == j || is_loop(i) || is_loop(j)) return false;
  return rank_of(Subset{i, j}) == 1;
}

bool Matroid::is_loopless() const {
  for (int e = 1; e <= n_; ++e) {
    if (is_loop(e)) return false;
  }
  return true;
}

bool Matroid::is_simple() const {
  if (!is_loopless()) return false;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (rank_of(Subset{i, j}) < 2) return false;
    }
  }
  return true;
}

bool Matroid::is_uniform() const {
  return Integer(static_cast<unsigned long>(bases_.size())) == binomial(n_, r_);
}

std::vector<Subset> Matroid::independent_sets(int size) const {
  std::vector<Subset> out;
  for (std::uint32_t s = 0; s < rank_.size(); ++s) {
    if (std::popcount(s) == size && rank_[s] == size) out.emplace_back(s);
  }
  return out;
}

std::string Matroid::to_string() const {
  std::string s = "M(n=" + std::to_string(n_) + ", r=" + std::to_string(r_) +
                  ", bases=";
  for (std::size_t i = 0; i < bases_.size(); ++i) {
    if (i) s += ' ';
    s += bases_[i].to_string();
  }
  return s + ")";
}

Matroid uniform(int r, int n) {
  if (n < 1 || n > Matroid::kMaxGround || r < 0 || r > n) {
    throw MatroidError(MatroidErrorKind::kInvalidArgument,
                       "uniform matroid needs 0 <= r <= n, 1 <= n <= " +
                           std::to_string(Matroid::kMaxGround));
  }
  std::vector<Subset> bases;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    if (std::popcount(s) == r) bases.emplace_back(s);
  }
  return make_matroid_unchecked(n, std::move(bases));
}

Matroid graphic(int vertices,
                const std::vector<std::pair<int, int>>& edges) {
  if (vertices < 1) {
    throw MatroidError(MatroidErrorKind::kInvalidArgument,
                       "graph needs at least one vertex");
  }
  const int n = static_cast<int>(edges.size());
  if (n < 1 || n > Matroid::kMaxGround) {
    throw MatroidError(MatroidErrorKind::kOutOfRange,
                       "edge count " + std::to_string(n) + " outside 1.." +
                           std::to_string(Matroid::kMaxGround));
  }
  for (auto [u, v] : edges) {
    if (u < 1 || u > vertices || v < 1 || v > vertices) {
      throw MatroidError(MatroidErrorKind::kOutOfRange,
                         "edge endpoint outside 1.." +
                             std::to_string(vertices));
    }
  }
  auto is_forest = [&](std::uint32_t mask) {
    DisjointSets ds(vertices);
    for (int e = 0; e < n; ++e) {
      if ((mask >> e) & 1u) {
        if (!ds.unite(edges[e].first, edges[e].second)) return false;
      }
    }
    return true;
  };
  DisjointSets all(vertices);
  int rank = 0;
  for (auto [u, v] : edges) rank += all.unite(u, v) ? 1 : 0;
  std::vector<Subset> bases;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    if (std::popcount(s) == rank && is_forest(s)) bases.emplace_back(s);
  }
  return make_matroid_unchecked(n, std::move(bases));
}

Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
  const int n = m1.ground_size() + m2.ground_size();
  if (n > Matroid::kMaxGround) {
    throw MatroidError(MatroidErrorKind::kOutOfRange,
                       "direct sum exceeds ground size limit");
  }
  std::vector<Subset> bases;
  for (Subset b1 : m1.bases()) {
    for (Subset b2 : m2.bases()) {
      bases.emplace_back(b1.mask() | (b2.mask() << m1.ground_size()));
    }
  }
  return make_matroid_unchecked(n, std::move(bases));
}

int rank_of(const Matroid& m, Subset s) {
  check_subset(m, s);
  return m.rank_of(s);
}

Subset closure(const Matroid& m, Subset s) {
  check_subset(m, s);
  const int rs = m.rank_of(s);
  Subset out = s;
  for (int i = 1; i <= m.ground_size(); ++i) {
    if (!s.contains(i) && m.rank_of(s.with(i)) == rs) out = out.with(i);
  }
  return out;
}

std::vector<Subset> flats(const Matroid& m) {
  std::vector<Subset> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << m.ground_size()); ++s) {
    if (closure(m, Subset(s)) == Subset(s)) out.emplace_back(s);
  }
  std::sort(out.begin(), out.end(), size_then_mask_less);
  return out;
}

std::vector<Subset> minimal_superflats(const Matroid& m, Subset f) {
  if (closure(m, f) != f) {
    throw MatroidError(MatroidErrorKind::kInvalidArgument,
                       f.to_string() + " is not a flat");
  }
  std::vector<Subset> above;
  for (Subset g : flats(m)) {
    if (g != f && g.contains(f)) above.push_back(g);
  }
  std::vector<Subset> out;
  for (Subset g : above) {
    bool minimal = std::none_of(above.begin(), above.end(), [&](Subset h) {
      return h != g && g.contains(h);
    });
    if (minimal) out.push_back(g);
  }
  return out;
}

CircuitsAndGirth circuits_and_girth(const Matroid& m) {
  CircuitsAndGirth out{{}, Girth::infinite()};
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << m.ground_size()); ++s) {
    Subset c(s);
    if (m.is_independent(c)) continue;
    bool minimal = true;
    for (int e : c.elements()) {
      if (!m.is_independent(c.without(e))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.circuits.push_back(c);
  }
  std::sort(out.circuits.begin(), out.circuits.end(), size_then_mask_less);
  if (!out.circuits.empty()) {
    out.girth = Girth::finite(out.circuits.front().size());
  }
  return out;
}

ParallelDecomposition parallel_decomposition(const Matroid& m) {
  ParallelDecomposition out;
  Subset assigned;
  for (int e = 1; e <= m.ground_size(); ++e) {
    if (m.is_loop(e)) {
      out.loops = out.loops.with(e);
      assigned = assigned.with(e);
    }
  }
  for (int i = 1; i <= m.ground_size(); ++i) {
    if (assigned.contains(i)) continue;
    Subset cls = Subset::singleton(i);
    for (int j = i + 1; j <= m.ground_size(); ++j) {
      if (!assigned.contains(j) && m.are_parallel(i, j)) cls = cls.with(j);
    }
    assigned = assigned | cls;
    out.classes.push_back(cls);
  }
  return out;
}

Minor contract(const Matroid& m, int e) {
  check_element(m, e);
  if (m.is_loop(e)) {
    throw MatroidError(MatroidErrorKind::kLoopContraction,
                       "cannot contract loop " + std::to_string(e));
  }
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    if (b.contains(e)) bases.push_back(b.without(e));
  }
  return relabeled(m.ground().without(e), bases);
}

Minor restrict_to(const Matroid& m, Subset x) {
  check_subset(m, x);
  const int rx = m.rank_of(x);
  std::vector<Subset> bases;
  for (Subset i : m.independent_sets(rx)) {
    if (x.contains(i)) bases.push_back(i);
  }
  return relabeled(x, bases);
}

Minor delete_element(const Matroid& m, int e) {
  check_element(m, e);
  return restrict_to(m, m.ground().without(e));
}

Minor minor(const Matroid& m, MinorKind kind, Subset arg) {
  if (kind == MinorKind::kRestrict) return restrict_to(m, arg);
  if (arg.size() != 1) {
    throw MatroidError(MatroidErrorKind::kInvalidArgument,
                       "contract/delete take a single element");
  }
  const int e = arg.min_element();
  return kind == MinorKind::kContract ? contract(m, e) : delete_element(m, e);
}

Matroid truncate(const Matroid& m, int steps) {
  if (steps == 0) return m;
  if (steps < 0 || steps >= m.rank()) {
    throw MatroidError(MatroidErrorKind::kInvalidArgument,
                       "truncation steps must lie in 0.." +
                           std::to_string(m.rank() - 1));
  }
  return make_matroid_unchecked(m.ground_size(),
                                m.independent_sets(m.rank() - steps));
}

Simplification simplify(const Matroid& m) {
  ParallelDecomposition pd = parallel_decomposition(m);
  if (pd.classes.empty()) {
    throw MatroidError(MatroidErrorKind::kInvalidArgument,
                       "every element is a loop; nothing to simplify");
  }
  Subset reps;
  std::vector<int> representatives;
  for (Subset c : pd.classes) {
    representatives.push_back(c.min_element());
    reps = reps.with(c.min_element());
  }
  Minor restricted = restrict_to(m, reps);
  return Simplification{std::move(restricted.matroid),
                        std::move(representatives), std::move(pd)};
}

IndepProfile indep_profile(const Matroid& m) {
  IndepProfile p;
  std::vector<unsigned long> counts(static_cast<std::size_t>(m.rank()) + 1, 0);
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << m.ground_size()); ++s) {
    if (m.is_independent(Subset(s))) ++counts[std::popcount(s)];
  }
  for (int k = 0; k <= m.rank(); ++k) {
    p.counts.emplace_back(counts[k]);
    p.normalized.emplace_back(Rational(p.counts.back(),
                                       binomial(m.ground_size(), k)));
    p.normalized.back().canonicalize();
  }
  return p;
}

}  // namespace mlz

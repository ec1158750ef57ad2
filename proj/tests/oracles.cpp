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


#include "oracles.hpp"

#include <algorithm>
#include <cstdint>

namespace mlz::oracle {
namespace {

using Dense = std::vector<std::vector<Rational>>;

bool is_flat_family(int n, const std::vector<std::uint32_t>& fam) {
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  auto member = [&](std::uint32_t s) {
    return std::find(fam.begin(), fam.end(), s) != fam.end();
  };
  if (!member(full)) return false;
  for (std::uint32_t a : fam) {
    for (std::uint32_t b : fam) {
      if (!member(a & b)) return false;
    }
  }
  for (std::uint32_t f : fam) {
    if (f == full) continue;
    std::uint32_t covered = 0;
    for (std::uint32_t g : fam) {
      if ((g & f) != f || g == f) continue;
      bool minimal = true;
      for (std::uint32_t h : fam) {
        if (h != f && h != g && (h & f) == f && (h & g) == h) minimal = false;
      }
      if (!minimal) continue;
      if ((covered & (g & ~f)) != 0) return false;
      covered |= g & ~f;
    }
    if (covered != (full & ~f)) return false;
  }
  return true;
}

std::uint32_t close(const std::vector<std::uint32_t>& fam, std::uint32_t s,
                    std::uint32_t full) {
  std::uint32_t c = full;
  for (std::uint32_t f : fam) {
    if ((f & s) == s) c &= f;
  }
  return c;
}

}  // namespace

std::vector<std::vector<Subset>> matroids_via_flats(int n) {
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  const std::uint32_t subsets = full + 1;
  std::vector<std::vector<Subset>> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << subsets); ++code) {
    std::vector<std::uint32_t> fam;
    for (std::uint32_t s = 0; s < subsets; ++s) {
      if ((code >> s) & 1u) fam.push_back(s);
    }
    if (!is_flat_family(n, fam)) continue;
    std::vector<std::uint32_t> indep;
    for (std::uint32_t s = 0; s < subsets; ++s) {
      bool ok = true;
      for (std::uint32_t e = s; e != 0 && ok; e &= e - 1) {
        std::uint32_t bit = e & (~e + 1);
        if (close(fam, s & ~bit, full) & bit) ok = false;
      }
      if (ok) indep.push_back(s);
    }
    std::vector<Subset> bases;
    for (std::uint32_t s : indep) {
      bool maximal = true;
      for (std::uint32_t t : indep) {
        if (t != s && (t & s) == s) maximal = false;
      }
      if (maximal) bases.emplace_back(s);
    }
    std::sort(bases.begin(), bases.end(), lex_less);
    out.push_back(std::move(bases));
  }
  return out;
}

int rank_from_bases(const Matroid& m, Subset s) {
  int best = 0;
  for (Subset b : m.bases()) best = std::max(best, (b & s).size());
  return best;
}

std::vector<Rational> char_poly_leverrier(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  Dense m(n, std::vector<Rational>(n));
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Dense am(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t t = 0; t < n; ++t) s += a(i, t) * m[t][j];
        am[i][j] = s;
      }
    }
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = am[i][j] + (i == j ? c[n - k + 1] : Rational(0));
      }
    }
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < n; ++t) trace += a(i, t) * m[t][i];
    }
    c[n - k] = -trace / static_cast<int>(k);
  }
  return c;
}

Inertia inertia_by_congruence(const SymMatrix& s) {
  std::size_t n = s.size();
  Dense a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = s(i, j);
  }
  Inertia in;
  while (!a.empty()) {
    n = a.size();
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i][i] != 0) {
        p = i;
        break;
      }
    }
    if (p < n) {
      (a[p][p] > 0 ? in.pos : in.neg) += 1;
      Dense next;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == p) continue;
        std::vector<Rational> row;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == p) continue;
          row.push_back(a[i][j] - a[i][p] * a[p][j] / a[p][p]);
        }
        next.push_back(std::move(row));
      }
      a = std::move(next);
      continue;
    }
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == n) {
      in.zero += static_cast<int>(n);
      break;
    }
    // Zero diagonal, nonzero off-diagonal: the 2x2 block has det < 0.
    in.pos += 1;
    in.neg += 1;
    const Rational b = a[pi][pj];
    Dense next;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pi || i == pj) continue;
      std::vector<Rational> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == pi || j == pj) continue;
        // Block inverse is [[0,1/b],[1/b,0]].
        row.push_back(a[i][j] - (a[i][pi] * a[pj][j] + a[i][pj] * a[pi][j]) / b);
      }
      next.push_back(std::move(row));
    }
    a = std::move(next);
  }
  return in;
}

std::size_t rank_by_gauss(const RationalMatrix& m) {
  Dense a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

Rational second_partial_at(const HomogPoly& p, int var_i, int var_j,
                           const RationalPoint& a) {
  return eval(partial(partial(p, var_i), var_j), a);
}

std::vector<std::vector<int>> morphism_maps_by_rank(const Matroid& source,
                                                    const Matroid& target) {
  const int n = source.ground_size(), m = target.ground_size();
  std::vector<std::vector<int>> out;
  std::vector<int> map(static_cast<std::size_t>(n), 1);
  auto image = [&](std::uint32_t s) {
    Subset t;
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1u) t = t.with(map[static_cast<std::size_t>(i)]);
    }
    return t;
  };
  while (true) {
    bool ok = target.rank_of(image((1u << n) - 1)) == target.rank();
    for (std::uint32_t s2 = 0; s2 < (1u << n) && ok; ++s2) {
      for (std::uint32_t s1 = 0; s1 < (1u << n) && ok; ++s1) {
        if ((s1 & s2) != s1) continue;
        ok = target.rank_of(image(s2)) - target.rank_of(image(s1)) <=
             source.rank_of(Subset(s2)) - source.rank_of(Subset(s1));
      }
    }
    if (ok) out.push_back(map);
    int i = n - 1;
    while (i >= 0 && map[static_cast<std::size_t>(i)] == m) {
      map[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++map[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace mlz::oracle

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

#include "mlz/polynomial.hpp"

#include <algorithm>
#include <set>

namespace mlz {
namespace {

std::vector<int> ground_vars(int n, bool with_x0) {
  std::vector<int> v;
  if (with_x0) v.push_back(0);
  for (int i = 1; i <= n; ++i) v.push_back(i);
  return v;
}

// Position of each variable in the active list, -1 when inactive.
std::vector<int> active_positions(const HomogPoly& p) {
  std::vector<int> pos(static_cast<std::size_t>(p.nvars()) + 1, -1);
  for (std::size_t k = 0; k < p.active().size(); ++k) {
    pos[static_cast<std::size_t>(p.active()[k])] = static_cast<int>(k);
  }
  return pos;
}

void check_point(const HomogPoly& p, const RationalPoint& a) {
  if (a.size() != p.active().size()) {
    throw PolyError("point has " + std::to_string(a.size()) +
                    " coordinates, polynomial has " +
                    std::to_string(p.active().size()) + " active variables");
  }
}

Rational power(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void add_scaled_into(HomogPoly& acc, const HomogPoly& q, const Rational& c) {
  if (c == 0) return;
  for (const auto& [key, coeff] : q.terms()) {
    acc.add_term(key.e0, key.vars, coeff * c);
  }
}

std::string monomial_string(const MonomialKey& key) {
  std::string s;
  if (key.e0 > 0) {
    s = "x0";
    if (key.e0 > 1) s += "^" + std::to_string(key.e0);
  }
  for (int e : key.vars.elements()) {
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string RationalPoint::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += mlz::to_string(coords[i]);
  }
  return s;
}

RationalPoint all_ones(std::size_t size) {
  return RationalPoint{std::vector<Rational>(size, Rational(1))};
}

HomogPoly::HomogPoly(int nvars, std::vector<int> active, int degree)
    : nvars_(nvars), active_(std::move(active)), degree_(degree) {
  std::sort(active_.begin(), active_.end());
  active_.erase(std::unique(active_.begin(), active_.end()), active_.end());
  for (int v : active_) {
    if (v < 0 || v > nvars_) {
      throw PolyError("active variable x" + std::to_string(v) +
                      " outside x0..x" + std::to_string(nvars_));
    }
    if (v > 0) active_mask_ = active_mask_.with(v);
  }
}

void HomogPoly::add_term(int e0, Subset vars, const Rational& c) {
  if (c == 0) return;
  if (e0 < 0 || e0 + vars.size() != degree_) {
    throw PolyError("term of degree " + std::to_string(e0 + vars.size()) +
                    " in a polynomial of degree " + std::to_string(degree_));
  }
  if ((e0 > 0 && !x0_active()) || !active_mask_.contains(vars)) {
    throw PolyError("term uses a variable that is not active");
  }
  auto [it, inserted] = terms_.try_emplace(MonomialKey{e0, vars}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational HomogPoly::coefficient(int e0, Subset vars) const {
  auto it = terms_.find(MonomialKey{e0, vars});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string HomogPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    const std::string mono = monomial_string(key);
    if (mono.empty()) {
      s += mlz::to_string(mag);
    } else if (mag == 1) {
      s += mono;
    } else {
      s += mlz::to_string(mag) + "*" + mono;
    }
    first = false;
  }
  return s;
}

std::string to_string(const HomogPoly& p) { return p.to_string(); }

HomogPoly basis_poly(const Matroid& m) {
  HomogPoly p(m.ground_size(), ground_vars(m.ground_size(), false), m.rank());
  for (Subset b : m.bases()) p.add_term(0, b, 1);
  return p;
}

HomogPoly indep_poly(const Matroid& m) {
  const int n = m.ground_size();
  HomogPoly p(n, ground_vars(n, true), n);
  for (int k = 0; k <= m.rank(); ++k) {
    for (Subset i : m.independent_sets(k)) p.add_term(n - k, i, 1);
  }
  return p;
}

HomogPoly reduced_indep_poly(const Matroid& m) {
  const int n = m.ground_size(), r = m.rank();
  HomogPoly p(n, ground_vars(n, true), r);
  for (int k = 0; k <= r; ++k) {
    const Rational c(factorial(n - k) / factorial(r - k));
    for (Subset i : m.independent_sets(k)) p.add_term(r - k, i, c);
  }
  return p;
}

HomogPoly f_slice(const Matroid& m, int k) {
  if (k < 0 || k > m.rank()) {
    throw PolyError("slice index " + std::to_string(k) + " outside 0.." +
                    std::to_string(m.rank()));
  }
  HomogPoly p(m.ground_size(), ground_vars(m.ground_size(), false), k);
  for (Subset i : m.independent_sets(k)) p.add_term(0, i, 1);
  return p;
}

HomogPoly partial(const HomogPoly& p, int var) {
  if (std::find(p.active().begin(), p.active().end(), var) ==
      p.active().end()) {
    throw PolyError("x" + std::to_string(var) + " is not an active variable");
  }
  HomogPoly out(p.nvars(), p.active(), p.degree() - 1);
  for (const auto& [key, c] : p.terms()) {
    if (var == 0) {
      if (key.e0 > 0) out.add_term(key.e0 - 1, key.vars, c * key.e0);
    } else if (key.vars.contains(var)) {
      out.add_term(key.e0, key.vars.without(var), c);
    }
  }
  return out;
}

HomogPoly partial0_power(const HomogPoly& p, int times) {
  HomogPoly out = p;
  for (int i = 0; i < times; ++i) out = partial(out, 0);
  return out;
}

HomogPoly linear_apply(const HomogPoly& p, const RationalPoint& c) {
  check_point(p, c);
  HomogPoly out(p.nvars(), p.active(), p.degree() - 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) add_scaled_into(out, partial(p, p.active()[k]), c[k]);
  }
  return out;
}

Rational eval(const HomogPoly& p, const RationalPoint& a) {
  check_point(p, a);
  const std::vector<int> pos = active_positions(p);
  const Rational x0 = p.x0_active() ? a[0] : Rational(0);
  Rational sum = 0;
  for (const auto& [key, c] : p.terms()) {
    Rational t = c * power(x0, key.e0);
    for (int e : key.vars.elements()) t *= a[static_cast<std::size_t>(pos[e])];
    sum += t;
  }
  return sum;
}

SymMatrix hessian_at(const HomogPoly& p, const RationalPoint& a) {
  if (p.degree() < 2) {
    throw PolyError("Hessian needs degree >= 2, got " +
                    std::to_string(p.degree()));
  }
  check_point(p, a);
  const std::vector<int> pos = active_positions(p);
  const Rational x0 = p.x0_active() ? a[0] : Rational(0);
  SymMatrix h(p.active().size());
  for (const auto& [key, c] : p.terms()) {
    const std::vector<int> vars = key.vars.elements();
    // Value of c * x0^e * prod(vars except those listed) at a.
    auto value_without = [&](int e0, int skip1, int skip2) {
      Rational t = c * power(x0, e0);
      for (int e : vars) {
        if (e != skip1 && e != skip2) t *= a[static_cast<std::size_t>(pos[e])];
      }
      return t;
    };
    if (key.e0 >= 2) {
      h.at(0, 0) += value_without(key.e0 - 2, 0, 0) * (key.e0 * (key.e0 - 1));
    }
    for (std::size_t u = 0; u < vars.size(); ++u) {
      const auto pu = static_cast<std::size_t>(pos[vars[u]]);
      if (key.e0 >= 1) {
        h.at(0, pu) += value_without(key.e0 - 1, vars[u], 0) * key.e0;
      }
      for (std::size_t v = u + 1; v < vars.size(); ++v) {
        const auto pv = static_cast<std::size_t>(pos[vars[v]]);
        h.at(pu, pv) += value_without(key.e0, vars[u], vars[v]);
      }
    }
  }
  return h;
}

RationalMatrix gradient_matrix(const HomogPoly& p) {
  if (p.degree() < 1) throw PolyError("gradient needs degree >= 1");
  std::vector<HomogPoly> partials;
  std::set<MonomialKey, MonomialOrder> columns;
  for (int v : p.active()) {
    partials.push_back(partial(p, v));
    for (const auto& [key, c] : partials.back().terms()) columns.insert(key);
  }
  RationalMatrix g(partials.size(), columns.size());
  for (std::size_t r = 0; r < partials.size(); ++r) {
    std::size_t col = 0;
    for (const MonomialKey& key : columns) {
      g(r, col++) = partials[r].coefficient(key.e0, key.vars);
    }
  }
  return g;
}

HomogPoly relabel(const HomogPoly& p, const std::vector<int>& labels,
                  int nvars) {
  auto map_set = [&](Subset s) {
    Subset out;
    for (int e : s.elements()) {
      if (e > static_cast<int>(labels.size())) {
        throw PolyError("no label for x" + std::to_string(e));
      }
      out = out.with(labels[static_cast<std::size_t>(e - 1)]);
    }
    return out;
  };
  std::vector<int> active;
  for (int v : p.active()) {
    active.push_back(v == 0 ? 0 : labels.at(static_cast<std::size_t>(v - 1)));
  }
  HomogPoly out(nvars, active, p.degree());
  for (const auto& [key, c] : p.terms()) {
    out.add_term(key.e0, map_set(key.vars), c);
  }
  return out;
}

HomogPoly substitute_class_sums(const HomogPoly& p,
                                const std::vector<Subset>& classes, int nvars,
                                int x0_shift) {
  std::vector<int> active;
  if (p.x0_active() || x0_shift > 0) active.push_back(0);
  Subset all;
  for (Subset c : classes) {
    if (!(all & c).empty()) throw PolyError("substitution classes overlap");
    all = all | c;
  }
  for (int e : all.elements()) active.push_back(e);
  HomogPoly out(nvars, active, p.degree() + x0_shift);
  for (const auto& [key, c] : p.terms()) {
    // Expand prod_{k in vars} (sum_{e in classes[k-1]} x_e).
    std::vector<Subset> partial_products{Subset()};
    for (int k : key.vars.elements()) {
      std::vector<Subset> next;
      for (Subset s : partial_products) {
        for (int e : classes.at(static_cast<std::size_t>(k - 1)).elements()) {
          next.push_back(s.with(e));
        }
      }
      partial_products = std::move(next);
    }
    for (Subset s : partial_products) out.add_term(key.e0 + x0_shift, s, c);
  }
  return out;
}

HomogPoly scaled(const HomogPoly& p, const Rational& c) {
  HomogPoly out(p.nvars(), p.active(), p.degree());
  add_scaled_into(out, p, c);
  return out;
}

HomogPoly times_x0_power(const HomogPoly& p, int power) {
  std::vector<int> active = p.active();
  active.push_back(0);
  HomogPoly out(p.nvars(), active, p.degree() + power);
  for (const auto& [key, c] : p.terms()) out.add_term(key.e0 + power, key.vars, c);
  return out;
}

}  // namespace mlz

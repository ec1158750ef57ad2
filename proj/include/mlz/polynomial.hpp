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

// Homogeneous polynomials in x0..xn that are multilinear in x1..xn. A term is
// keyed by the exponent of x0 and the set of x1..xn variables it contains,
// so only x0 can carry a power above one.

#ifndef MLZ_POLYNOMIAL_HPP_
#define MLZ_POLYNOMIAL_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlz/linalg.hpp"
#include "mlz/matroid.hpp"
#include "mlz/rational.hpp"
#include "mlz/subset.hpp"

namespace mlz {

class PolyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MonomialKey {
  int e0 = 0;
  Subset vars;
  bool operator==(const MonomialKey&) const = default;
};

// Text order: higher x0 power first, then ascending mask.
struct MonomialOrder {
  bool operator()(const MonomialKey& a, const MonomialKey& b) const {
    if (a.e0 != b.e0) return a.e0 > b.e0;
    return a.vars.mask() < b.vars.mask();
  }
};

// Coordinates for the active variables of a polynomial, in active order.
struct RationalPoint {
  std::vector<Rational> coords;

  std::size_t size() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  bool operator==(const RationalPoint&) const = default;
  std::string to_string() const;
};

RationalPoint all_ones(std::size_t size);

class HomogPoly {
 public:
  using TermMap = std::map<MonomialKey, Rational, MonomialOrder>;

  // The zero polynomial of the given degree over variables x0..x_nvars, of
  // which `active` (ascending) are declared.
  HomogPoly(int nvars, std::vector<int> active, int degree);

  // Adds c * x0^e0 * prod(vars) to the polynomial.
  void add_term(int e0, Subset vars, const Rational& c);

  int nvars() const { return nvars_; }
  const std::vector<int>& active() const { return active_; }
  bool x0_active() const { return !active_.empty() && active_.front() == 0; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int e0, Subset vars) const;

  // Compares degree and terms; the active declaration is not part of the
  // value.
  bool operator==(const HomogPoly& other) const {
    return degree_ == other.degree_ && terms_ == other.terms_;
  }

  // "3*x0^2 + 2*x0*x1 + x1*x2", "0" for the zero polynomial.
  std::string to_string() const;

 private:
  int nvars_;
  std::vector<int> active_;
  Subset active_mask_;  // active variables among x1..xn
  int degree_;
  TermMap terms_;
};

std::string to_string(const HomogPoly& p);

HomogPoly basis_poly(const Matroid& m);
HomogPoly indep_poly(const Matroid& m);
// Built from the expansion sum_k (n-k)!/(r-k)! x0^(r-k) f_k.
HomogPoly reduced_indep_poly(const Matroid& m);
HomogPoly f_slice(const Matroid& m, int k);

HomogPoly partial(const HomogPoly& p, int var);
// Repeated differentiation in x0.
HomogPoly partial0_power(const HomogPoly& p, int times);
// (sum_k c_k d/dx_{active[k]}) p
HomogPoly linear_apply(const HomogPoly& p, const RationalPoint& c);

Rational eval(const HomogPoly& p, const RationalPoint& a);
SymMatrix hessian_at(const HomogPoly& p, const RationalPoint& a);
// Rows follow the active variables; columns are the monomials of all first
// partials in text order.
RationalMatrix gradient_matrix(const HomogPoly& p);

// Variable k of p (1-based) becomes variable labels[k-1] of a polynomial over
// x0..x_nvars; x0 is kept.
HomogPoly relabel(const HomogPoly& p, const std::vector<int>& labels,
                  int nvars);

// Replaces variable k of p (1-based) by the sum of the variables in
// classes[k-1], then multiplies by x0^x0_shift. The classes must be disjoint.
HomogPoly substitute_class_sums(const HomogPoly& p,
                                const std::vector<Subset>& classes, int nvars,
                                int x0_shift);

HomogPoly scaled(const HomogPoly& p, const Rational& c);
HomogPoly times_x0_power(const HomogPoly& p, int power);

}  // namespace mlz

#endif  // MLZ_POLYNOMIAL_HPP_

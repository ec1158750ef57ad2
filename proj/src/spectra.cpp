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


#include "mlz/spectra.hpp"

namespace mlz {
namespace {

Rational bilinear(const SymMatrix& h, const RationalPoint& u,
                  const RationalPoint& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) s += u[i] * h(i, j) * v[j];
  }
  return s;
}

DegreeOneCheck base_check(const HomogPoly& p, const RationalPoint& a,
                          std::size_t grad_rank) {
  DegreeOneCheck c;
  c.gradient_rank = grad_rank;
  c.value = eval(p, a);
  const SymMatrix h = hessian_at(p, a);
  c.inertia = inertia(h);
  c.hessian_rank = static_cast<std::size_t>(c.inertia.pos + c.inertia.neg);
  return c;
}

}  // namespace

PointClass classify(const Inertia& in) {
  if (in.pos != 1) return PointClass::kNotLogConcave;
  return in.zero == 0 ? PointClass::kStrictLorentz
                      : PointClass::kLorentzDegenerate;
}

PointClass point_class(const HomogPoly& p, const RationalPoint& a) {
  return classify(inertia(hessian_at(p, a)));
}

std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::kStrictLorentz:
      return "StrictLorentz";
    case PointClass::kLorentzDegenerate:
      return "LorentzDegenerate";
    case PointClass::kNotLogConcave:
      return "NotLogConcave";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "true";
    case Verdict::kFails:
      return "false";
    case Verdict::kInapplicable:
      return "inapplicable";
  }
  return "?";
}

std::size_t gradient_rank(const HomogPoly& p) {
  return matrix_rank(gradient_matrix(p));
}

DegreeOneCheck check_slp1(const HomogPoly& p, const RationalPoint& a) {
  return check_slp1(p, a, gradient_rank(p));
}

DegreeOneCheck check_slp1(const HomogPoly& p, const RationalPoint& a,
                          std::size_t grad_rank) {
  DegreeOneCheck c = base_check(p, a, grad_rank);
  if (c.value <= 0) return c;
  c.verdict = c.hessian_rank == grad_rank ? Verdict::kHolds : Verdict::kFails;
  return c;
}

DegreeOneCheck check_hrr1(const HomogPoly& p, const RationalPoint& a) {
  return check_hrr1(p, a, gradient_rank(p));
}

DegreeOneCheck check_hrr1(const HomogPoly& p, const RationalPoint& a,
                          std::size_t grad_rank) {
  DegreeOneCheck c = base_check(p, a, grad_rank);
  if (c.value <= 0) return c;
  const int g = static_cast<int>(grad_rank);
  const int m = static_cast<int>(p.active().size());
  const Inertia want{1, g - 1, m - g};
  c.verdict = c.inertia == want ? Verdict::kHolds : Verdict::kFails;
  return c;
}

LorentzianWitness lorentzian_witness(const HomogPoly& p,
                                     const std::vector<RationalPoint>& points) {
  for (const RationalPoint& a : points) {
    if (a.size() != p.active().size()) {
      throw PolyError("sample point has the wrong number of coordinates");
    }
    for (const Rational& c : a.coords) {
      if (c <= 0) throw PolyError("sample point " + a.to_string() +
                                  " is not strictly positive");
    }
  }
  LorentzianWitness w;
  const int d = p.degree();
  if (d < 2) return w;
  Subset vars;
  for (int v : p.active()) {
    if (v > 0) vars = vars.with(v);
  }
  const int max_e0 = p.x0_active() ? d - 2 : 0;
  // Walk subsets of vars in increasing mask order.
  for (std::uint32_t sub = 0;; sub = (sub - vars.mask()) & vars.mask()) {
    const Subset s(sub);
    for (int e0 = 0; e0 <= max_e0 && e0 + s.size() <= d - 2; ++e0) {
      HomogPoly q = partial0_power(p, e0);
      for (int v : s.elements()) q = partial(q, v);
      ++w.derivatives;
      if (q.is_zero()) {
        ++w.zero_derivatives;
        continue;
      }
      if (q.degree() == 2) {
        ++w.quadratic_checks;
        const Inertia in = inertia(hessian_at(q, all_ones(q.active().size())));
        if (in.pos > 1) {
          w.passed = false;
          w.failure = WitnessFailure{e0, s, std::nullopt, in};
          return w;
        }
        continue;
      }
      for (const RationalPoint& a : points) {
        ++w.point_checks;
        const Inertia in = inertia(hessian_at(q, a));
        if (in.pos != 1) {
          w.passed = false;
          w.failure = WitnessFailure{e0, s, a, in};
          return w;
        }
      }
    }
    if (sub == vars.mask()) break;
  }
  return w;
}

PointSampler::PointSampler(std::uint64_t seed) : rng_(seed) {}

PointSampler::PointSampler(std::uint64_t seed, std::uint64_t index)
    : rng_(derive_seed(seed, index)) {}

Rational PointSampler::next() {
  const int num = dist_(rng_);
  const int den = dist_(rng_);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

RationalPoint PointSampler::positive(std::size_t size) {
  RationalPoint p;
  p.coords.reserve(size);
  for (std::size_t i = 0; i < size; ++i) p.coords.push_back(next());
  return p;
}

HodgePair hodge_pair_determinant(const HomogPoly& p, const RationalPoint& a,
                                 const RationalPoint& l1,
                                 const RationalPoint& l2) {
  return hodge_pair_determinant(hessian_at(p, a), gradient_matrix(p), l1, l2);
}

HodgePair hodge_pair_determinant(const SymMatrix& hessian,
                                 const RationalMatrix& gradient,
                                 const RationalPoint& l1,
                                 const RationalPoint& l2) {
  const std::size_t m = hessian.size();
  if (l1.size() != m || l2.size() != m || gradient.rows() != m) {
    throw PolyError("linear form has the wrong number of coefficients");
  }
  HodgePair h;
  h.q11 = bilinear(hessian, l1, l1);
  h.q12 = bilinear(hessian, l1, l2);
  h.q22 = bilinear(hessian, l2, l2);
  h.det = h.q11 * h.q22 - h.q12 * h.q12;
  if (h.q11 <= 0) return h;
  // Images of l1, l2 in the span of the partials.
  RationalMatrix images(2, gradient.cols());
  for (std::size_t c = 0; c < gradient.cols(); ++c) {
    for (std::size_t r = 0; r < m; ++r) {
      images(0, c) += l1[r] * gradient(r, c);
      images(1, c) += l2[r] * gradient(r, c);
    }
  }
  h.applicable = matrix_rank(images) == 2;
  return h;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (std::uint64_t{out[0]} << 32) | out[1];
}

}  // namespace mlz

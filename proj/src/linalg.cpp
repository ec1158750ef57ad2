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

#include "mlz/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace mlz {
namespace {

template <typename T>
using Dense = std::vector<std::vector<T>>;

// Berkowitz: p_r = T_r p_{r-1}, where T_r is lower-triangular Toeplitz with
// first column (1, -a_rr, -R C, -R A C, ..., -R A^{r-2} C). Only ring
// operations are used. Returns coefficients highest degree first.
template <typename T>
std::vector<T> berkowitz(const Dense<T>& a) {
  const std::size_t n = a.size();
  std::vector<T> p{T(1)};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<T> col(r + 2);
    col[0] = 1;
    col[1] = -a[r][r];
    std::vector<T> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a[i][r];
    for (std::size_t k = 0; k < r; ++k) {
      T dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += a[r][i] * v[i];
      col[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<T> next(r);
        for (std::size_t i = 0; i < r; ++i) {
          T s = 0;
          for (std::size_t j = 0; j < r; ++j) s += a[i][j] * v[j];
          next[i] = std::move(s);
        }
        v = std::move(next);
      }
    }
    std::vector<T> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      T s = 0;
      for (std::size_t j = 0; j <= std::min(i, r); ++j) s += col[i - j] * p[j];
      next[i] = std::move(s);
    }
    p = std::move(next);
  }
  return p;
}

// Multiplies every entry by the lcm of all denominators.
Dense<Integer> integer_scaled(const SymMatrix& a) {
  Integer l = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    }
  }
  Dense<Integer> out(a.size(), std::vector<Integer>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Integer v = a(i, j).get_num() * (l / a(i, j).get_den());
      out[i][j] = v;
      out[j][i] = v;
    }
  }
  return out;
}

// Rank by Bareiss elimination; every intermediate entry is a minor, so each
// division is exact.
std::size_t bareiss_rank(Dense<Integer> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

RationalMatrix SymMatrix::to_dense() const {
  RationalMatrix out(size_, size_);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) out(i, j) = (*this)(i, j);
  }
  return out;
}

std::string Inertia::to_string() const {
  return "(+" + std::to_string(pos) + ",-" + std::to_string(neg) + "," +
         std::to_string(zero) + "z)";
}

std::string Inertia::to_plain_string() const {
  return "(" + std::to_string(pos) + "," + std::to_string(neg) + "," +
         std::to_string(zero) + ")";
}

std::vector<Rational> char_poly(const RationalMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  }
  Dense<Rational> d(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) d[i][j] = a(i, j);
  }
  std::vector<Rational> p = berkowitz(d);
  std::reverse(p.begin(), p.end());
  return p;
}

std::vector<Rational> char_poly(const SymMatrix& a) {
  return char_poly(a.to_dense());
}

Inertia inertia_from_char_poly(const std::vector<Rational>& coeffs) {
  Inertia in;
  const int size = static_cast<int>(coeffs.size()) - 1;
  while (in.zero < size && coeffs[static_cast<std::size_t>(in.zero)] == 0) {
    ++in.zero;
  }
  int last_sign = 0;
  for (const Rational& c : coeffs) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) ++in.pos;
    last_sign = s;
  }
  in.neg = size - in.pos - in.zero;
  return in;
}

Inertia inertia(const SymMatrix& a) {
  // Scaling by a positive integer leaves the inertia unchanged and keeps the
  // recurrence in integers.
  std::vector<Integer> p = berkowitz(integer_scaled(a));
  std::vector<Rational> coeffs(p.rbegin(), p.rend());
  return inertia_from_char_poly(coeffs);
}

std::size_t matrix_rank(const RationalMatrix& a) {
  Dense<Integer> m(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
    }
  }
  return bareiss_rank(std::move(m));
}

std::size_t matrix_rank(const SymMatrix& a) {
  return bareiss_rank(integer_scaled(a));
}

}  // namespace mlz

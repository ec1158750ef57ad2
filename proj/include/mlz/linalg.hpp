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

// Exact dense linear algebra over the rationals: rank by fraction-free
// elimination, characteristic polynomials by the division-free Berkowitz
// recurrence, and inertia of symmetric matrices from Descartes' rule (exact
// because a symmetric matrix has a real-rooted characteristic polynomial).

#ifndef MLZ_LINALG_HPP_
#define MLZ_LINALG_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "mlz/rational.hpp"

namespace mlz {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Symmetric matrix, lower triangle stored row by row.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t size)
      : size_(size), data_(size * (size + 1) / 2) {}

  std::size_t size() const { return size_; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[index(i, j)];
  }
  Rational& at(std::size_t i, std::size_t j) { return data_[index(i, j)]; }

  RationalMatrix to_dense() const;
  bool operator==(const SymMatrix&) const = default;

 private:
  static std::size_t index(std::size_t i, std::size_t j) {
    return i >= j ? i * (i + 1) / 2 + j : j * (j + 1) / 2 + i;
  }
  std::size_t size_ = 0;
  std::vector<Rational> data_;
};

struct Inertia {
  int pos = 0;
  int neg = 0;
  int zero = 0;

  int size() const { return pos + neg + zero; }
  // "(+1,-2,0z)"
  std::string to_string() const;
  // "(1,2,0)"
  std::string to_plain_string() const;
  bool operator==(const Inertia&) const = default;
};

// Coefficients of det(lambda*I - A), lowest degree first; the last entry is 1.
std::vector<Rational> char_poly(const SymMatrix& a);
std::vector<Rational> char_poly(const RationalMatrix& a);

// Zero part from the trailing zero coefficients, positive part from sign
// variations. Only meaningful for real-rooted polynomials.
Inertia inertia_from_char_poly(const std::vector<Rational>& coeffs);

Inertia inertia(const SymMatrix& a);

std::size_t matrix_rank(const RationalMatrix& a);
std::size_t matrix_rank(const SymMatrix& a);

}  // namespace mlz

#endif  // MLZ_LINALG_HPP_

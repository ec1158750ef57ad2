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

#ifndef MLZ_RATIONAL_HPP_
#define MLZ_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mlz {

using Integer = mpz_class;
using Rational = mpq_class;

// Exact decimal rendering: "7", "-3", "2/3".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Parses "p/q", "p" or "-p/q" into a canonical rational. Throws
// std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// Comma separated list of rationals, e.g. "0,1,3/2".
std::vector<Rational> parse_rational_list(std::string_view text);

Integer binomial(int n, int k);
Integer factorial(int n);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

}  // namespace mlz

#endif  // MLZ_RATIONAL_HPP_

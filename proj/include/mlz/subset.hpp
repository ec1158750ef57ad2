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

#ifndef MLZ_SUBSET_HPP_
#define MLZ_SUBSET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mlz {

// A subset of the ground set {1..n}. Element e lives in bit e-1.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t mask) : mask_(mask) {}
  Subset(std::initializer_list<int> elements) {
    for (int e : elements) mask_ |= bit(e);
  }

  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }
  static constexpr Subset singleton(int e) { return Subset(bit(e)); }
  static Subset from_elements(const std::vector<int>& elements) {
    Subset s;
    for (int e : elements) s.mask_ |= bit(e);
    return s;
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int e) const { return (mask_ & bit(e)) != 0; }
  constexpr bool contains(Subset other) const {
    return (other.mask_ & ~mask_) == 0;
  }
  // Largest element, 0 for the empty set.
  constexpr int max_element() const {
    return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_);
  }
  constexpr int min_element() const {
    return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1;
  }

  constexpr Subset with(int e) const { return Subset(mask_ | bit(e)); }
  constexpr Subset without(int e) const { return Subset(mask_ & ~bit(e)); }

  constexpr Subset operator|(Subset o) const { return Subset(mask_ | o.mask_); }
  constexpr Subset operator&(Subset o) const { return Subset(mask_ & o.mask_); }
  // Set difference.
  constexpr Subset operator-(Subset o) const {
    return Subset(mask_ & ~o.mask_);
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m) + 1);
    }
    return out;
  }

  // "{1,3}" style rendering.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ',';
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  constexpr auto operator<=>(const Subset&) const = default;

 private:
  static constexpr std::uint32_t bit(int e) {
    return std::uint32_t{1} << (e - 1);
  }
  std::uint32_t mask_ = 0;
};

// Lexicographic order on the sorted element lists: {1,4} < {2,3}, {1} < {1,2}.
inline bool lex_less(Subset a, Subset b) {
  std::uint32_t x = a.mask(), y = b.mask();
  while (x != 0 && y != 0) {
    int ex = std::countr_zero(x), ey = std::countr_zero(y);
    if (ex != ey) return ex < ey;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

// Canonical order for flats and similar families: by size, then by mask.
inline bool size_then_mask_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.mask() < b.mask();
}

// Lexicographic comparison of two families already in lex_less order.
inline bool family_lex_less(const std::vector<Subset>& a,
                            const std::vector<Subset>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return lex_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

}  // namespace mlz

#endif  // MLZ_SUBSET_HPP_

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

#include "mlz/enumerate.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mlz {
namespace {

// The r-subsets of {1..n} and a reverse index, shared by every family test.
class FamilySpace {
 public:
  FamilySpace(int n, int r) : index_(std::size_t{1} << n, -1) {
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
      if (std::popcount(s) == r) {
        index_[s] = static_cast<int>(subsets_.size());
        subsets_.push_back(s);
      }
    }
  }

  int count() const { return static_cast<int>(subsets_.size()); }

  bool satisfies_exchange(std::uint64_t family) const {
    auto in_family = [&](std::uint32_t s) {
      return (family >> index_[s]) & 1u;
    };
    for (std::uint64_t f1 = family; f1 != 0; f1 &= f1 - 1) {
      const std::uint32_t b1 = subsets_[std::countr_zero(f1)];
      for (std::uint64_t f2 = family; f2 != 0; f2 &= f2 - 1) {
        const std::uint32_t b2 = subsets_[std::countr_zero(f2)];
        if (b1 == b2) continue;
        for (std::uint32_t xs = b1 & ~b2; xs != 0; xs &= xs - 1) {
          const std::uint32_t x = xs & (~xs + 1);
          bool found = false;
          for (std::uint32_t ys = b2 & ~b1; ys != 0; ys &= ys - 1) {
            const std::uint32_t y = ys & (~ys + 1);
            if (in_family((b1 & ~x) | y)) {
              found = true;
              break;
            }
          }
          if (!found) return false;
        }
      }
    }
    return true;
  }

  std::vector<Subset> bases(std::uint64_t family) const {
    std::vector<Subset> out;
    for (std::uint64_t f = family; f != 0; f &= f - 1) {
      out.emplace_back(subsets_[std::countr_zero(f)]);
    }
    return out;
  }

 private:
  std::vector<std::uint32_t> subsets_;
  std::vector<int> index_;
};

std::vector<std::uint64_t> accepted_families(const FamilySpace& space,
                                             Execution execution) {
  const std::int64_t total = std::int64_t{1} << space.count();
  std::vector<std::uint64_t> accepted;
  if (execution == Execution::kSerial) {
    for (std::int64_t f = 1; f < total; ++f) {
      if (space.satisfies_exchange(static_cast<std::uint64_t>(f))) {
        accepted.push_back(static_cast<std::uint64_t>(f));
      }
    }
    return accepted;
  }
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 4096) nowait
    for (std::int64_t f = 1; f < total; ++f) {
      if (space.satisfies_exchange(static_cast<std::uint64_t>(f))) {
        local.push_back(static_cast<std::uint64_t>(f));
      }
    }
#pragma omp critical
    accepted.insert(accepted.end(), local.begin(), local.end());
  }
  std::sort(accepted.begin(), accepted.end());
  return accepted;
}

}  // namespace

bool family_satisfies_exchange(int n, int r, std::uint64_t family) {
  return FamilySpace(n, r).satisfies_exchange(family);
}

std::vector<Matroid> enumerate_matroids(int n, std::optional<int> rank,
                                        Execution execution) {
  if (n < 1 || n > kMaxEnumerationGround) {
    throw MatroidError(MatroidErrorKind::kOutOfRange,
                       "enumeration supports 1 <= n <= " +
                           std::to_string(kMaxEnumerationGround));
  }
  std::vector<Matroid> out;
  for (int r = 0; r <= n; ++r) {
    if (rank && *rank != r) continue;
    FamilySpace space(n, r);
    std::vector<Matroid> this_rank;
    for (std::uint64_t f : accepted_families(space, execution)) {
      this_rank.push_back(make_matroid_unchecked(n, space.bases(f)));
    }
    std::sort(this_rank.begin(), this_rank.end(),
              [](const Matroid& a, const Matroid& b) {
                return family_lex_less(a.bases(), b.bases());
              });
    for (Matroid& m : this_rank) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace mlz

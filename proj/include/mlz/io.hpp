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


// JSON forms of matroids, morphisms, polynomials and inertia triples.

#ifndef MLZ_IO_HPP_
#define MLZ_IO_HPP_

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "mlz/linalg.hpp"
#include "mlz/matroid.hpp"
#include "mlz/morphism.hpp"
#include "mlz/polynomial.hpp"

namespace mlz {

// Malformed input; what() names the offending field.
class InputError : public std::invalid_argument {
 public:
  InputError(const std::string& field, const std::string& problem)
      : std::invalid_argument(field + ": " + problem), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

nlohmann::json subset_to_json(Subset s);

// {"n": 4, "bases": [[1,3],[1,4],[2,3],[2,4]]}
nlohmann::json matroid_to_json(const Matroid& m);
// Throws InputError for shape problems and MatroidError for axiom failures.
Matroid matroid_from_json(const nlohmann::json& j, const std::string& field = "");

// {"vertices": 3, "edges": [[1,2],[1,3],[2,3]]}
Matroid graphic_from_json(const nlohmann::json& j);

// {"source": ..., "target": ..., "map": [2,1,1]}
nlohmann::json morphism_to_json(const MatroidMorphism& phi);
MatroidMorphism morphism_from_json(const nlohmann::json& j);

// [{"e0": 2, "vars": [], "c": "3"}, ...] in text order.
nlohmann::json poly_to_json(const HomogPoly& p);

// {"pos": 1, "neg": 2, "zero": 0}
nlohmann::json inertia_to_json(const Inertia& in);

nlohmann::json point_to_json(const RationalPoint& a);

// Parses text, reporting syntax errors against `field`.
nlohmann::json parse_json_text(const std::string& text, const std::string& field);

}  // namespace mlz

#endif  // MLZ_IO_HPP_

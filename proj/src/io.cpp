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


#include "mlz/io.hpp"

#include <algorithm>

namespace mlz {
namespace {

using nlohmann::json;

std::string join(const std::string& prefix, const std::string& field) {
  return prefix.empty() ? field : prefix + "." + field;
}

const json& require(const json& j, const std::string& prefix,
                    const std::string& key) {
  if (!j.is_object()) throw InputError(prefix.empty() ? "input" : prefix, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(join(prefix, key), "missing");
  return *it;
}

int require_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw InputError(field, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) throw InputError(field, "out of range");
  return static_cast<int>(v);
}

}  // namespace

json subset_to_json(Subset s) { return s.elements(); }

json matroid_to_json(const Matroid& m) {
  json bases = json::array();
  for (Subset b : m.bases()) bases.push_back(subset_to_json(b));
  return json{{"n", m.ground_size()}, {"bases", bases}};
}

Matroid matroid_from_json(const json& j, const std::string& field) {
  const int n = require_int(require(j, field, "n"), join(field, "n"));
  if (n < 1 || n > Matroid::kMaxGround) {
    throw InputError(join(field, "n"), "must be in 1.." +
                                           std::to_string(Matroid::kMaxGround));
  }
  const json& bases = require(j, field, "bases");
  const std::string bf = join(field, "bases");
  if (!bases.is_array()) throw InputError(bf, "expected an array");
  std::vector<Subset> candidate;
  for (std::size_t b = 0; b < bases.size(); ++b) {
    const std::string ef = bf + "[" + std::to_string(b) + "]";
    if (!bases[b].is_array()) throw InputError(ef, "expected an array");
    Subset s;
    for (std::size_t e = 0; e < bases[b].size(); ++e) {
      const std::string xf = ef + "[" + std::to_string(e) + "]";
      const int x = require_int(bases[b][e], xf);
      if (x < 1 || x > n) {
        throw InputError(xf, "element " + std::to_string(x) + " outside 1.." +
                                 std::to_string(n));
      }
      if (s.contains(x)) throw InputError(xf, "repeated element");
      s = s.with(x);
    }
    candidate.push_back(s);
  }
  return validate_bases(n, candidate);
}

Matroid graphic_from_json(const json& j) {
  const int v = require_int(require(j, "", "vertices"), "vertices");
  if (v < 1) throw InputError("vertices", "must be positive");
  const json& edges = require(j, "", "edges");
  if (!edges.is_array()) throw InputError("edges", "expected an array");
  std::vector<std::pair<int, int>> list;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string ef = "edges[" + std::to_string(e) + "]";
    if (!edges[e].is_array() || edges[e].size() != 2) {
      throw InputError(ef, "expected a pair of vertices");
    }
    const int a = require_int(edges[e][0], ef + "[0]");
    const int b = require_int(edges[e][1], ef + "[1]");
    for (int x : {a, b}) {
      if (x < 1 || x > v) {
        throw InputError(ef, "vertex " + std::to_string(x) + " outside 1.." +
                                 std::to_string(v));
      }
    }
    list.emplace_back(a, b);
  }
  if (list.empty()) throw InputError("edges", "empty");
  return graphic(v, list);
}

json morphism_to_json(const MatroidMorphism& phi) {
  return json{{"source", matroid_to_json(phi.source())},
              {"target", matroid_to_json(phi.target())},
              {"map", phi.map()}};
}

MatroidMorphism morphism_from_json(const json& j) {
  const Matroid source = matroid_from_json(require(j, "", "source"), "source");
  const Matroid target = matroid_from_json(require(j, "", "target"), "target");
  const json& map = require(j, "", "map");
  if (!map.is_array()) throw InputError("map", "expected an array");
  if (static_cast<int>(map.size()) != source.ground_size()) {
    throw InputError("map", "expected " + std::to_string(source.ground_size()) +
                                " entries");
  }
  std::vector<int> values;
  for (std::size_t i = 0; i < map.size(); ++i) {
    const std::string f = "map[" + std::to_string(i) + "]";
    const int v = require_int(map[i], f);
    if (v < 1 || v > target.ground_size()) {
      throw InputError(f, "value " + std::to_string(v) + " outside 1.." +
                              std::to_string(target.ground_size()));
    }
    values.push_back(v);
  }
  return validate_morphism(source, target, values);
}

json poly_to_json(const HomogPoly& p) {
  json out = json::array();
  for (const auto& [key, c] : p.terms()) {
    out.push_back(json{{"e0", key.e0},
                       {"vars", subset_to_json(key.vars)},
                       {"c", to_string(c)}});
  }
  return out;
}

json inertia_to_json(const Inertia& in) {
  return json{{"pos", in.pos}, {"neg", in.neg}, {"zero", in.zero}};
}

json point_to_json(const RationalPoint& a) {
  json out = json::array();
  for (const Rational& c : a.coords) out.push_back(to_string(c));
  return out;
}

json parse_json_text(const std::string& text, const std::string& field) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(field, std::string("invalid JSON at byte ") +
                                std::to_string(e.byte));
  }
}

}  // namespace mlz

// Copyright 2026 The modsym Authors.
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

// File formats.
//
// Cover files (schema_version 1):
//
//   {"schema_version": 1, "kind": "rect" | "box", "m": 6,
//    "factors": [[2, 1], [3, 1]], "n": 16, "k": 2,
//    "items": [{"parts": [[1, 5], [2, 3]], "weight": 2}, ...],
//    "meta": {...}}
//
// Rectangles are boxes with k = 2 (parts = [I, J]). Weights are canonical,
// in 1..m-1. "meta" records the construction parameters (N, g, u, b,
// strategy, seed, BBR coefficients) so a verifier never re-derives them.
//
// Circuit files carry "gates": [{"forms": [[[group, index, coeff], ...],
// ...], "repetition": w}] over "groups" x "n" variables, group 0-based and
// index 1-based.

#ifndef MODSYM_SERIALIZE_H_
#define MODSYM_SERIALIZE_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "modsym/circuit.h"
#include "modsym/cover2d.h"
#include "modsym/coverkd.h"

namespace modsym {

inline constexpr int kSchemaVersion = 1;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json meta_for(const S2Construction& s);
nlohmann::json meta_for(const SkConstruction& s,
                        const HashFamilyOptions& options);

nlohmann::json cover_to_json(const WeightedRectCover& cover,
                             const nlohmann::json& meta = nlohmann::json::object());
nlohmann::json cover_to_json(const WeightedBoxCover& cover,
                             const nlohmann::json& meta = nlohmann::json::object());

struct CoverFile {
  std::string kind;  // "rect" or "box"
  std::optional<WeightedRectCover> rect;
  std::optional<WeightedBoxCover> box;  // also set for rect files (k = 2)
  nlohmann::json meta;
};

// Throws SchemaError on any structural or range problem.
CoverFile cover_from_json(const nlohmann::json& j);

nlohmann::json circuit_to_json(const SigmaPiSigmaCircuit& c);

// The complete-graph export of a symmetric rectangle cover: each rectangle
// becomes the complete bipartite graph K_{I,J} on vertices 1..n, repeated
// weight * 2^{-1} mod m times, so that every edge {i, j} is covered a
// number of times that is 1 modulo some prime power of m.
struct BipartiteGraph {
  Rectangle rect;
  std::uint64_t repetition = 0;
};

struct EdgeCount {
  std::uint32_t i = 0;  // i < j
  std::uint32_t j = 0;
  std::uint64_t count = 0;
  std::optional<std::size_t> factor;  // first factor with count = 1 mod q
};

struct BipartiteExport {
  std::vector<BipartiteGraph> graphs;
  std::vector<EdgeCount> edges;  // all C(n, 2) edges, lexicographic
};

// Throws UnsupportedModulusError for even m: halving the symmetrized
// counts needs 2 to be a unit.
BipartiteExport make_bipartite_export(const WeightedRectCover& cover);

std::string to_dot(const BipartiteGraph& g, const std::string& name);

// "i,j,count,factor_index,prime_power" with factor_index 1-based (0 when
// the count is 1 modulo no factor).
std::string edges_to_csv(const BipartiteExport& e, const Modulus& mod);

std::string to_text(const S2Report& report);
std::string to_text(const SkReport& report);

}  // namespace modsym

#endif  // MODSYM_SERIALIZE_H_

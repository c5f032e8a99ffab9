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

// Box covers of the k-dimensional tensor {x^1_{j_1} ... x^k_{j_k}}.
//
// The initial cover comes from a perfect hash family H (u rows, n columns,
// entries in 0..b-1, every k columns separated by some row): for a row i and
// an injective sigma : {1..k} -> {0..b-1}, box R(i, sigma) has parts
// A_l = {j : h_ij = sigma(l)}. A tuple with pairwise distinct indices is
// covered once per row that separates it; a tuple with a repeated index is
// never covered.

#ifndef MODSYM_COVERKD_H_
#define MODSYM_COVERKD_H_

#include <cstdint>
#include <string>
#include <vector>

#include "modsym/cover2d.h"
#include "modsym/index_set.h"
#include "modsym/sympoly.h"
#include "modsym/zmod.h"

namespace modsym {

struct HashMatrix {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t b = 0;
  std::vector<std::vector<std::uint32_t>> rows;  // u rows of n entries

  std::size_t u() const { return rows.size(); }
};

enum class HashStrategy { kGreedy, kRandomized };

std::string to_string(HashStrategy s);
// "greedy" / "randomized"; throws std::invalid_argument otherwise.
HashStrategy parse_hash_strategy(const std::string& s);

struct HashFamilyOptions {
  HashStrategy strategy = HashStrategy::kGreedy;
  std::uint64_t seed = 1;
  // Random candidate rows scored per greedy step.
  std::uint32_t candidates = 64;
  // Give up after this many rows.
  std::uint32_t max_rows = 4096;
};

// Greedy: each step adds, among `candidates` random rows, the one that
// separates the most still-unseparated k-subsets (first index wins ties).
// Randomized: adds uniform random rows until every k-subset is separated.
// Both verify the result before returning.
//
// Throws std::invalid_argument unless 2 <= k <= b and k <= n, and
// ConstructionFailedError when max_rows is reached.
HashMatrix build_hash_family(std::uint32_t n, std::uint32_t k, std::uint32_t b,
                             const HashFamilyOptions& options = {});

struct HashVerdict {
  std::uint64_t subsets_checked = 0;
  // Unseparated k-subsets, 1-based, increasing.
  std::vector<std::vector<std::uint32_t>> failing;

  bool pass() const { return failing.empty(); }
};

// Exhaustive over all C(n, k) column subsets.
HashVerdict verify_hash_family(const HashMatrix& h);

struct Box {
  std::vector<IndexSet> parts;  // A_1..A_k

  bool empty() const;
  bool contains(std::span<const std::uint32_t> tuple) const;
  Box& operator&=(const Box& o);
  bool operator==(const Box&) const = default;
};

struct WeightedBox {
  Box box;
  Residue weight = 0;
};

class WeightedBoxCover {
 public:
  WeightedBoxCover(std::uint32_t n, std::uint32_t k, Modulus mod)
      : n_(n), k_(k), mod_(std::move(mod)) {}

  // As WeightedRectCover::add.
  void add(Box box, std::uint64_t weight);

  std::uint32_t n() const { return n_; }
  std::uint32_t k() const { return k_; }
  const Modulus& mod() const { return mod_; }
  const std::vector<WeightedBox>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool unit_weights() const;
  std::uint64_t repetition_count() const;

 private:
  std::uint32_t n_;
  std::uint32_t k_;
  Modulus mod_;
  std::vector<WeightedBox> items_;
};

// One unit-weight box per (row, injective sigma) with all parts nonempty;
// rows in order, sigma in lexicographic order.
WeightedBoxCover initial_box_cover(const HashMatrix& h, const Modulus& mod);

// Throws std::invalid_argument for a wrong-length tuple or an index
// outside 1..n.
Residue box_multiplicity(const WeightedBoxCover& cover,
                         std::span<const std::uint32_t> tuple);

// Same contract as transform() with componentwise intersection.
WeightedBoxCover transform_boxes(const WeightedBoxCover& cover,
                                 const SymmetricPolynomial& f);

struct TupleViolation {
  std::vector<std::uint32_t> tuple;
  Residue multiplicity = 0;
};

struct SkVerifyOptions {
  // Exhaustive when n^k <= this, otherwise sampled.
  std::uint64_t exhaustive_cap = 10'000'000;
  std::uint64_t sample_size = 200'000;
  std::uint64_t seed = 1;
  // Only the first this-many violations are recorded.
  std::size_t max_recorded = 1000;
};

struct SkReport {
  bool exhaustive = true;
  std::uint64_t tuples_checked = 0;
  std::uint64_t seed = 0;  // meaningful only when sampled
  std::uint64_t violation_count = 0;
  std::vector<TupleViolation> violations;

  bool pass() const { return violation_count == 0; }
};

// Tuples with a repeated index must be covered 0 times mod m; tuples with
// distinct indices must satisfy is_partial_one().
SkReport verify_sk_properties(const WeightedBoxCover& cover,
                              const SkVerifyOptions& options = {});

struct SkConstruction {
  HashMatrix hash;
  WeightedBoxCover initial;
  SymmetricPolynomial f;
  WeightedBoxCover cover;
};

// hash family -> initial boxes -> bbr_construct(d = u, ell = #boxes) ->
// transform_boxes. b = 0 selects the default alphabet 2k.
SkConstruction build_sk_cover(std::uint32_t n, std::uint32_t k,
                              const Modulus& mod, std::uint32_t b = 0,
                              const HashFamilyOptions& options = {});

// Views between the two cover kinds (k = 2 boxes are rectangles).
WeightedRectCover to_rect_cover(const WeightedBoxCover& cover);
WeightedBoxCover to_box_cover(const WeightedRectCover& cover);

}  // namespace modsym

#endif  // MODSYM_COVERKD_H_

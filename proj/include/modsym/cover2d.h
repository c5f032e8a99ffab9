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

// Rectangle covers of the n x n monomial matrix {x_i y_j}.
//
// A rectangle R(I, J) stands for the bilinear product
// (sum_{i in I} x_i)(sum_{j in J} y_j); a weighted multiset of rectangles
// therefore computes the bilinear form whose x_i y_j coefficient is the
// weighted number of rectangles covering cell (i, j).
//
// The pipeline is: initial_cover() covers every off-diagonal cell (i, j)
// exactly H(i, j) times, H the Hamming distance of the base-N digit strings
// of i and j; transform() replaces the cover by the weighted intersections
// prescribed by a symmetric polynomial f, after which cell (i, j) is covered
// fhat(H(i, j)) times.

#ifndef MODSYM_COVER2D_H_
#define MODSYM_COVER2D_H_

#include <cstdint>
#include <string>
#include <vector>

#include "modsym/index_set.h"
#include "modsym/sympoly.h"
#include "modsym/zmod.h"

namespace modsym {

struct DigitScheme {
  std::uint32_t n = 0;
  std::uint32_t base = 0;    // N
  std::uint32_t digits = 0;  // g, smallest with N^g >= n + 1

  // Base-N digit t (1 = least significant) of the index value i.
  std::uint32_t digit(std::uint32_t i, std::uint32_t t) const;
  std::uint32_t hamming(std::uint32_t i, std::uint32_t j) const;
};

// N = max(2, ceil(log2 n)), g = ceil(log_N(n + 1)).
// Throws std::invalid_argument for n < 2.
DigitScheme digit_scheme(std::uint32_t n);

struct Rectangle {
  IndexSet rows;  // I, the x side
  IndexSet cols;  // J, the y side

  bool empty() const { return rows.empty() || cols.empty(); }
  bool contains(std::uint32_t i, std::uint32_t j) const {
    return rows.contains(i) && cols.contains(j);
  }
  Rectangle& operator&=(const Rectangle& o) {
    rows &= o.rows;
    cols &= o.cols;
    return *this;
  }
  bool operator==(const Rectangle&) const = default;
};

struct WeightedRect {
  Rectangle rect;
  Residue weight = 0;
};

class WeightedRectCover {
 public:
  WeightedRectCover(std::uint32_t n, Modulus mod)
      : n_(n), mod_(std::move(mod)) {}

  // Reduces the weight mod m. Empty rectangles and zero weights are not
  // stored. Throws std::invalid_argument for a rectangle over another n.
  void add(Rectangle rect, std::uint64_t weight);

  std::uint32_t n() const { return n_; }
  const Modulus& mod() const { return mod_; }
  const std::vector<WeightedRect>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool unit_weights() const;

  // Sum of the weights as integers: the number of rectangles when each
  // item is repeated weight-many times.
  std::uint64_t repetition_count() const;

 private:
  std::uint32_t n_;
  Modulus mod_;
  std::vector<WeightedRect> items_;
};

// The rectangles R(I_t^l, J_t^l), I_t^l = {i : i_t = l},
// J_t^l = {j : j_t != l}, t = 1..g, l = 0..N-1, empty ones dropped.
WeightedRectCover initial_cover(std::uint32_t n, const Modulus& mod);

// Weighted count mod m of the rectangles containing (i, j).
// Throws std::invalid_argument for an index outside 1..n.
Residue multiplicity(const WeightedRectCover& cover, std::uint32_t i,
                     std::uint32_t j);

// All n^2 multiplicities, row-major: entry (i - 1) * n + (j - 1).
std::vector<Residue> multiplicity_table(const WeightedRectCover& cover);

// For each K with 1 <= |K| <= deg f and c_{|K|} != 0, the intersection of
// the rectangles in K with weight c_{|K|}, in lexicographic order of K.
// Requires unit weights, f.ell() == cover.size(), c_0 == 0 and a matching
// modulus; throws std::invalid_argument otherwise.
WeightedRectCover transform(const WeightedRectCover& cover,
                            const SymmetricPolynomial& f);

struct CellViolation {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  Residue multiplicity = 0;
};

struct S2Report {
  std::uint32_t n = 0;
  std::uint64_t cells_checked = 0;
  std::vector<CellViolation> violations;

  bool pass() const { return violations.empty(); }
};

// Diagonal cells must be covered 0 times mod m; an off-diagonal cell must
// be covered 1 time modulo some prime power of m and 0 or 1 times modulo
// each of them.
S2Report verify_s2_properties(const WeightedRectCover& cover);

struct S2Construction {
  DigitScheme scheme;
  WeightedRectCover initial;
  SymmetricPolynomial f;
  WeightedRectCover cover;
};

// initial_cover -> bbr_construct(d = g, ell = #initial) -> transform.
// Throws UnsupportedModulusError for prime-power m.
S2Construction build_s2_cover(std::uint32_t n, const Modulus& mod);

}  // namespace modsym

#endif  // MODSYM_COVER2D_H_

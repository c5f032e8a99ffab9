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

#include "modsym/cover2d.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "modsym/intersections.h"

namespace modsym {

std::uint32_t DigitScheme::digit(std::uint32_t i, std::uint32_t t) const {
  std::uint64_t v = i;
  for (std::uint32_t s = 1; s < t; ++s) v /= base;
  return static_cast<std::uint32_t>(v % base);
}

std::uint32_t DigitScheme::hamming(std::uint32_t i, std::uint32_t j) const {
  std::uint32_t h = 0;
  for (std::uint32_t t = 0; t < digits; ++t) {
    if (i % base != j % base) ++h;
    i /= base;
    j /= base;
  }
  return h;
}

DigitScheme digit_scheme(std::uint32_t n) {
  if (n < 2) {
    throw std::invalid_argument("n must be >= 2, got " + std::to_string(n));
  }
  // ceil(log2 n) is the bit width of n - 1.
  const auto log2n = static_cast<std::uint32_t>(std::bit_width(n - 1));
  DigitScheme s{n, std::max<std::uint32_t>(2, log2n), 0};
  std::uint64_t capacity = 1;
  while (capacity < std::uint64_t{n} + 1) {
    capacity *= s.base;
    ++s.digits;
  }
  return s;
}

void WeightedRectCover::add(Rectangle rect, std::uint64_t weight) {
  if (rect.rows.universe() != n_ || rect.cols.universe() != n_) {
    throw std::invalid_argument("rectangle over a different index range");
  }
  const Residue w = mod_.reduce(weight);
  if (w == 0 || rect.empty()) return;
  items_.push_back({std::move(rect), w});
}

bool WeightedRectCover::unit_weights() const {
  return std::all_of(items_.begin(), items_.end(),
                     [](const WeightedRect& it) { return it.weight == 1; });
}

std::uint64_t WeightedRectCover::repetition_count() const {
  std::uint64_t total = 0;
  for (const WeightedRect& it : items_) total += it.weight;
  return total;
}

WeightedRectCover initial_cover(std::uint32_t n, const Modulus& mod) {
  const DigitScheme s = digit_scheme(n);
  WeightedRectCover cover(n, mod);
  for (std::uint32_t t = 1; t <= s.digits; ++t) {
    for (std::uint32_t l = 0; l < s.base; ++l) {
      Rectangle r{IndexSet(n), IndexSet(n)};
      for (std::uint32_t i = 1; i <= n; ++i) {
        if (s.digit(i, t) == l) {
          r.rows.insert(i);
        } else {
          r.cols.insert(i);
        }
      }
      cover.add(std::move(r), 1);
    }
  }
  return cover;
}

Residue multiplicity(const WeightedRectCover& cover, std::uint32_t i,
                     std::uint32_t j) {
  const std::uint32_t n = cover.n();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw std::invalid_argument("cell (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") outside 1.." +
                                std::to_string(n));
  }
  const Modulus& mod = cover.mod();
  Residue d = 0;
  for (const WeightedRect& it : cover.items()) {
    if (it.rect.contains(i, j)) d = mod.add(d, it.weight);
  }
  return d;
}

std::vector<Residue> multiplicity_table(const WeightedRectCover& cover) {
  const std::uint32_t n = cover.n();
  const Modulus& mod = cover.mod();
  std::vector<Residue> table(std::size_t{n} * n, 0);
  for (const WeightedRect& it : cover.items()) {
    const auto cols = it.rect.cols.members();
    for (std::uint32_t i : it.rect.rows.members()) {
      Residue* row = &table[std::size_t{i - 1} * n];
      for (std::uint32_t j : cols) row[j - 1] = mod.add(row[j - 1], it.weight);
    }
  }
  return table;
}

WeightedRectCover transform(const WeightedRectCover& cover,
                            const SymmetricPolynomial& f) {
  if (!cover.unit_weights()) {
    throw std::invalid_argument("transform expects a unit-weight cover");
  }
  if (f.ell() != cover.size()) {
    throw std::invalid_argument(
        "polynomial has " + std::to_string(f.ell()) + " variables, cover has " +
        std::to_string(cover.size()) + " rectangles");
  }
  if (f.coeff(0) != 0) {
    throw std::invalid_argument(
        "polynomial has a nonzero constant term; it would cover the diagonal");
  }
  if (!(f.mod() == cover.mod())) {
    throw std::invalid_argument("polynomial and cover use different moduli");
  }
  std::vector<Rectangle> shapes;
  shapes.reserve(cover.size());
  for (const WeightedRect& it : cover.items()) shapes.push_back(it.rect);

  WeightedRectCover out(cover.n(), cover.mod());
  internal::for_each_nonempty_intersection<Rectangle>(
      shapes, f.degree(), [&](std::size_t t, const Rectangle& r) {
        if (f.coeff(t) != 0) out.add(r, f.coeff(t));
      });
  return out;
}

S2Report verify_s2_properties(const WeightedRectCover& cover) {
  const std::uint32_t n = cover.n();
  const Modulus& mod = cover.mod();
  const std::vector<Residue> table = multiplicity_table(cover);
  S2Report report;
  report.n = n;
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      const Residue d = table[std::size_t{i - 1} * n + (j - 1)];
      ++report.cells_checked;
      const bool ok = (i == j) ? d == 0 : is_partial_one(d, mod);
      if (!ok) report.violations.push_back({i, j, d});
    }
  }
  return report;
}

S2Construction build_s2_cover(std::uint32_t n, const Modulus& mod) {
  const DigitScheme scheme = digit_scheme(n);
  WeightedRectCover initial = initial_cover(n, mod);
  // Off-diagonal cells are covered H(i, j) <= g times, so d = g.
  SymmetricPolynomial f = bbr_construct(mod, scheme.digits, initial.size());
  WeightedRectCover cover = transform(initial, f);
  return S2Construction{scheme, std::move(initial), std::move(f),
                        std::move(cover)};
}

}  // namespace modsym

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

#include "modsym/coverkd.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "modsym/errors.h"
#include "modsym/intersections.h"

namespace modsym {
namespace {

constexpr std::uint32_t kMaxAlphabet = 64;

// All k-subsets of {0..n-1} in lexicographic order, flattened.
std::vector<std::uint32_t> all_subsets(std::uint32_t n, std::uint32_t k) {
  std::vector<std::uint32_t> flat;
  std::vector<std::uint32_t> cur(k);
  for (std::uint32_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    flat.insert(flat.end(), cur.begin(), cur.end());
    std::int64_t pos = static_cast<std::int64_t>(k) - 1;
    while (pos >= 0 && cur[pos] == n - k + pos) --pos;
    if (pos < 0) return flat;
    ++cur[pos];
    for (std::uint32_t i = pos + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
  }
}

bool separates(const std::vector<std::uint32_t>& row, const std::uint32_t* cols,
               std::uint32_t k) {
  std::uint64_t seen = 0;
  for (std::uint32_t l = 0; l < k; ++l) {
    const std::uint64_t bit = std::uint64_t{1} << row[cols[l]];
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

// Drops the subsets `row` separates; returns how many were dropped.
std::size_t remove_separated(std::vector<std::uint32_t>& uncovered,
                             const std::vector<std::uint32_t>& row,
                             std::uint32_t k) {
  std::size_t kept = 0;
  const std::size_t count = uncovered.size() / k;
  for (std::size_t s = 0; s < count; ++s) {
    const std::uint32_t* cols = &uncovered[s * k];
    if (separates(row, cols, k)) continue;
    std::copy(cols, cols + k, &uncovered[kept * k]);
    ++kept;
  }
  uncovered.resize(kept * k);
  return count - kept;
}

std::size_t count_separated(const std::vector<std::uint32_t>& uncovered,
                            const std::vector<std::uint32_t>& row,
                            std::uint32_t k) {
  std::size_t c = 0;
  for (std::size_t s = 0; s < uncovered.size(); s += k) {
    if (separates(row, &uncovered[s], k)) ++c;
  }
  return c;
}

void check_tuple(std::span<const std::uint32_t> tuple, std::uint32_t n,
                 std::uint32_t k) {
  if (tuple.size() != k) {
    throw std::invalid_argument("tuple of length " +
                                std::to_string(tuple.size()) +
                                ", expected " + std::to_string(k));
  }
  for (std::uint32_t j : tuple) {
    if (j < 1 || j > n) {
      throw std::invalid_argument("tuple index " + std::to_string(j) +
                                  " outside 1.." + std::to_string(n));
    }
  }
}

bool has_repeat(std::span<const std::uint32_t> tuple) {
  for (std::size_t a = 0; a < tuple.size(); ++a) {
    for (std::size_t b = a + 1; b < tuple.size(); ++b) {
      if (tuple[a] == tuple[b]) return true;
    }
  }
  return false;
}

}  // namespace

std::string to_string(HashStrategy s) {
  return s == HashStrategy::kGreedy ? "greedy" : "randomized";
}

HashStrategy parse_hash_strategy(const std::string& s) {
  if (s == "greedy") return HashStrategy::kGreedy;
  if (s == "randomized") return HashStrategy::kRandomized;
  throw std::invalid_argument("unknown hash strategy '" + s +
                              "' (expected greedy or randomized)");
}

HashMatrix build_hash_family(std::uint32_t n, std::uint32_t k, std::uint32_t b,
                             const HashFamilyOptions& options) {
  if (k < 2 || k > n) {
    throw std::invalid_argument("hash family needs 2 <= k <= n, got n = " +
                                std::to_string(n) +
                                ", k = " + std::to_string(k));
  }
  if (b < k) {
    throw std::invalid_argument("alphabet b = " + std::to_string(b) +
                                " < k = " + std::to_string(k) +
                                ": no row can separate k columns");
  }
  if (b > kMaxAlphabet) {
    throw std::invalid_argument("alphabet b = " + std::to_string(b) +
                                " exceeds " + std::to_string(kMaxAlphabet));
  }

  HashMatrix h{n, k, b, {}};
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint32_t> symbol(0, b - 1);
  auto random_row = [&] {
    std::vector<std::uint32_t> row(n);
    for (auto& x : row) x = symbol(rng);
    return row;
  };

  std::vector<std::uint32_t> uncovered = all_subsets(n, k);
  const std::size_t total = uncovered.size() / k;
  std::uint64_t steps = 0;
  while (!uncovered.empty()) {
    if (h.rows.size() >= options.max_rows || steps >= 4ull * options.max_rows) {
      throw ConstructionFailedError(
          "hash family construction gave up after " +
          std::to_string(h.rows.size()) + " rows: " +
          std::to_string(uncovered.size() / k) + " of " +
          std::to_string(total) + " " + std::to_string(k) +
          "-subsets still unseparated");
    }
    ++steps;
    if (options.strategy == HashStrategy::kRandomized) {
      std::vector<std::uint32_t> row = random_row();
      remove_separated(uncovered, row, k);
      h.rows.push_back(std::move(row));
      continue;
    }
    std::vector<std::uint32_t> best;
    std::size_t best_score = 0;
    for (std::uint32_t c = 0; c < std::max<std::uint32_t>(1, options.candidates);
         ++c) {
      std::vector<std::uint32_t> row = random_row();
      const std::size_t score = count_separated(uncovered, row, k);
      if (score > best_score) {
        best_score = score;
        best = std::move(row);
      }
    }
    if (best_score == 0) continue;
    remove_separated(uncovered, best, k);
    h.rows.push_back(std::move(best));
  }

  const HashVerdict verdict = verify_hash_family(h);
  if (!verdict.pass()) {
    throw ConstructionFailedError("constructed hash family failed verification");
  }
  return h;
}

HashVerdict verify_hash_family(const HashMatrix& h) {
  HashVerdict verdict;
  if (h.k == 0 || h.k > h.n) return verdict;
  const std::vector<std::uint32_t> subsets = all_subsets(h.n, h.k);
  for (std::size_t s = 0; s < subsets.size(); s += h.k) {
    ++verdict.subsets_checked;
    const std::uint32_t* cols = &subsets[s];
    const bool ok = std::any_of(h.rows.begin(), h.rows.end(), [&](const auto& row) {
      return separates(row, cols, h.k);
    });
    if (!ok) {
      std::vector<std::uint32_t> failing(cols, cols + h.k);
      for (auto& j : failing) ++j;
      verdict.failing.push_back(std::move(failing));
    }
  }
  return verdict;
}

bool Box::empty() const {
  return std::any_of(parts.begin(), parts.end(),
                     [](const IndexSet& a) { return a.empty(); });
}

bool Box::contains(std::span<const std::uint32_t> tuple) const {
  if (tuple.size() != parts.size()) return false;
  for (std::size_t l = 0; l < parts.size(); ++l) {
    if (!parts[l].contains(tuple[l])) return false;
  }
  return true;
}

Box& Box::operator&=(const Box& o) {
  for (std::size_t l = 0; l < parts.size(); ++l) parts[l] &= o.parts[l];
  return *this;
}

void WeightedBoxCover::add(Box box, std::uint64_t weight) {
  if (box.parts.size() != k_) {
    throw std::invalid_argument("box has " + std::to_string(box.parts.size()) +
                                " parts, cover is " + std::to_string(k_) +
                                "-dimensional");
  }
  for (const IndexSet& a : box.parts) {
    if (a.universe() != n_) {
      throw std::invalid_argument("box over a different index range");
    }
  }
  const Residue w = mod_.reduce(weight);
  if (w == 0 || box.empty()) return;
  items_.push_back({std::move(box), w});
}

bool WeightedBoxCover::unit_weights() const {
  return std::all_of(items_.begin(), items_.end(),
                     [](const WeightedBox& it) { return it.weight == 1; });
}

std::uint64_t WeightedBoxCover::repetition_count() const {
  std::uint64_t total = 0;
  for (const WeightedBox& it : items_) total += it.weight;
  return total;
}

WeightedBoxCover initial_box_cover(const HashMatrix& h, const Modulus& mod) {
  WeightedBoxCover cover(h.n, h.k, mod);
  std::vector<std::uint32_t> sigma(h.k);
  std::vector<bool> used(h.b, false);
  for (const auto& row : h.rows) {
    std::vector<IndexSet> level(h.b, IndexSet(h.n));
    for (std::uint32_t j = 0; j < h.n; ++j) level[row[j]].insert(j + 1);

    auto place = [&](auto&& self, std::uint32_t l) -> void {
      if (l == h.k) {
        Box box;
        box.parts.reserve(h.k);
        for (std::uint32_t s : sigma) box.parts.push_back(level[s]);
        cover.add(std::move(box), 1);
        return;
      }
      for (std::uint32_t v = 0; v < h.b; ++v) {
        if (used[v] || level[v].empty()) continue;
        used[v] = true;
        sigma[l] = v;
        self(self, l + 1);
        used[v] = false;
      }
    };
    place(place, 0);
  }
  return cover;
}

Residue box_multiplicity(const WeightedBoxCover& cover,
                         std::span<const std::uint32_t> tuple) {
  check_tuple(tuple, cover.n(), cover.k());
  const Modulus& mod = cover.mod();
  Residue d = 0;
  for (const WeightedBox& it : cover.items()) {
    if (it.box.contains(tuple)) d = mod.add(d, it.weight);
  }
  return d;
}

WeightedBoxCover transform_boxes(const WeightedBoxCover& cover,
                                 const SymmetricPolynomial& f) {
  if (!cover.unit_weights()) {
    throw std::invalid_argument("transform expects a unit-weight cover");
  }
  if (f.ell() != cover.size()) {
    throw std::invalid_argument(
        "polynomial has " + std::to_string(f.ell()) + " variables, cover has " +
        std::to_string(cover.size()) + " boxes");
  }
  if (f.coeff(0) != 0) {
    throw std::invalid_argument(
        "polynomial has a nonzero constant term; it would cover repeated "
        "index tuples");
  }
  if (!(f.mod() == cover.mod())) {
    throw std::invalid_argument("polynomial and cover use different moduli");
  }
  std::vector<Box> shapes;
  shapes.reserve(cover.size());
  for (const WeightedBox& it : cover.items()) shapes.push_back(it.box);

  WeightedBoxCover out(cover.n(), cover.k(), cover.mod());
  internal::for_each_nonempty_intersection<Box>(
      shapes, f.degree(), [&](std::size_t t, const Box& box) {
        if (f.coeff(t) != 0) out.add(box, f.coeff(t));
      });
  return out;
}

SkReport verify_sk_properties(const WeightedBoxCover& cover,
                              const SkVerifyOptions& options) {
  const std::uint32_t n = cover.n();
  const std::uint32_t k = cover.k();
  const Modulus& mod = cover.mod();
  SkReport report;
  auto check = [&](std::span<const std::uint32_t> tuple, Residue d) {
    ++report.tuples_checked;
    const bool ok = has_repeat(tuple) ? d == 0 : is_partial_one(d, mod);
    if (!ok && ++report.violation_count <= options.max_recorded) {
      report.violations.push_back(
          {std::vector<std::uint32_t>(tuple.begin(), tuple.end()), d});
    }
  };

  std::uint64_t volume = 1;
  for (std::uint32_t l = 0; l < k; ++l) volume = saturating_mul(volume, n);

  if (volume <= options.exhaustive_cap) {
    report.exhaustive = true;
    // Dense tensor, index sum_l (j_l - 1) n^{k-1-l}.
    std::vector<Residue> tensor(volume, 0);
    std::vector<std::vector<std::uint32_t>> members(k);
    std::vector<std::size_t> pos(k);
    for (const WeightedBox& it : cover.items()) {
      for (std::uint32_t l = 0; l < k; ++l) members[l] = it.box.parts[l].members();
      std::fill(pos.begin(), pos.end(), 0);
      while (true) {
        std::uint64_t idx = 0;
        for (std::uint32_t l = 0; l < k; ++l) idx = idx * n + (members[l][pos[l]] - 1);
        tensor[idx] = mod.add(tensor[idx], it.weight);
        std::int64_t l = static_cast<std::int64_t>(k) - 1;
        while (l >= 0 && ++pos[l] == members[l].size()) pos[l--] = 0;
        if (l < 0) break;
      }
    }
    std::vector<std::uint32_t> tuple(k, 1);
    for (std::uint64_t idx = 0; idx < volume; ++idx) {
      std::uint64_t rest = idx;
      for (std::int64_t l = static_cast<std::int64_t>(k) - 1; l >= 0; --l) {
        tuple[l] = static_cast<std::uint32_t>(rest % n) + 1;
        rest /= n;
      }
      check(tuple, tensor[idx]);
    }
    return report;
  }

  report.exhaustive = false;
  report.seed = options.seed;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint32_t> index(1, n);
  std::vector<std::uint32_t> tuple(k);
  for (std::uint64_t s = 0; s < options.sample_size; ++s) {
    for (auto& j : tuple) j = index(rng);
    check(tuple, box_multiplicity(cover, tuple));
  }
  return report;
}

SkConstruction build_sk_cover(std::uint32_t n, std::uint32_t k,
                              const Modulus& mod, std::uint32_t b,
                              const HashFamilyOptions& options) {
  if (k < 2 || n < k) {
    throw std::invalid_argument("build_sk_cover needs n >= k >= 2, got n = " +
                                std::to_string(n) +
                                ", k = " + std::to_string(k));
  }
  if (mod.num_factors() < 2) {
    throw UnsupportedModulusError(
        "the construction needs at least two distinct prime factors; got " +
        mod.to_string());
  }
  if (b == 0) b = 2 * k;
  HashMatrix hash = build_hash_family(n, k, b, options);
  WeightedBoxCover initial = initial_box_cover(hash, mod);
  // Every distinct-index tuple is covered between 1 and u times: d = u.
  if (hash.u() > initial.size()) {
    throw ConstructionFailedError(
        "hash family has " + std::to_string(hash.u()) + " rows but only " +
        std::to_string(initial.size()) + " nonempty boxes");
  }
  SymmetricPolynomial f = bbr_construct(mod, hash.u(), initial.size());
  WeightedBoxCover cover = transform_boxes(initial, f);
  return SkConstruction{std::move(hash), std::move(initial), std::move(f),
                        std::move(cover)};
}

WeightedRectCover to_rect_cover(const WeightedBoxCover& cover) {
  if (cover.k() != 2) {
    throw std::invalid_argument("only 2-dimensional box covers are rectangle "
                                "covers");
  }
  WeightedRectCover out(cover.n(), cover.mod());
  for (const WeightedBox& it : cover.items()) {
    out.add(Rectangle{it.box.parts[0], it.box.parts[1]}, it.weight);
  }
  return out;
}

WeightedBoxCover to_box_cover(const WeightedRectCover& cover) {
  WeightedBoxCover out(cover.n(), 2, cover.mod());
  for (const WeightedRect& it : cover.items()) {
    out.add(Box{{it.rect.rows, it.rect.cols}}, it.weight);
  }
  return out;
}

}  // namespace modsym

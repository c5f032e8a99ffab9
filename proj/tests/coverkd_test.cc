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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>

#include "modsym/errors.h"

namespace modsym {
namespace {

// Rows of h whose entries on the given (1-based) columns are pairwise
// distinct.
std::uint32_t separating_rows(const HashMatrix& h,
                              const std::vector<std::uint32_t>& cols) {
  std::uint32_t count = 0;
  for (const auto& row : h.rows) {
    std::set<std::uint32_t> seen;
    for (std::uint32_t c : cols) seen.insert(row[c - 1]);
    count += seen.size() == cols.size();
  }
  return count;
}

// Every k-subset of 1..n, by bitmask.
std::vector<std::vector<std::uint32_t>> k_subsets(std::uint32_t n,
                                                  std::uint32_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (static_cast<std::uint32_t>(std::popcount(s)) != k) continue;
    std::vector<std::uint32_t> cols;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (s >> i & 1) cols.push_back(i + 1);
    }
    out.push_back(cols);
  }
  return out;
}

void expect_perfect(const HashMatrix& h) {
  for (const auto& cols : k_subsets(h.n, h.k)) {
    EXPECT_GE(separating_rows(h, cols), 1u);
  }
  for (const auto& row : h.rows) {
    ASSERT_EQ(row.size(), h.n);
    for (std::uint32_t v : row) EXPECT_LT(v, h.b);
  }
}

// Every tuple in {1..n}^k.
template <class Visit>
void for_each_tuple(std::uint32_t n, std::uint32_t k, Visit visit) {
  std::vector<std::uint32_t> t(k, 1);
  while (true) {
    visit(t);
    std::uint32_t pos = 0;
    while (pos < k && t[pos] == n) t[pos++] = 1;
    if (pos == k) return;
    ++t[pos];
  }
}

bool distinct(const std::vector<std::uint32_t>& t) {
  return std::set<std::uint32_t>(t.begin(), t.end()).size() == t.size();
}

const HashMatrix kSmall{4, 2, 2, {{0, 0, 1, 1}, {0, 1, 0, 1}}};

TEST(HashFamilyTest, SmallCases) {
  EXPECT_TRUE(verify_hash_family(kSmall).pass());
  EXPECT_EQ(verify_hash_family(kSmall).subsets_checked, 6u);

  const HashMatrix zero{3, 2, 2, {{0, 0, 0}}};
  const HashVerdict v = verify_hash_family(zero);
  EXPECT_FALSE(v.pass());
  EXPECT_EQ(v.failing.size(), 3u);
  EXPECT_EQ(v.failing.front(), (std::vector<std::uint32_t>{1, 2}));

  const HashMatrix single{3, 3, 3, {{0, 1, 2}}};
  EXPECT_TRUE(verify_hash_family(single).pass());
  const HashMatrix built = build_hash_family(5, 5, 5);
  EXPECT_EQ(built.u(), 1u);
}

TEST(HashFamilyTest, BuiltFamiliesArePerfect) {
  for (HashStrategy strategy : {HashStrategy::kGreedy, HashStrategy::kRandomized}) {
    for (std::uint64_t seed : {1u, 2u, 99u}) {
      for (auto [n, k, b] : std::vector<std::array<std::uint32_t, 3>>{
               {4, 2, 2}, {8, 2, 4}, {10, 3, 6}, {12, 3, 6}, {12, 4, 8},
               {14, 3, 3}}) {
        HashFamilyOptions options;
        options.strategy = strategy;
        options.seed = seed;
        const HashMatrix h = build_hash_family(n, k, b, options);
        SCOPED_TRACE(to_string(strategy) + " n=" + std::to_string(n));
        EXPECT_EQ(h.n, n);
        EXPECT_EQ(h.k, k);
        EXPECT_EQ(h.b, b);
        expect_perfect(h);
      }
    }
  }
}

TEST(HashFamilyTest, RandomizedRegression) {
  HashFamilyOptions options;
  options.strategy = HashStrategy::kRandomized;
  options.seed = 7;
  const HashMatrix h = build_hash_family(20, 3, 6, options);
  EXPECT_LE(h.u(), 40u);
  EXPECT_TRUE(verify_hash_family(h).pass());
  // Same seed, same matrix.
  EXPECT_EQ(build_hash_family(20, 3, 6, options).rows, h.rows);
}

TEST(HashFamilyTest, RejectsAndGivesUp) {
  EXPECT_THROW(build_hash_family(4, 3, 2), std::invalid_argument);
  EXPECT_THROW(build_hash_family(2, 3, 6), std::invalid_argument);
  EXPECT_THROW(build_hash_family(10, 1, 2), std::invalid_argument);
  EXPECT_THROW(build_hash_family(100, 2, 65), std::invalid_argument);
  HashFamilyOptions options;
  options.max_rows = 1;
  EXPECT_THROW(build_hash_family(12, 3, 3, options), ConstructionFailedError);
  EXPECT_EQ(parse_hash_strategy("greedy"), HashStrategy::kGreedy);
  EXPECT_EQ(parse_hash_strategy("randomized"), HashStrategy::kRandomized);
  EXPECT_THROW(parse_hash_strategy("other"), std::invalid_argument);
}

TEST(InitialBoxCoverTest, SmallCase) {
  const Modulus mod(6);
  const WeightedBoxCover c = initial_box_cover(kSmall, mod);
  EXPECT_EQ(c.size(), 4u);
  const Box want{{IndexSet(4, {1, 3}), IndexSet(4, {2, 4})}};
  EXPECT_EQ(std::count_if(c.items().begin(), c.items().end(),
                          [&](const WeightedBox& b) { return b.box == want; }),
            1);
}

TEST(InitialBoxCoverTest, CountsSeparatingRows) {
  const Modulus mod(1000003);
  for (auto [n, k] : std::vector<std::array<std::uint32_t, 2>>{
           {4, 2}, {6, 3}, {9, 2}, {8, 3}, {7, 4}}) {
    const HashMatrix h = build_hash_family(n, k, 2 * k);
    const WeightedBoxCover c = initial_box_cover(h, mod);
    EXPECT_TRUE(c.unit_weights());
    for_each_tuple(n, k, [&](const std::vector<std::uint32_t>& t) {
      const Residue got = box_multiplicity(c, t);
      if (!distinct(t)) {
        EXPECT_EQ(got, 0u);
        return;
      }
      EXPECT_EQ(got, separating_rows(h, t));
      EXPECT_GE(got, 1u);
      EXPECT_LE(got, h.u());
    });
  }
}

TEST(BoxMultiplicityTest, SmallCases) {
  const Modulus mod(6);
  WeightedBoxCover c(4, 3, mod);
  const std::vector<std::uint32_t> t{1, 2, 3};
  EXPECT_EQ(box_multiplicity(c, t), 0u);
  c.add(Box{{IndexSet(4, {1}), IndexSet(4, {2, 4}), IndexSet(4, {3})}}, 5);
  EXPECT_EQ(box_multiplicity(c, t), 5u);
  EXPECT_EQ(box_multiplicity(c, std::vector<std::uint32_t>{1, 4, 3}), 5u);
  EXPECT_EQ(box_multiplicity(c, std::vector<std::uint32_t>{2, 1, 3}), 0u);
  EXPECT_THROW(box_multiplicity(c, std::vector<std::uint32_t>{1, 2}),
               std::invalid_argument);
  EXPECT_THROW(box_multiplicity(c, std::vector<std::uint32_t>{1, 2, 5}),
               std::invalid_argument);
}

TEST(BoxTest, ComponentwiseIntersection) {
  Box a{{IndexSet(5, {1, 2, 3}), IndexSet(5, {4, 5}), IndexSet(5, {1})}};
  a &= Box{{IndexSet(5, {2, 3}), IndexSet(5, {5}), IndexSet(5, {1, 2})}};
  EXPECT_EQ(a, (Box{{IndexSet(5, {2, 3}), IndexSet(5, {5}), IndexSet(5, {1})}}));
  a &= Box{{IndexSet(5, {4}), IndexSet(5, {5}), IndexSet(5, {1})}};
  EXPECT_TRUE(a.empty());
}

TEST(TransformBoxesTest, TupleMultiplicityIsWeightValue) {
  for (std::uint64_t m : {6u, 35u, 15u}) {
    const Modulus mod(m);
    for (auto [n, k] : std::vector<std::array<std::uint32_t, 2>>{
             {6, 2}, {8, 3}, {12, 3}}) {
      const HashMatrix h = build_hash_family(n, k, 2 * k);
      const WeightedBoxCover initial = initial_box_cover(h, mod);
      const SymmetricPolynomial f =
          bbr_construct(mod, h.u(), initial.size());
      const WeightedBoxCover t = transform_boxes(initial, f);
      for_each_tuple(n, k, [&](const std::vector<std::uint32_t>& tuple) {
        const std::uint32_t w = distinct(tuple) ? separating_rows(h, tuple) : 0;
        EXPECT_EQ(box_multiplicity(t, tuple), weight_value(f, w));
      });
    }
  }
}

TEST(TransformBoxesTest, MatchesSubsetEnumeration) {
  const Modulus mod(6);
  const WeightedBoxCover initial = initial_box_cover(kSmall, mod);
  const SymmetricPolynomial f(initial.size(), {0, 5, 2, 1, 3}, mod);
  const WeightedBoxCover t = transform_boxes(initial, f);
  const auto& items = initial.items();
  for_each_tuple(4, 2, [&](const std::vector<std::uint32_t>& tuple) {
    Residue want = 0;
    for (std::uint32_t s = 1; s < (1u << items.size()); ++s) {
      bool all = true;
      for (std::size_t b = 0; b < items.size(); ++b) {
        if (s >> b & 1) all &= items[b].box.contains(tuple);
      }
      if (all) want = mod.add(want, f.coeff(std::popcount(s)));
    }
    EXPECT_EQ(box_multiplicity(t, tuple), want);
  });
}

TEST(BuildSkTest, PassesAndIsOrderInvariant) {
  struct Case {
    std::uint32_t n, k;
    std::uint64_t m;
  };
  for (const Case& c : {Case{8, 2, 6}, Case{12, 3, 35}, Case{9, 3, 10},
                        Case{7, 4, 6}}) {
    const Modulus mod(c.m);
    const SkConstruction s = build_sk_cover(c.n, c.k, mod);
    const SkReport r = verify_sk_properties(s.cover);
    SCOPED_TRACE("n=" + std::to_string(c.n) + " k=" + std::to_string(c.k));
    EXPECT_TRUE(r.pass());
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.tuples_checked, ipow(c.n, c.k));
    EXPECT_EQ(s.hash.b, 2 * c.k);
    EXPECT_EQ(s.f.ell(), s.initial.size());
    for_each_tuple(c.n, c.k, [&](std::vector<std::uint32_t> t) {
      const Residue first = box_multiplicity(s.cover, t);
      if (!distinct(t)) {
        EXPECT_EQ(first, 0u);
        return;
      }
      EXPECT_TRUE(is_partial_one(first, mod));
      std::sort(t.begin(), t.end());
      do {
        EXPECT_EQ(box_multiplicity(s.cover, t), first);
      } while (std::next_permutation(t.begin(), t.end()));
    });
  }
}

TEST(BuildSkTest, RejectsPrimePower) {
  EXPECT_THROW(build_sk_cover(8, 2, Modulus(9)), UnsupportedModulusError);
}

TEST(VerifySkTest, SampledModeAndViolations) {
  const Modulus mod(35);
  const SkConstruction s = build_sk_cover(12, 3, mod);
  SkVerifyOptions options;
  options.exhaustive_cap = 100;
  options.sample_size = 5000;
  options.seed = 42;
  const SkReport r = verify_sk_properties(s.cover, options);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.tuples_checked, 5000u);
  EXPECT_EQ(r.seed, 42u);
  EXPECT_TRUE(r.pass());

  // The initial cover alone overcounts tuples separated by several rows.
  const SkReport bad = verify_sk_properties(s.initial);
  std::uint64_t expected = 0;
  for_each_tuple(12, 3, [&](const std::vector<std::uint32_t>& t) {
    if (distinct(t) && !is_partial_one(separating_rows(s.hash, t) % 35, mod)) {
      ++expected;
    }
  });
  EXPECT_EQ(bad.violation_count, expected);
  EXPECT_EQ(bad.pass(), expected == 0);

  WeightedBoxCover diag(3, 2, Modulus(6));
  diag.add(Box{{IndexSet(3, {2}), IndexSet(3, {2})}}, 1);
  // (2, 2) is covered once; the six distinct pairs are not covered at all.
  const SkReport d = verify_sk_properties(diag);
  EXPECT_EQ(d.violation_count, 7u);
  ASSERT_EQ(d.violations.size(), 7u);
  std::size_t diagonal = 0;
  for (const TupleViolation& v : d.violations) {
    if (v.tuple == std::vector<std::uint32_t>{2, 2}) {
      ++diagonal;
      EXPECT_EQ(v.multiplicity, 1u);
    } else {
      EXPECT_EQ(v.multiplicity, 0u);
    }
  }
  EXPECT_EQ(diagonal, 1u);
}

TEST(CoverViewsTest, RoundTrip) {
  const Modulus mod(6);
  const SkConstruction s = build_sk_cover(8, 2, mod);
  const WeightedRectCover rect = to_rect_cover(s.cover);
  ASSERT_EQ(rect.size(), s.cover.size());
  for (std::uint32_t i = 1; i <= 8; ++i) {
    for (std::uint32_t j = 1; j <= 8; ++j) {
      EXPECT_EQ(multiplicity(rect, i, j),
                box_multiplicity(s.cover, std::vector<std::uint32_t>{i, j}));
    }
  }
  const WeightedBoxCover back = to_box_cover(rect);
  ASSERT_EQ(back.size(), s.cover.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back.items()[i].box, s.cover.items()[i].box);
    EXPECT_EQ(back.items()[i].weight, s.cover.items()[i].weight);
  }
  EXPECT_THROW(to_rect_cover(WeightedBoxCover(4, 3, mod)),
               std::invalid_argument);
}

}  // namespace
}  // namespace modsym

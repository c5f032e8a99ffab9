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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every check is an exact modular equality (tolerance 0);
// the reference values are computed here, independently of the library
// routine under test.

#include <algorithm>
#include <bit>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "modsym/astrong.h"
#include "modsym/circuit.h"
#include "modsym/cover2d.h"
#include "modsym/coverkd.h"
#include "modsym/sympoly.h"
#include "modsym/zmod.h"

namespace modsym {
namespace {

constexpr std::uint64_t kEvaluationSeed = 1;
constexpr int kEvaluationsPerCircuit = 100;
constexpr std::uint64_t kMutationSeed = 1;
constexpr int kMutations = 20;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// ---- independent oracles ----

// C(w, t) for w <= rows as residues mod m, from an additive triangle.
class BinomialTable {
 public:
  BinomialTable(std::uint64_t m, std::uint32_t rows) : c_(rows + 1) {
    for (std::uint32_t w = 0; w <= rows; ++w) {
      c_[w].assign(w + 1, 1 % m);
      for (std::uint32_t t = 1; t < w; ++t) {
        c_[w][t] = (c_[w - 1][t - 1] + c_[w - 1][t]) % m;
      }
    }
  }
  std::uint64_t operator()(std::uint32_t w, std::uint32_t t) const {
    return t > w ? 0 : c_[w][t];
  }

 private:
  std::vector<std::vector<std::uint64_t>> c_;
};

std::uint64_t fhat(const SymmetricPolynomial& f, std::uint32_t w,
                   const BinomialTable& binom) {
  const std::uint64_t m = f.mod().value();
  std::uint64_t v = 0;
  for (std::uint32_t t = 0; t < f.coeffs().size(); ++t) {
    v = (v + f.coeffs()[t] * binom(w, t)) % m;
  }
  return v;
}

std::uint32_t hamming(std::uint32_t i, std::uint32_t j, std::uint32_t base) {
  std::uint32_t h = 0;
  while (i > 0 || j > 0) {
    h += i % base != j % base;
    i /= base;
    j /= base;
  }
  return h;
}

// Cell counts straight from the items, as plain integers reduced at the end.
std::vector<std::uint64_t> count_cells(const WeightedRectCover& cover) {
  const std::uint32_t n = cover.n();
  std::vector<std::uint64_t> d(std::size_t{n} * n, 0);
  for (const WeightedRect& it : cover.items()) {
    for (std::uint32_t i : it.rect.rows.members()) {
      for (std::uint32_t j : it.rect.cols.members()) {
        d[std::size_t{i - 1} * n + (j - 1)] += it.weight;
      }
    }
  }
  for (auto& x : d) x %= cover.mod().value();
  return d;
}

bool partial_one(std::uint64_t d, const Modulus& mod) {
  bool one = false;
  for (const PrimePower& pp : mod.factors()) {
    if (d % pp.q > 1) return false;
    one |= d % pp.q == 1;
  }
  return one;
}

bool represents(std::uint64_t b, std::uint64_t a, const Modulus& mod) {
  bool some = false;
  for (const PrimePower& pp : mod.factors()) {
    if (b % pp.q == a % pp.q) {
      some = true;
    } else if (b % pp.q != 0) {
      return false;
    }
  }
  return some;
}

// Literal a-strong check of `b` against the elementary symmetric target in
// k ordered groups (ordered) or one group (symmetric), built here.
std::size_t astrong_failures(const CoefficientMap& b, std::uint32_t n,
                             std::uint32_t k, bool ordered,
                             const Modulus& mod) {
  std::set<Monomial> target;
  std::vector<std::uint32_t> t(k);
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t pos) {
    if (pos == k) {
      std::set<std::uint32_t> distinct(t.begin(), t.end());
      if (distinct.size() != k) return;
      Monomial mono;
      for (std::uint32_t l = 0; l < k; ++l) {
        mono.push_back(ordered ? l * n + (t[l] - 1) : t[l] - 1);
      }
      std::sort(mono.begin(), mono.end());
      target.insert(mono);
      return;
    }
    for (std::uint32_t i = 1; i <= n; ++i) {
      t[pos] = i;
      rec(pos + 1);
    }
  };
  rec(0);
  std::size_t bad = 0;
  for (const Monomial& mono : target) bad += !represents(b.get(mono), 1, mod);
  for (const auto& [mono, c] : b.terms()) {
    if (!target.count(mono)) bad += !represents(c, 0, mod);
  }
  return bad;
}

Residue evaluate_terms(const CoefficientMap& e, const std::vector<Residue>& x,
                       const Modulus& mod) {
  const std::uint64_t m = mod.value();
  Residue total = 0;
  for (const auto& [mono, c] : e.terms()) {
    Residue p = c;
    for (VarId v : mono) p = p * x[v] % m;
    total = (total + p) % m;
  }
  return total;
}

// ---- criteria ----

Outcome criterion1() {
  Outcome o;
  std::uint64_t instances = 0;
  for (std::uint64_t m : {6u, 10u, 15u, 21u, 12u}) {
    const Modulus mod(m);
    const BinomialTable binom(m, 60);
    for (std::uint32_t d = 1; d <= 40; ++d) {
      const std::uint32_t ell = d + 10;
      const SymmetricPolynomial f = bbr_construct(mod, d, ell);
      ++instances;
      for (std::uint32_t w = 0; w <= ell; ++w) {
        const std::uint64_t v = fhat(f, w, binom);
        if (w <= d && (v == 0) != (w == 0)) {
          o.fail("m=" + std::to_string(m) + " d=" + std::to_string(d) +
                 " w=" + std::to_string(w) + " zero-test");
        }
        for (const PrimePower& pp : mod.factors()) {
          if (v % pp.q > 1) {
            o.fail("m=" + std::to_string(m) + " d=" + std::to_string(d) +
                   " w=" + std::to_string(w) + " not 0/1 mod " +
                   std::to_string(pp.q));
          }
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(instances) + " instances";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Modulus mod(6);
  const SymmetricPolynomial f = bbr_construct(mod, 5, 15);
  const BinomialTable binom(6, 20);
  std::vector<std::uint64_t> table;
  for (std::uint32_t w = 0; w <= 5; ++w) table.push_back(fhat(f, w, binom));
  const std::vector<std::uint64_t> want{0, 1, 4, 3, 4, 1};
  if (f.degree() != 2) o.fail("degree " + std::to_string(f.degree()));
  if (table != want) o.fail("weight table mismatch");
  std::ostringstream s;
  s << "degree=" << f.degree() << " table=";
  for (std::size_t i = 0; i < table.size(); ++i) s << (i ? "," : "") << table[i];
  if (o.ok) o.detail = s.str();
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::uint64_t cells = 0;
  for (std::uint64_t m : {6u, 15u}) {
    const Modulus mod(m);
    const BinomialTable binom(m, 400);
    for (std::uint32_t n : {4u, 16u, 64u, 256u}) {
      const S2Construction s = build_s2_cover(n, mod);
      const S2Report r = verify_s2_properties(s.cover);
      const std::string tag = " n=" + std::to_string(n) + " m=" + std::to_string(m);
      if (!r.pass()) o.fail("verifier rejects" + tag);
      if (r.cells_checked != std::uint64_t{n} * n) o.fail("cell count" + tag);
      const std::uint32_t lg = std::max(2u, static_cast<std::uint32_t>(
                                                std::bit_width(n - 1)));
      const auto d = count_cells(s.cover);
      for (std::uint32_t i = 1; i <= n; ++i) {
        for (std::uint32_t j = 1; j <= n; ++j) {
          const std::uint64_t got = d[std::size_t{i - 1} * n + (j - 1)];
          ++cells;
          if (i == j) {
            if (got != 0) o.fail("diagonal" + tag);
            continue;
          }
          if (got != fhat(s.f, hamming(i, j, lg), binom)) {
            o.fail("fhat(H) equality" + tag);
          }
          if (!partial_one(got, mod)) o.fail("cell property" + tag);
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cells) + " cells";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::uint64_t monomials = 0;
  for (std::uint64_t m : {6u, 15u}) {
    const Modulus mod(m);
    for (std::uint32_t n : {2u, 3u, 4u, 8u, 16u, 32u, 64u}) {
      const std::string tag = " n=" + std::to_string(n) + " m=" + std::to_string(m);
      const SigmaPiSigmaCircuit c = from_cover2d(build_s2_cover(n, mod).cover);
      const CoefficientMap e = expand_coefficients(c);
      monomials += e.size();
      if (astrong_failures(e, n, 2, true, mod) != 0) o.fail("ordered" + tag);
      if (!check_astrong(e, target_coefficients(n, 2, true), mod).pass()) {
        o.fail("library checker disagrees" + tag);
      }
      if (m == 15) {
        const CoefficientMap s = expand_coefficients(identify_variables_and_scale(c));
        monomials += s.size();
        if (astrong_failures(s, n, 2, false, mod) != 0) o.fail("identified" + tag);
      }
    }
  }
  if (o.ok) o.detail = std::to_string(monomials) + " monomials";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const Modulus mod(35);
  const std::uint32_t n = 12, k = 3;
  const SkConstruction s = build_sk_cover(n, k, mod);
  const SkReport r = verify_sk_properties(s.cover);
  if (!r.pass() || !r.exhaustive || r.tuples_checked != 1728) {
    o.fail("verifier: pass=" + std::to_string(r.pass()) +
           " tuples=" + std::to_string(r.tuples_checked));
  }
  // Ordering invariance, with multiplicities counted here from the boxes.
  std::map<std::vector<std::uint32_t>, std::uint64_t> mult;
  for (std::uint32_t a = 1; a <= n; ++a) {
    for (std::uint32_t b = 1; b <= n; ++b) {
      for (std::uint32_t c = 1; c <= n; ++c) {
        std::uint64_t d = 0;
        for (const WeightedBox& it : s.cover.items()) {
          if (it.box.parts[0].contains(a) && it.box.parts[1].contains(b) &&
              it.box.parts[2].contains(c)) {
            d += it.weight;
          }
        }
        mult[{a, b, c}] = d % 35;
      }
    }
  }
  for (const auto& [t, d] : mult) {
    std::vector<std::uint32_t> p = t;
    std::sort(p.begin(), p.end());
    do {
      if (mult.at(p) != d) o.fail("ordering invariance");
    } while (std::next_permutation(p.begin(), p.end()));
  }
  // (3!)^{-1} mod 35 by search.
  std::uint64_t inv = 0;
  while (6 * inv % 35 != 1) ++inv;
  const SigmaPiSigmaCircuit c = from_coverkd(s.cover);
  const SigmaPiSigmaCircuit id = identify_variables_and_scale(c);
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    const Residue w = c.gates[g].forms[0].terms[0].coeff;
    if (id.gates[g].forms[0].terms[0].coeff != w * inv % 35) {
      o.fail("scale is not " + std::to_string(inv));
      break;
    }
  }
  if (astrong_failures(expand_coefficients(id), n, k, false, mod) != 0) {
    o.fail("identified circuit is not a-strong");
  }
  if (o.ok) o.detail = "tuples=1728 scale=" + std::to_string(inv);
  return o;
}

Outcome criterion6() {
  Outcome o;
  const Modulus mod(6);
  const std::uint32_t n = 8;
  const WeightedRectCover via_kd = to_rect_cover(build_sk_cover(n, 2, mod).cover);
  const WeightedRectCover via_2d = build_s2_cover(n, mod).cover;
  for (const auto* cover : {&via_kd, &via_2d}) {
    const char* name = cover == &via_kd ? "coverkd" : "cover2d";
    if (!verify_s2_properties(*cover).pass()) o.fail(std::string(name) + " rejected");
    const auto d = count_cells(*cover);
    for (std::uint32_t i = 1; i <= n; ++i) {
      for (std::uint32_t j = 1; j <= n; ++j) {
        const std::uint64_t x = d[(i - 1) * n + (j - 1)];
        if (i == j ? x != 0 : !partial_one(x, mod)) {
          o.fail(std::string(name) + " cell oracle");
        }
      }
    }
    if (astrong_failures(expand_coefficients(from_cover2d(*cover)), n, 2, true,
                         mod) != 0) {
      o.fail(std::string(name) + " not a-strong");
    }
  }
  if (o.ok) {
    o.detail = "items kd=" + std::to_string(via_kd.size()) +
               " 2d=" + std::to_string(via_2d.size());
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<SigmaPiSigmaCircuit> circuits;
  for (std::uint64_t m : {6u, 15u}) {
    for (std::uint32_t n : {2u, 4u, 16u, 32u}) {
      const SigmaPiSigmaCircuit c = from_cover2d(build_s2_cover(n, Modulus(m)).cover);
      circuits.push_back(c);
      if (m % 2 == 1) circuits.push_back(identify_variables_and_scale(c));
    }
  }
  circuits.push_back(from_coverkd(build_sk_cover(12, 3, Modulus(35)).cover));
  circuits.push_back(from_coverkd(build_sk_cover(8, 2, Modulus(6)).cover));
  circuits.push_back(naive_snk_circuit(10, 3, Modulus(6)));

  std::mt19937_64 rng(kEvaluationSeed);
  std::uint64_t evaluations = 0;
  for (const SigmaPiSigmaCircuit& c : circuits) {
    const CoefficientMap e = expand_coefficients(c);
    for (int trial = 0; trial < kEvaluationsPerCircuit; ++trial) {
      std::vector<Residue> x(c.vars.size());
      for (Residue& v : x) v = rng() % c.mod.value();
      ++evaluations;
      if (evaluate(c, x) != evaluate_terms(e, x, c.mod)) {
        o.fail("mismatch on circuit with " + std::to_string(c.gates.size()) +
               " gates");
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(circuits.size()) + " circuits, " +
               std::to_string(evaluations) + " evaluations, seed " +
               std::to_string(kEvaluationSeed);
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const Modulus mod(6);
  for (std::uint32_t n : {16u, 64u, 256u}) {
    const std::string tag = " n=" + std::to_string(n);
    const S2Construction s = build_s2_cover(n, mod);
    const SigmaPiSigmaCircuit c = from_cover2d(s.cover);
    std::uint64_t forms = 0, reps = 0;
    for (const ProductGate& g : c.gates) {
      forms += g.forms.size();
      reps += g.repetition;
    }
    const CircuitSize cs = size(c);
    if (cs.gate_total != 1 + c.gates.size() + forms) o.fail("gate_total" + tag);
    if (cs.products != c.gates.size()) o.fail("products" + tag);
    if (cs.graph_model_count != reps) o.fail("graph_model_count" + tag);

    // Nonempty intersections of subsets K with c_|K| != 0, enumerated here.
    const auto& items = s.initial.items();
    std::uint64_t expected = 0;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, Rectangle)> rec = [&](std::size_t from,
                                                          Rectangle r) {
      for (std::size_t b = from; b < items.size(); ++b) {
        Rectangle next = r;
        next &= items[b].rect;
        if (next.empty()) continue;
        chosen.push_back(b);
        if (s.f.coeff(chosen.size()) != 0) ++expected;
        if (chosen.size() < s.f.degree()) rec(b + 1, next);
        chosen.pop_back();
      }
    };
    IndexSet all(n);
    for (std::uint32_t i = 1; i <= n; ++i) all.insert(i);
    rec(0, Rectangle{all, all});
    if (s.cover.size() != expected) {
      o.fail("distinct items " + std::to_string(s.cover.size()) + " vs " +
             std::to_string(expected) + tag);
    }
  }

  std::ostringstream out, err;
  const int code = cli::run({"report", "--poly", "s2", "--n", "16,64,256", "--m", "6"},
                            out, err);
  const std::string text = out.str();
  if (code != 0) o.fail("report exit " + std::to_string(code));
  for (const char* needle : {"baseline_n_minus_1", "baseline_naive", "asymptotic",
                             "\n16,6,2,", "\n256,6,2,"}) {
    if (text.find(needle) == std::string::npos) {
      o.fail(std::string("report lacks ") + needle);
    }
  }
  // Row n=256 ends with the two baselines 255 and C(256, 2) = 32640.
  if (text.find(",255,32640\n") == std::string::npos) o.fail("baseline values");
  if (o.ok) o.detail = "n=16,64,256 m=6";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const Modulus mod(6);
  const std::uint32_t n = 16;
  const WeightedRectCover cover = build_s2_cover(n, mod).cover;
  if (!verify_s2_properties(cover).pass()) {
    o.fail("base cover does not pass");
    return o;
  }
  std::mt19937_64 rng(kMutationSeed);
  int caught = 0;
  std::string missed;
  for (int trial = 0; trial < kMutations; ++trial) {
    const std::size_t target = rng() % cover.size();
    WeightedRectCover mutated(n, mod);
    for (std::size_t i = 0; i < cover.size(); ++i) {
      const auto& it = cover.items()[i];
      mutated.add(it.rect, i == target ? it.weight + 1 : it.weight);
    }
    const bool props = verify_s2_properties(mutated).pass();
    const SigmaPiSigmaCircuit c = from_cover2d(mutated);
    const bool strong =
        check_astrong(expand_coefficients(c), target_coefficients(n, 2, true), mod)
            .pass();
    if (!props || !strong) {
      ++caught;
    } else {
      missed += (missed.empty() ? "" : ",") + std::to_string(target);
    }
  }
  o.detail = std::to_string(caught) + "/" + std::to_string(kMutations) +
             " caught, seed " + std::to_string(kMutationSeed);
  if (caught != kMutations) o.fail(o.detail + ", missed items " + missed);
  return o;
}

}  // namespace
}  // namespace modsym

int main() {
  using namespace modsym;
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"bbr contract, m in {6,10,15,21,12}, d=1..40, ell=d+10", criterion1},
      {"bbr instance m=6 d=5", criterion2},
      {"s2 cell properties and fhat(H) equality", criterion3},
      {"end-to-end a-strong, n<=64, m in {6,15}", criterion4},
      {"general k, n=12 k=3 m=35", criterion5},
      {"cross-validation n=8 k=2 m=6", criterion6},
      {"evaluation consistency", criterion7},
      {"size accounting", criterion8},
      {"mutation sensitivity n=16 m=6", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %zu %s: %s (%s)\n", i + 1, o.ok ? "PASS" : "FAIL",
                criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("acceptance %s: %d of %zu criteria failed\n",
              failed ? "FAIL" : "PASS", failed, criteria.size());
  return failed ? 1 : 0;
}

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

#include "modsym/sympoly.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "modsym/errors.h"

namespace modsym {

SymmetricPolynomial::SymmetricPolynomial(std::uint64_t ell,
                                         std::vector<Residue> coeffs,
                                         Modulus mod)
    : ell_(ell), coeffs_(std::move(coeffs)), mod_(std::move(mod)) {
  for (Residue& c : coeffs_) c = mod_.reduce(c);
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
  if (degree() > ell_) {
    throw std::invalid_argument("symmetric polynomial of degree " +
                                std::to_string(degree()) + " in only " +
                                std::to_string(ell_) + " variables");
  }
}

Residue weight_value(const SymmetricPolynomial& f, std::uint64_t w) {
  if (w > f.ell()) {
    throw std::invalid_argument("weight " + std::to_string(w) +
                                " exceeds ell = " + std::to_string(f.ell()));
  }
  const Modulus& mod = f.mod();
  Residue v = 0;
  for (std::uint64_t t = 0; t <= f.degree() && t <= w; ++t) {
    if (f.coeff(t) == 0) continue;
    v = mod.add(v, mod.mul(f.coeff(t), binom_mod(w, t, mod.value())));
  }
  return v;
}

std::vector<Residue> weight_table(const SymmetricPolynomial& f) {
  const Modulus& mod = f.mod();
  const std::uint64_t deg = f.degree();
  std::vector<Residue> table;
  table.reserve(f.ell() + 1);
  // row[t] = C(w, t) mod m for t <= deg.
  std::vector<Residue> row(deg + 1, 0);
  row[0] = mod.reduce(1);
  for (std::uint64_t w = 0; w <= f.ell(); ++w) {
    if (w > 0) {
      for (std::uint64_t t = std::min(w, deg); t >= 1; --t) {
        row[t] = mod.add(row[t], row[t - 1]);
      }
    }
    Residue v = 0;
    for (std::uint64_t t = 0; t <= deg; ++t) {
      v = mod.add(v, mod.mul(f.coeff(t), row[t]));
    }
    table.push_back(v);
  }
  return table;
}

SymmetricPolynomial from_weight_values(std::span<const Residue> values,
                                       std::uint64_t ell, const Modulus& mod) {
  if (values.empty()) {
    throw std::invalid_argument("from_weight_values: no values");
  }
  if (values.size() - 1 > ell) {
    throw std::invalid_argument("from_weight_values: degree " +
                                std::to_string(values.size() - 1) +
                                " exceeds ell = " + std::to_string(ell));
  }
  const std::uint64_t m = mod.value();
  std::vector<Residue> coeffs(values.size(), 0);
  for (std::uint64_t w = 0; w < values.size(); ++w) {
    Residue acc = mod.reduce(values[w]);
    for (std::uint64_t t = 0; t < w; ++t) {
      if (coeffs[t] == 0) continue;
      acc = mod.sub(acc, mod.mul(coeffs[t], binom_mod(w, t, m)));
    }
    coeffs[w] = acc;
  }
  return SymmetricPolynomial(ell, std::move(coeffs), mod);
}

Residue amplify(std::uint64_t x, std::uint64_t p, unsigned e) {
  if (e == 0) throw std::invalid_argument("amplify: exponent must be >= 1");
  const std::uint64_t q = ipow(p, e);
  const Residue xr = x % q;
  const Residue one_minus_x = (q + 1 - xr) % q;
  Residue lead = 1 % q;  // (1 - x)^e
  for (unsigned i = 0; i < e; ++i) lead = lead * one_minus_x % q;
  Residue tail = 0;  // sum_{j<e} C(e-1+j, j) x^j
  Residue xpow = 1 % q;
  for (unsigned j = 0; j < e; ++j) {
    tail = (tail + binom_mod(e - 1 + j, j, q) * xpow) % q;
    xpow = xpow * xr % q;
  }
  return (q + 1 % q - lead * tail % q) % q;
}

std::uint64_t degree_bound(const Modulus& mod, const ExponentChoice& choice) {
  const auto& factors = mod.factors();
  if (choice.a.size() != factors.size()) {
    throw std::invalid_argument("exponent choice does not match modulus");
  }
  std::uint64_t bound = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::uint64_t qa = ipow(factors[i].p, choice.a[i]);
    bound = std::max(bound, saturating_mul(2 * factors[i].e - 1, qa - 1));
  }
  return bound;
}

ExponentChoice choose_exponents(const Modulus& mod, std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("choose_exponents: d must be >= 1");
  const auto& factors = mod.factors();
  const std::size_t r = factors.size();

  // Past the first a with p^a >= d + 1 a single factor already suffices,
  // so larger exponents only raise the bound.
  std::vector<unsigned> cap(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    std::uint64_t pw = 1;
    while (pw < d + 1) {
      pw *= factors[i].p;
      ++cap[i];
    }
  }

  ExponentChoice best;
  std::uint64_t best_bound = std::numeric_limits<std::uint64_t>::max();
  ExponentChoice cur{std::vector<unsigned>(r, 0)};
  // Odometer over the box [0, cap_0] x ... x [0, cap_{r-1}] in
  // lexicographic order; strict improvement keeps the smallest tuple.
  while (true) {
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < r; ++i) {
      product = saturating_mul(product, ipow(factors[i].p, cur.a[i]));
    }
    if (product >= d + 1) {
      const std::uint64_t b = degree_bound(mod, cur);
      if (b < best_bound) {
        best_bound = b;
        best = cur;
      }
    }
    std::size_t pos = r;
    while (pos > 0) {
      --pos;
      if (cur.a[pos] < cap[pos]) {
        ++cur.a[pos];
        break;
      }
      cur.a[pos] = 0;
      if (pos == 0) return best;
    }
    if (r == 0) return best;
  }
}

SymmetricPolynomial bbr_construct(const Modulus& mod, std::uint64_t d,
                                  std::uint64_t ell) {
  if (mod.num_factors() < 2) {
    throw UnsupportedModulusError(
        "the construction needs at least two distinct prime factors; got " +
        mod.to_string());
  }
  if (d < 1 || d > ell) {
    throw std::invalid_argument("bbr_construct needs 1 <= d <= ell, got d = " +
                                std::to_string(d) +
                                ", ell = " + std::to_string(ell));
  }
  const ExponentChoice choice = choose_exponents(mod, d);
  const std::uint64_t top = std::min(degree_bound(mod, choice), ell);
  const auto& factors = mod.factors();

  std::vector<Residue> values(top + 1, 0);
  ResidueVector rv(factors.size(), 0);
  for (std::uint64_t w = 0; w <= top; ++w) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const std::uint64_t p = factors[i].p;
      // Mod p, C(w, p^t)^(p-1) is 1 exactly when base-p digit t of w is
      // nonzero (Lucas and Fermat), so g = [some digit below a_i is
      // nonzero] = [w mod p^{a_i} != 0].
      Residue all_zero = 1;
      std::uint64_t pt = 1;
      for (unsigned t = 0; t < choice.a[i]; ++t, pt *= p) {
        Residue digit_flag = 1;
        const Residue c = binom_mod(w, pt, p);
        for (std::uint64_t j = 0; j + 1 < p; ++j) digit_flag = digit_flag * c % p;
        all_zero = all_zero * ((1 + p - digit_flag) % p) % p;
      }
      const Residue g = (1 + p - all_zero) % p;
      rv[i] = amplify(g, p, factors[i].e);
    }
    values[w] = crt_combine(rv, mod);
  }
  return from_weight_values(values, ell, mod);
}

std::uint64_t monomial_count(const SymmetricPolynomial& f) {
  std::uint64_t total = 0;
  for (std::uint64_t t = 0; t <= f.degree(); ++t) {
    if (f.coeff(t) != 0) {
      total = saturating_add(total, binom_saturating(f.ell(), t));
    }
  }
  return total;
}

}  // namespace modsym

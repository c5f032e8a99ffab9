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

// Symmetric multilinear polynomials over Z_m, stored in the elementary
// symmetric basis:
//
//   f(z_1..z_ell) = sum_{t=0..D} c_t * e_t(z),
//
// so that on a 0/1 point of Hamming weight w the value is
//
//   fhat(w) = sum_t c_t * C(w, t)  (mod m).
//
// The low-degree polynomial that is nonzero mod m on every nonzero 0/1
// point of weight <= d (and 0/1 modulo each prime power) is built here by
// bbr_construct().

#ifndef MODSYM_SYMPOLY_H_
#define MODSYM_SYMPOLY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "modsym/zmod.h"

namespace modsym {

class SymmetricPolynomial {
 public:
  // Trailing zero coefficients are trimmed; an all-zero input becomes the
  // constant 0. Throws std::invalid_argument when the degree exceeds ell.
  SymmetricPolynomial(std::uint64_t ell, std::vector<Residue> coeffs,
                      Modulus mod);

  std::uint64_t ell() const { return ell_; }
  std::uint64_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Residue>& coeffs() const { return coeffs_; }
  Residue coeff(std::uint64_t t) const {
    return t < coeffs_.size() ? coeffs_[t] : 0;
  }
  const Modulus& mod() const { return mod_; }

  bool operator==(const SymmetricPolynomial& o) const {
    return ell_ == o.ell_ && coeffs_ == o.coeffs_ && mod_ == o.mod_;
  }

 private:
  std::uint64_t ell_;
  std::vector<Residue> coeffs_;
  Modulus mod_;
};

// fhat(w). Throws std::invalid_argument when w > ell.
Residue weight_value(const SymmetricPolynomial& f, std::uint64_t w);

// fhat(0), ..., fhat(ell) in one pass.
std::vector<Residue> weight_table(const SymmetricPolynomial& f);

// The unique polynomial of degree <= values.size() - 1 with
// fhat(w) = values[w]. Binomial inversion by forward substitution; the
// diagonal C(t, t) = 1 is a unit in every Z_m.
SymmetricPolynomial from_weight_values(std::span<const Residue> values,
                                       std::uint64_t ell, const Modulus& mod);

// A_e(x) = 1 - (1 - x)^e * sum_{j<e} C(e-1+j, j) x^j, reduced mod p^e.
// x = 0 (mod p) gives 0 and x = 1 (mod p) gives 1, both mod p^e.
Residue amplify(std::uint64_t x, std::uint64_t p, unsigned e);

// Per-factor exponents a_i. prod p_i^{a_i} >= d + 1 and the largest
// per-factor degree (2 e_i - 1)(p_i^{a_i} - 1) is minimal; ties go to the
// lexicographically smallest tuple.
struct ExponentChoice {
  std::vector<unsigned> a;

  bool operator==(const ExponentChoice&) const = default;
};

ExponentChoice choose_exponents(const Modulus& mod, std::uint64_t d);

// max_i (2 e_i - 1)(p_i^{a_i} - 1).
std::uint64_t degree_bound(const Modulus& mod, const ExponentChoice& choice);

// The symmetric polynomial with c_0 = 0 such that, on weight w:
//   fhat(w) = [w mod p_i^{a_i} != 0]  (mod p_i^{e_i})  for every factor i.
// Hence fhat(w) != 0 mod m for 1 <= w <= d, and fhat(w) is 0 or 1 modulo
// every prime power for every w.
//
// Throws UnsupportedModulusError when m has fewer than two distinct prime
// factors, std::invalid_argument unless 1 <= d <= ell.
SymmetricPolynomial bbr_construct(const Modulus& mod, std::uint64_t d,
                                  std::uint64_t ell);

// Number of multilinear monomials in the expansion of f:
// sum over t with c_t != 0 of C(ell, t). Saturates at UINT64_MAX.
std::uint64_t monomial_count(const SymmetricPolynomial& f);

}  // namespace modsym

#endif  // MODSYM_SYMPOLY_H_

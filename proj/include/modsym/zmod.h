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

// Exact arithmetic in Z_m and in its prime-power components.
//
// Every modulus handled here is at most 2^32, so the product of two reduced
// residues always fits in 64 bits. Residues are canonical, in [0, m).

#ifndef MODSYM_ZMOD_H_
#define MODSYM_ZMOD_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace modsym {

using Residue = std::uint64_t;

struct PrimePower {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::uint64_t q = 0;  // p^e

  bool operator==(const PrimePower&) const = default;
};

class Modulus {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

  // Factors m by trial division. Throws std::invalid_argument for m < 2 or
  // m > kMaxModulus.
  explicit Modulus(std::uint64_t m);

  std::uint64_t value() const { return m_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  std::size_t num_factors() const { return factors_.size(); }
  bool is_prime_power() const { return factors_.size() == 1; }
  bool is_odd() const { return (m_ & 1) == 1; }

  Residue reduce(std::uint64_t x) const { return x % m_; }
  Residue add(Residue a, Residue b) const { return (a + b) % m_; }
  Residue sub(Residue a, Residue b) const { return (a + m_ - b) % m_; }
  Residue mul(Residue a, Residue b) const { return (a * b) % m_; }

  // "6 = 2 * 3", "12 = 2^2 * 3".
  std::string to_string() const;

  bool operator==(const Modulus& o) const { return m_ == o.m_; }

 private:
  std::uint64_t m_;
  std::vector<PrimePower> factors_;
};

Modulus factorize(std::uint64_t m);

// One residue per prime-power factor, in factor order.
using ResidueVector = std::vector<Residue>;

ResidueVector crt_split(Residue x, const Modulus& mod);

// The unique x in [0, m) with x = rv[i] (mod p_i^{e_i}) for every i.
// Throws std::invalid_argument when rv has the wrong length.
Residue crt_combine(std::span<const Residue> rv, const Modulus& mod);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Throws NotInvertibleError (carrying gcd(a, m)) when a is not a unit.
Residue mod_inverse(std::uint64_t a, std::uint64_t m);

// C(w, t) mod m via the Pascal recurrence, so no division ever happens in
// Z_m. Zero when t > w.
Residue binom_mod(std::uint64_t w, std::uint64_t t, std::uint64_t m);

// Exact C(w, t), saturating at UINT64_MAX.
std::uint64_t binom_saturating(std::uint64_t w, std::uint64_t t);

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

// True when d is 0 or 1 modulo every prime-power factor and 1 modulo at
// least one of them: the acceptable covering multiplicities of a cell whose
// target coefficient is 1.
bool is_partial_one(Residue d, const Modulus& mod);

// b^e exactly; throws std::overflow_error when it does not fit.
std::uint64_t ipow(std::uint64_t b, unsigned e);

}  // namespace modsym

#endif  // MODSYM_ZMOD_H_

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

// Alternative-strong representation modulo m = prod p_i^{e_i}.
//
// b represents a when, for every monomial I,
//   - b_I = a_I modulo at least one p_j^{e_j}, and
//   - b_I = 0 modulo every p_i^{e_i} where b_I != a_I.
// The relation is not symmetric. Where a_I = 0 the two conditions force
// b_I = 0 mod m.

#ifndef MODSYM_ASTRONG_H_
#define MODSYM_ASTRONG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modsym/circuit.h"
#include "modsym/zmod.h"

namespace modsym {

// The elementary symmetric polynomial as a coefficient map. Unordered: one
// group, coefficient 1 on each of the C(n, k) square-free degree-k
// monomials. Ordered: k groups, coefficient 1 on x^1_{i_1} ... x^k_{i_k}
// for every tuple of pairwise distinct indices.
CoefficientMap target_coefficients(std::uint32_t n, std::uint32_t k,
                                   bool ordered);

enum class FactorStatus {
  kAgree,     // b = a mod p_i^{e_i}
  kZeroed,    // b != a, b = 0 mod p_i^{e_i}
  kViolation  // b != a and b != 0 mod p_i^{e_i}
};

struct MonomialWitness {
  Monomial monomial;
  Residue a = 0;
  Residue b = 0;
  std::vector<FactorStatus> factors;
  std::optional<std::size_t> agreeing_factor;  // first j with b = a
  bool ok = false;
};

struct AStrongReport {
  std::vector<MonomialWitness> witnesses;  // every monomial in either support
  std::size_t violation_count = 0;

  bool pass() const { return violation_count == 0; }
};

// Whether b is an a-strong representation of a. Throws
// std::invalid_argument when the maps use different variable spaces.
AStrongReport check_astrong(const CoefficientMap& b, const CoefficientMap& a,
                            const Modulus& mod);

// First line "astrong PASS|FAIL monomials=<n> violations=<v>", then one
// line per violating monomial.
std::string to_text(const AStrongReport& report, const VariableSpace& vars,
                    const Modulus& mod);

}  // namespace modsym

#endif  // MODSYM_ASTRONG_H_

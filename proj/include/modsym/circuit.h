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

// Homogeneous depth-3 circuits over Z_m:
//
//   C(x) = sum_{gates} prod_{forms} (a_1 x_1 + ... + a_N x_N)
//
// with no constant terms. The size of a circuit counts the output sum gate,
// the r product gates and the sum_i s_i linear-form gates.

#ifndef MODSYM_CIRCUIT_H_
#define MODSYM_CIRCUIT_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "modsym/cover2d.h"
#include "modsym/coverkd.h"
#include "modsym/zmod.h"

namespace modsym {

using VarId = std::uint32_t;

// `groups` blocks of n variables; variable (g, i), g in 0..groups-1 and
// i in 1..n, has id g * n + (i - 1), so ids order lexicographically by
// (group, index).
struct VariableSpace {
  std::uint32_t groups = 1;
  std::uint32_t n = 0;

  std::uint32_t size() const { return groups * n; }
  VarId id(std::uint32_t group, std::uint32_t index) const {
    return group * n + (index - 1);
  }
  std::uint32_t group_of(VarId v) const { return v / n; }
  std::uint32_t index_of(VarId v) const { return v % n + 1; }
  // x3 with one group; x3 / y3 with two; x2_3 (group 2, index 3) otherwise.
  std::string name(VarId v) const;

  bool operator==(const VariableSpace&) const = default;
};

struct Term {
  VarId var = 0;
  Residue coeff = 0;

  bool operator==(const Term&) const = default;
};

// Sorted by variable, no zero coefficients, never empty.
struct LinearForm {
  std::vector<Term> terms;

  // Sorts, merges repeated variables, reduces mod m, drops zeros. Throws
  // std::invalid_argument when nothing nonzero remains.
  static LinearForm make(std::vector<Term> terms, const Modulus& mod);

  bool operator==(const LinearForm&) const = default;
};

struct ProductGate {
  std::vector<LinearForm> forms;
  // How many copies of an unweighted product this gate stands for (the
  // cover weight); 1 for gates not derived from a cover.
  std::uint64_t repetition = 1;
};

struct SigmaPiSigmaCircuit {
  Modulus mod;
  VariableSpace vars;
  std::vector<ProductGate> gates;
};

using Monomial = std::vector<VarId>;  // sorted

class CoefficientMap {
 public:
  explicit CoefficientMap(VariableSpace vars) : vars_(vars) {}

  const VariableSpace& vars() const { return vars_; }
  // Stores c; a zero c erases the entry.
  void set(Monomial mono, Residue c);
  Residue get(const Monomial& mono) const;
  const std::map<Monomial, Residue>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  // "x1*y2"; "1" for the empty monomial.
  std::string monomial_name(const Monomial& mono) const;

 private:
  VariableSpace vars_;
  std::map<Monomial, Residue> terms_;
};

// One gate (w * sum_{i in I} x_i)(sum_{j in J} y_j) per item.
SigmaPiSigmaCircuit from_cover2d(const WeightedRectCover& cover);

// One gate (w * sum_{j in A_1} x^1_j) ... (sum_{j in A_k} x^k_j) per item.
SigmaPiSigmaCircuit from_coverkd(const WeightedBoxCover& cover);

// assignment[v] is the value of variable v. Throws std::invalid_argument
// unless assignment.size() == c.vars.size().
Residue evaluate(const SigmaPiSigmaCircuit& c,
                 std::span<const Residue> assignment);
Residue evaluate(const CoefficientMap& map, std::span<const Residue> assignment,
                 const Modulus& mod);

struct CircuitSize {
  std::uint64_t gate_total = 0;         // 1 + r + sum_i s_i
  std::uint64_t products = 0;           // r
  std::uint64_t graph_model_count = 0;  // sum of gate repetitions
};

CircuitSize size(const SigmaPiSigmaCircuit& c);

// prod_{i in I} x_i for every k-subset I of one group of n variables.
SigmaPiSigmaCircuit naive_snk_circuit(std::uint32_t n, std::uint32_t k,
                                      const Modulus& mod);

// x^1_{i_1} ... x^k_{i_k} for every tuple of pairwise distinct indices, k
// groups.
SigmaPiSigmaCircuit naive_ordered_snk_circuit(std::uint32_t n, std::uint32_t k,
                                              const Modulus& mod);

inline constexpr std::uint64_t kDefaultExpansionBudget = 10'000'000;

// Exact symbolic expansion. Throws ResourceError, naming the gate count and
// the term count, when more than `budget` product terms would be generated.
CoefficientMap expand_coefficients(
    const SigmaPiSigmaCircuit& c,
    std::uint64_t budget = kDefaultExpansionBudget);

// Maps every group onto one (x^g_i -> x_i) and scales the first form of
// each gate by (k!)^{-1} mod m, k = number of groups. Throws
// NotInvertibleError when gcd(m, k!) != 1.
SigmaPiSigmaCircuit identify_variables_and_scale(const SigmaPiSigmaCircuit& c);

}  // namespace modsym

#endif  // MODSYM_CIRCUIT_H_

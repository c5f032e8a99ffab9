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

#include "modsym/circuit.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "modsym/errors.h"

namespace modsym {
namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (VarId v : m) {
      h ^= v;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

void check_assignment(std::span<const Residue> assignment,
                      const VariableSpace& vars) {
  if (assignment.size() != vars.size()) {
    throw std::invalid_argument("assignment has " +
                                std::to_string(assignment.size()) +
                                " values, circuit has " +
                                std::to_string(vars.size()) + " variables");
  }
}

LinearForm form_over(const IndexSet& members, std::uint32_t group,
                     Residue coeff, const VariableSpace& vars,
                     const Modulus& mod) {
  std::vector<Term> terms;
  for (std::uint32_t i : members.members()) terms.push_back({vars.id(group, i), coeff});
  return LinearForm::make(std::move(terms), mod);
}

}  // namespace

std::string VariableSpace::name(VarId v) const {
  const std::uint32_t g = group_of(v);
  const std::string idx = std::to_string(index_of(v));
  if (groups == 1) return "x" + idx;
  if (groups == 2) return (g == 0 ? "x" : "y") + idx;
  return "x" + std::to_string(g + 1) + "_" + idx;
}

LinearForm LinearForm::make(std::vector<Term> terms, const Modulus& mod) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.var < b.var; });
  LinearForm form;
  for (const Term& t : terms) {
    if (!form.terms.empty() && form.terms.back().var == t.var) {
      form.terms.back().coeff = mod.add(form.terms.back().coeff, mod.reduce(t.coeff));
    } else {
      form.terms.push_back({t.var, mod.reduce(t.coeff)});
    }
  }
  std::erase_if(form.terms, [](const Term& t) { return t.coeff == 0; });
  if (form.terms.empty()) {
    throw std::invalid_argument("linear form has no nonzero coefficient");
  }
  return form;
}

void CoefficientMap::set(Monomial mono, Residue c) {
  if (c == 0) {
    terms_.erase(mono);
  } else {
    terms_[std::move(mono)] = c;
  }
}

Residue CoefficientMap::get(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? 0 : it->second;
}

std::string CoefficientMap::monomial_name(const Monomial& mono) const {
  if (mono.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (i > 0) s += '*';
    s += vars_.name(mono[i]);
  }
  return s;
}

SigmaPiSigmaCircuit from_cover2d(const WeightedRectCover& cover) {
  SigmaPiSigmaCircuit c{cover.mod(), VariableSpace{2, cover.n()}, {}};
  c.gates.reserve(cover.size());
  for (const WeightedRect& it : cover.items()) {
    ProductGate gate;
    gate.forms.push_back(form_over(it.rect.rows, 0, it.weight, c.vars, c.mod));
    gate.forms.push_back(form_over(it.rect.cols, 1, 1, c.vars, c.mod));
    gate.repetition = it.weight;
    c.gates.push_back(std::move(gate));
  }
  return c;
}

SigmaPiSigmaCircuit from_coverkd(const WeightedBoxCover& cover) {
  SigmaPiSigmaCircuit c{cover.mod(), VariableSpace{cover.k(), cover.n()}, {}};
  c.gates.reserve(cover.size());
  for (const WeightedBox& it : cover.items()) {
    ProductGate gate;
    for (std::uint32_t l = 0; l < cover.k(); ++l) {
      gate.forms.push_back(form_over(it.box.parts[l], l, l == 0 ? it.weight : 1,
                                     c.vars, c.mod));
    }
    gate.repetition = it.weight;
    c.gates.push_back(std::move(gate));
  }
  return c;
}

Residue evaluate(const SigmaPiSigmaCircuit& c,
                 std::span<const Residue> assignment) {
  check_assignment(assignment, c.vars);
  const Modulus& mod = c.mod;
  Residue total = 0;
  for (const ProductGate& gate : c.gates) {
    Residue prod = mod.reduce(1);
    for (const LinearForm& form : gate.forms) {
      Residue v = 0;
      for (const Term& t : form.terms) {
        v = mod.add(v, mod.mul(t.coeff, mod.reduce(assignment[t.var])));
      }
      prod = mod.mul(prod, v);
    }
    total = mod.add(total, prod);
  }
  return total;
}

Residue evaluate(const CoefficientMap& map, std::span<const Residue> assignment,
                 const Modulus& mod) {
  check_assignment(assignment, map.vars());
  Residue total = 0;
  for (const auto& [mono, coeff] : map.terms()) {
    Residue v = coeff;
    for (VarId x : mono) v = mod.mul(v, mod.reduce(assignment[x]));
    total = mod.add(total, v);
  }
  return total;
}

CircuitSize size(const SigmaPiSigmaCircuit& c) {
  CircuitSize s;
  s.products = c.gates.size();
  s.gate_total = 1 + s.products;
  for (const ProductGate& gate : c.gates) {
    s.gate_total += gate.forms.size();
    s.graph_model_count += gate.repetition;
  }
  return s;
}

SigmaPiSigmaCircuit naive_snk_circuit(std::uint32_t n, std::uint32_t k,
                                      const Modulus& mod) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("naive circuit needs n >= k >= 1");
  }
  SigmaPiSigmaCircuit c{mod, VariableSpace{1, n}, {}};
  std::vector<std::uint32_t> subset(k);
  auto emit = [&](auto&& self, std::uint32_t pos, std::uint32_t from) -> void {
    if (pos == k) {
      ProductGate gate;
      for (std::uint32_t i : subset) {
        gate.forms.push_back(LinearForm{{Term{c.vars.id(0, i), mod.reduce(1)}}});
      }
      c.gates.push_back(std::move(gate));
      return;
    }
    for (std::uint32_t i = from; i <= n; ++i) {
      subset[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  emit(emit, 0, 1);
  return c;
}

SigmaPiSigmaCircuit naive_ordered_snk_circuit(std::uint32_t n, std::uint32_t k,
                                              const Modulus& mod) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("naive circuit needs n >= k >= 1");
  }
  SigmaPiSigmaCircuit c{mod, VariableSpace{k, n}, {}};
  std::vector<std::uint32_t> tuple(k);
  std::vector<bool> used(n + 1, false);
  auto emit = [&](auto&& self, std::uint32_t pos) -> void {
    if (pos == k) {
      ProductGate gate;
      for (std::uint32_t l = 0; l < k; ++l) {
        gate.forms.push_back(
            LinearForm{{Term{c.vars.id(l, tuple[l]), mod.reduce(1)}}});
      }
      c.gates.push_back(std::move(gate));
      return;
    }
    for (std::uint32_t i = 1; i <= n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      tuple[pos] = i;
      self(self, pos + 1);
      used[i] = false;
    }
  };
  emit(emit, 0);
  return c;
}

CoefficientMap expand_coefficients(const SigmaPiSigmaCircuit& c,
                                   std::uint64_t budget) {
  std::uint64_t needed = 0;
  for (const ProductGate& gate : c.gates) {
    std::uint64_t terms = 1;
    for (const LinearForm& form : gate.forms) {
      terms = saturating_mul(terms, form.terms.size());
    }
    needed = saturating_add(needed, terms);
  }
  if (needed > budget) {
    throw ResourceError("expanding " + std::to_string(c.gates.size()) +
                        " gates needs " + std::to_string(needed) +
                        " product terms, budget is " + std::to_string(budget));
  }

  const Modulus& mod = c.mod;
  std::unordered_map<Monomial, Residue, MonomialHash> acc;
  Monomial key;
  std::vector<std::size_t> pos;
  for (const ProductGate& gate : c.gates) {
    const std::size_t s = gate.forms.size();
    pos.assign(s, 0);
    while (true) {
      key.clear();
      Residue coeff = mod.reduce(1);
      for (std::size_t f = 0; f < s; ++f) {
        const Term& t = gate.forms[f].terms[pos[f]];
        key.push_back(t.var);
        coeff = mod.mul(coeff, t.coeff);
      }
      std::sort(key.begin(), key.end());
      auto it = acc.find(key);
      if (it == acc.end()) {
        acc.emplace(key, coeff);
      } else {
        it->second = mod.add(it->second, coeff);
      }
      std::int64_t f = static_cast<std::int64_t>(s) - 1;
      while (f >= 0 && ++pos[f] == gate.forms[f].terms.size()) pos[f--] = 0;
      if (f < 0) break;
    }
  }
  CoefficientMap out(c.vars);
  for (auto& [mono, coeff] : acc) out.set(mono, coeff);
  return out;
}

SigmaPiSigmaCircuit identify_variables_and_scale(const SigmaPiSigmaCircuit& c) {
  const std::uint32_t k = c.vars.groups;
  const std::uint64_t m = c.mod.value();
  std::uint64_t k_factorial = 1;
  for (std::uint32_t i = 2; i <= k; ++i) k_factorial = k_factorial * i % m;
  const std::uint64_t g = gcd(k_factorial == 0 ? m : k_factorial, m);
  if (g != 1) {
    throw NotInvertibleError(
        "identifying " + std::to_string(k) + " variable groups divides by " +
            std::to_string(k) + "! which needs gcd(m, " + std::to_string(k) +
            "!) = 1; m = " + std::to_string(m) + " gives gcd " +
            std::to_string(g),
        g);
  }
  const Residue scale = mod_inverse(k_factorial, m);

  SigmaPiSigmaCircuit out{c.mod, VariableSpace{1, c.vars.n}, {}};
  out.gates.reserve(c.gates.size());
  for (const ProductGate& gate : c.gates) {
    ProductGate mapped;
    mapped.repetition = gate.repetition;
    for (std::size_t f = 0; f < gate.forms.size(); ++f) {
      std::vector<Term> terms;
      terms.reserve(gate.forms[f].terms.size());
      for (const Term& t : gate.forms[f].terms) {
        const Residue coeff = f == 0 ? c.mod.mul(t.coeff, scale) : t.coeff;
        terms.push_back({out.vars.id(0, c.vars.index_of(t.var)), coeff});
      }
      mapped.forms.push_back(LinearForm::make(std::move(terms), c.mod));
    }
    out.gates.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace modsym

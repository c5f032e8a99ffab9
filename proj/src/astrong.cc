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

#include "modsym/astrong.h"

#include <sstream>
#include <stdexcept>

namespace modsym {
namespace {

MonomialWitness judge(const Monomial& mono, Residue a, Residue b,
                      const Modulus& mod) {
  MonomialWitness w{mono, a, b, {}, std::nullopt, true};
  const auto& factors = mod.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::uint64_t q = factors[i].q;
    if (a % q == b % q) {
      w.factors.push_back(FactorStatus::kAgree);
      if (!w.agreeing_factor) w.agreeing_factor = i;
    } else if (b % q == 0) {
      w.factors.push_back(FactorStatus::kZeroed);
    } else {
      w.factors.push_back(FactorStatus::kViolation);
      w.ok = false;
    }
  }
  if (!w.agreeing_factor) w.ok = false;
  return w;
}

}  // namespace

CoefficientMap target_coefficients(std::uint32_t n, std::uint32_t k,
                                   bool ordered) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("target needs n >= k >= 1");
  }
  if (!ordered) {
    CoefficientMap map(VariableSpace{1, n});
    Monomial mono(k);
    auto emit = [&](auto&& self, std::uint32_t pos, std::uint32_t from) -> void {
      if (pos == k) {
        map.set(mono, 1);
        return;
      }
      for (std::uint32_t i = from; i <= n; ++i) {
        mono[pos] = map.vars().id(0, i);
        self(self, pos + 1, i + 1);
      }
    };
    emit(emit, 0, 1);
    return map;
  }
  CoefficientMap map(VariableSpace{k, n});
  std::vector<std::uint32_t> tuple(k);
  std::vector<bool> used(n + 1, false);
  auto emit = [&](auto&& self, std::uint32_t pos) -> void {
    if (pos == k) {
      Monomial mono(k);
      // Group l owns ids [l n, (l + 1) n), so this is already sorted.
      for (std::uint32_t l = 0; l < k; ++l) mono[l] = map.vars().id(l, tuple[l]);
      map.set(std::move(mono), 1);
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
  return map;
}

AStrongReport check_astrong(const CoefficientMap& b, const CoefficientMap& a,
                            const Modulus& mod) {
  if (!(a.vars() == b.vars())) {
    throw std::invalid_argument("coefficient maps over different variable "
                                "spaces");
  }
  AStrongReport report;
  auto record = [&](const Monomial& mono, Residue av, Residue bv) {
    report.witnesses.push_back(judge(mono, mod.reduce(av), mod.reduce(bv), mod));
    if (!report.witnesses.back().ok) ++report.violation_count;
  };
  // Merge over the union of the two sorted supports.
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() ||
        (ia != a.terms().end() && ia->first < ib->first)) {
      record(ia->first, ia->second, 0);
      ++ia;
    } else if (ia == a.terms().end() || ib->first < ia->first) {
      record(ib->first, 0, ib->second);
      ++ib;
    } else {
      record(ia->first, ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  return report;
}

std::string to_text(const AStrongReport& report, const VariableSpace& vars,
                    const Modulus& mod) {
  std::ostringstream os;
  os << "astrong " << (report.pass() ? "PASS" : "FAIL")
     << " monomials=" << report.witnesses.size()
     << " violations=" << report.violation_count << '\n';
  const CoefficientMap names(vars);
  for (const MonomialWitness& w : report.witnesses) {
    if (w.ok) continue;
    os << "violation " << names.monomial_name(w.monomial) << " a=" << w.a
       << " b=" << w.b;
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
      os << " mod" << mod.factors()[i].q << ':';
      switch (w.factors[i]) {
        case FactorStatus::kAgree:
          os << "agree";
          break;
        case FactorStatus::kZeroed:
          os << "zero";
          break;
        case FactorStatus::kViolation:
          os << "bad";
          break;
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace modsym

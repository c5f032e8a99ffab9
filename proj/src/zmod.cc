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

#include "modsym/zmod.h"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "modsym/errors.h"

namespace modsym {

Modulus::Modulus(std::uint64_t m) : m_(m) {
  if (m < 2) {
    throw std::invalid_argument("modulus must be >= 2, got " +
                                std::to_string(m));
  }
  if (m > kMaxModulus) {
    throw std::invalid_argument("modulus exceeds 2^32: " + std::to_string(m));
  }
  std::uint64_t rest = m;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (rest % p == 0) {
      rest /= p;
      ++pp.e;
      pp.q *= p;
    }
    factors_.push_back(pp);
  }
  if (rest > 1) factors_.push_back({rest, 1, rest});
}

std::string Modulus::to_string() const {
  std::ostringstream os;
  os << m_ << " =";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    os << (i == 0 ? " " : " * ") << factors_[i].p;
    if (factors_[i].e > 1) os << '^' << factors_[i].e;
  }
  return os.str();
}

Modulus factorize(std::uint64_t m) { return Modulus(m); }

ResidueVector crt_split(Residue x, const Modulus& mod) {
  ResidueVector rv;
  rv.reserve(mod.num_factors());
  for (const PrimePower& pp : mod.factors()) rv.push_back(x % pp.q);
  return rv;
}

Residue crt_combine(std::span<const Residue> rv, const Modulus& mod) {
  const auto& factors = mod.factors();
  if (rv.size() != factors.size()) {
    throw std::invalid_argument("residue vector has " +
                                std::to_string(rv.size()) + " entries, " +
                                mod.to_string() + " has " +
                                std::to_string(factors.size()) + " factors");
  }
  const std::uint64_t m = mod.value();
  Residue x = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::uint64_t q = factors[i].q;
    const std::uint64_t cofactor = m / q;
    // cofactor * (cofactor^{-1} mod q) is 1 mod q and 0 mod every other
    // prime power.
    const Residue basis = mod.mul(cofactor % m, mod_inverse(cofactor % q, q));
    x = mod.add(x, mod.mul(basis, rv[i] % q));
  }
  return x;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

Residue mod_inverse(std::uint64_t a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("mod_inverse: modulus 0");
  if (m == 1) return 0;
  // Extended Euclid on signed 128-bit intermediates.
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) {
    const auto g = static_cast<std::uint64_t>(old_r);
    throw NotInvertibleError(std::to_string(a) + " is not invertible mod " +
                                 std::to_string(m) + " (gcd " +
                                 std::to_string(g) + ")",
                             g);
  }
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<Residue>(inv);
}

Residue binom_mod(std::uint64_t w, std::uint64_t t, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("binom_mod: modulus 0");
  if (t > w) return 0;
  t = std::min(t, w - t);
  // row[j] = C(i, j) mod m for the current i, j <= t.
  std::vector<Residue> row(t + 1, 0);
  row[0] = 1 % m;
  for (std::uint64_t i = 1; i <= w; ++i) {
    const std::uint64_t top = std::min(i, t);
    for (std::uint64_t j = top; j >= 1; --j) {
      row[j] = (row[j] + row[j - 1]) % m;
    }
  }
  return row[t];
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(p);
}

std::uint64_t binom_saturating(std::uint64_t w, std::uint64_t t) {
  if (t > w) return 0;
  t = std::min(t, w - t);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= t; ++i) {
    // acc * (w - t + i) / i stays integral: it is C(w - t + i, i).
    acc = acc * (w - t + i) / i;
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

bool is_partial_one(Residue d, const Modulus& mod) {
  bool some_one = false;
  for (const PrimePower& pp : mod.factors()) {
    const Residue r = d % pp.q;
    if (r == 1 % pp.q) {
      some_one = true;
    } else if (r != 0) {
      return false;
    }
  }
  return some_one;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (b != 0 && r > std::numeric_limits<std::uint64_t>::max() / b) {
      throw std::overflow_error("ipow overflow");
    }
    r *= b;
  }
  return r;
}

}  // namespace modsym

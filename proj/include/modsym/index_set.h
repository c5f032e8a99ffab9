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

#ifndef MODSYM_INDEX_SET_H_
#define MODSYM_INDEX_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace modsym {

// A subset of {1, ..., n} as a packed bitset.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::uint32_t n) : n_(n), words_((n + 63) / 64, 0) {}
  IndexSet(std::uint32_t n, std::initializer_list<std::uint32_t> members)
      : IndexSet(n) {
    for (std::uint32_t i : members) insert(i);
  }

  std::uint32_t universe() const { return n_; }

  void insert(std::uint32_t i) {
    check(i);
    words_[(i - 1) / 64] |= std::uint64_t{1} << ((i - 1) % 64);
  }

  bool contains(std::uint32_t i) const {
    if (i < 1 || i > n_) return false;
    return (words_[(i - 1) / 64] >> ((i - 1) % 64)) & 1;
  }

  bool empty() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  std::uint32_t size() const {
    std::uint32_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  IndexSet& operator&=(const IndexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }

  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }

  bool intersects(const IndexSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & o.words_[w]) return true;
    }
    return false;
  }

  // Members in increasing order.
  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    out.reserve(size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        out.push_back(static_cast<std::uint32_t>(w * 64 + b + 1));
        bits &= bits - 1;
      }
    }
    return out;
  }

  bool operator==(const IndexSet&) const = default;

 private:
  void check(std::uint32_t i) const {
    if (i < 1 || i > n_) {
      throw std::invalid_argument("index " + std::to_string(i) +
                                  " outside 1.." + std::to_string(n_));
    }
  }

  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace modsym

#endif  // MODSYM_INDEX_SET_H_

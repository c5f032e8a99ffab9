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

#ifndef MODSYM_ERRORS_H_
#define MODSYM_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modsym {

// Bad arguments are reported with std::invalid_argument. The types below
// cover the failure modes callers are expected to distinguish.

class NotInvertibleError : public std::domain_error {
 public:
  NotInvertibleError(const std::string& what, std::uint64_t gcd)
      : std::domain_error(what), gcd_(gcd) {}
  std::uint64_t gcd() const { return gcd_; }

 private:
  std::uint64_t gcd_;
};

// The modulus is a prime power (or otherwise unsuitable for a construction
// that needs at least two distinct prime factors).
class UnsupportedModulusError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A randomized or greedy search ran out of its resource cap.
class ConstructionFailedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A symbolic expansion would exceed its term budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace modsym

#endif  // MODSYM_ERRORS_H_

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

// Depth-first enumeration of the nonempty intersections of up to
// `max_size` shapes, shared by the rectangle and box transforms.

#ifndef MODSYM_INTERSECTIONS_H_
#define MODSYM_INTERSECTIONS_H_

#include <cstddef>
#include <span>
#include <vector>

namespace modsym::internal {

// Visits every index set K = {k_1 < ... < k_t}, 1 <= t <= max_size, whose
// shapes have a nonempty common intersection, in lexicographic order of
// (k_1, ..., k_t). `visit(t, shape)` receives |K| and the intersection.
// A branch is cut as soon as its running intersection is empty, since every
// extension would be empty too.
//
// Shape needs `shape &= other` and `shape.empty()`.
template <class Shape, class Visit>
void for_each_nonempty_intersection(std::span<const Shape> shapes,
                                    std::size_t max_size, Visit&& visit) {
  if (max_size == 0 || shapes.empty()) return;
  // stack[t] holds the intersection of the first t + 1 chosen shapes.
  std::vector<Shape> stack(max_size);

  auto descend = [&](auto&& self, std::size_t depth, std::size_t next) -> void {
    for (std::size_t k = next; k < shapes.size(); ++k) {
      if (depth == 0) {
        stack[0] = shapes[k];
      } else {
        stack[depth] = stack[depth - 1];
        stack[depth] &= shapes[k];
      }
      if (stack[depth].empty()) continue;
      visit(depth + 1, static_cast<const Shape&>(stack[depth]));
      if (depth + 1 < max_size) self(self, depth + 1, k + 1);
    }
  };
  descend(descend, 0, 0);
}

}  // namespace modsym::internal

#endif  // MODSYM_INTERSECTIONS_H_

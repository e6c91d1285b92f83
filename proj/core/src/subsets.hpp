// Copyright 2026 The Authors.
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

#ifndef GHW_SRC_SUBSETS_HPP_
#define GHW_SRC_SUBSETS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ghw {

// Visits every `size`-subset of {0..n-1} as a bitmask in increasing numeric
// order, which is colex order on the subsets. Stops early when fn returns false.
template <typename Fn>
void for_each_subset_mask(std::size_t n, std::size_t size, Fn&& fn) {
  if (size > n || n > 63) return;
  if (size == 0) {
    fn(std::uint64_t{0});
    return;
  }
  std::uint64_t mask = (std::uint64_t{1} << size) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (mask < limit) {
    if (!fn(mask)) return;
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
}

inline std::vector<std::size_t> mask_to_indices(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

inline std::uint64_t indices_to_mask(const std::vector<std::size_t>& indices) {
  std::uint64_t mask = 0;
  for (std::size_t i : indices) mask |= std::uint64_t{1} << i;
  return mask;
}

}  // namespace ghw

#endif  // GHW_SRC_SUBSETS_HPP_

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


#include <algorithm>
#include <string>
#include <vector>

#include "ghw/betti.hpp"
#include "subsets.hpp"

namespace ghw {

namespace {

// Reduced homology dimensions of the simplicial complex whose faces are
// given as bitmasks, bucketed by size (bucket 0 holds the empty face).
std::vector<std::size_t> reduced_homology(const std::vector<std::vector<std::uint64_t>>& faces,
                                          const PrimeField& field) {
  const std::size_t top = faces.size();
  // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces.
  std::vector<std::size_t> ranks(top + 1, 0);
  const std::uint32_t minus_one = field.neg(1);
  for (std::size_t s = 1; s < top; ++s) {
    const auto& src = faces[s];
    const auto& dst = faces[s - 1];
    if (src.empty() || dst.empty()) continue;
    std::vector<std::uint32_t> data(dst.size() * src.size(), 0);
    for (std::size_t c = 0; c < src.size(); ++c) {
      std::size_t t = 0;
      for (std::uint64_t rest = src[c]; rest != 0; rest &= rest - 1, ++t) {
        const std::uint64_t b = src[c] & ~(rest & (~rest + 1));
        const auto row = std::ranges::lower_bound(dst, b) - dst.begin();
        data[static_cast<std::size_t>(row) * src.size() + c] = t % 2 == 0 ? 1 : minus_one;
      }
    }
    ranks[s] = rank_in_place(data, dst.size(), src.size(), field);
  }
  // Homology in dimension s - 1.
  std::vector<std::size_t> h(top, 0);
  for (std::size_t s = 0; s < top; ++s) h[s] = faces[s].size() - ranks[s] - ranks[s + 1];
  return h;
}

}  // namespace

BettiTable hochster_betti(std::span<const IndexSet> nonfaces, std::size_t n, const PrimeField& field,
                          std::size_t i_max, std::size_t j_max) {
  if (n > 24) throw Error(ErrorKind::kTooLarge, "Hochster enumeration limited to 24 vertices");
  std::vector<std::uint64_t> nonface_masks;
  for (const auto& s : nonfaces) {
    for (std::size_t v : s) {
      if (v >= n) throw Error(ErrorKind::kInvalidArgument, "nonface vertex out of range");
    }
    nonface_masks.push_back(indices_to_mask(s));
  }
  auto is_face = [&](std::uint64_t f) {
    return std::ranges::none_of(nonface_masks, [&](std::uint64_t nf) { return (nf & f) == nf; });
  };

  BettiTable out;
  out.i_max = i_max;
  out.j_max = j_max;
  for (std::size_t j = 0; j <= std::min(n, j_max); ++j) {
    for_each_subset_mask(n, j, [&](std::uint64_t w) {
      // A full simplex on a nonempty W is acyclic.
      if (w != 0 && is_face(w)) return true;
      std::vector<std::vector<std::uint64_t>> faces(j + 1);
      for (std::uint64_t f = w;; f = (f - 1) & w) {
        if (is_face(f)) faces[static_cast<std::size_t>(__builtin_popcountll(f))].push_back(f);
        if (f == 0) break;
      }
      for (auto& bucket : faces) std::ranges::sort(bucket);
      const auto h = reduced_homology(faces, field);
      // H~_{s-1}(Delta_W) contributes to beta_{j-s, j}.
      for (std::size_t s = 0; s < h.size(); ++s) {
        if (h[s] == 0 || s > j) continue;
        const std::size_t i = j - s;
        if (i <= i_max) out.entries[{i, j}] += h[s];
      }
      return true;
    });
  }
  out.truncated = std::ranges::any_of(out.entries, [&](const auto& kv) {
    return kv.first.second == j_max && kv.second != 0;
  });
  return out;
}

BettiTable hochster_betti(std::span<const IndexSet> nonfaces, std::size_t n, const PrimeField& field) {
  return hochster_betti(nonfaces, n, field, n, n + 2);
}

}  // namespace ghw

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

#include "ghw/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "subsets.hpp"

namespace ghw {

bool size_colex_less(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

std::vector<IndexSet> minimal_sets(std::vector<IndexSet> sets) {
  std::ranges::sort(sets, size_colex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<IndexSet> kept;
  for (auto& s : sets) {
    const bool covered = std::ranges::any_of(kept, [&](const IndexSet& k) {
      return std::ranges::includes(s, k);
    });
    if (!covered) kept.push_back(std::move(s));
  }
  return kept;
}

void check_permutation(std::span<const std::size_t> order, std::size_t n) {
  std::vector<bool> seen(n, false);
  if (order.size() != n) {
    throw Error(ErrorKind::kInvalidArgument, "order must list all " + std::to_string(n) + " variables");
  }
  for (std::size_t v : order) {
    if (v >= n || seen[v]) throw Error(ErrorKind::kInvalidArgument, "order is not a permutation");
    seen[v] = true;
  }
}

VectorMatroid::VectorMatroid(DenseMatrix m) : m_(std::move(m)), rank_(ghw::rank(m_)) {}

std::vector<Circuit> circuits(const VectorMatroid& m, std::size_t cap) {
  const std::size_t n = m.ground_size();
  if (n > cap || n > 63) {
    throw Error(ErrorKind::kTooLarge, "ground set of " + std::to_string(n) +
                                          " elements exceeds circuit cap " + std::to_string(cap));
  }
  std::vector<std::uint64_t> found_masks;
  std::vector<Circuit> out;
  // A circuit has at most rank + 1 elements.
  for (std::size_t size = 1; size <= std::min(n, m.rank() + 1); ++size) {
    for_each_subset_mask(n, size, [&](std::uint64_t mask) {
      for (std::uint64_t c : found_masks) {
        if ((c & mask) == c) return true;
      }
      // No proper subset is dependent, so dependent means minimal dependent.
      if (rank_of_column_mask(m.matrix(), mask) == size) return true;
      Circuit circ;
      circ.support = mask_to_indices(mask);
      const auto kernel = kernel_basis(m.matrix().select_columns(circ.support));
      // The kernel of a circuit's columns is one-dimensional with full support.
      std::vector<Scalar> dep = kernel.front();
      const Scalar lead_inv = dep.front().inverse();
      for (auto& a : dep) a = a * lead_inv;
      circ.dependency = std::move(dep);
      out.push_back(std::move(circ));
      return true;
    });
    // Masks found at this size never contain each other; add them afterwards.
    found_masks.clear();
    for (const auto& c : out) found_masks.push_back(indices_to_mask(c.support));
  }
  return out;
}

std::size_t smallest_circuit_size(std::span<const Circuit> cs) {
  if (cs.empty()) throw Error(ErrorKind::kNoCircuits, "the matroid has no circuits");
  std::size_t best = cs.front().support.size();
  for (const auto& c : cs) best = std::min(best, c.support.size());
  return best;
}

std::size_t smallest_circuit_size(const VectorMatroid& m) {
  return smallest_circuit_size(circuits(m));
}

BrokenCircuitIdeal broken_circuits(std::span<const Circuit> cs, std::span<const std::size_t> order) {
  std::size_t n = order.size();
  check_permutation(order, n);
  std::vector<std::size_t> position(n);
  for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;

  std::vector<IndexSet> broken;
  broken.reserve(cs.size());
  for (const auto& c : cs) {
    if (c.support.empty()) continue;
    const auto least = std::ranges::max_element(c.support, {}, [&](std::size_t e) {
      if (e >= n) throw Error(ErrorKind::kInvalidArgument, "circuit element outside the order");
      return position[e];
    });
    IndexSet b;
    for (std::size_t e : c.support) {
      if (e != *least) b.push_back(e);
    }
    broken.push_back(std::move(b));
  }
  return {std::vector<std::size_t>(order.begin(), order.end()), minimal_sets(std::move(broken))};
}

ComponentPartition components(std::span<const Circuit> cs, std::size_t ground_size) {
  std::vector<std::size_t> parent(ground_size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : cs) {
    for (std::size_t i = 1; i < c.support.size(); ++i) {
      const std::size_t a = find(c.support[0]);
      const std::size_t b = find(c.support[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  ComponentPartition part;
  std::vector<std::size_t> block_of(ground_size, ground_size);
  for (std::size_t e = 0; e < ground_size; ++e) {
    const std::size_t root = find(e);
    if (block_of[root] == ground_size) {
      block_of[root] = part.blocks.size();
      part.blocks.emplace_back();
    }
    part.blocks[block_of[root]].push_back(e);
  }
  return part;
}

IndexSet loops(const VectorMatroid& m) {
  IndexSet out;
  for (std::size_t c = 0; c < m.ground_size(); ++c) {
    if (m.matrix().column_is_zero(c)) out.push_back(c);
  }
  return out;
}

std::vector<std::uint64_t> face_vector(std::span<const IndexSet> minimal_nonfaces, std::size_t n) {
  if (n > 30) throw Error(ErrorKind::kTooLarge, "face enumeration limited to 30 vertices");
  std::vector<std::uint64_t> nonface_masks;
  for (const auto& s : minimal_nonfaces) nonface_masks.push_back(indices_to_mask(s));
  std::vector<std::uint64_t> f(n + 1, 0);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t face = 0; face < limit; ++face) {
    const bool ok = std::ranges::none_of(nonface_masks, [&](std::uint64_t nf) {
      return (nf & face) == nf;
    });
    if (ok) ++f[static_cast<std::size_t>(__builtin_popcountll(face))];
  }
  return f;
}

std::vector<std::uint64_t> nbc_f_vector(const BrokenCircuitIdeal& bc, std::size_t n) {
  return face_vector(bc.minimal_nonfaces, n);
}

}  // namespace ghw

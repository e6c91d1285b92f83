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

#ifndef GHW_MATROID_HPP_
#define GHW_MATROID_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ghw/exactfield.hpp"

namespace ghw {

inline constexpr std::size_t kDefaultCircuitCap = 20;

// Strictly increasing, 0-based element indices.
using IndexSet = std::vector<std::size_t>;

// Size first, then colex. This is the enumeration order used throughout.
bool size_colex_less(const IndexSet& a, const IndexSet& b);

// Keeps the inclusion-minimal sets, deduplicated and sorted by size_colex_less.
std::vector<IndexSet> minimal_sets(std::vector<IndexSet> sets);

// Column matroid of a matrix; the ground set is the column index range.
class VectorMatroid {
 public:
  explicit VectorMatroid(DenseMatrix m);

  const DenseMatrix& matrix() const { return m_; }
  std::size_t rank() const { return rank_; }
  std::size_t ground_size() const { return m_.cols(); }

 private:
  DenseMatrix m_;
  std::size_t rank_;
};

// A minimal dependent column set with its dependency sum_j a_j * col_{s_j} = 0.
// The coefficient at the smallest support index is 1.
struct Circuit {
  IndexSet support;
  std::vector<Scalar> dependency;
};

// All circuits, by increasing size then colex. Throws kTooLarge above the cap.
std::vector<Circuit> circuits(const VectorMatroid& m, std::size_t cap = kDefaultCircuitCap);

std::size_t smallest_circuit_size(std::span<const Circuit> cs);
std::size_t smallest_circuit_size(const VectorMatroid& m);

// Inclusion-minimal broken circuits for a variable priority order
// (order[0] is the greatest element).
struct BrokenCircuitIdeal {
  std::vector<std::size_t> order;
  std::vector<IndexSet> minimal_nonfaces;
};

// Each circuit loses its least element under `order`; the survivors are the
// graded reverse lexicographic leading monomials of the circuit polynomials.
BrokenCircuitIdeal broken_circuits(std::span<const Circuit> cs, std::span<const std::size_t> order);

struct ComponentPartition {
  std::vector<IndexSet> blocks;  // sorted by smallest element
  std::size_t count() const { return blocks.size(); }
};

ComponentPartition components(std::span<const Circuit> cs, std::size_t ground_size);

// Indices of zero columns.
IndexSet loops(const VectorMatroid& m);

// f[i] = number of i-subsets of {0..n-1} containing no nonface, i = 0..n.
std::vector<std::uint64_t> face_vector(std::span<const IndexSet> minimal_nonfaces, std::size_t n);
std::vector<std::uint64_t> nbc_f_vector(const BrokenCircuitIdeal& bc, std::size_t n);

// Throws kInvalidArgument unless order is a permutation of {0..n-1}.
void check_permutation(std::span<const std::size_t> order, std::size_t n);

}  // namespace ghw

#endif  // GHW_MATROID_HPP_

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

#ifndef GHW_CODES_HPP_
#define GHW_CODES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ghw/exactfield.hpp"

namespace ghw {

inline constexpr std::uint64_t kDefaultCodewordCap = std::uint64_t{1} << 24;
inline constexpr std::size_t kDefaultSubsetLengthCap = 24;
inline constexpr std::uint64_t kDefaultSubspaceCap = 1'000'000;

// A linear [n, k] code given by a k x n generator matrix of full row rank.
class LinearCode {
 public:
  explicit LinearCode(DenseMatrix generator, std::string name = {});

  const PrimeField& field() const { return generator_.field(); }
  const DenseMatrix& generator() const { return generator_; }
  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }
  const std::string& name() const { return name_; }

 private:
  DenseMatrix generator_;
  std::string name_;
};

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::vector<std::size_t> ghw;  // d_1 .. d_k
  bool degenerate = false;       // some generator column is zero
};

// [I_k | P] after row reduction and moving the pivot columns to the front.
// Column j of `matrix` is column column_permutation[j] of the generator.
struct StandardForm {
  DenseMatrix matrix;
  std::vector<std::size_t> column_permutation;
};

StandardForm standard_form(const LinearCode& code);

// (n-k) x n parity-check matrix, [-P^T | I_{n-k}] with the standard-form
// column permutation undone. Throws kNoDual when k = n.
DenseMatrix parity_check(const LinearCode& code);

// Minimum weight over all nonzero codewords by enumerating q^k messages.
std::size_t min_distance(const LinearCode& code, std::uint64_t codeword_cap = kDefaultCodewordCap);

// d_r = min |I| with |I| - rank(H_I) >= r, scanning subsets by size then colex.
// The code dimension is taken as cols(H) - rank(H).
std::size_t ghw_wei(const DenseMatrix& parity, std::size_t r,
                    std::size_t length_cap = kDefaultSubsetLengthCap);

// d_r = n - max |J| over column sets J of G spanning a (k-r)-dimensional space.
std::size_t ghw_generator(const LinearCode& code, std::size_t r,
                          std::size_t length_cap = kDefaultSubsetLengthCap);

// d_r as the minimum support size over all r-dimensional subcodes, enumerated
// as reduced echelon bases of the message space.
std::size_t ghw_subcode_oracle(const LinearCode& code, std::size_t r,
                               std::uint64_t subspace_cap = kDefaultSubspaceCap);

// Number of r-dimensional subspaces of F_q^k (saturating at UINT64_MAX).
std::uint64_t gaussian_binomial(std::size_t k, std::size_t r, std::uint64_t q);

// n, k, d (by enumeration) and d_1..d_k by Wei's route.
CodeParams code_params(const LinearCode& code);

}  // namespace ghw

#endif  // GHW_CODES_HPP_

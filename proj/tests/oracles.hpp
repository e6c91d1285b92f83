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


// Brute-force reference implementations used only by tests. They share no
// code with the library beyond its data types.

#ifndef GHW_TESTS_ORACLES_HPP_
#define GHW_TESTS_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ghw/polyring.hpp"

namespace oracle {

using Rows = std::vector<std::vector<std::int64_t>>;
using Set = std::vector<std::size_t>;

std::int64_t mod(std::int64_t a, std::int64_t p);
std::size_t rank(Rows rows, std::int64_t p);
std::size_t rank_of_columns(const Rows& m, const Set& cols, std::int64_t p);

// Every codeword, including zero, of the row space of g.
Rows codewords(const Rows& g, std::int64_t p);
std::size_t min_distance(const Rows& g, std::int64_t p);
// d_r as the least support of r linearly independent codewords (small codes only).
std::size_t ghw_by_tuples(const Rows& g, std::int64_t p, std::size_t r);

// All minimal dependent column sets, found by checking every subset.
std::vector<Set> circuits(const Rows& m, std::int64_t p);

// Number of degree-m monomials in n variables divisible by none of gens.
std::uint64_t standard_count(const std::vector<std::vector<unsigned>>& gens, std::size_t n, unsigned m);

// Coefficients of num(s) / (1 - s)^d up to s^top.
std::vector<std::int64_t> expand_series(const std::vector<std::int64_t>& num, std::size_t d, std::size_t top);

// Evaluation of a polynomial at a point of F_p^n.
std::int64_t evaluate(const ghw::Polynomial& f, const std::vector<std::int64_t>& point, std::int64_t p);

// f-vector of the complex with the given minimal nonfaces (sizes 0..n).
std::vector<std::uint64_t> faces_by_size(const std::vector<Set>& nonfaces, std::size_t n);

}  // namespace oracle

#endif  // GHW_TESTS_ORACLES_HPP_

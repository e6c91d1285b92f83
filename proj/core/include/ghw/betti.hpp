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


#ifndef GHW_BETTI_HPP_
#define GHW_BETTI_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ghw/exactfield.hpp"
#include "ghw/groebner.hpp"
#include "ghw/matroid.hpp"
#include "ghw/polyring.hpp"

namespace ghw {

// Graded Betti numbers of S/I. Only nonzero entries are stored.
struct BettiTable {
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> entries;
  std::size_t i_max = 0;
  std::size_t j_max = 0;
  bool truncated = false;  // some beta_{i, j_max} is nonzero

  std::uint64_t at(std::size_t i, std::size_t j) const;
  // Nonzero entries as [i, j, beta], sorted by (i, j).
  std::vector<std::array<std::uint64_t, 3>> triples() const;
  // Row i as a map j -> beta.
  std::map<std::size_t, std::uint64_t> row(std::size_t i) const;
  // Macaulay-style: columns are i, rows are j - i.
  std::string to_text() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.entries == b.entries && a.truncated == b.truncated;
  }
};

struct KoszulLimits {
  std::size_t block_cap = 3000;          // largest dim K_{i,j} handled densely
  std::size_t reduction_budget = 200;    // Buchberger runs spent hunting regular forms
};

// Diagnostics of the last general-route computation.
struct KoszulTrace {
  bool monomial_route = false;
  std::size_t variables_cut = 0;      // regular variables removed
  std::size_t linear_forms_cut = 0;   // regular non-variable forms removed
  bool artinian = false;              // reduced ring is finite-dimensional
  std::size_t largest_block = 0;
};

// beta_{i,j} = dim H_i(Koszul(S/I))_j for i <= i_max, j <= j_max.
BettiTable koszul_betti(const GroebnerBasis& g, std::size_t i_max, std::size_t j_max,
                        const KoszulLimits& limits = {}, KoszulTrace* trace = nullptr);
// Defaults i_max = n, j_max = n + 2.
BettiTable koszul_betti(const GroebnerBasis& g);

// Hochster's formula for the Stanley-Reisner ring with the given minimal nonfaces.
BettiTable hochster_betti(std::span<const IndexSet> nonfaces, std::size_t n, const PrimeField& field,
                          std::size_t i_max, std::size_t j_max);
BettiTable hochster_betti(std::span<const IndexSet> nonfaces, std::size_t n, const PrimeField& field);

struct ResolutionSummary {
  std::vector<std::size_t> t;  // t_1 .. t_p
  std::vector<std::size_t> T;  // T_1 .. T_p
  std::size_t pdim = 0;
  std::int64_t reg = 0;
  std::int64_t multiplicity = 0;
  std::size_t dim = 0;  // Krull dimension of S/I
  bool cm = false;
};

ResolutionSummary summarize(const BettiTable& b, std::size_t n);

// K(s) = sum (-1)^i beta_{i,j} s^j, so that HS(S/I) = K(s) / (1 - s)^n.
std::vector<std::int64_t> hilbert_numerator(const BettiTable& b);

// Numerator of HS over (1 - s)^dim, with its pole order.
struct ReducedHilbertSeries {
  std::vector<std::int64_t> h;
  std::size_t dim = 0;
};
ReducedHilbertSeries reduced_hilbert_series(const BettiTable& b, std::size_t n);

// dim_K (S/in)_m for m = 0..bound.
std::vector<std::uint64_t> hilbert_series_terms(std::span<const Monomial> init, std::size_t n,
                                                unsigned bound);
// Coefficients of sum_i f_{i-1} s^i / (1 - s)^i for m = 0..bound.
std::vector<std::uint64_t> f_vector_series_terms(std::span<const std::uint64_t> f, unsigned bound);

struct HsCheckResult {
  bool ok = false;
  std::string details;
};

// Betti table against the Hilbert function of S/in, and optionally the
// f-vector series of the complex whose face ring has the same Hilbert series.
HsCheckResult hs_check(const BettiTable& b, std::span<const Monomial> init, std::size_t n,
                       unsigned degree_bound,
                       std::optional<std::span<const std::uint64_t>> f_vector = std::nullopt);

struct MultiplicityReport {
  bool holds = false;
  std::uint64_t lower = 0;  // prod t_i
  std::uint64_t upper = 0;  // prod T_i
  std::uint64_t scaled_multiplicity = 0;  // e * p!
  std::string details;
};

MultiplicityReport multiplicity_conjecture_check(const ResolutionSummary& s);

}  // namespace ghw

#endif  // GHW_BETTI_HPP_

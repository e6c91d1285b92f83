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

#include <gtest/gtest.h>

#include <optional>

#include "ghw/betti.hpp"
#include "test_support.hpp"

namespace ghw {
namespace {

using testing::fixture;
using testing::random_shape;
using testing::rows_of;
using testing::S;
using testing::sorted;
using testing::supports;

VectorMatroid dual_matroid(const std::string& file) { return VectorMatroid(dual_matrix(fixture(file).code)); }

TEST(Circuits, TernaryParityCheckHasNinePrintedCircuits) {
  const auto m = dual_matroid("ternary_7_3_parity.json");
  const auto cs = circuits(m);
  const std::vector<IndexSet> printed = {S({3, 6, 7}),       S({2, 5, 6}),       S({1, 2, 4, 7}),
                                         S({2, 3, 5, 7}),    S({1, 2, 3, 4, 5}), S({1, 2, 3, 4, 6}),
                                         S({1, 3, 4, 5, 6}), S({1, 3, 4, 5, 7}), S({1, 4, 5, 6, 7})};
  EXPECT_EQ(sorted(supports(cs)), sorted(printed));
  EXPECT_EQ(sorted(supports(cs)), oracle::circuits(rows_of(m.matrix()), 3));
}

TEST(Circuits, QuinaryContainsPrintedAndAllOthers) {
  const auto m = dual_matroid("quinary_6_3.json");
  const auto sets = supports(circuits(m));
  for (const auto& s : {S({1, 2, 4}), S({1, 3, 5}), S({4, 5, 6}), S({2, 3, 6}), S({1, 2, 5, 6})}) {
    EXPECT_NE(std::find(sets.begin(), sets.end(), s), sets.end());
  }
  EXPECT_EQ(sorted(sets), oracle::circuits(rows_of(m.matrix()), 5));
}

TEST(Circuits, TwoComponentMatroid) {
  const auto cs = circuits(dual_matroid("two_components_7_3.json"));
  EXPECT_EQ(sorted(supports(cs)), sorted({S({1, 2, 5}), S({3, 4, 6}), S({3, 7}), S({4, 6, 7})}));
}

TEST(Circuits, DependenciesAreNormalizedAndExact) {
  for (const auto& file : testing::fixture_files()) {
    const auto m = dual_matroid(file);
    const PrimeField& f = m.matrix().field();
    for (const auto& c : circuits(m)) {
      ASSERT_EQ(c.dependency.size(), c.support.size());
      EXPECT_EQ(c.dependency.front().value(), 1u);
      for (const auto& a : c.dependency) EXPECT_FALSE(a.is_zero());
      for (std::size_t r = 0; r < m.matrix().rows(); ++r) {
        std::uint32_t acc = 0;
        for (std::size_t x = 0; x < c.support.size(); ++x) {
          acc = f.add(acc, f.mul(c.dependency[x].value(), m.matrix()(r, c.support[x])));
        }
        EXPECT_EQ(acc, 0u);
      }
    }
  }
}

TEST(Circuits, CapIsEnforced) {
  const PrimeField f(2);
  EXPECT_THROW(circuits(VectorMatroid(DenseMatrix(f, 1, 21))), Error);
}

TEST(SmallestCircuitSize, Examples) {
  EXPECT_EQ(smallest_circuit_size(VectorMatroid(parity_check(fixture("ternary_7_3.json").code))), 3u);
  EXPECT_EQ(smallest_circuit_size(dual_matroid("two_components_7_3.json")), 2u);
  try {
    smallest_circuit_size(VectorMatroid(DenseMatrix::identity(PrimeField(3), 4)));
    FAIL() << "expected NoCircuits";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoCircuits);
  }
}

TEST(BrokenCircuits, ReorderedTernaryMatchesPrintedIdeal) {
  const auto cs = circuits(dual_matroid("ternary_7_3.json"));
  const std::vector<std::size_t> order = {0, 1, 2, 3, 5, 6, 4};
  const auto bc = broken_circuits(cs, order);
  EXPECT_EQ(sorted(bc.minimal_nonfaces),
            sorted({S({3, 6}), S({2, 6}), S({2, 3, 7}), S({1, 2, 4}), S({1, 4, 6, 7}), S({1, 3, 4, 7})}));
}

TEST(BrokenCircuits, NaturalOrderOnTernary) {
  const auto cs = circuits(dual_matroid("ternary_7_3.json"));
  const std::vector<std::size_t> order = {0, 1, 2, 3, 4, 5, 6};
  const auto bc = broken_circuits(cs, order);
  // Two quartics: {1,3,4,5} (from two circuits) and {1,4,5,6}.
  EXPECT_EQ(sorted(bc.minimal_nonfaces),
            sorted({S({3, 6}), S({2, 5}), S({1, 2, 4}), S({1, 3, 4, 5}), S({1, 4, 5, 6})}));
}

TEST(BrokenCircuits, SingleCircuitAndBadOrder) {
  const PrimeField f(3);
  const auto cs = circuits(VectorMatroid(DenseMatrix::from_rows(f, {{1, 0, 1}, {0, 1, 1}})));
  const std::vector<std::size_t> order = {0, 1, 2};
  EXPECT_EQ(broken_circuits(cs, order).minimal_nonfaces, (std::vector<IndexSet>{S({1, 2})}));
  const std::vector<std::size_t> bad = {0, 0, 1};
  EXPECT_THROW(broken_circuits(cs, bad), Error);
}

TEST(Components, Examples) {
  const auto two = circuits(dual_matroid("two_components_7_3.json"));
  const auto part = components(two, 7);
  EXPECT_EQ(part.count(), 2u);
  EXPECT_EQ(part.blocks, (std::vector<IndexSet>{S({1, 2, 5}), S({3, 4, 6, 7})}));
  EXPECT_EQ(components(circuits(VectorMatroid(DenseMatrix::identity(PrimeField(5), 4))), 4).count(), 4u);
  EXPECT_EQ(components(circuits(dual_matroid("ternary_7_3.json")), 7).count(), 1u);
}

TEST(Loops, ZeroColumns) {
  EXPECT_TRUE(loops(dual_matroid("ternary_7_3.json")).empty());
  const PrimeField f(3);
  EXPECT_EQ(loops(VectorMatroid(DenseMatrix::from_rows(f, {{1, 0, 0, 1}, {0, 1, 0, 1}}))), S({3}));
  for (const auto& file : testing::fixture_files()) EXPECT_TRUE(loops(dual_matroid(file)).empty());
}

TEST(NbcFVector, TernaryHilbertSeries) {
  const auto cs = circuits(dual_matroid("ternary_7_3.json"));
  const std::vector<std::size_t> order = {0, 1, 2, 3, 4, 5, 6};
  const auto f = nbc_f_vector(broken_circuits(cs, order), 7);
  EXPECT_EQ(f, (std::vector<std::uint64_t>{1, 7, 19, 24, 11, 0, 0, 0}));
  // sum f_{i-1} s^i / (1-s)^i against (1 + 3s + 4s^2 + 3s^3) / (1-s)^4.
  const auto expected = oracle::expand_series({1, 3, 4, 3}, 4, 10);
  const auto got = f_vector_series_terms(f, 10);
  for (std::size_t m = 0; m <= 10; ++m) EXPECT_EQ(static_cast<std::int64_t>(got[m]), expected[m]) << m;
}

TEST(NbcFVector, TrivialComplexes) {
  EXPECT_EQ(face_vector(std::vector<IndexSet>{}, 4), (std::vector<std::uint64_t>{1, 4, 6, 4, 1}));
  EXPECT_EQ(face_vector(std::vector<IndexSet>{S({1, 2})}, 3), (std::vector<std::uint64_t>{1, 3, 2, 0}));
}

TEST(MatroidProperties, RandomCodes) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto shape = random_shape(seed);
    const auto code = random_code(seed, shape.n, shape.k, shape.p);
    const VectorMatroid m(parity_check(code));
    const auto cs = circuits(m);
    EXPECT_EQ(sorted(supports(cs)), oracle::circuits(rows_of(m.matrix()), shape.p)) << seed;
    EXPECT_EQ(smallest_circuit_size(cs), min_distance(code)) << seed;
    std::optional<std::vector<std::uint64_t>> reference;
    for (const auto& order : sampled_orders(shape.n, seed, 5)) {
      const auto bc = broken_circuits(cs, order);
      for (const auto& a : bc.minimal_nonfaces) {
        for (const auto& b : bc.minimal_nonfaces) {
          if (a != b) {
            EXPECT_FALSE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
          }
        }
      }
      const auto f = nbc_f_vector(bc, shape.n);
      EXPECT_EQ(f, oracle::faces_by_size(bc.minimal_nonfaces, shape.n));
      if (!reference) reference = f;
      EXPECT_EQ(f, *reference) << "seed " << seed;
    }
  }
}

}  // namespace
}  // namespace ghw

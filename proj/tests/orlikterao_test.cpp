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


#include "ghw/orlikterao.hpp"

#include <gtest/gtest.h>

#include "ghw/groebner.hpp"
#include "test_support.hpp"

namespace ghw {
namespace {

using testing::fixture;

Polynomial del(const PolyRing& r, std::vector<std::size_t> one_based, const std::vector<std::int64_t>& coeffs) {
  std::vector<Scalar> dep;
  for (auto c : coeffs) dep.emplace_back(r.field(), c);
  for (auto& v : one_based) v -= 1;
  return del_operator(r, one_based, dep);
}

bool is_unit_multiple_of_generator(const OTPresentation& pres, const Polynomial& f) {
  for (const auto& g : pres.polynomials()) {
    for (std::uint32_t c = 1; c < pres.field.modulus(); ++c) {
      if (pres.ring.scale(f, c) == g) return true;
    }
  }
  return false;
}

TEST(DelOperator, Examples) {
  const PolyRing r(PrimeField(3), 7);
  EXPECT_EQ(del(r, {3, 6, 7}, {1, -1, 1}), r.parse("y3*y6 - y3*y7 + y6*y7"));
  EXPECT_EQ(del(r, {1, 2, 4, 7}, {1, -1, 1, 1}), r.parse("y1*y2*y4 + y1*y2*y7 - y1*y4*y7 + y2*y4*y7"));
  EXPECT_EQ(del(r, {3, 7}, {1, 2}), r.parse("y7 + 2*y3"));
}

TEST(DelOperator, RejectsMalformedDependencies) {
  const PolyRing r(PrimeField(3), 7);
  auto kind_of = [&](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kInput;
  };
  EXPECT_EQ(kind_of([&] { del(r, {1, 2, 3}, {1, 0, 1}); }), ErrorKind::kMalformedDependency);
  EXPECT_EQ(kind_of([&] { del(r, {1}, {1}); }), ErrorKind::kMalformedDependency);
  EXPECT_EQ(kind_of([&] { del(r, {1, 2}, {1, 1, 1}); }), ErrorKind::kMalformedDependency);
}

TEST(OTIdeal, TernaryGeneratorsContainDisplayedPolynomials) {
  const auto pres = ot_ideal(fixture("ternary_7_3.json").code);
  const PolyRing& r = pres.ring;
  EXPECT_EQ(pres.generators.size(), 9u);
  for (const char* text : {"y3*y6 - y3*y7 + y6*y7", "y2*y5 + y2*y6 + y5*y6",
                           "y1*y2*y4 + y1*y2*y7 - y1*y4*y7 + y2*y4*y7"}) {
    EXPECT_TRUE(is_unit_multiple_of_generator(pres, r.parse(text))) << text;
  }
  std::size_t quartics = 0;
  for (const auto& g : pres.generators) {
    EXPECT_EQ(g.polynomial.degree() + 1, g.circuit.support.size());
    EXPECT_TRUE(g.polynomial.is_homogeneous());
    if (g.polynomial.degree() == 4) ++quartics;
  }
  EXPECT_EQ(quartics, 5u);
}

TEST(OTIdeal, GeneratorsComeFromParityCheckDependencies) {
  for (const auto& file : testing::fixture_files()) {
    const auto loaded = fixture(file);
    const DenseMatrix h = dual_matrix(loaded.code);
    const auto pres = ot_ideal(loaded.code);
    EXPECT_EQ(pres.generators.size(), oracle::circuits(testing::rows_of(h), h.field().modulus()).size());
    for (const auto& g : pres.generators) {
      EXPECT_EQ(g.polynomial, del_operator(pres.ring, g.circuit.support, g.circuit.dependency));
      for (std::size_t row = 0; row < h.rows(); ++row) {
        std::int64_t acc = 0;
        for (std::size_t x = 0; x < g.circuit.support.size(); ++x) {
          acc += static_cast<std::int64_t>(g.circuit.dependency[x].value()) * h(row, g.circuit.support[x]);
        }
        EXPECT_EQ(oracle::mod(acc, h.field().modulus()), 0) << file;
      }
    }
  }
}

TEST(OTIdeal, TwoComponentGenerators) {
  const auto pres = ot_ideal(fixture("two_components_7_3.json").code);
  ASSERT_EQ(pres.generators.size(), 4u);
  for (const char* text : {"y2*y5 + y1*y5 + y1*y2", "y4*y6 + y3*y6 + y3*y4", "y7 - y3"}) {
    EXPECT_TRUE(is_unit_multiple_of_generator(pres, pres.ring.parse(text))) << text;
  }
}

TEST(OTIdeal, Alpha) {
  EXPECT_EQ(alpha(ot_ideal(fixture("ternary_7_3.json").code)), 2u);
  EXPECT_EQ(alpha(ot_ideal(fixture("quinary_6_3.json").code)), 2u);
  EXPECT_EQ(alpha(ot_ideal(fixture("two_components_7_3.json").code)), 1u);
  const LinearCode repetition(DenseMatrix::from_rows(PrimeField(3), {{1, 1, 1}}));
  EXPECT_EQ(alpha(ot_ideal(repetition)), 2u);
}

TEST(OTIdeal, DegenerateInputs) {
  const PrimeField f(3);
  try {
    ot_ideal(LinearCode(DenseMatrix::identity(f, 3)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerateDual);
  }
  try {
    ot_ideal_from_parity_check(DenseMatrix::from_rows(f, {{1, 0, 1}, {0, 0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerateDual);
  }
}

TEST(OTIdeal, QuinaryLinearSyzygy) {
  const auto pres = ot_ideal(fixture("quinary_6_3.json").code);
  const PolyRing& r = pres.ring;
  const Polynomial d1 = del(r, {1, 2, 4}, {-1, 1, 1});
  const Polynomial d2 = del(r, {1, 3, 5}, {-1, 1, 1});
  const Polynomial d3 = del(r, {4, 5, 6}, {1, -1, 1});
  const Polynomial d4 = del(r, {2, 3, 6}, {-1, 1, 1});
  EXPECT_EQ(d1, r.parse("-y2*y4 + y1*y4 + y1*y2"));
  EXPECT_EQ(d4, r.parse("-y3*y6 + y2*y6 + y2*y3"));
  for (const auto& d : {d1, d2, d3, d4}) EXPECT_TRUE(is_unit_multiple_of_generator(pres, d));
  Polynomial sum = r.mul(r.parse("-y3 - y5"), d1);
  sum = r.add(sum, r.mul(r.parse("y2 + y4"), d2));
  sum = r.add(sum, r.mul(r.parse("-y2 + y3"), d3));
  sum = r.add(sum, r.mul(r.parse("-y4 + y5"), d4));
  EXPECT_TRUE(sum.is_zero());
}

TEST(ProudfootSpeyer, QuinaryOverRandomOrders) {
  const auto pres = ot_ideal(fixture("quinary_6_3.json").code);
  const auto cs = pres.circuits();
  for (const auto& order : sampled_orders(6, 2026, 20)) {
    const auto res = check_proudfoot_speyer(pres, TermOrder(order));
    EXPECT_TRUE(res.holds);
    EXPECT_TRUE(res.matches_broken_circuits);
    std::vector<IndexSet> got;
    for (const auto& m : res.initial) got.push_back(m.support());
    EXPECT_EQ(testing::sorted(got), testing::sorted(broken_circuits(cs, order).minimal_nonfaces));
  }
}

TEST(ProudfootSpeyer, ReorderedTernaryInitialIdeal) {
  const auto loaded = fixture("ternary_7_3_reordered.json");
  const auto pres = ot_ideal(loaded.code);
  const auto res = check_proudfoot_speyer(pres, TermOrder(loaded.order));
  using testing::mono;
  std::vector<Monomial> expected = {mono({3, 6}),       mono({2, 6}),       mono({2, 3, 7}),
                                    mono({1, 2, 4}),    mono({1, 4, 6, 7}), mono({1, 3, 4, 7})};
  EXPECT_EQ(res.initial, minimal_monomials(expected, TermOrder(loaded.order)));
}

}  // namespace
}  // namespace ghw

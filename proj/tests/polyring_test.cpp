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


#include "ghw/polyring.hpp"

#include <gtest/gtest.h>

#include "ghw/groebner.hpp"
#include "ghw/orlikterao.hpp"
#include "test_support.hpp"

namespace ghw {
namespace {

using testing::fixture;
using testing::mono;

TermOrder order_of(std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> p;
  for (std::size_t v : one_based) p.push_back(v - 1);
  return TermOrder(p);
}

std::vector<std::vector<unsigned>> exponents(const std::vector<Monomial>& ms, std::size_t n) {
  std::vector<std::vector<unsigned>> out;
  for (const auto& m : ms) {
    std::vector<unsigned> e(n);
    for (std::size_t v = 0; v < n; ++v) e[v] = m[v];
    out.push_back(e);
  }
  return out;
}

TEST(Monomial, Arithmetic) {
  const Monomial a = mono({1, 1, 3});
  const Monomial b = mono({1, 2});
  EXPECT_EQ(a.degree(), 3u);
  EXPECT_EQ(lcm(a, b), mono({1, 1, 2, 3}));
  EXPECT_EQ(quotient(a, mono({1})), mono({1, 3}));
  EXPECT_TRUE(mono({1}).divides(a));
  EXPECT_FALSE(b.divides(a));
  EXPECT_TRUE(mono({2}).coprime(a));
  EXPECT_FALSE(a.is_square_free());
  EXPECT_EQ(a.support(), (std::vector<std::size_t>{0, 2}));
  EXPECT_THROW(Monomial::variable(kMaxVariables), Error);
}

TEST(TermOrder, GrevlexComparisons) {
  const TermOrder natural = TermOrder::natural(7);
  EXPECT_TRUE(natural.greater(mono({3, 6}), mono({3, 7})));
  EXPECT_TRUE(natural.greater(mono({3, 7}), mono({6, 7})));
  EXPECT_TRUE(natural.greater(mono({1, 1}), mono({1, 2})));
  EXPECT_TRUE(natural.greater(mono({7, 7, 7}), mono({1, 2})));
  // With y5 least, a monomial avoiding y5 wins.
  const TermOrder five_last = order_of({1, 2, 3, 4, 6, 7, 5});
  EXPECT_TRUE(five_last.greater(mono({2, 6}), mono({2, 5})));
  EXPECT_FALSE(natural.greater(mono({2, 6}), mono({2, 5})));
  EXPECT_THROW(TermOrder({0, 0, 1}), Error);
  EXPECT_THROW(TermOrder({0, 3}), Error);
}

TEST(Polynomial, ParseAndPrint) {
  const PolyRing r(PrimeField(3), 7);
  const Polynomial f = r.parse("y3*y6 - y3*y7 + y6*y7");
  EXPECT_EQ(r.to_string(f), "y3*y6 - y3*y7 + y6*y7");
  EXPECT_EQ(r.parse(r.to_string(f)), f);
  EXPECT_EQ(r.parse("2*y1^2 + y1*y1"), r.constant(0));
  EXPECT_EQ(r.to_string(r.parse("4*y2")), "y2");
  EXPECT_EQ(r.to_string(r.constant(0)), "0");
  EXPECT_THROW(r.parse("y8"), Error);
  EXPECT_THROW(r.parse("y1 +"), Error);
  EXPECT_THROW(r.parse(""), Error);
}

TEST(Polynomial, ArithmeticMatchesEvaluation) {
  const PrimeField f(5);
  const PolyRing r(f, 4);
  const Polynomial a = r.parse("y1*y2 + 3*y3 - y4^2");
  const Polynomial b = r.parse("y2 - 2*y1*y3*y4 + 1");
  const std::vector<std::vector<std::int64_t>> points = {{0, 1, 2, 3}, {4, 4, 1, 0}, {2, 3, 3, 1}};
  for (const auto& pt : points) {
    const auto ea = oracle::evaluate(a, pt, 5);
    const auto eb = oracle::evaluate(b, pt, 5);
    EXPECT_EQ(oracle::evaluate(r.add(a, b), pt, 5), oracle::mod(ea + eb, 5));
    EXPECT_EQ(oracle::evaluate(r.sub(a, b), pt, 5), oracle::mod(ea - eb, 5));
    EXPECT_EQ(oracle::evaluate(r.mul(a, b), pt, 5), oracle::mod(ea * eb, 5));
  }
  EXPECT_TRUE(r.sub(a, a).is_zero());
  EXPECT_EQ(r.make_monic(r.scale(a, 3)), r.make_monic(a));
  EXPECT_FALSE(a.is_homogeneous());
  EXPECT_EQ(a.degree(), 2u);
}

TEST(Polynomial, ThreeTermRelationAmongCircuits) {
  const PrimeField f(3);
  const PolyRing r(f, 7);
  auto del = [&](std::vector<std::size_t> support, std::vector<std::int64_t> coeffs) {
    std::vector<Scalar> dep;
    for (auto c : coeffs) dep.emplace_back(f, c);
    for (auto& v : support) v -= 1;
    return del_operator(r, support, dep);
  };
  const Polynomial big = del({2, 3, 5, 7}, {1, 1, 1, 1});
  const Polynomial a = del({2, 5, 6}, {1, 1, 1});
  const Polynomial b = del({3, 6, 7}, {1, -1, 1});
  EXPECT_EQ(big, r.sub(r.mul(r.parse("y3 + y7"), a), r.mul(r.parse("y2 + y5"), b)));
  // Hence it reduces to zero modulo a Groebner basis containing the smaller two.
  const auto g = buchberger(r, {a, b});
  EXPECT_TRUE(normal_form(big, g).is_zero());
}

TEST(NormalForm, RemainderInvariants) {
  const PrimeField f(3);
  const PolyRing r(f, 4);
  const std::vector<Polynomial> divisors = {r.parse("y1*y2 - y3^2"), r.parse("y2*y4 + y1^2")};
  const Polynomial p = r.parse("y1^2*y2*y4 + y1*y2*y3 + y4^3 - y2");
  const Polynomial rem = normal_form(r, p, divisors);
  for (const auto& t : rem.terms()) {
    for (const auto& d : divisors) EXPECT_FALSE(d.leading_monomial().divides(t.mono));
  }
  // p - rem lies in the ideal, so it vanishes wherever the divisors do.
  const Polynomial diff = r.sub(p, rem);
  for (std::int64_t x1 = 0; x1 < 3; ++x1) {
    for (std::int64_t x2 = 0; x2 < 3; ++x2) {
      for (std::int64_t x3 = 0; x3 < 3; ++x3) {
        for (std::int64_t x4 = 0; x4 < 3; ++x4) {
          const std::vector<std::int64_t> pt = {x1, x2, x3, x4};
          if (oracle::evaluate(divisors[0], pt, 3) == 0 && oracle::evaluate(divisors[1], pt, 3) == 0) {
            EXPECT_EQ(oracle::evaluate(diff, pt, 3), 0);
          }
        }
      }
    }
  }
  EXPECT_TRUE(normal_form(r, r.constant(0), divisors).is_zero());
}

TEST(Buchberger, SinglePolynomialIsItsOwnBasis) {
  const PolyRing r(PrimeField(5), 3);
  const auto g = buchberger(r, {r.parse("2*y1*y2 + y3^2")});
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.elements()[0], r.parse("y1*y2 + 3*y3^2"));
  EXPECT_TRUE(g.is_homogeneous());
}

TEST(Buchberger, MonomialInterreduction) {
  const PolyRing r(PrimeField(3), 7);
  const auto g = buchberger(r, {r.parse("y3*y6"), r.parse("y1*y3*y6"), r.constant(0)});
  EXPECT_EQ(g.leading_monomials(), (std::vector<Monomial>{mono({3, 6})}));
  EXPECT_TRUE(g.is_monomial());
  EXPECT_EQ(buchberger(r, {}).size(), 0u);
}

TEST(Buchberger, ReducedBasisIsStableAndValid) {
  const auto loaded = fixture("ternary_7_3.json");
  const auto pres = ot_ideal(loaded.code);
  for (const auto& order : sampled_orders(7, 3, 6)) {
    const PolyRing r = pres.ring.with_order(TermOrder(order));
    const auto g = buchberger(r, pres.polynomials());
    EXPECT_TRUE(is_groebner_basis(r, g.elements()));
    const auto again = buchberger(r, g.elements());
    EXPECT_EQ(again.elements(), g.elements());
    for (const auto& e : g.elements()) {
      EXPECT_EQ(e.leading_coefficient(), 1u);
      EXPECT_TRUE(e.is_homogeneous());
    }
    for (const auto& p : pres.polynomials()) EXPECT_TRUE(normal_form(r.convert(p), g).is_zero());
  }
}

TEST(Buchberger, NonBasisIsDetected) {
  const PolyRing r(PrimeField(3), 3);
  EXPECT_FALSE(is_groebner_basis(r, std::vector<Polynomial>{r.parse("y1*y2 - y3^2"), r.parse("y1*y3 - y2^2")}));
  EXPECT_TRUE(is_groebner_basis(r, std::vector<Polynomial>{r.parse("y1"), r.parse("y2^3")}));
}

TEST(StandardMonomials, SmallDegrees) {
  const TermOrder natural = TermOrder::natural(7);
  const std::vector<Monomial> init = {mono({3, 6}), mono({2, 5}), mono({1, 2, 4})};
  EXPECT_EQ(standard_monomials(init, 0, natural), (std::vector<Monomial>{Monomial{}}));
  const auto linear = standard_monomials(init, 1, natural);
  ASSERT_EQ(linear.size(), 7u);
  EXPECT_EQ(linear.front(), mono({1}));
  EXPECT_EQ(linear.back(), mono({7}));
  const std::vector<Monomial> with_linear = {mono({4}), mono({1, 2})};
  EXPECT_EQ(standard_monomials(with_linear, 1, natural).size(), 6u);
  EXPECT_EQ(standard_monomials(with_linear, 2, natural).size(), 20u);
}

TEST(HilbertFunction, TernaryInitialIdealsAgree) {
  const auto loaded = fixture("ternary_7_3.json");
  const auto pres = ot_ideal(loaded.code);
  const auto expected = oracle::expand_series({1, 3, 4, 3}, 4, 8);
  EXPECT_EQ(expected[1], 7);
  for (const auto& order : sampled_orders(7, 11, 5)) {
    const auto init = initial_ideal(buchberger(pres.ring.with_order(TermOrder(order)), pres.polynomials()));
    for (unsigned m = 0; m <= 8; ++m) {
      EXPECT_EQ(hilbert_function(init, 7, m), oracle::standard_count(exponents(init, 7), 7, m));
      EXPECT_EQ(static_cast<std::int64_t>(hilbert_function(init, 7, m)), expected[m]) << "degree " << m;
    }
  }
}

TEST(HilbertFunction, ExtremeIdeals) {
  for (unsigned m = 0; m <= 5; ++m) {
    EXPECT_EQ(hilbert_function({}, 4, m), oracle::standard_count({}, 4, m));
  }
  EXPECT_EQ(hilbert_function({}, 4, 3), 20u);
  const std::vector<Monomial> maximal = {mono({1}), mono({2}), mono({3})};
  EXPECT_EQ(hilbert_function(maximal, 3, 0), 1u);
  EXPECT_EQ(hilbert_function(maximal, 3, 1), 0u);
  EXPECT_EQ(hilbert_function({}, 0, 0), 1u);
  EXPECT_EQ(hilbert_function({}, 0, 2), 0u);
}

TEST(MinimalMonomials, DropsMultiplesAndDuplicates) {
  const TermOrder natural = TermOrder::natural(4);
  const auto kept = minimal_monomials({mono({1, 2, 3}), mono({1, 2}), mono({1, 2}), mono({4, 4}), mono({3, 4, 4})},
                                      natural);
  EXPECT_EQ(kept, (std::vector<Monomial>{mono({1, 2}), mono({4, 4})}));
}

}  // namespace
}  // namespace ghw

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

#ifndef GHW_GROEBNER_HPP_
#define GHW_GROEBNER_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "ghw/polyring.hpp"

namespace ghw {

// A reduced Groebner basis: monic, interreduced, sorted by decreasing leading
// monomial. An empty element list is the zero ideal.
class GroebnerBasis {
 public:
  GroebnerBasis(PolyRing ring, std::vector<Polynomial> elements);

  const PolyRing& ring() const { return ring_; }
  const TermOrder& order() const { return ring_.order(); }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  std::vector<Monomial> leading_monomials() const;
  bool is_monomial() const;
  bool is_homogeneous() const;

 private:
  PolyRing ring_;
  std::vector<Polynomial> elements_;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t product_criterion = 0;
  std::size_t chain_criterion = 0;
  std::size_t reductions_to_zero = 0;
  std::size_t new_elements = 0;
};

// Reduced Groebner basis of the ideal generated by gens. S-pairs are taken in
// order of lcm degree, then colex on the pair of indices; the product and
// chain criteria discard pairs.
GroebnerBasis buchberger(const PolyRing& ring, std::vector<Polynomial> gens,
                         BuchbergerStats* stats = nullptr);

// Full remainder on division by the divisors (first divisor that applies).
Polynomial normal_form(const PolyRing& ring, const Polynomial& f,
                       std::span<const Polynomial> divisors);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);

// Minimal generators of the initial ideal of a reduced basis.
std::vector<Monomial> initial_ideal(const GroebnerBasis& g);

// True when every S-polynomial of the list reduces to zero modulo the list.
bool is_groebner_basis(const PolyRing& ring, std::span<const Polynomial> elements);

}  // namespace ghw

#endif  // GHW_GROEBNER_HPP_

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

#include "ghw/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

namespace ghw {

GroebnerBasis::GroebnerBasis(PolyRing ring, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

bool GroebnerBasis::is_monomial() const {
  return std::ranges::all_of(elements_, [](const Polynomial& g) { return g.is_monomial(); });
}

bool GroebnerBasis::is_homogeneous() const {
  return std::ranges::all_of(elements_, [](const Polynomial& g) { return g.is_homogeneous(); });
}

namespace {

const Polynomial* find_reducer(const Monomial& m, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) {
    if (!g.is_zero() && g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

Polynomial s_polynomial(const PolyRing& ring, const Polynomial& a, const Polynomial& b) {
  const Monomial l = lcm(a.leading_monomial(), b.leading_monomial());
  // lc(b) * (l / lm(a)) * a - lc(a) * (l / lm(b)) * b
  const Polynomial left = ring.mul_term(a, b.leading_coefficient(), quotient(l, a.leading_monomial()));
  return ring.sub_mul_term(left, a.leading_coefficient(), quotient(l, b.leading_monomial()), b);
}

struct PairKey {
  unsigned lcm_degree;
  std::size_t j;  // larger index
  std::size_t i;
  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

}  // namespace

Polynomial normal_form(const PolyRing& ring, const Polynomial& f,
                       std::span<const Polynomial> divisors) {
  const PrimeField& field = ring.field();
  std::vector<std::pair<std::int64_t, Monomial>> rem;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* g = find_reducer(lt.mono, divisors);
    if (g == nullptr) {
      rem.emplace_back(lt.coeff, lt.mono);
      p = p.tail();
      continue;
    }
    const std::uint32_t c = field.mul(lt.coeff, field.inv(g->leading_coefficient()));
    p = ring.sub_mul_term(p, c, quotient(lt.mono, g->leading_monomial()), *g);
  }
  return ring.make(rem);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  return normal_form(g.ring(), f, g.elements());
}

GroebnerBasis buchberger(const PolyRing& ring, std::vector<Polynomial> gens, BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats != nullptr ? *stats : local;

  std::vector<Polynomial> basis;
  for (auto& g : gens) {
    Polynomial h = ring.convert(g);
    if (!h.is_zero()) basis.push_back(ring.make_monic(h));
  }

  std::set<PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const unsigned deg = lcm(basis[i].leading_monomial(), basis[j].leading_monomial()).degree();
      queue.insert({deg, j, i});
      pending.insert({i, j});
      ++st.pairs_created;
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.contains({std::min(a, b), std::max(a, b)});
  };

  while (!queue.empty()) {
    const PairKey key = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({key.i, key.j});
    const Monomial& lm_i = basis[key.i].leading_monomial();
    const Monomial& lm_j = basis[key.j].leading_monomial();
    if (lm_i.coprime(lm_j)) {
      ++st.product_criterion;
      continue;
    }
    const Monomial l = lcm(lm_i, lm_j);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == key.i || k == key.j) continue;
      if (basis[k].leading_monomial().divides(l) && !is_pending(key.i, k) && !is_pending(key.j, k)) {
        chain = true;
      }
    }
    if (chain) {
      ++st.chain_criterion;
      continue;
    }
    Polynomial h = normal_form(ring, s_polynomial(ring, basis[key.i], basis[key.j]), basis);
    if (h.is_zero()) {
      ++st.reductions_to_zero;
      continue;
    }
    basis.push_back(ring.make_monic(h));
    ++st.new_elements;
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is a multiple of another's
  // (the earliest copy of a repeated leading monomial survives).
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& lm = basis[i].leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == i) continue;
      const Monomial& other = basis[j].leading_monomial();
      if (other.divides(lm) && (!(other == lm) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce tails; leading monomials are untouched since the set is minimal.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    minimal[i] = ring.make_monic(normal_form(ring, minimal[i], others));
  }
  std::ranges::sort(minimal, [&](const Polynomial& a, const Polynomial& b) {
    return ring.order().greater(a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis(ring, std::move(minimal));
}

std::vector<Monomial> initial_ideal(const GroebnerBasis& g) { return g.leading_monomials(); }

bool is_groebner_basis(const PolyRing& ring, std::span<const Polynomial> elements) {
  std::vector<Polynomial> gs;
  for (const auto& e : elements) {
    Polynomial h = ring.convert(e);
    if (!h.is_zero()) gs.push_back(std::move(h));
  }
  for (std::size_t j = 0; j < gs.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (gs[i].leading_monomial().coprime(gs[j].leading_monomial())) continue;
      if (!normal_form(ring, s_polynomial(ring, gs[i], gs[j]), gs).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace ghw

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

#ifndef GHW_POLYRING_HPP_
#define GHW_POLYRING_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ghw/exactfield.hpp"

namespace ghw {

inline constexpr std::size_t kMaxVariables = 20;

// Exponent vector over at most kMaxVariables variables; the degree is cached.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t v);
  static Monomial from_exponents(std::span<const unsigned> exponents);
  // Square-free product of the given variables.
  static Monomial from_support(std::span<const std::size_t> variables);

  unsigned operator[](std::size_t v) const { return exp_[v]; }
  void set(std::size_t v, unsigned e);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  bool is_square_free() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  // Variables with positive exponent, increasing.
  std::vector<std::size_t> support() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  // a / b, requires b | a.
  friend Monomial quotient(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Graded reverse lexicographic order with an arbitrary variable priority:
// priority[0] is the greatest variable, priority.back() the least.
class TermOrder {
 public:
  explicit TermOrder(std::vector<std::size_t> priority);
  static TermOrder natural(std::size_t nvars);

  const std::vector<std::size_t>& priority() const { return priority_; }
  std::size_t nvars() const { return priority_.size(); }
  std::size_t least_variable() const { return priority_.back(); }

  // Degree first; ties go to the monomial with the smaller exponent in the
  // least-priority variable where the two differ.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (std::size_t i = priority_.size(); i-- > 0;) {
      const std::size_t v = priority_[i];
      if (a[v] != b[v]) return b[v] <=> a[v];
    }
    return std::strong_ordering::equal;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  std::vector<std::size_t> priority_;
};

struct Term {
  std::uint32_t coeff;
  Monomial mono;
};

// Terms are kept strictly decreasing in the owning ring's order with nonzero
// coefficients. Only PolyRing creates non-zero polynomials.
class Polynomial {
 public:
  Polynomial() = default;

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  std::uint32_t leading_coefficient() const { return terms_.front().coeff; }
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Largest term degree; 0 for the zero polynomial.
  unsigned degree() const;
  // All terms but the leading one.
  Polynomial tail() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  friend class PolyRing;
  std::vector<Term> terms_;
};

// F_p[y_1..y_n] with a fixed term order. Variables are 0-based internally and
// render as y1..yn.
class PolyRing {
 public:
  PolyRing(const PrimeField& field, std::size_t nvars);
  PolyRing(const PrimeField& field, std::size_t nvars, TermOrder order);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const TermOrder& order() const { return order_; }
  PolyRing with_order(TermOrder order) const { return PolyRing(field_, nvars_, std::move(order)); }

  // Sorts, merges equal monomials and drops zero coefficients.
  Polynomial make(std::vector<Term> terms) const;
  Polynomial make(const std::vector<std::pair<std::int64_t, Monomial>>& terms) const;
  Polynomial constant(std::int64_t c) const;
  Polynomial variable(std::size_t v) const;
  Polynomial monomial(const Monomial& m, std::int64_t c = 1) const;

  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial neg(const Polynomial& a) const;
  Polynomial scale(const Polynomial& a, std::uint32_t c) const;
  Polynomial mul_term(const Polynomial& a, std::uint32_t c, const Monomial& m) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  // a - c * m * b in one merge pass.
  Polynomial sub_mul_term(const Polynomial& a, std::uint32_t c, const Monomial& m,
                          const Polynomial& b) const;
  Polynomial make_monic(const Polynomial& a) const;

  // Re-sorts a polynomial built in another ring over the same variables.
  Polynomial convert(const Polynomial& a) const;

  // Evaluates f (from `source`) at y_v -> images[v], an element of this ring.
  Polynomial substitute(const PolyRing& source, const Polynomial& f,
                        std::span<const Polynomial> images) const;

  // "y3*y6 - y3*y7 + y6*y7". A coefficient equal to p-1 prints as a minus sign.
  std::string to_string(const Polynomial& f) const;
  static std::string to_string(const Monomial& m, std::size_t nvars);
  // Inverse of to_string; also accepts "^e" exponents and explicit signs.
  Polynomial parse(std::string_view text) const;

 private:
  void check_monomial(const Monomial& m) const;

  PrimeField field_;
  std::size_t nvars_;
  TermOrder order_;
};

// Minimal generators of the monomial ideal, sorted decreasing in `order`.
std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens, const TermOrder& order);

// Degree-m monomials divisible by no generator, decreasing in `order`.
std::vector<Monomial> standard_monomials(std::span<const Monomial> init, unsigned m,
                                         const TermOrder& order);

// Number of standard monomials of degree m in nvars variables.
std::uint64_t hilbert_function(std::span<const Monomial> init, std::size_t nvars, unsigned m);

// Visits every degree-m monomial in nvars variables.
template <typename Fn>
void for_each_monomial_of_degree(std::size_t nvars, unsigned m, Fn&& fn) {
  if (nvars == 0) {
    if (m == 0) fn(Monomial{});
    return;
  }
  Monomial cur;
  // Recursive fill: variable v takes e, the rest is distributed over v+1..
  auto rec = [&](auto&& self, std::size_t v, unsigned left) -> void {
    if (v + 1 == nvars) {
      cur.set(v, left);
      fn(static_cast<const Monomial&>(cur));
      cur.set(v, 0);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur.set(v, e);
      self(self, v + 1, left - e);
    }
    cur.set(v, 0);
  };
  rec(rec, 0, m);
}

}  // namespace ghw

#endif  // GHW_POLYRING_HPP_

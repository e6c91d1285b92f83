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

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ghw {

Monomial Monomial::variable(std::size_t v) {
  Monomial m;
  m.set(v, 1);
  return m;
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) {
    throw Error(ErrorKind::kTooLarge, "at most " + std::to_string(kMaxVariables) + " variables");
  }
  Monomial m;
  for (std::size_t v = 0; v < exponents.size(); ++v) m.set(v, exponents[v]);
  return m;
}

Monomial Monomial::from_support(std::span<const std::size_t> variables) {
  Monomial m;
  for (std::size_t v : variables) m.set(v, m[v] + 1);
  return m;
}

void Monomial::set(std::size_t v, unsigned e) {
  if (v >= kMaxVariables) {
    throw Error(ErrorKind::kTooLarge, "variable index beyond " + std::to_string(kMaxVariables));
  }
  if (e > 0xFFFF) throw Error(ErrorKind::kTooLarge, "exponent overflow");
  degree_ = static_cast<std::uint16_t>(degree_ - exp_[v] + e);
  exp_[v] = static_cast<std::uint16_t>(e);
}

bool Monomial::is_square_free() const {
  return std::ranges::all_of(exp_, [](std::uint16_t e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    if (exp_[v] > other.exp_[v]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    if (exp_[v] != 0 && other.exp_[v] != 0) return false;
  }
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    if (exp_[v] != 0) out.push_back(v);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    m.exp_[v] = static_cast<std::uint16_t>(a.exp_[v] + b.exp_[v]);
  }
  m.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  unsigned deg = 0;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    m.exp_[v] = std::max(a.exp_[v], b.exp_[v]);
    deg += m.exp_[v];
  }
  m.degree_ = static_cast<std::uint16_t>(deg);
  return m;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    m.exp_[v] = static_cast<std::uint16_t>(a.exp_[v] - b.exp_[v]);
  }
  m.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint16_t e : exp_) h = (h ^ e) * 1099511628211ull;
  return h;
}

TermOrder::TermOrder(std::vector<std::size_t> priority) : priority_(std::move(priority)) {
  const std::size_t n = priority_.size();
  if (n > kMaxVariables) {
    throw Error(ErrorKind::kTooLarge, "at most " + std::to_string(kMaxVariables) + " variables");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t v : priority_) {
    if (v >= n || seen[v]) {
      throw Error(ErrorKind::kInvalidArgument, "term order priority is not a permutation");
    }
    seen[v] = true;
  }
}

TermOrder TermOrder::natural(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return TermOrder(std::move(p));
}

bool Polynomial::is_homogeneous() const {
  return std::ranges::all_of(terms_, [&](const Term& t) {
    return t.mono.degree() == terms_.front().mono.degree();
  });
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::tail() const {
  Polynomial out;
  if (terms_.size() > 1) out.terms_.assign(terms_.begin() + 1, terms_.end());
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) {
      return false;
    }
  }
  return true;
}

PolyRing::PolyRing(const PrimeField& field, std::size_t nvars)
    : PolyRing(field, nvars, TermOrder::natural(nvars)) {}

PolyRing::PolyRing(const PrimeField& field, std::size_t nvars, TermOrder order)
    : field_(field), nvars_(nvars), order_(std::move(order)) {
  if (order_.nvars() != nvars_) {
    throw Error(ErrorKind::kInvalidArgument, "term order does not match the variable count");
  }
}

void PolyRing::check_monomial(const Monomial& m) const {
  for (std::size_t v = nvars_; v < kMaxVariables; ++v) {
    if (m[v] != 0) throw Error(ErrorKind::kInvalidArgument, "monomial uses a variable outside the ring");
  }
}

Polynomial PolyRing::make(std::vector<Term> terms) const {
  for (auto& t : terms) {
    check_monomial(t.mono);
    t.coeff %= field_.modulus();
  }
  std::ranges::sort(terms, [&](const Term& a, const Term& b) { return order_.greater(a.mono, b.mono); });
  Polynomial out;
  for (const auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff = field_.add(out.terms_.back().coeff, t.coeff);
    } else {
      out.terms_.push_back(t);
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.coeff == 0; });
  return out;
}

Polynomial PolyRing::make(const std::vector<std::pair<std::int64_t, Monomial>>& terms) const {
  std::vector<Term> ts;
  ts.reserve(terms.size());
  for (const auto& [c, m] : terms) ts.push_back({field_.reduce(c), m});
  return make(std::move(ts));
}

Polynomial PolyRing::constant(std::int64_t c) const { return monomial(Monomial{}, c); }

Polynomial PolyRing::variable(std::size_t v) const {
  if (v >= nvars_) throw Error(ErrorKind::kInvalidArgument, "variable index out of range");
  return monomial(Monomial::variable(v), 1);
}

Polynomial PolyRing::monomial(const Monomial& m, std::int64_t c) const {
  check_monomial(m);
  Polynomial p;
  const std::uint32_t r = field_.reduce(c);
  if (r != 0) p.terms_.push_back({r, m});
  return p;
}

namespace {

// out = a + c * m * b, merging two sorted term lists.
template <typename Order>
std::vector<Term> merge_axpy(const std::vector<Term>& a, std::size_t a_start, std::uint32_t c,
                             const Monomial* m, const std::vector<Term>& b, std::size_t b_start,
                             const PrimeField& f, const Order& order) {
  std::vector<Term> out;
  out.reserve(a.size() - a_start + b.size() - b_start);
  std::size_t i = a_start;
  std::size_t j = b_start;
  Term scaled{0, {}};
  bool have_scaled = false;
  auto load = [&]() {
    if (j < b.size()) {
      scaled.coeff = f.mul(c, b[j].coeff);
      scaled.mono = m != nullptr ? b[j].mono * *m : b[j].mono;
      have_scaled = true;
    } else {
      have_scaled = false;
    }
  };
  load();
  while (i < a.size() && have_scaled) {
    const auto cmp = order.compare(a[i].mono, scaled.mono);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back(scaled);
      ++j;
      load();
    } else {
      const std::uint32_t s = f.add(a[i].coeff, scaled.coeff);
      if (s != 0) out.push_back({s, a[i].mono});
      ++i;
      ++j;
      load();
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (have_scaled) {
    out.push_back(scaled);
    ++j;
    load();
  }
  return out;
}

}  // namespace

Polynomial PolyRing::add(const Polynomial& a, const Polynomial& b) const {
  Polynomial out;
  out.terms_ = merge_axpy(a.terms_, 0, 1, nullptr, b.terms_, 0, field_, order_);
  return out;
}

Polynomial PolyRing::sub(const Polynomial& a, const Polynomial& b) const {
  Polynomial out;
  out.terms_ = merge_axpy(a.terms_, 0, field_.neg(1), nullptr, b.terms_, 0, field_, order_);
  return out;
}

Polynomial PolyRing::neg(const Polynomial& a) const { return scale(a, field_.neg(1)); }

Polynomial PolyRing::scale(const Polynomial& a, std::uint32_t c) const {
  Polynomial out;
  c %= field_.modulus();
  if (c == 0) return out;
  out.terms_ = a.terms_;
  for (auto& t : out.terms_) t.coeff = field_.mul(t.coeff, c);
  return out;
}

Polynomial PolyRing::mul_term(const Polynomial& a, std::uint32_t c, const Monomial& m) const {
  Polynomial out;
  c %= field_.modulus();
  if (c == 0) return out;
  out.terms_.reserve(a.terms_.size());
  // Multiplying by a monomial preserves the order of terms.
  for (const auto& t : a.terms_) out.terms_.push_back({field_.mul(t.coeff, c), t.mono * m});
  return out;
}

Polynomial PolyRing::mul(const Polynomial& a, const Polynomial& b) const {
  Polynomial out;
  for (const auto& t : a.terms_) {
    out.terms_ = merge_axpy(out.terms_, 0, t.coeff, &t.mono, b.terms_, 0, field_, order_);
  }
  return out;
}

Polynomial PolyRing::sub_mul_term(const Polynomial& a, std::uint32_t c, const Monomial& m,
                                  const Polynomial& b) const {
  Polynomial out;
  out.terms_ = merge_axpy(a.terms_, 0, field_.neg(c % field_.modulus()), &m, b.terms_, 0, field_, order_);
  return out;
}

Polynomial PolyRing::make_monic(const Polynomial& a) const {
  if (a.is_zero()) return a;
  return scale(a, field_.inv(a.leading_coefficient()));
}

Polynomial PolyRing::convert(const Polynomial& a) const { return make(a.terms_); }

Polynomial PolyRing::substitute(const PolyRing& source, const Polynomial& f,
                                std::span<const Polynomial> images) const {
  if (images.size() != source.nvars()) {
    throw Error(ErrorKind::kInvalidArgument, "substitution needs one image per variable");
  }
  Polynomial out;
  for (const auto& t : f.terms_) {
    Polynomial prod = constant(t.coeff);
    for (std::size_t v = 0; v < source.nvars(); ++v) {
      for (unsigned e = 0; e < t.mono[v]; ++e) prod = mul(prod, images[v]);
    }
    out = add(out, prod);
  }
  return out;
}

std::string PolyRing::to_string(const Monomial& m, std::size_t nvars) {
  std::string s;
  for (std::size_t v = 0; v < nvars; ++v) {
    for (unsigned e = 0; e < m[v]; ++e) {
      if (!s.empty()) s += '*';
      s += 'y' + std::to_string(v + 1);
    }
  }
  return s.empty() ? "1" : s;
}

std::string PolyRing::to_string(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  const std::uint32_t minus_one = field_.neg(1);
  std::string s;
  bool first = true;
  for (const auto& t : f.terms_) {
    const bool negative = t.coeff == minus_one && field_.modulus() > 2;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = to_string(t.mono, nvars_);
    if (t.coeff == 1 || negative) {
      s += mono;
    } else if (t.mono.is_one()) {
      s += std::to_string(t.coeff);
    } else {
      s += std::to_string(t.coeff) + "*" + mono;
    }
  }
  return s;
}

Polynomial PolyRing::parse(std::string_view text) const {
  std::vector<std::pair<std::int64_t, Monomial>> terms;
  std::size_t i = 0;
  auto skip_ws = [&]() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::kInvalidArgument,
                "cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  auto read_int = [&]() {
    std::int64_t v = 0;
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i++] - '0');
    }
    if (i == start) fail("expected a number");
    return v;
  };
  skip_ws();
  if (i == text.size()) fail("empty input");
  while (true) {
    skip_ws();
    std::int64_t sign = 1;
    while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') sign = -sign;
      ++i;
      skip_ws();
    }
    std::int64_t coeff = 1;
    Monomial m;
    bool any = false;
    while (true) {
      skip_ws();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        coeff *= read_int() % static_cast<std::int64_t>(field_.modulus());
        coeff %= static_cast<std::int64_t>(field_.modulus());
      } else if (i < text.size() && text[i] == 'y') {
        ++i;
        const std::int64_t idx = read_int();
        if (idx < 1 || static_cast<std::size_t>(idx) > nvars_) fail("variable out of range");
        unsigned e = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip_ws();
          e = static_cast<unsigned>(read_int());
        }
        m.set(static_cast<std::size_t>(idx - 1), m[static_cast<std::size_t>(idx - 1)] + e);
      } else {
        fail("expected a factor");
      }
      any = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    terms.emplace_back(sign * coeff, m);
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '+' && text[i] != '-') fail("expected '+' or '-'");
  }
  return make(terms);
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens, const TermOrder& order) {
  std::ranges::sort(gens, [&](const Monomial& a, const Monomial& b) {
    return a.degree() < b.degree() || (a.degree() == b.degree() && order.greater(a, b));
  });
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    if (std::ranges::none_of(kept, [&](const Monomial& k) { return k.divides(g); })) {
      kept.push_back(g);
    }
  }
  std::ranges::sort(kept, [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return kept;
}

std::vector<Monomial> standard_monomials(std::span<const Monomial> init, unsigned m,
                                         const TermOrder& order) {
  std::vector<Monomial> out;
  for_each_monomial_of_degree(order.nvars(), m, [&](const Monomial& mono) {
    if (std::ranges::none_of(init, [&](const Monomial& g) { return g.divides(mono); })) {
      out.push_back(mono);
    }
  });
  std::ranges::sort(out, [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

std::uint64_t hilbert_function(std::span<const Monomial> init, std::size_t nvars, unsigned m) {
  std::uint64_t count = 0;
  for_each_monomial_of_degree(nvars, m, [&](const Monomial& mono) {
    if (std::ranges::none_of(init, [&](const Monomial& g) { return g.divides(mono); })) ++count;
  });
  return count;
}

}  // namespace ghw

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


#include "ghw/betti.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "subsets.hpp"

namespace ghw {

std::uint64_t BettiTable::at(std::size_t i, std::size_t j) const {
  const auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::vector<std::array<std::uint64_t, 3>> BettiTable::triples() const {
  std::vector<std::array<std::uint64_t, 3>> out;
  for (const auto& [key, b] : entries) {
    if (b != 0) out.push_back({key.first, key.second, b});
  }
  return out;
}

std::map<std::size_t, std::uint64_t> BettiTable::row(std::size_t i) const {
  std::map<std::size_t, std::uint64_t> out;
  for (const auto& [key, b] : entries) {
    if (key.first == i && b != 0) out[key.second] = b;
  }
  return out;
}

std::string BettiTable::to_text() const {
  std::size_t max_i = 0;
  std::size_t min_r = SIZE_MAX;
  std::size_t max_r = 0;
  for (const auto& [key, b] : entries) {
    if (b == 0) continue;
    max_i = std::max(max_i, key.first);
    min_r = std::min(min_r, key.second - key.first);
    max_r = std::max(max_r, key.second - key.first);
  }
  if (min_r == SIZE_MAX) min_r = max_r = 0;

  std::vector<std::uint64_t> totals(max_i + 1, 0);
  for (const auto& [key, b] : entries) totals[key.first] += b;

  // cells[row][col]; row 0 is the header, row 1 the totals.
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> labels;
  labels.push_back("");
  cells.emplace_back();
  labels.push_back("total:");
  cells.emplace_back();
  for (std::size_t i = 0; i <= max_i; ++i) {
    cells[0].push_back(std::to_string(i));
    cells[1].push_back(std::to_string(totals[i]));
  }
  for (std::size_t r = min_r; r <= max_r; ++r) {
    labels.push_back(std::to_string(r) + ":");
    std::vector<std::string> line;
    for (std::size_t i = 0; i <= max_i; ++i) {
      const std::uint64_t b = at(i, i + r);
      line.push_back(b == 0 ? "." : std::to_string(b));
    }
    cells.push_back(std::move(line));
  }
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> widths(max_i + 1, 0);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], line[i].size());
  }
  std::ostringstream os;
  for (std::size_t row = 0; row < cells.size(); ++row) {
    os << std::string(label_width - labels[row].size(), ' ') << labels[row];
    for (std::size_t i = 0; i < cells[row].size(); ++i) {
      os << ' ' << std::string(widths[i] - cells[row][i].size(), ' ') << cells[row][i];
    }
    os << '\n';
  }
  if (truncated) os << "(truncated at degree " << j_max << ")\n";
  return os.str();
}

namespace {

std::size_t matrix_rank(std::vector<std::uint32_t>& data, std::size_t rows, std::size_t cols,
                        const PrimeField& field) {
  if (rows == 0 || cols == 0) return 0;
  return rank_in_place(data, rows, cols, field);
}

bool in_monomial_ideal(const Monomial& m, std::span<const Monomial> gens) {
  return std::ranges::any_of(gens, [&](const Monomial& g) { return g.divides(m); });
}

void mark_truncation(BettiTable& b) {
  b.truncated = std::ranges::any_of(b.entries, [&](const auto& kv) {
    return kv.first.second == b.j_max && kv.second != 0;
  });
}

// Multigraded strands: for a monomial ideal, Tor_i(S/I)_alpha is the homology
// of e_A (x) y^{alpha - 1_A}, A inside supp(alpha), at the i-th spot.
void monomial_koszul(std::span<const Monomial> gens, std::size_t n, const PrimeField& field,
                     BettiTable& out) {
  Monomial top;
  for (const auto& g : gens) top = lcm(top, g);

  std::vector<unsigned> alpha(n, 0);
  unsigned degree = 0;
  const std::uint32_t minus_one = field.neg(1);

  auto process = [&]() {
    std::vector<std::size_t> support;
    for (std::size_t v = 0; v < n; ++v) {
      if (alpha[v] > 0) support.push_back(v);
    }
    const std::size_t u = support.size();
    const Monomial base = Monomial::from_exponents(alpha);
    auto shifted = [&](std::uint64_t mask) {
      Monomial m = base;
      for (std::size_t x = 0; x < u; ++x) {
        if (mask >> x & 1u) m.set(support[x], m[support[x]] - 1);
      }
      return m;
    };
    const std::uint64_t full = (std::uint64_t{1} << u) - 1;
    if (in_monomial_ideal(shifted(full), gens)) return;

    std::vector<char> alive(full + 1);
    std::vector<std::vector<std::uint64_t>> basis(u + 1);
    std::vector<std::size_t> pos(full + 1, 0);
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
      alive[mask] = !in_monomial_ideal(shifted(mask), gens);
      if (!alive[mask]) continue;
      auto& bucket = basis[static_cast<std::size_t>(__builtin_popcountll(mask))];
      pos[mask] = bucket.size();
      bucket.push_back(mask);
    }
    std::vector<std::size_t> ranks(u + 2, 0);
    for (std::size_t i = 1; i <= u; ++i) {
      const std::size_t rows = basis[i - 1].size();
      const std::size_t cols = basis[i].size();
      if (rows == 0 || cols == 0) continue;
      std::vector<std::uint32_t> data(rows * cols, 0);
      for (std::size_t c = 0; c < cols; ++c) {
        const std::uint64_t a = basis[i][c];
        std::size_t t = 0;
        for (std::size_t x = 0; x < u; ++x) {
          if (!(a >> x & 1u)) continue;
          const std::uint64_t b = a & ~(std::uint64_t{1} << x);
          if (alive[b]) data[pos[b] * cols + c] = (t % 2 == 0) ? 1 : minus_one;
          ++t;
        }
      }
      ranks[i] = matrix_rank(data, rows, cols, field);
    }
    for (std::size_t i = 0; i <= u && i <= out.i_max; ++i) {
      const std::size_t beta = basis[i].size() - ranks[i] - ranks[i + 1];
      if (beta != 0) out.entries[{i, degree}] += beta;
    }
  };

  // Odometer over alpha <= top with |alpha| <= j_max.
  while (true) {
    process();
    std::size_t v = 0;
    for (; v < n; ++v) {
      if (alpha[v] < top[v] && degree < out.j_max) {
        ++alpha[v];
        ++degree;
        break;
      }
      degree -= alpha[v];
      alpha[v] = 0;
    }
    if (v == n) break;
  }
}

TermOrder order_with_least(const TermOrder& order, std::size_t u) {
  std::vector<std::size_t> pri;
  for (std::size_t v : order.priority()) {
    if (v != u) pri.push_back(v);
  }
  pri.push_back(u);
  return TermOrder(std::move(pri));
}

// Current quotient ring: a reduced basis over the active variables.
struct Quotient {
  PolyRing ring;
  std::vector<Polynomial> basis;
  std::vector<std::size_t> active;
};

// Recomputes the basis with u least; if u divides no leading monomial then u
// is a nonzerodivisor and the basis with u set to zero presents the quotient.
std::optional<Quotient> try_cut(const Quotient& q, std::vector<Polynomial> polys, std::size_t u,
                                std::size_t& budget) {
  if (budget == 0) return std::nullopt;
  --budget;
  const PolyRing ring = q.ring.with_order(order_with_least(q.ring.order(), u));
  GroebnerBasis g = buchberger(ring, std::move(polys));
  for (const auto& p : g.elements()) {
    if (p.leading_monomial()[u] > 0) return std::nullopt;
  }
  Quotient out{ring, {}, {}};
  for (const auto& p : g.elements()) {
    std::vector<Term> kept;
    for (const auto& t : p.terms()) {
      if (t.mono[u] == 0) kept.push_back(t);
    }
    out.basis.push_back(ring.make(std::move(kept)));
  }
  for (std::size_t v : q.active) {
    if (v != u) out.active.push_back(v);
  }
  return out;
}

bool is_artinian(const Quotient& q) {
  return std::ranges::all_of(q.active, [&](std::size_t v) {
    return std::ranges::any_of(q.basis, [&](const Polynomial& p) {
      const Monomial& m = p.leading_monomial();
      return m[v] == m.degree();
    });
  });
}

std::optional<Quotient> cut_regular_element(const Quotient& q, std::size_t& budget,
                                            std::mt19937_64& rng, KoszulTrace& trace) {
  for (std::size_t v : q.active) {
    if (auto next = try_cut(q, q.basis, v, budget)) {
      ++trace.variables_cut;
      return next;
    }
  }
  // Pseudo-random dense forms: generic with high probability, reproducible.
  const PrimeField& field = q.ring.field();
  while (budget > 0) {
    std::vector<std::uint32_t> coeffs;
    for (std::size_t x = 0; x < q.active.size(); ++x) {
      coeffs.push_back(static_cast<std::uint32_t>(rng() % field.modulus()));
    }
    std::size_t last = q.active.size();
    for (std::size_t x = 0; x < coeffs.size(); ++x) {
      if (coeffs[x] != 0) last = x;
    }
    if (last == q.active.size()) continue;
    // New coordinate z_u = sum c_v y_v, with u the last variable in the support.
    const std::size_t u = q.active[last];
    std::vector<Polynomial> images;
    for (std::size_t v = 0; v < q.ring.nvars(); ++v) images.push_back(q.ring.variable(v));
    Polynomial y_u = q.ring.variable(u);
    for (std::size_t x = 0; x < last; ++x) {
      if (coeffs[x] == 0) continue;
      y_u = q.ring.sub(y_u, q.ring.scale(q.ring.variable(q.active[x]), coeffs[x]));
    }
    images[u] = q.ring.scale(y_u, field.inv(coeffs[last]));
    std::vector<Polynomial> polys;
    for (const auto& g : q.basis) polys.push_back(q.ring.substitute(q.ring, g, images));
    if (auto next = try_cut(q, std::move(polys), u, budget)) {
      ++trace.linear_forms_cut;
      return next;
    }
  }
  return std::nullopt;
}

// Dense Koszul strands of the quotient ring, graded pieces spanned by
// standard monomials in the active variables.
class DenseKoszul {
 public:
  DenseKoszul(const Quotient& q, std::size_t block_cap)
      : q_(q), m_(q.active.size()), cap_(block_cap) {
    for (const auto& g : q.basis) leads_.push_back(g.leading_monomial());
    for (std::size_t i = 0; i <= m_; ++i) {
      std::vector<std::uint64_t> sets;
      for_each_subset_mask(m_, i, [&](std::uint64_t mask) {
        sets.push_back(mask);
        return true;
      });
      subsets_.push_back(std::move(sets));
    }
    subset_pos_.assign(std::size_t{1} << m_, 0);
    for (const auto& sets : subsets_) {
      for (std::size_t x = 0; x < sets.size(); ++x) subset_pos_[sets[x]] = x;
    }
  }

  std::size_t dim(std::size_t i, std::size_t j) {
    if (i > m_ || j < i) return 0;
    return subsets_[i].size() * piece(j - i).monos.size();
  }

  std::size_t rank(std::size_t i, std::size_t j, std::size_t& largest) {
    if (i == 0 || i > m_ || j < i) return 0;
    const std::size_t rows = dim(i - 1, j);
    const std::size_t cols = dim(i, j);
    if (rows == 0 || cols == 0) return 0;
    largest = std::max({largest, rows, cols});
    if (rows > cap_ || cols > cap_) {
      throw Error(ErrorKind::kTooLarge, "Koszul block (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ") is " + std::to_string(rows) +
                                            " x " + std::to_string(cols));
    }
    const Piece& src = piece(j - i);
    const std::size_t src_sets = subsets_[i].size();
    const std::size_t dst_sets = subsets_[i - 1].size();
    const PrimeField& field = q_.ring.field();
    std::vector<std::uint32_t> data(rows * cols, 0);
    for (std::size_t mi = 0; mi < src.monos.size(); ++mi) {
      for (std::size_t ai = 0; ai < src_sets; ++ai) {
        const std::size_t col = mi * src_sets + ai;
        const std::uint64_t a = subsets_[i][ai];
        std::size_t t = 0;
        for (std::size_t x = 0; x < m_; ++x) {
          if (!(a >> x & 1u)) continue;
          const std::uint64_t b = a & ~(std::uint64_t{1} << x);
          const bool negate = t % 2 == 1;
          ++t;
          for (const auto& [target, c] : times_variable(src.monos[mi], x, j - i)) {
            const std::size_t row = target * dst_sets + subset_pos_[b];
            std::uint32_t& cell = data[row * cols + col];
            cell = field.add(cell, negate ? field.neg(c) : c);
          }
        }
      }
    }
    return matrix_rank(data, rows, cols, field);
  }

 private:
  struct Piece {
    std::vector<Monomial> monos;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  };

  const Piece& piece(std::size_t d) {
    while (pieces_.size() <= d) pieces_.emplace_back();
    if (!pieces_[d]) {
      Piece p;
      for_each_monomial_of_degree(m_, static_cast<unsigned>(d), [&](const Monomial& local) {
        Monomial full;
        for (std::size_t x = 0; x < m_; ++x) full.set(q_.active[x], local[x]);
        if (!in_monomial_ideal(full, leads_)) p.monos.push_back(full);
      });
      std::ranges::sort(p.monos, [&](const Monomial& a, const Monomial& b) {
        return q_.ring.order().greater(a, b);
      });
      for (std::size_t x = 0; x < p.monos.size(); ++x) p.index.emplace(p.monos[x], x);
      pieces_[d] = std::move(p);
    }
    return *pieces_[d];
  }

  // Normal form of mono * z_x in the degree d+1 standard basis.
  const std::vector<std::pair<std::size_t, std::uint32_t>>& times_variable(const Monomial& mono,
                                                                            std::size_t x,
                                                                            std::size_t d) {
    const Monomial prod = mono * Monomial::variable(q_.active[x]);
    auto it = nf_cache_.find(prod);
    if (it != nf_cache_.end()) return it->second;
    const Piece& target = piece(d + 1);
    std::vector<std::pair<std::size_t, std::uint32_t>> coords;
    const Polynomial r = normal_form(q_.ring, q_.ring.monomial(prod), q_.basis);
    for (const auto& term : r.terms()) coords.emplace_back(target.index.at(term.mono), term.coeff);
    return nf_cache_.emplace(prod, std::move(coords)).first->second;
  }

  const Quotient& q_;
  std::size_t m_;
  std::size_t cap_;
  std::vector<Monomial> leads_;
  std::vector<std::vector<std::uint64_t>> subsets_;
  std::vector<std::size_t> subset_pos_;
  std::vector<std::optional<Piece>> pieces_;
  std::unordered_map<Monomial, std::vector<std::pair<std::size_t, std::uint32_t>>, MonomialHash>
      nf_cache_;
};

}  // namespace

BettiTable koszul_betti(const GroebnerBasis& g, std::size_t i_max, std::size_t j_max,
                        const KoszulLimits& limits, KoszulTrace* trace) {
  if (j_max < 1) throw Error(ErrorKind::kInvalidArgument, "j_max must be at least 1");
  if (!g.is_homogeneous()) throw Error(ErrorKind::kInhomogeneous, "the ideal is not homogeneous");
  KoszulTrace local;
  KoszulTrace& tr = trace != nullptr ? *trace : local;
  tr = {};

  const std::size_t n = g.ring().nvars();
  BettiTable out;
  out.i_max = i_max;
  out.j_max = j_max;

  if (g.is_monomial()) {
    tr.monomial_route = true;
    const auto gens = minimal_monomials(g.leading_monomials(), g.order());
    monomial_koszul(gens, n, g.ring().field(), out);
    mark_truncation(out);
    return out;
  }

  Quotient q{g.ring(), g.elements(), {}};
  q.active.resize(n);
  std::iota(q.active.begin(), q.active.end(), std::size_t{0});
  std::size_t budget = limits.reduction_budget;
  std::mt19937_64 rng(0x5eed);
  while (!q.active.empty() && !is_artinian(q)) {
    auto next = cut_regular_element(q, budget, rng, tr);
    if (!next) break;
    q = std::move(*next);
  }
  tr.artinian = is_artinian(q);

  DenseKoszul koszul(q, limits.block_cap);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ranks;
  auto rank_of = [&](std::size_t i, std::size_t j) {
    const auto key = std::make_pair(i, j);
    auto it = ranks.find(key);
    if (it == ranks.end()) it = ranks.emplace(key, koszul.rank(i, j, tr.largest_block)).first;
    return it->second;
  };
  for (std::size_t i = 0; i <= std::min(i_max, q.active.size()); ++i) {
    for (std::size_t j = i; j <= j_max; ++j) {
      const std::size_t d = koszul.dim(i, j);
      if (d == 0) continue;
      const std::size_t beta = d - rank_of(i, j) - rank_of(i + 1, j);
      if (beta != 0) out.entries[{i, j}] = beta;
    }
  }
  mark_truncation(out);
  return out;
}

BettiTable koszul_betti(const GroebnerBasis& g) {
  const std::size_t n = g.ring().nvars();
  return koszul_betti(g, n, n + 2);
}

std::vector<std::int64_t> hilbert_numerator(const BettiTable& b) {
  std::size_t top = 0;
  for (const auto& [key, beta] : b.entries) {
    if (beta != 0) top = std::max(top, key.second);
  }
  std::vector<std::int64_t> k(top + 1, 0);
  for (const auto& [key, beta] : b.entries) {
    const auto v = static_cast<std::int64_t>(beta);
    k[key.second] += key.first % 2 == 0 ? v : -v;
  }
  while (!k.empty() && k.back() == 0) k.pop_back();
  return k;
}

ReducedHilbertSeries reduced_hilbert_series(const BettiTable& b, std::size_t n) {
  std::vector<std::int64_t> h = hilbert_numerator(b);
  std::size_t cancelled = 0;
  auto at_one = [](const std::vector<std::int64_t>& p) {
    return std::accumulate(p.begin(), p.end(), std::int64_t{0});
  };
  while (!h.empty() && at_one(h) == 0 && cancelled < n) {
    // h = (1 - s) q: q_j = h_j + q_{j-1}.
    std::vector<std::int64_t> q(h.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t j = 0; j + 1 < h.size(); ++j) {
      acc += h[j];
      q[j] = acc;
    }
    h = std::move(q);
    ++cancelled;
  }
  if (h.empty()) return {{}, 0};
  return {std::move(h), n - cancelled};
}

ResolutionSummary summarize(const BettiTable& b, std::size_t n) {
  if (b.truncated) {
    throw Error(ErrorKind::kTruncated,
                "Betti table reaches the degree bound " + std::to_string(b.j_max));
  }
  ResolutionSummary s;
  for (const auto& [key, beta] : b.entries) {
    if (beta != 0) s.pdim = std::max(s.pdim, key.first);
  }
  s.t.assign(s.pdim, SIZE_MAX);
  s.T.assign(s.pdim, 0);
  for (const auto& [key, beta] : b.entries) {
    if (beta == 0 || key.first == 0) continue;
    s.t[key.first - 1] = std::min(s.t[key.first - 1], key.second);
    s.T[key.first - 1] = std::max(s.T[key.first - 1], key.second);
  }
  for (std::size_t i = 1; i <= s.pdim; ++i) {
    s.reg = std::max(s.reg, static_cast<std::int64_t>(s.T[i - 1]) - static_cast<std::int64_t>(i));
  }
  const ReducedHilbertSeries hs = reduced_hilbert_series(b, n);
  s.dim = hs.dim;
  s.multiplicity = std::accumulate(hs.h.begin(), hs.h.end(), std::int64_t{0});
  s.cm = !hs.h.empty() && s.pdim + s.dim == n;
  return s;
}

namespace {

std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return 0;
  std::int64_t r = 1;
  for (std::int64_t x = 1; x <= b; ++x) r = r * (a - b + x) / x;
  return r;
}

}  // namespace

std::vector<std::uint64_t> hilbert_series_terms(std::span<const Monomial> init, std::size_t n,
                                                unsigned bound) {
  std::vector<std::uint64_t> out;
  for (unsigned m = 0; m <= bound; ++m) out.push_back(hilbert_function(init, n, m));
  return out;
}

std::vector<std::uint64_t> f_vector_series_terms(std::span<const std::uint64_t> f, unsigned bound) {
  std::vector<std::uint64_t> out(bound + 1, 0);
  if (!f.empty()) out[0] = f[0];
  for (unsigned m = 1; m <= bound; ++m) {
    for (std::size_t i = 1; i < f.size(); ++i) {
      out[m] += f[i] * static_cast<std::uint64_t>(binomial(m - 1, static_cast<std::int64_t>(i) - 1));
    }
  }
  return out;
}

HsCheckResult hs_check(const BettiTable& b, std::span<const Monomial> init, std::size_t n,
                       unsigned degree_bound,
                       std::optional<std::span<const std::uint64_t>> f_vector) {
  const auto hf = hilbert_series_terms(init, n, degree_bound);
  const auto k = hilbert_numerator(b);
  const std::size_t limit = std::min<std::size_t>(degree_bound, b.j_max);
  for (std::size_t j = 0; j <= limit; ++j) {
    // Coefficient of s^j in HS * (1 - s)^n.
    std::int64_t c = 0;
    for (std::size_t m = 0; m <= j; ++m) {
      const std::int64_t term = static_cast<std::int64_t>(hf[m]) *
                                binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(j - m));
      c += (j - m) % 2 == 0 ? term : -term;
    }
    const std::int64_t expected = j < k.size() ? k[j] : 0;
    if (c != expected) {
      return {false, "Betti numerator disagrees at degree " + std::to_string(j) + ": " +
                         std::to_string(expected) + " vs " + std::to_string(c) +
                         " from the Hilbert function"};
    }
  }
  if (f_vector) {
    const auto fs = f_vector_series_terms(*f_vector, degree_bound);
    for (unsigned m = 0; m <= degree_bound; ++m) {
      if (fs[m] != hf[m]) {
        return {false, "f-vector series disagrees at degree " + std::to_string(m) + ": " +
                           std::to_string(fs[m]) + " vs " + std::to_string(hf[m])};
      }
    }
  }
  return {true, "agrees through degree " + std::to_string(degree_bound)};
}

MultiplicityReport multiplicity_conjecture_check(const ResolutionSummary& s) {
  if (!s.cm) throw Error(ErrorKind::kNotCohenMacaulay, "the quotient is not Cohen-Macaulay");
  auto mul = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw Error(ErrorKind::kTooLarge, "multiplicity bound overflows 64 bits");
    }
    return r;
  };
  MultiplicityReport r;
  r.lower = 1;
  r.upper = 1;
  std::uint64_t fact = 1;
  for (std::size_t i = 0; i < s.pdim; ++i) {
    r.lower = mul(r.lower, s.t[i]);
    r.upper = mul(r.upper, s.T[i]);
    fact = mul(fact, i + 1);
  }
  r.scaled_multiplicity = mul(static_cast<std::uint64_t>(s.multiplicity), fact);
  r.holds = r.lower <= r.scaled_multiplicity && r.scaled_multiplicity <= r.upper;
  std::ostringstream os;
  os << r.lower << "/" << fact << " <= e = " << s.multiplicity << " <= " << r.upper << "/" << fact;
  if (!r.holds) os << " violated";
  r.details = os.str();
  return r;
}

}  // namespace ghw

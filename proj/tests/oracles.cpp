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


#include "oracles.hpp"

#include <algorithm>
#include <limits>

namespace oracle {

std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

namespace {

std::int64_t inverse(std::int64_t a, std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x) {
    if (mod(a * x, p) == 1) return x;
  }
  return 0;
}

}  // namespace

std::size_t rank(Rows rows, std::int64_t p) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && mod(rows[piv][c], p) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const std::int64_t inv = inverse(mod(rows[r][c], p), p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const std::int64_t f = mod(rows[i][c] * inv, p);
      for (std::size_t x = 0; x < cols; ++x) rows[i][x] = mod(rows[i][x] - f * rows[r][x], p);
    }
    ++r;
  }
  return r;
}

std::size_t rank_of_columns(const Rows& m, const Set& cols, std::int64_t p) {
  Rows sub;
  for (const auto& row : m) {
    std::vector<std::int64_t> s;
    for (std::size_t c : cols) s.push_back(row[c]);
    sub.push_back(s);
  }
  return rank(sub, p);
}

Rows codewords(const Rows& g, std::int64_t p) {
  const std::size_t k = g.size();
  const std::size_t n = g[0].size();
  Rows out;
  std::vector<std::int64_t> msg(k, 0);
  while (true) {
    std::vector<std::int64_t> w(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t c = 0; c < n; ++c) w[c] = mod(w[c] + msg[i] * g[i][c], p);
    }
    out.push_back(w);
    std::size_t i = 0;
    while (i < k && ++msg[i] == p) msg[i++] = 0;
    if (i == k) break;
  }
  return out;
}

std::size_t min_distance(const Rows& g, std::int64_t p) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& w : codewords(g, p)) {
    const auto wt = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](std::int64_t x) { return x != 0; }));
    if (wt > 0) best = std::min(best, wt);
  }
  return best;
}

std::size_t ghw_by_tuples(const Rows& g, std::int64_t p, std::size_t r) {
  Rows words;
  for (auto& w : codewords(g, p)) {
    if (std::any_of(w.begin(), w.end(), [](std::int64_t x) { return x != 0; })) words.push_back(w);
  }
  const std::size_t n = g[0].size();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> idx(r);
  // Recursive choice of increasing indices.
  auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
    if (depth == r) {
      Rows pick;
      for (std::size_t i : idx) pick.push_back(words[i]);
      if (rank(pick, p) != r) return;
      std::size_t support = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (std::any_of(pick.begin(), pick.end(), [&](const auto& w) { return w[c] != 0; })) ++support;
      }
      best = std::min(best, support);
      return;
    }
    for (std::size_t i = from; i < words.size(); ++i) {
      idx[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return best;
}

std::vector<Set> circuits(const Rows& m, std::int64_t p) {
  const std::size_t n = m[0].size();
  std::vector<Set> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Set s;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask >> c & 1u) s.push_back(c);
    }
    if (rank_of_columns(m, s, p) == s.size()) continue;
    bool minimal = true;
    for (std::size_t drop = 0; drop < s.size() && minimal; ++drop) {
      Set t = s;
      t.erase(t.begin() + static_cast<std::ptrdiff_t>(drop));
      if (rank_of_columns(m, t, p) < t.size()) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t standard_count(const std::vector<std::vector<unsigned>>& gens, std::size_t n, unsigned m) {
  std::uint64_t count = 0;
  std::vector<unsigned> e(n, 0);
  auto rec = [&](auto&& self, std::size_t v, unsigned left) -> void {
    if (v + 1 == n) {
      e[v] = left;
      const bool divisible = std::any_of(gens.begin(), gens.end(), [&](const auto& g) {
        for (std::size_t x = 0; x < n; ++x) {
          if (g[x] > e[x]) return false;
        }
        return true;
      });
      if (!divisible) ++count;
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      e[v] = a;
      self(self, v + 1, left - a);
    }
  };
  if (n == 0) return m == 0 ? 1 : 0;
  rec(rec, 0, m);
  return count;
}

std::vector<std::int64_t> expand_series(const std::vector<std::int64_t>& num, std::size_t d, std::size_t top) {
  std::vector<std::int64_t> c(top + 1, 0);
  for (std::size_t i = 0; i < num.size() && i <= top; ++i) c[i] = num[i];
  // Multiply by 1/(1-s) d times: prefix sums.
  for (std::size_t t = 0; t < d; ++t) {
    for (std::size_t i = 1; i <= top; ++i) c[i] += c[i - 1];
  }
  return c;
}

std::int64_t evaluate(const ghw::Polynomial& f, const std::vector<std::int64_t>& point, std::int64_t p) {
  std::int64_t total = 0;
  for (const auto& t : f.terms()) {
    std::int64_t v = t.coeff;
    for (std::size_t x = 0; x < point.size(); ++x) {
      for (unsigned e = 0; e < t.mono[x]; ++e) v = mod(v * point[x], p);
    }
    total = mod(total + v, p);
  }
  return total;
}

std::vector<std::uint64_t> faces_by_size(const std::vector<Set>& nonfaces, std::size_t n) {
  std::vector<std::uint64_t> f(n + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const bool face = std::none_of(nonfaces.begin(), nonfaces.end(), [&](const Set& s) {
      return std::all_of(s.begin(), s.end(), [&](std::size_t v) { return mask >> v & 1u; });
    });
    if (face) ++f[static_cast<std::size_t>(__builtin_popcount(mask))];
  }
  return f;
}

}  // namespace oracle

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

#include "ghw/codes.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "subsets.hpp"

namespace ghw {

LinearCode::LinearCode(DenseMatrix generator, std::string name)
    : generator_(std::move(generator)), name_(std::move(name)) {
  if (generator_.rows() == 0 || generator_.rows() > generator_.cols()) {
    throw Error(ErrorKind::kInvalidArgument, "generator must satisfy 1 <= k <= n");
  }
  if (rank(generator_) != generator_.rows()) {
    throw Error(ErrorKind::kRankDeficient, "generator rows are linearly dependent");
  }
}

StandardForm standard_form(const LinearCode& code) {
  const auto [reduced, pivots, rk] = rref(code.generator());
  if (rk != code.dimension()) {
    throw Error(ErrorKind::kRankDeficient, "generator rows are linearly dependent");
  }
  std::vector<std::size_t> perm = pivots;
  std::vector<bool> is_pivot(code.length(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < code.length(); ++c) {
    if (!is_pivot[c]) perm.push_back(c);
  }
  return {reduced.select_columns(perm), std::move(perm)};
}

DenseMatrix parity_check(const LinearCode& code) {
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  if (k == n) throw Error(ErrorKind::kNoDual, "k = n, the dual code is zero");
  const auto sf = standard_form(code);
  const PrimeField& f = code.field();
  DenseMatrix h(f, n - k, n);
  // Permuted coordinates: H' = [-P^T | I]; column j of H' is original column perm[j].
  for (std::size_t i = 0; i < n - k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      h.set_raw(i, sf.column_permutation[j], f.neg(sf.matrix(j, k + i)));
    }
    h.set_raw(i, sf.column_permutation[k + i], 1);
  }
  return h;
}

std::size_t min_distance(const LinearCode& code, std::uint64_t codeword_cap) {
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  const std::uint64_t q = code.field().modulus();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > codeword_cap / q) {
      throw Error(ErrorKind::kTooLarge, "q^k codewords exceeds cap " + std::to_string(codeword_cap));
    }
    total *= q;
  }
  if (total > codeword_cap) {
    throw Error(ErrorKind::kTooLarge, "q^k = " + std::to_string(total) + " codewords exceeds cap " +
                                          std::to_string(codeword_cap));
  }
  const PrimeField& f = code.field();
  const DenseMatrix& g = code.generator();
  // Odometer over messages; the codeword is updated one row at a time.
  std::vector<std::uint32_t> message(k, 0);
  std::vector<std::uint32_t> word(n, 0);
  std::size_t best = n;
  for (std::uint64_t step = 1; step < total; ++step) {
    std::size_t pos = 0;
    while (true) {
      // Increment digit `pos`; add row pos to the word.
      for (std::size_t c = 0; c < n; ++c) word[c] = f.add(word[c], g(pos, c));
      if (++message[pos] < q) break;
      message[pos] = 0;  // wrapped: q additions of a row return to the start.
      ++pos;
    }
    const auto weight = static_cast<std::size_t>(
        std::ranges::count_if(word, [](std::uint32_t x) { return x != 0; }));
    best = std::min(best, weight);
  }
  return best;
}

std::size_t ghw_wei(const DenseMatrix& parity, std::size_t r, std::size_t length_cap) {
  const std::size_t n = parity.cols();
  if (n > length_cap || n > 63) {
    throw Error(ErrorKind::kTooLarge, "length " + std::to_string(n) + " exceeds subset cap " +
                                          std::to_string(length_cap));
  }
  const std::size_t k = n - rank(parity);
  if (r < 1 || r > k) {
    throw Error(ErrorKind::kInvalidArgument,
                "r = " + std::to_string(r) + " outside 1.." + std::to_string(k));
  }
  for (std::size_t size = r; size <= n; ++size) {
    std::size_t found = 0;
    for_each_subset_mask(n, size, [&](std::uint64_t mask) {
      if (size - rank_of_column_mask(parity, mask) >= r) {
        found = size;
        return false;
      }
      return true;
    });
    if (found != 0) return found;
  }
  // Unreachable for 1 <= r <= k: the full set has nullity k.
  throw Error(ErrorKind::kInvalidArgument, "no subset reaches nullity r");
}

std::size_t ghw_generator(const LinearCode& code, std::size_t r, std::size_t length_cap) {
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  if (n > length_cap || n > 63) {
    throw Error(ErrorKind::kTooLarge, "length " + std::to_string(n) + " exceeds subset cap " +
                                          std::to_string(length_cap));
  }
  if (r < 1 || r > k) {
    throw Error(ErrorKind::kInvalidArgument,
                "r = " + std::to_string(r) + " outside 1.." + std::to_string(k));
  }
  const std::size_t target = k - r;
  for (std::size_t size = n + 1; size-- > 0;) {
    bool hit = false;
    for_each_subset_mask(n, size, [&](std::uint64_t mask) {
      if (rank_of_column_mask(code.generator(), mask) == target) {
        hit = true;
        return false;
      }
      return true;
    });
    if (hit) return n - size;
  }
  throw Error(ErrorKind::kInvalidArgument, "no column set spans the target dimension");
}

std::uint64_t gaussian_binomial(std::size_t k, std::size_t r, std::uint64_t q) {
  if (r > k) return 0;
  // [k, r]_q via the recurrence [k, r] = [k-1, r-1] + q^r [k-1, r].
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
    return (a != 0 && b > kMax / a) ? kMax : a * b;
  };
  std::vector<std::vector<std::uint64_t>> t(k + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (std::size_t m = 0; m <= k; ++m) {
    t[m][0] = 1;
    std::uint64_t qpow = 1;
    for (std::size_t j = 1; j <= m; ++j) {
      qpow = sat_mul(qpow, q);
      t[m][j] = sat_add(t[m - 1][j - 1], sat_mul(qpow, t[m - 1][j]));
    }
  }
  return t[k][r];
}

std::size_t ghw_subcode_oracle(const LinearCode& code, std::size_t r, std::uint64_t subspace_cap) {
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  const std::uint32_t q = code.field().modulus();
  if (r < 1 || r > k) {
    throw Error(ErrorKind::kInvalidArgument,
                "r = " + std::to_string(r) + " outside 1.." + std::to_string(k));
  }
  const std::uint64_t count = gaussian_binomial(k, r, q);
  if (count > subspace_cap) {
    throw Error(ErrorKind::kTooLarge, std::to_string(count) + " subcodes exceed cap " +
                                          std::to_string(subspace_cap));
  }
  const PrimeField& f = code.field();
  const DenseMatrix& g = code.generator();
  std::size_t best = n;

  // Each r-dimensional subspace of F_q^k has exactly one r x k RREF basis:
  // choose pivot columns, then fill every free slot right of each pivot.
  for_each_subset_mask(k, r, [&](std::uint64_t pivot_mask) {
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < k; ++c) {
      if ((pivot_mask >> c) & 1u) pivots.push_back(c);
    }
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t c = pivots[i] + 1; c < k; ++c) {
        if (((pivot_mask >> c) & 1u) == 0) slots.emplace_back(i, c);
      }
    }
    std::vector<std::uint32_t> fill(slots.size(), 0);
    DenseMatrix basis(f, r, k);
    while (true) {
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t c = 0; c < k; ++c) basis.set_raw(i, c, 0);
        basis.set_raw(i, pivots[i], 1);
      }
      for (std::size_t s = 0; s < slots.size(); ++s) {
        basis.set_raw(slots[s].first, slots[s].second, fill[s]);
      }
      const DenseMatrix sub = basis * g;
      std::size_t support = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (!sub.column_is_zero(c)) ++support;
      }
      best = std::min(best, support);
      std::size_t pos = 0;
      while (pos < fill.size() && ++fill[pos] == q) fill[pos++] = 0;
      if (pos == fill.size()) break;
    }
    return true;
  });
  return best;
}

CodeParams code_params(const LinearCode& code) {
  CodeParams p;
  p.n = code.length();
  p.k = code.dimension();
  p.d = min_distance(code);
  for (std::size_t c = 0; c < p.n; ++c) {
    if (code.generator().column_is_zero(c)) p.degenerate = true;
  }
  if (p.k < p.n) {
    const DenseMatrix h = parity_check(code);
    for (std::size_t r = 1; r <= p.k; ++r) p.ghw.push_back(ghw_wei(h, r));
  } else {
    // Zero dual: every d_r is attained by r coordinate vectors.
    for (std::size_t r = 1; r <= p.k; ++r) p.ghw.push_back(r);
  }
  return p;
}

}  // namespace ghw

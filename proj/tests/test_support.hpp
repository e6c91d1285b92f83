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


#ifndef GHW_TESTS_TEST_SUPPORT_HPP_
#define GHW_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "ghw/harness.hpp"
#include "oracles.hpp"

namespace ghw::testing {

inline LoadedCode fixture(const std::string& file) {
  return load_code_file(std::string(GHW_FIXTURE_DIR) + "/" + file);
}

inline oracle::Rows rows_of(const DenseMatrix& m) {
  oracle::Rows out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  }
  return out;
}

// 1-based literal -> 0-based index set.
inline IndexSet S(std::initializer_list<std::size_t> one_based) {
  IndexSet s;
  for (std::size_t v : one_based) s.push_back(v - 1);
  std::sort(s.begin(), s.end());
  return s;
}

inline std::vector<IndexSet> sorted(std::vector<IndexSet> sets) {
  std::sort(sets.begin(), sets.end());
  return sets;
}

inline std::vector<IndexSet> supports(const std::vector<Circuit>& cs) {
  std::vector<IndexSet> out;
  for (const auto& c : cs) out.push_back(c.support);
  return out;
}

inline Monomial mono(std::initializer_list<std::size_t> one_based_vars) {
  Monomial m;
  for (std::size_t v : one_based_vars) m = m * Monomial::variable(v - 1);
  return m;
}

// The five bundled instances.
inline const std::vector<std::string>& fixture_files() {
  static const std::vector<std::string> files = {
      "ternary_7_3.json", "ternary_7_3_parity.json", "ternary_7_3_reordered.json",
      "quinary_6_3.json", "two_components_7_3.json"};
  return files;
}

// Property-suite code distribution: n <= 8, k <= 4, p in {2, 3, 5}.
struct RandomShape {
  std::size_t n;
  std::size_t k;
  std::uint32_t p;
};
inline RandomShape random_shape(std::uint64_t seed) {
  static constexpr std::uint32_t kPrimes[] = {2, 3, 5};
  return {5 + seed % 4, 2 + (seed / 4) % 3, kPrimes[seed % 3]};
}

}  // namespace ghw::testing

#endif  // GHW_TESTS_TEST_SUPPORT_HPP_

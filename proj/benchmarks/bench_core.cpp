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


#include <benchmark/benchmark.h>

#include <string>

#include "ghw/betti.hpp"
#include "ghw/groebner.hpp"
#include "ghw/harness.hpp"

namespace {

ghw::LoadedCode load(const char* file) { return ghw::load_code_file(std::string(GHW_FIXTURE_DIR) + "/" + file); }

void BM_Circuits(benchmark::State& state) {
  const auto code = ghw::random_code(static_cast<std::uint64_t>(state.range(0)), 10, 4, 3);
  const ghw::VectorMatroid m(ghw::dual_matrix(code));
  for (auto _ : state) benchmark::DoNotOptimize(ghw::circuits(m));
}
BENCHMARK(BM_Circuits)->Arg(1)->Arg(2);

void BM_GhwWei(benchmark::State& state) {
  const auto code = ghw::random_code(7, static_cast<std::size_t>(state.range(0)), 4, 3);
  const auto h = ghw::dual_matrix(code);
  for (auto _ : state) {
    for (std::size_t r = 1; r <= 4; ++r) benchmark::DoNotOptimize(ghw::ghw_wei(h, r));
  }
}
BENCHMARK(BM_GhwWei)->Arg(8)->Arg(10)->Arg(12);

void BM_Buchberger(benchmark::State& state) {
  const auto pres = ghw::ot_ideal(load("ternary_7_3.json").code);
  const auto gens = pres.polynomials();
  for (auto _ : state) benchmark::DoNotOptimize(ghw::buchberger(pres.ring, gens));
}
BENCHMARK(BM_Buchberger);

void BM_KoszulGeneral(benchmark::State& state) {
  const auto pres = ghw::ot_ideal(load("ternary_7_3.json").code);
  const auto g = ghw::buchberger(pres.ring, pres.polynomials());
  for (auto _ : state) benchmark::DoNotOptimize(ghw::koszul_betti(g));
}
BENCHMARK(BM_KoszulGeneral);

void BM_KoszulMonomial(benchmark::State& state) {
  const auto code = load("ternary_7_3.json").code;
  const ghw::PolyRing ring(code.field(), code.length());
  std::vector<ghw::Polynomial> mons;
  for (const auto& c : ghw::circuits(ghw::VectorMatroid(ghw::dual_matrix(code)))) {
    mons.push_back(ring.monomial(ghw::Monomial::from_support(c.support)));
  }
  const auto g = ghw::buchberger(ring, mons);
  for (auto _ : state) benchmark::DoNotOptimize(ghw::koszul_betti(g));
}
BENCHMARK(BM_KoszulMonomial);

void BM_Hochster(benchmark::State& state) {
  const auto code = load("ternary_7_3.json").code;
  std::vector<ghw::IndexSet> sets;
  for (const auto& c : ghw::circuits(ghw::VectorMatroid(ghw::dual_matrix(code)))) sets.push_back(c.support);
  for (auto _ : state) benchmark::DoNotOptimize(ghw::hochster_betti(sets, 7, code.field()));
}
BENCHMARK(BM_Hochster);

void BM_Verify(benchmark::State& state) {
  const auto loaded = load("ternary_7_3_reordered.json");
  ghw::VerifyOptions opt;
  opt.order = loaded.order;
  for (auto _ : state) benchmark::DoNotOptimize(ghw::verify(loaded.code, opt));
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

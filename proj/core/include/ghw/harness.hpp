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


#ifndef GHW_HARNESS_HPP_
#define GHW_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghw/betti.hpp"
#include "ghw/codes.hpp"
#include "ghw/exactfield.hpp"
#include "ghw/matroid.hpp"
#include "ghw/orlikterao.hpp"

namespace ghw {

// A code file after validation. `order` is 0-based, greatest variable first.
struct LoadedCode {
  LinearCode code;
  std::string kind;  // "generator" or "parity_check"
  std::vector<std::size_t> order;
};

// Errors are reported as ErrorKind::kInput.
LoadedCode parse_code_json(std::string_view text);
LoadedCode load_code_file(const std::string& path);

// The code whose parity-check matrix is `parity` (full row rank).
LinearCode code_from_parity_check(const DenseMatrix& parity, std::string name = {});

// Parity-check matrix; for k = n this is the 0 x n matrix.
DenseMatrix dual_matrix(const LinearCode& code);

// Deterministic pseudo-random [n, k] code over F_p with full rank, and with
// d >= 2 when require_d2 is set.
LinearCode random_code(std::uint64_t seed, std::size_t n, std::size_t k, std::uint32_t p,
                       bool require_d2 = true);

// `count` pseudo-random variable priorities derived from the seed.
std::vector<std::vector<std::size_t>> sampled_orders(std::size_t n, std::uint64_t seed,
                                                     std::size_t count);

enum class CheckStatus { kPass, kFail, kReported, kSkipped };
const char* to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::kFail;
  std::string details;
  bool counterexample = false;  // only for reported checks
};

struct ResolutionData {
  BettiTable betti;
  std::optional<ResolutionSummary> summary;
  std::string error;  // why summary is missing
};

struct VerifyOptions {
  std::optional<std::vector<std::size_t>> order;  // default: identity
  std::size_t j_max = 0;                           // 0 means n + 2
  std::uint64_t seed = 0;
  std::size_t sampled_orders = 10;
  unsigned hs_degree = 10;
};

struct VerificationReport {
  std::string name;
  std::uint32_t field = 0;
  std::vector<std::size_t> order;
  CodeParams params;
  std::vector<IndexSet> circuits;
  std::size_t components = 0;
  std::optional<std::size_t> alpha;
  std::optional<ResolutionData> ot;
  std::optional<ResolutionData> sr;
  std::vector<Check> checks;

  const Check* find(std::string_view name) const;
  // True when one of the nine asserted checks failed.
  bool any_core_failure() const;
};

inline constexpr std::size_t kCoreCheckCount = 9;

VerificationReport verify(const LinearCode& code, const VerifyOptions& options = {});

// Pretty JSON with a trailing newline; byte-stable for equal reports.
std::string report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

// Subcommand renderers used by the CLI.
enum class OutputFormat { kJson, kText };
std::string render_info(const LoadedCode& c, OutputFormat f);
std::string render_circuits(const LoadedCode& c, OutputFormat f);
std::string render_ot(const LoadedCode& c, std::size_t j_max, OutputFormat f);
std::string render_sr(const LoadedCode& c, std::size_t j_max, OutputFormat f);
std::string render_betti(const LoadedCode& c, std::size_t j_max, OutputFormat f);
std::string render_hilbert(const LoadedCode& c, unsigned degree, OutputFormat f);

}  // namespace ghw

#endif  // GHW_HARNESS_HPP_

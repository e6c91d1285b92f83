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


#include "ghw/harness.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace ghw {

namespace {

using nlohmann::json;

[[noreturn]] void input_error(const std::string& msg) { throw Error(ErrorKind::kInput, msg); }

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t x = 0; x < xs.size(); ++x) {
    if (x > 0) s += ", ";
    s += std::to_string(xs[x]);
  }
  return "(" + s + ")";
}

}  // namespace

LinearCode code_from_parity_check(const DenseMatrix& parity, std::string name) {
  if (rank(parity) != parity.rows()) {
    throw Error(ErrorKind::kRankDeficient, "parity-check matrix does not have full row rank");
  }
  const auto kernel = kernel_basis(parity);
  if (kernel.empty()) throw Error(ErrorKind::kInvalidArgument, "the parity-check matrix defines the zero code");
  DenseMatrix g(parity.field(), kernel.size(), parity.cols());
  for (std::size_t r = 0; r < kernel.size(); ++r) {
    for (std::size_t c = 0; c < parity.cols(); ++c) g.set_raw(r, c, kernel[r][c].value());
  }
  return LinearCode(std::move(g), std::move(name));
}

DenseMatrix dual_matrix(const LinearCode& code) {
  if (code.dimension() == code.length()) return DenseMatrix(code.field(), 0, code.length());
  return parity_check(code);
}

LoadedCode parse_code_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    input_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) input_error("code file must be a JSON object");

  if (!doc.contains("field") || !doc["field"].is_number_integer()) input_error("\"field\" must be an integer");
  const auto p = doc["field"].get<std::int64_t>();
  if (p < 2 || p > 65521 || !is_prime(static_cast<std::uint64_t>(p))) {
    input_error("field " + std::to_string(p) + " is not a supported prime");
  }
  const PrimeField field(static_cast<std::uint32_t>(p));

  if (!doc.contains("kind") || !doc["kind"].is_string()) input_error("\"kind\" must be a string");
  const std::string kind = doc["kind"].get<std::string>();
  if (kind != "generator" && kind != "parity_check") {
    input_error("\"kind\" must be \"generator\" or \"parity_check\", got \"" + kind + "\"");
  }

  if (!doc.contains("matrix") || !doc["matrix"].is_array() || doc["matrix"].empty()) {
    input_error("\"matrix\" must be a nonempty array of rows");
  }
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : doc["matrix"]) {
    if (!row.is_array() || row.empty()) input_error("matrix rows must be nonempty arrays");
    std::vector<std::int64_t> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) input_error("matrix entries must be integers");
      r.push_back(x.get<std::int64_t>());
    }
    if (!rows.empty() && r.size() != rows.front().size()) input_error("matrix is not rectangular");
    rows.push_back(std::move(r));
  }
  const std::size_t n = rows.front().size();
  if (n > kMaxVariables) input_error("at most " + std::to_string(kMaxVariables) + " columns are supported");

  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) input_error("\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (doc.contains("order") && !doc["order"].is_null()) {
    if (!doc["order"].is_array()) input_error("\"order\" must be an array");
    order.clear();
    for (const auto& x : doc["order"]) {
      if (!x.is_number_integer()) input_error("order entries must be integers");
      const auto v = x.get<std::int64_t>();
      if (v < 1 || v > static_cast<std::int64_t>(n)) input_error("order entry " + std::to_string(v) + " out of range");
      order.push_back(static_cast<std::size_t>(v - 1));
    }
    try {
      check_permutation(order, n);
    } catch (const Error& e) {
      input_error(std::string("bad order: ") + e.what());
    }
  }

  try {
    const DenseMatrix m = DenseMatrix::from_rows(field, rows);
    if (kind == "generator") return {LinearCode(m, name), kind, order};
    return {code_from_parity_check(m, name), kind, order};
  } catch (const Error& e) {
    input_error(e.what());
  }
}

LoadedCode load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) input_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_code_json(buf.str());
}

LinearCode random_code(std::uint64_t seed, std::size_t n, std::size_t k, std::uint32_t p,
                       bool require_d2) {
  if (k < 1 || k >= n || n > 12) throw Error(ErrorKind::kInvalidArgument, "random codes need 1 <= k < n <= 12");
  const PrimeField field(p);
  for (std::uint64_t sub = 0;; ++sub) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + sub);
    DenseMatrix g(field, k, n);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < n; ++c) g.set_raw(r, c, static_cast<std::uint32_t>(rng() % p));
    }
    if (rank(g) != k) continue;
    LinearCode code(std::move(g), "random-" + std::to_string(seed));
    if (require_d2 && min_distance(code) < 2) continue;
    return code;
  }
}

std::vector<std::vector<std::size_t>> sampled_orders(std::size_t n, std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < count; ++x) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Fisher-Yates on raw engine output, independent of the library's shuffle.
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    out.push_back(std::move(order));
  }
  return out;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kReported: return "reported";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool VerificationReport::any_core_failure() const {
  for (std::size_t x = 0; x < checks.size() && x < kCoreCheckCount; ++x) {
    if (checks[x].status == CheckStatus::kFail) return true;
  }
  return false;
}

namespace {

ResolutionData resolve(BettiTable b, std::size_t n) {
  ResolutionData r{std::move(b), std::nullopt, {}};
  try {
    r.summary = summarize(r.betti, n);
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

const ResolutionSummary& need_summary(const std::optional<ResolutionData>& r, const char* what) {
  if (!r) throw Error(ErrorKind::kDegenerateDual, std::string(what) + " resolution unavailable");
  if (!r->summary) throw std::runtime_error(std::string(what) + " resolution has no summary (" + r->error + ")");
  return *r->summary;
}

std::vector<Monomial> as_monomials(std::span<const IndexSet> sets) {
  std::vector<Monomial> out;
  for (const auto& s : sets) out.push_back(Monomial::from_support(s));
  return out;
}

}  // namespace

VerificationReport verify(const LinearCode& code, const VerifyOptions& options) {
  VerificationReport rep;
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  rep.name = code.name();
  rep.field = code.field().modulus();
  if (options.order) {
    check_permutation(*options.order, n);
    rep.order = *options.order;
  } else {
    rep.order.resize(n);
    std::iota(rep.order.begin(), rep.order.end(), std::size_t{0});
  }
  const std::size_t j_max = options.j_max == 0 ? n + 2 : options.j_max;
  const TermOrder order(rep.order);

  rep.params = code_params(code);
  const CodeParams& params = rep.params;
  const DenseMatrix h = dual_matrix(code);
  const std::vector<Circuit> cs = circuits(VectorMatroid(h));
  for (const auto& c : cs) rep.circuits.push_back(c.support);
  rep.components = components(cs, n).count();

  // Stanley-Reisner ideal of the circuit complex.
  const PolyRing ring(code.field(), n, order);
  {
    std::vector<Polynomial> mons;
    for (const auto& c : rep.circuits) mons.push_back(ring.monomial(Monomial::from_support(c)));
    try {
      rep.sr = resolve(koszul_betti(buchberger(ring, mons), n, j_max), n);
    } catch (const Error& e) {
      rep.sr = ResolutionData{{}, std::nullopt, e.what()};
    }
  }

  // Orlik-Terao ideal, when the dual arrangement exists.
  std::optional<OTPresentation> pres;
  std::optional<ProudfootSpeyerResult> given;
  std::string ot_unavailable;
  const bool degenerate = params.d < 2;
  if (!degenerate) {
    try {
      pres = ot_ideal(code);
      rep.alpha = alpha(*pres);
      given = check_proudfoot_speyer(*pres, order);
    } catch (const Error& e) {
      pres.reset();
      rep.alpha.reset();
      ot_unavailable = e.what();
    }
    if (given) {
      try {
        rep.ot = resolve(koszul_betti(given->basis, n, j_max), n);
      } catch (const Error& e) {
        rep.ot = ResolutionData{{}, std::nullopt, e.what()};
      }
    }
  } else {
    ot_unavailable = "DegenerateDual: d = 1, the dual arrangement has a zero vector";
  }

  auto run = [&](const std::string& name, bool needs_ot, const std::function<Check()>& body) {
    if (needs_ot && !pres) {
      rep.checks.push_back({name, degenerate ? CheckStatus::kSkipped : CheckStatus::kFail, ot_unavailable});
      return;
    }
    try {
      Check c = body();
      c.name = name;
      rep.checks.push_back(std::move(c));
    } catch (const std::exception& e) {
      rep.checks.push_back({name, CheckStatus::kFail, e.what()});
    }
  };
  auto verdict = [](bool ok, std::string details) {
    return Check{{}, ok ? CheckStatus::kPass : CheckStatus::kFail, std::move(details)};
  };

  run("ghw_consistency", false, [&] {
    std::vector<std::size_t> by_gen, by_sub;
    for (std::size_t r = 1; r <= k; ++r) {
      by_gen.push_back(ghw_generator(code, r));
      by_sub.push_back(ghw_subcode_oracle(code, r));
    }
    const bool ok = by_gen == params.ghw && by_sub == params.ghw;
    return verdict(ok, ok ? "d_r = " + join(params.ghw) + " by parity-check ranks, generator ranks and subcodes"
                          : "parity-check " + join(params.ghw) + ", generator " + join(by_gen) +
                                ", subcodes " + join(by_sub));
  });

  run("thm_2_3", true, [&] {
    const bool ok = params.d == *rep.alpha + 1;
    return verdict(ok, "d = " + std::to_string(params.d) + ", alpha = " + std::to_string(*rep.alpha));
  });

  if (k < 2) {
    rep.checks.push_back({"thm_3_4", CheckStatus::kSkipped, "k < 2, no second weight"});
  } else {
    run("thm_3_4", true, [&] {
      const auto& s = need_summary(rep.ot, "OT");
      if (s.t.size() < 2) return verdict(false, "OT resolution has length " + std::to_string(s.pdim));
      const std::size_t t2 = s.t[1];
      const std::size_t d2 = params.ghw[1];
      const bool ok = t2 + 1 <= d2 && d2 <= t2 + 2;
      std::string where = d2 == t2 + 1 ? " (lower bound attained)" : d2 == t2 + 2 ? " (upper bound attained)" : "";
      return verdict(ok, "t_2 = " + std::to_string(t2) + ", d_2 = " + std::to_string(d2) + where);
    });
  }

  run("jove_identity", false, [&] {
    const auto& s = need_summary(rep.sr, "SR");
    std::vector<std::size_t> t(s.t.begin(), s.t.begin() + std::min(s.t.size(), k));
    const bool ok = t == params.ghw;
    return verdict(ok, "t_r(SR) = " + join(t) + ", d_r = " + join(params.ghw));
  });

  // Initial ideals under the sampled orders, reused by the Hilbert check.
  std::vector<std::pair<std::vector<std::size_t>, ProudfootSpeyerResult>> per_order;
  run("prs_universal", true, [&] {
    per_order.emplace_back(rep.order, *given);
    for (auto& o : sampled_orders(n, options.seed, options.sampled_orders)) {
      auto res = check_proudfoot_speyer(*pres, TermOrder(o));
      per_order.emplace_back(std::move(o), std::move(res));
    }
    std::size_t good = 0;
    std::string first_bad;
    for (const auto& [o, res] : per_order) {
      if (res.holds && res.matches_broken_circuits) {
        ++good;
      } else if (first_bad.empty()) {
        std::vector<std::size_t> one_based;
        for (std::size_t v : o) one_based.push_back(v + 1);
        first_bad = "; fails under order " + join(one_based);
      }
    }
    return verdict(good == per_order.size(), std::to_string(good) + "/" + std::to_string(per_order.size()) +
                                                 " orders: circuit leading terms generate the broken-circuit initial ideal" +
                                                 first_bad);
  });

  run("macaulay_hs", false, [&] {
    const unsigned deg = options.hs_degree;
    std::vector<std::string> problems;
    need_summary(rep.sr, "SR");
    if (pres) need_summary(rep.ot, "OT");
    const auto sr_monos = as_monomials(rep.circuits);
    const auto sr_f = face_vector(rep.circuits, n);
    const auto sr_check = hs_check(rep.sr->betti, sr_monos, n, deg, sr_f);
    if (!sr_check.ok) problems.push_back("SR: " + sr_check.details);
    if (pres) {
      if (per_order.empty()) problems.push_back("OT initial ideals unavailable");
      std::optional<std::vector<std::uint64_t>> reference;
      for (const auto& [o, res] : per_order) {
        const auto f = nbc_f_vector(broken_circuits(pres->circuits(), o), n);
        const auto c = hs_check(rep.ot->betti, res.initial, n, deg, f);
        if (!c.ok) problems.push_back("OT: " + c.details);
        const auto terms = hilbert_series_terms(res.initial, n, deg);
        if (!reference) reference = terms;
        if (terms != *reference) problems.push_back("Hilbert function depends on the order");
      }
    }
    if (!problems.empty()) return verdict(false, problems.front());
    return verdict(true, pres ? "OT, " + std::to_string(per_order.size()) +
                                    " initial ideals, broken-circuit and SR series agree through degree " +
                                    std::to_string(deg)
                              : "SR series agrees through degree " + std::to_string(deg));
  });

  run("dk_identity", false, [&] {
    const std::size_t ell = loops(VectorMatroid(code.generator())).size();
    const std::size_t dk = params.ghw.back();
    return verdict(dk == n - ell, "d_k = " + std::to_string(dk) + ", n - loops = " + std::to_string(n) +
                                      " - " + std::to_string(ell));
  });

  run("reg_identity", true, [&] {
    const auto& s = need_summary(rep.ot, "OT");
    const std::size_t c = rep.components;
    if (s.T.size() < k) return verdict(false, "OT resolution has length " + std::to_string(s.pdim));
    const std::size_t tk = s.T[k - 1];
    const bool ok = s.reg == static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k + c) && n == tk + c;
    return verdict(ok, "reg = " + std::to_string(s.reg) + ", n - k - c = " +
                           std::to_string(static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k + c)) +
                           ", T_k + c = " + std::to_string(tk) + " + " + std::to_string(c));
  });

  run("cm_pdim", true, [&] {
    const auto& s = need_summary(rep.ot, "OT");
    const bool ok = s.pdim == k && s.cm;
    return verdict(ok, "pdim = " + std::to_string(s.pdim) + ", k = " + std::to_string(k) +
                           (s.cm ? ", Cohen-Macaulay" : ", not Cohen-Macaulay"));
  });

  run("conjecture", true, [&] {
    const auto& s = need_summary(rep.ot, "OT");
    Check c{{}, CheckStatus::kReported, {}};
    std::vector<std::size_t> t1;
    for (std::size_t r = 0; r < k; ++r) {
      if (r >= s.t.size()) {
        c.counterexample = true;
        continue;
      }
      t1.push_back(s.t[r] + 1);
      if (params.ghw[r] < s.t[r] + 1) c.counterexample = true;
    }
    c.details = std::string(c.counterexample ? "counterexample" : "holds") + ": t_r + 1 = " + join(t1) +
                ", d_r = " + join(params.ghw);
    return c;
  });

  run("mult_conj", true, [&] {
    const auto& s = need_summary(rep.ot, "OT");
    Check c{{}, CheckStatus::kReported, {}};
    if (!s.cm) {
      c.details = "not applicable: not Cohen-Macaulay";
      return c;
    }
    const auto m = multiplicity_conjecture_check(s);
    c.counterexample = !m.holds;
    c.details = std::string(m.holds ? "holds: " : "counterexample: ") + m.details;
    return c;
  });

  return rep;
}

}  // namespace ghw

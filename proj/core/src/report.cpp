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


#include <numeric>
#include <sstream>

#include "ghw/harness.hpp"
#include "json.hpp"

namespace ghw {

namespace {

using Json = nlohmann::ordered_json;

Json one_based(const std::vector<std::size_t>& xs) {
  Json a = Json::array();
  for (std::size_t x : xs) a.push_back(x + 1);
  return a;
}

Json sets_json(const std::vector<IndexSet>& sets) {
  Json a = Json::array();
  for (const auto& s : sets) a.push_back(one_based(s));
  return a;
}

Json matrix_json(const DenseMatrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::uint32_t x : m.row(r)) row.push_back(x);
    a.push_back(std::move(row));
  }
  return a;
}

Json betti_json(const BettiTable& b) {
  Json a = Json::array();
  for (const auto& t : b.triples()) a.push_back({t[0], t[1], t[2]});
  return a;
}

Json sizes_json(const std::vector<std::size_t>& xs) {
  Json a = Json::array();
  for (std::size_t x : xs) a.push_back(x);
  return a;
}

Json resolution_json(const ResolutionData& r) {
  Json o;
  o["betti"] = betti_json(r.betti);
  if (r.summary) {
    o["t"] = sizes_json(r.summary->t);
    o["T"] = sizes_json(r.summary->T);
    o["pdim"] = r.summary->pdim;
    o["reg"] = r.summary->reg;
    o["multiplicity"] = r.summary->multiplicity;
    o["cm"] = r.summary->cm;
  } else {
    o["t"] = nullptr;
    o["T"] = nullptr;
    o["pdim"] = nullptr;
    o["reg"] = nullptr;
    o["error"] = r.error;
  }
  o["truncated"] = r.betti.truncated;
  return o;
}

std::string tuple_text(const std::vector<std::size_t>& xs) {
  std::string s = "(";
  for (std::size_t x = 0; x < xs.size(); ++x) s += (x ? ", " : "") + std::to_string(xs[x]);
  return s + ")";
}

std::string set_text(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t x = 0; x < s.size(); ++x) out += (x ? "," : "") + std::to_string(s[x] + 1);
  return out + "}";
}

std::string resolution_text(const ResolutionData& r) {
  std::ostringstream os;
  os << r.betti.to_text();
  if (r.summary) {
    const auto& s = *r.summary;
    os << "t = " << tuple_text(s.t) << ", T = " << tuple_text(s.T) << ", pdim = " << s.pdim
       << ", reg = " << s.reg << ", e = " << s.multiplicity << (s.cm ? ", Cohen-Macaulay" : "") << "\n";
  } else {
    os << "no summary: " << r.error << "\n";
  }
  return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

PolyRing ring_for(const LoadedCode& c) {
  return PolyRing(c.code.field(), c.code.length(), TermOrder(c.order));
}

std::vector<IndexSet> circuit_sets(const LinearCode& code) {
  std::vector<IndexSet> out;
  for (const auto& c : circuits(VectorMatroid(dual_matrix(code)))) out.push_back(c.support);
  return out;
}

ResolutionData sr_resolution(const LoadedCode& c, std::size_t j_max) {
  const PolyRing ring = ring_for(c);
  std::vector<Polynomial> mons;
  for (const auto& s : circuit_sets(c.code)) mons.push_back(ring.monomial(Monomial::from_support(s)));
  const std::size_t n = c.code.length();
  ResolutionData r{koszul_betti(buchberger(ring, mons), n, j_max == 0 ? n + 2 : j_max), std::nullopt, {}};
  try {
    r.summary = summarize(r.betti, n);
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

struct OtData {
  OTPresentation pres;
  ProudfootSpeyerResult ps;
  ResolutionData res;
};

OtData ot_data(const LoadedCode& c, std::size_t j_max) {
  OTPresentation pres = ot_ideal(c.code);
  ProudfootSpeyerResult ps = check_proudfoot_speyer(pres, TermOrder(c.order));
  const std::size_t n = c.code.length();
  ResolutionData r{koszul_betti(ps.basis, n, j_max == 0 ? n + 2 : j_max), std::nullopt, {}};
  try {
    r.summary = summarize(r.betti, n);
  } catch (const Error& e) {
    r.error = e.what();
  }
  return {std::move(pres), std::move(ps), std::move(r)};
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  Json j;
  j["name"] = r.name;
  j["field"] = r.field;
  j["order"] = one_based(r.order);
  j["params"] = {{"n", r.params.n}, {"k", r.params.k}, {"d", r.params.d}, {"ghw", sizes_json(r.params.ghw)}};
  j["circuits"] = sets_json(r.circuits);
  j["components"] = r.components;
  if (r.ot) {
    Json ot;
    ot["alpha"] = *r.alpha;
    const Json res = resolution_json(*r.ot);
    for (const auto& [key, value] : res.items()) ot[key] = value;
    j["ot"] = std::move(ot);
  } else {
    j["ot"] = nullptr;
  }
  j["sr"] = r.sr ? resolution_json(*r.sr) : Json(nullptr);
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
  }
  j["checks"] = std::move(checks);
  return dump(j);
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.name.empty() ? "code" : r.name) << ": [" << r.params.n << ", " << r.params.k << ", " << r.params.d
     << "] over F_" << r.field << "\n";
  os << "generalized Hamming weights: " << tuple_text(r.params.ghw) << "\n";
  os << "circuits (" << r.circuits.size() << "):";
  for (const auto& c : r.circuits) os << " " << set_text(c);
  os << "\ncomponents: " << r.components << "\n\n";
  if (r.ot) {
    os << "Orlik-Terao ideal, alpha = " << *r.alpha << "\n" << resolution_text(*r.ot) << "\n";
  } else {
    os << "Orlik-Terao ideal: unavailable (d = 1)\n\n";
  }
  if (r.sr) os << "Stanley-Reisner ideal of the circuit complex\n" << resolution_text(*r.sr) << "\n";
  os << "checks:\n";
  for (const auto& c : r.checks) {
    std::string tag = to_string(c.status);
    if (c.counterexample) tag += "!";
    os << "  [" << tag << "] " << c.name << ": " << c.details << "\n";
  }
  return os.str();
}

std::string render_info(const LoadedCode& c, OutputFormat f) {
  const CodeParams p = code_params(c.code);
  const DenseMatrix h = dual_matrix(c.code);
  if (f == OutputFormat::kJson) {
    Json j;
    j["name"] = c.code.name();
    j["field"] = c.code.field().modulus();
    j["kind"] = c.kind;
    j["n"] = p.n;
    j["k"] = p.k;
    j["d"] = p.d;
    j["ghw"] = sizes_json(p.ghw);
    j["degenerate"] = p.degenerate;
    j["generator"] = matrix_json(c.code.generator());
    j["parity_check"] = matrix_json(h);
    return dump(j);
  }
  std::ostringstream os;
  os << (c.code.name().empty() ? "code" : c.code.name()) << ": [" << p.n << ", " << p.k << ", " << p.d
     << "] over F_" << c.code.field().modulus() << "\n";
  os << "generalized Hamming weights: " << tuple_text(p.ghw) << "\n";
  if (p.degenerate) os << "degenerate: some coordinate is zero on every codeword\n";
  os << "generator matrix:\n" << c.code.generator().to_string();
  os << "parity-check matrix:\n" << h.to_string();
  return os.str();
}

std::string render_circuits(const LoadedCode& c, OutputFormat f) {
  const std::size_t n = c.code.length();
  const auto cs = circuits(VectorMatroid(dual_matrix(c.code)));
  const auto comps = components(cs, n);
  const auto bc = broken_circuits(cs, c.order);
  const auto fv = nbc_f_vector(bc, n);
  const PolyRing natural(c.code.field(), n);
  auto dependency_text = [&](const Circuit& circ) {
    std::vector<Term> terms;
    for (std::size_t x = 0; x < circ.support.size(); ++x) {
      terms.push_back({circ.dependency[x].value(), Monomial::variable(circ.support[x])});
    }
    return natural.to_string(natural.make(terms));
  };
  if (f == OutputFormat::kJson) {
    Json j;
    Json arr = Json::array();
    for (const auto& circ : cs) {
      Json dep = Json::array();
      for (const auto& a : circ.dependency) dep.push_back(a.value());
      arr.push_back({{"support", one_based(circ.support)}, {"dependency", dep}});
    }
    j["circuits"] = std::move(arr);
    j["components"] = sets_json(comps.blocks);
    j["order"] = one_based(c.order);
    j["broken_circuits"] = sets_json(bc.minimal_nonfaces);
    j["nbc_f_vector"] = fv;
    return dump(j);
  }
  std::ostringstream os;
  os << cs.size() << " circuits\n";
  for (const auto& circ : cs) os << "  " << set_text(circ.support) << "  " << dependency_text(circ) << "\n";
  os << "components:";
  for (const auto& b : comps.blocks) os << " " << set_text(b);
  os << "\nbroken circuits under order " << set_text(c.order) << ":";
  for (const auto& b : bc.minimal_nonfaces) os << " " << set_text(b);
  os << "\nNBC f-vector:";
  for (auto x : fv) os << " " << x;
  os << "\n";
  return os.str();
}

std::string render_ot(const LoadedCode& c, std::size_t j_max, OutputFormat f) {
  const OtData ot = ot_data(c, j_max);
  const PolyRing& ring = ot.ps.basis.ring();
  const std::size_t n = c.code.length();
  if (f == OutputFormat::kJson) {
    Json j;
    Json gens = Json::array();
    for (const auto& g : ot.pres.generators) gens.push_back(ring.to_string(ring.convert(g.polynomial)));
    Json gb = Json::array();
    for (const auto& g : ot.ps.basis.elements()) gb.push_back(ring.to_string(g));
    Json in = Json::array();
    for (const auto& m : ot.ps.initial) in.push_back(PolyRing::to_string(m, n));
    j["order"] = one_based(c.order);
    j["generators"] = std::move(gens);
    j["groebner_basis"] = std::move(gb);
    j["initial_ideal"] = std::move(in);
    j["universal"] = ot.ps.holds && ot.ps.matches_broken_circuits;
    j["alpha"] = alpha(ot.pres);
    const Json res = resolution_json(ot.res);
    for (const auto& [key, value] : res.items()) j[key] = value;
    return dump(j);
  }
  std::ostringstream os;
  os << "generators (" << ot.pres.generators.size() << "):\n";
  for (const auto& g : ot.pres.generators) os << "  " << ring.to_string(ring.convert(g.polynomial)) << "\n";
  os << "Groebner basis under order " << set_text(c.order) << ":\n";
  for (const auto& g : ot.ps.basis.elements()) os << "  " << ring.to_string(g) << "\n";
  os << "initial ideal:";
  for (const auto& m : ot.ps.initial) os << " " << PolyRing::to_string(m, n);
  os << "\ncircuit leading terms generate it: " << (ot.ps.holds ? "yes" : "no")
     << "; equals broken-circuit ideal: " << (ot.ps.matches_broken_circuits ? "yes" : "no") << "\n";
  os << "alpha = " << alpha(ot.pres) << "\n" << resolution_text(ot.res);
  return os.str();
}

std::string render_sr(const LoadedCode& c, std::size_t j_max, OutputFormat f) {
  const auto sets = circuit_sets(c.code);
  const ResolutionData r = sr_resolution(c, j_max);
  const std::size_t n = c.code.length();
  if (f == OutputFormat::kJson) {
    Json j;
    Json gens = Json::array();
    for (const auto& s : sets) gens.push_back(PolyRing::to_string(Monomial::from_support(s), n));
    j["generators"] = std::move(gens);
    const Json res = resolution_json(r);
    for (const auto& [key, value] : res.items()) j[key] = value;
    return dump(j);
  }
  std::ostringstream os;
  os << "generators:";
  for (const auto& s : sets) os << " " << PolyRing::to_string(Monomial::from_support(s), n);
  os << "\n" << resolution_text(r);
  return os.str();
}

std::string render_betti(const LoadedCode& c, std::size_t j_max, OutputFormat f) {
  std::optional<OtData> ot;
  if (c.code.dimension() < c.code.length() && min_distance(c.code) >= 2) ot = ot_data(c, j_max);
  const ResolutionData sr = sr_resolution(c, j_max);
  if (f == OutputFormat::kJson) {
    Json j;
    j["ot"] = ot ? resolution_json(ot->res) : Json(nullptr);
    j["sr"] = resolution_json(sr);
    return dump(j);
  }
  std::ostringstream os;
  os << "Orlik-Terao ideal\n" << (ot ? resolution_text(ot->res) : "unavailable (d = 1)\n");
  os << "\nStanley-Reisner ideal of the circuit complex\n" << resolution_text(sr);
  return os.str();
}

std::string render_hilbert(const LoadedCode& c, unsigned degree, OutputFormat f) {
  const std::size_t n = c.code.length();
  std::optional<OtData> ot;
  if (c.code.dimension() < n && min_distance(c.code) >= 2) ot = ot_data(c, 0);
  const ResolutionData sr = sr_resolution(c, 0);
  std::vector<Monomial> sr_monos;
  for (const auto& s : circuit_sets(c.code)) sr_monos.push_back(Monomial::from_support(s));

  auto series = [&](const ResolutionData& r, std::span<const Monomial> init) {
    const auto hs = reduced_hilbert_series(r.betti, n);
    return std::make_pair(hilbert_series_terms(init, n, degree), hs);
  };
  auto numerator_text = [](const ReducedHilbertSeries& hs) {
    std::ostringstream os;
    os << "(";
    for (std::size_t x = 0; x < hs.h.size(); ++x) os << (x ? ", " : "") << hs.h[x];
    os << ") / (1-s)^" << hs.dim;
    return os.str();
  };
  if (f == OutputFormat::kJson) {
    Json j;
    auto part = [&](const ResolutionData& r, std::span<const Monomial> init) {
      const auto [terms, hs] = series(r, init);
      return Json{{"hilbert_function", terms}, {"numerator", hs.h}, {"dim", hs.dim}};
    };
    j["degree"] = degree;
    j["ot"] = ot ? part(ot->res, ot->ps.initial) : Json(nullptr);
    j["sr"] = part(sr, sr_monos);
    return dump(j);
  }
  std::ostringstream os;
  auto part = [&](const char* title, const ResolutionData& r, std::span<const Monomial> init) {
    const auto [terms, hs] = series(r, init);
    os << title << ": HS = " << numerator_text(hs) << "\n  H(m), m = 0.." << degree << ":";
    for (auto x : terms) os << " " << x;
    os << "\n";
  };
  if (ot) {
    part("Orlik-Terao", ot->res, ot->ps.initial);
  } else {
    os << "Orlik-Terao: unavailable (d = 1)\n";
  }
  part("Stanley-Reisner", sr, sr_monos);
  return os.str();
}

}  // namespace ghw

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


#include "ghw/orlikterao.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace ghw {

Polynomial del_operator(const PolyRing& ring, std::span<const std::size_t> support,
                        std::span<const Scalar> dependency) {
  if (support.size() != dependency.size()) {
    throw Error(ErrorKind::kMalformedDependency, "support and dependency lengths differ");
  }
  if (support.size() < 2) {
    throw Error(ErrorKind::kMalformedDependency, "a dependency needs at least two terms");
  }
  std::vector<Term> terms;
  terms.reserve(support.size());
  for (std::size_t j = 0; j < support.size(); ++j) {
    if (dependency[j].is_zero()) {
      throw Error(ErrorKind::kMalformedDependency,
                  "zero coefficient at y" + std::to_string(support[j] + 1));
    }
    if (!(dependency[j].field() == ring.field())) {
      throw Error(ErrorKind::kInvalidArgument, "dependency over a different field");
    }
    std::vector<std::size_t> rest;
    for (std::size_t l = 0; l < support.size(); ++l) {
      if (l != j) rest.push_back(support[l]);
    }
    terms.push_back({dependency[j].value(), Monomial::from_support(rest)});
  }
  return ring.make(std::move(terms));
}

std::vector<Polynomial> OTPresentation::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.polynomial);
  return out;
}

std::vector<Circuit> OTPresentation::circuits() const {
  std::vector<Circuit> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.circuit);
  return out;
}

OTPresentation ot_ideal_from_parity_check(const DenseMatrix& parity) {
  const std::size_t n = parity.cols();
  if (n > kMaxVariables) {
    throw Error(ErrorKind::kTooLarge, "at most " + std::to_string(kMaxVariables) + " variables");
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (parity.column_is_zero(c)) {
      throw Error(ErrorKind::kDegenerateDual,
                  "column " + std::to_string(c + 1) + " of the parity-check matrix is zero");
    }
  }
  OTPresentation pres{parity.field(), n, PolyRing(parity.field(), n), {}};
  for (auto& c : ghw::circuits(VectorMatroid(parity))) {
    Polynomial p = del_operator(pres.ring, c.support, c.dependency);
    pres.generators.push_back({std::move(c), std::move(p)});
  }
  return pres;
}

OTPresentation ot_ideal(const LinearCode& code) {
  if (code.dimension() == code.length()) {
    throw Error(ErrorKind::kDegenerateDual, "the code is the full space, so d = 1");
  }
  return ot_ideal_from_parity_check(parity_check(code));
}

std::size_t alpha(const OTPresentation& pres) {
  if (pres.generators.empty()) throw Error(ErrorKind::kNoCircuits, "the ideal has no generators");
  std::size_t best = pres.generators.front().polynomial.degree();
  for (const auto& g : pres.generators) best = std::min<std::size_t>(best, g.polynomial.degree());
  return best;
}

ProudfootSpeyerResult check_proudfoot_speyer(const OTPresentation& pres, const TermOrder& order) {
  const PolyRing ring = pres.ring.with_order(order);
  std::vector<Polynomial> gens;
  std::vector<Monomial> circuit_leads;
  for (const auto& g : pres.generators) {
    gens.push_back(ring.convert(g.polynomial));
    circuit_leads.push_back(gens.back().leading_monomial());
  }
  GroebnerBasis basis = buchberger(ring, gens);
  std::vector<Monomial> initial = minimal_monomials(initial_ideal(basis), order);
  const std::vector<Monomial> from_circuits = minimal_monomials(circuit_leads, order);

  const auto bc = broken_circuits(pres.circuits(), order.priority());
  std::vector<Monomial> bc_monos;
  for (const auto& s : bc.minimal_nonfaces) bc_monos.push_back(Monomial::from_support(s));
  bc_monos = minimal_monomials(std::move(bc_monos), order);

  ProudfootSpeyerResult out{from_circuits == initial, bc_monos == initial, std::move(initial),
                            std::move(basis)};
  return out;
}

}  // namespace ghw
